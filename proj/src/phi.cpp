#include "hfcover/phi.hpp"

#include <stdexcept>

#include "hfcover/checked.hpp"

namespace hfcover {
namespace {

void require_pair(std::int64_t p, std::int64_t q) {
  if (p == 0) throw std::invalid_argument("phi: p must be nonzero");
  if (q < 1) throw std::invalid_argument("phi: q must be positive");
}

// #{ n in Z : lo <= i + p n <= hi } for p != 0.
wide_int count_progression(wide_int i, wide_int p, wide_int lo, wide_int hi) {
  if (hi < lo) return 0;
  const wide_int a = checked_sub(lo, i);
  const wide_int b = checked_sub(hi, i);
  // p n in [a, b]; dividing by a negative p swaps the endpoints.
  const wide_int first = p > 0 ? ceil_div(a, p) : ceil_div(b, p);
  const wide_int last = p > 0 ? floor_div(b, p) : floor_div(a, p);
  return last < first ? 0 : checked_add(checked_sub(last, first), 1);
}

// Floor division written independently of floor_div for the oracle:
// shift the remainder into [0, |q|).
wide_int oracle_floor(wide_int a, wide_int q) {
  wide_int r = a % q;
  if (r < 0) r += q;
  return (a - r) / q;
}

}  // namespace

std::int64_t phi(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t s) {
  return phi_window_sum(p, q, i, s, s);
}

std::int64_t phi(const SurgerySlope& slope, std::int64_t i, std::int64_t s) {
  return phi(slope.p(), slope.q(), i, s);
}

std::int64_t phi_bruteforce(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t s) {
  require_pair(p, q);
  const wide_int wp = p, wq = q, wi = i, ws = s;
  // Solutions satisfy 0 <= i + p n - q s <= q - 1, so n lies within (q-1)/|p|
  // of (q s - i)/p; the truncated centre is off by less than one more.
  const wide_int centre = checked_sub(checked_mul(wq, ws), wi) / wp;
  const wide_int radius = wq / (wp < 0 ? -wp : wp) + 2;
  wide_int count = 0;
  for (wide_int n = centre - radius; n <= centre + radius; ++n) {
    const wide_int value = checked_add(wi, checked_mul(wp, n));
    if (oracle_floor(value, wq) == ws) ++count;
  }
  return narrow(count);
}

std::int64_t phi_bruteforce(const SurgerySlope& slope, std::int64_t i, std::int64_t s) {
  return phi_bruteforce(slope.p(), slope.q(), i, s);
}

PhiBounds phi_bounds(const SurgerySlope& slope) {
  const std::int64_t a = slope.order();
  return PhiBounds{slope.q() / a, narrow(ceil_div(slope.q(), a))};
}

std::int64_t phi_window_sum(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t s_lo,
                            std::int64_t s_hi) {
  require_pair(p, q);
  if (s_hi < s_lo) throw std::invalid_argument("phi_window_sum: s_lo must not exceed s_hi");
  const wide_int lo = checked_mul(q, s_lo);
  const wide_int hi = checked_sub(checked_mul(q, checked_add(s_hi, 1)), 1);
  return narrow(count_progression(i, p, lo, hi));
}

std::int64_t phi_window_sum(const SurgerySlope& slope, std::int64_t i, std::int64_t s_lo,
                            std::int64_t s_hi) {
  return phi_window_sum(slope.p(), slope.q(), i, s_lo, s_hi);
}

}  // namespace hfcover
