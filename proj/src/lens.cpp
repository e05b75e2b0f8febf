#include "hfcover/lens.hpp"

#include <numeric>
#include <stdexcept>

#include "hfcover/checked.hpp"

namespace hfcover {

LensSpace::LensSpace(std::int64_t p, std::int64_t q) {
  if (p < 1) throw std::invalid_argument("lens space order p must be >= 1");
  if (p == 1) {
    p_ = 1;
    q_ = 0;
    return;
  }
  q_ = mod_floor(q, p);
  if (std::gcd(p, q_) != 1) throw std::invalid_argument("lens space needs gcd(p, q) = 1");
  p_ = p;
}

std::string LensSpace::str() const { return "L(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }

std::optional<std::int64_t> modular_inverse(std::int64_t a, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  if (m == 1) return 0;
  wide_int old_r = mod_floor(a, m), r = m;
  wide_int old_s = 1, s = 0;
  while (r != 0) {
    const wide_int quotient = old_r / r;
    wide_int t = old_r - quotient * r;
    old_r = r;
    r = t;
    t = old_s - quotient * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  wide_int inv = old_s % m;
  if (inv < 0) inv += m;
  return static_cast<std::int64_t>(inv);
}

std::optional<PrimePower> prime_power(std::int64_t m) {
  if (m < 2) return std::nullopt;
  if (m > 1'000'000'000'000'000'000) throw std::invalid_argument("prime_power: argument above 10^18");
  std::int64_t r = m;
  for (std::int64_t d = 2; d <= m / d; ++d) {
    if (m % d == 0) {
      r = d;
      break;
    }
  }
  std::int64_t n = 0;
  while (m % r == 0) {
    m /= r;
    ++n;
  }
  if (m != 1) return std::nullopt;
  return PrimePower{r, n};
}

std::optional<LensSpace> moser_trefoil(const SurgerySlope& slope) {
  if (!slope.positive()) throw std::invalid_argument("moser_trefoil expects a positive slope");
  const wide_int diff = checked_sub(slope.p(), checked_mul(6, slope.q()));
  if (diff != 1 && diff != -1) return std::nullopt;
  const std::int64_t four_q = narrow(checked_mul(4, slope.q()) % slope.p());
  return LensSpace(slope.p(), four_q);
}

bool lens_homeomorphic(const LensSpace& a, const LensSpace& b) {
  if (a.p() != b.p()) return false;
  if (a.p() == 1) return true;
  const std::int64_t p = a.p();
  const std::int64_t inv = *modular_inverse(a.q(), p);
  for (std::int64_t candidate : {a.q(), p - a.q(), inv, mod_floor(-inv, p)})
    if (candidate == b.q()) return true;
  return false;
}

std::optional<LensSpace> cyclic_cover(const LensSpace& base, std::int64_t degree) {
  if (degree < 1) throw std::invalid_argument("cover degree must be >= 1");
  if (base.p() % degree != 0) return std::nullopt;
  const std::int64_t order = base.p() / degree;
  return LensSpace(order, base.q() % order);
}

TrefoilFamilyRecord verify_trefoil_family(std::int64_t q, std::int64_t k, int sign) {
  if (q < 1) throw std::invalid_argument("family parameter q must be >= 1");
  if (k < 1) throw std::invalid_argument("family parameter k must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("family sign must be +1 or -1");

  TrefoilFamilyRecord rec;
  rec.q = q;
  rec.k = k;
  rec.sign = sign;
  rec.p = narrow(checked_add(checked_mul(6, q), sign));
  rec.q_base = narrow(checked_add(q, checked_mul(k, rec.p)));
  rec.p_base = narrow(checked_add(checked_mul(6, rec.q_base), sign));
  rec.degree = narrow(checked_add(checked_mul(6, k), 1));

  rec.order_factors = checked_mul(rec.p, rec.degree) == rec.p_base;

  const LensSpace expected_cover(rec.p, narrow(checked_mul(4, q)));
  const LensSpace expected_base(rec.p_base, narrow(checked_mul(4, rec.q_base)));
  rec.cover_space = moser_trefoil(SurgerySlope(rec.p, q));
  rec.base_space = moser_trefoil(SurgerySlope(rec.p_base, rec.q_base));
  rec.moser_matches = rec.cover_space == expected_cover && rec.base_space == expected_base;

  rec.computed_cover = cyclic_cover(expected_base, rec.degree);
  rec.cover_matches = rec.computed_cover && lens_homeomorphic(*rec.computed_cover, expected_cover);

  rec.degree_factorization = prime_power(rec.degree);
  rec.degree_prime_power = rec.degree_factorization.has_value();
  return rec;
}

}  // namespace hfcover
