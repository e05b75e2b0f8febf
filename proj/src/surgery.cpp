#include "hfcover/surgery.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "hfcover/checked.hpp"
#include "hfcover/phi.hpp"

namespace hfcover {
namespace {

void require_normalized(const KnotProfile& profile) {
  if (profile.nu < 0)
    throw std::invalid_argument("profile '" + profile.name +
                                "' has nu < 0; supply the mirrored profile instead");
}

std::int64_t big_s_raw(const KnotProfile& profile, std::int64_t p, std::int64_t q, std::int64_t i) {
  wide_int total = 0;
  for (std::int64_t s = -profile.genus; s <= profile.genus; ++s) {
    const std::int64_t excess = profile.a_dim(s) - 1;
    if (excess != 0) total = checked_add(total, checked_mul(phi(p, q, i, s), excess));
  }
  return narrow(total);
}

std::int64_t inner_window(const KnotProfile& profile, std::int64_t p, std::int64_t q, std::int64_t i) {
  return phi_window_sum(p, q, i, -(profile.nu - 1), profile.nu - 1);
}

HFDimTable finish(const KnotProfile& profile, const SurgerySlope& slope, std::vector<std::int64_t> dims) {
  HFDimTable t;
  t.slope = slope;
  t.profile_name = profile.name;
  wide_int total = 0;
  for (std::int64_t d : dims) total = checked_add(total, d);
  t.total = narrow(total);
  t.is_lspace = std::all_of(dims.begin(), dims.end(), [](std::int64_t d) { return d == 1; });
  t.dims = std::move(dims);
  return t;
}

std::size_t table_size(const SurgerySlope& slope) {
  if (slope.order() > kMaxTableOrder)
    throw std::invalid_argument("|p| = " + std::to_string(slope.order()) + " exceeds table limit");
  return static_cast<std::size_t>(slope.order());
}

}  // namespace

std::int64_t HFDimTable::max_dim() const { return *std::max_element(dims.begin(), dims.end()); }
std::int64_t HFDimTable::min_dim() const { return *std::min_element(dims.begin(), dims.end()); }

std::int64_t hf_dim(const KnotProfile& profile, const SurgerySlope& slope, std::int64_t i) {
  require_normalized(profile);
  const wide_int s_term = big_s(profile, slope, i);
  if (profile.nu == 0) return narrow(checked_add(1, s_term));

  const std::int64_t p = slope.p(), q = slope.q();
  if (p > 0 && checked_mul(checked_sub(checked_mul(2, profile.nu), 1), q) <= p)
    return narrow(checked_add(1, s_term));

  const wide_int twice_w = checked_mul(2, inner_window(profile, p, q, i));
  const wide_int base = p > 0 ? -1 : 1;
  return narrow(checked_add(checked_add(base, twice_w), s_term));
}

PositiveBranches positive_branches(const KnotProfile& profile, std::int64_t p, std::int64_t q,
                                   std::int64_t i) {
  require_normalized(profile);
  if (p <= 0 || q < 1) throw std::invalid_argument("positive_branches needs p > 0, q >= 1");
  if (profile.nu == 0) throw std::invalid_argument("positive_branches needs nu > 0");
  const wide_int s_term = big_s_raw(profile, p, q, i);
  const wide_int w = inner_window(profile, p, q, i);
  return PositiveBranches{narrow(checked_add(1, s_term)),
                          narrow(checked_add(checked_sub(checked_mul(2, w), 1), s_term))};
}

HFDimTable hf_table(const KnotProfile& profile, const SurgerySlope& slope) {
  require_normalized(profile);
  const std::size_t n = table_size(slope);
  std::vector<std::int64_t> dims(n);
  std::exception_ptr failure;
  const std::int64_t count = static_cast<std::int64_t>(n);

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      dims[static_cast<std::size_t>(i)] = hf_dim(profile, slope, i);
    } catch (...) {
#pragma omp critical(hf_table_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return finish(profile, slope, std::move(dims));
}

HFDimTable hf_table_serial(const KnotProfile& profile, const SurgerySlope& slope) {
  require_normalized(profile);
  const std::size_t n = table_size(slope);
  std::vector<std::int64_t> dims(n);
  for (std::size_t i = 0; i < n; ++i) dims[i] = hf_dim(profile, slope, static_cast<std::int64_t>(i));
  return finish(profile, slope, std::move(dims));
}

bool is_zrz_lspace_surgery(const KnotProfile& profile, const SurgerySlope& slope) {
  return hf_table(profile, slope).is_lspace;
}

}  // namespace hfcover
