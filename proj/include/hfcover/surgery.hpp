#pragma once

// Per-Spin^c dimensions of HF-hat for rational surgery on a knot, from a
// KnotProfile. With nu = profile.nu >= 0, S = big_s and
// W = sum_{|s| < nu} phi(s):
//
//   nu = 0                       : 1 + S
//   nu > 0, 0 < (2nu-1) q <= p   : 1 + S
//   nu > 0, 0 < p <= (2nu-1) q   : -1 + 2W + S
//   nu > 0, p < 0                : 1 + 2W + S
//
// At p = (2nu-1) q the first line is used; both agree there.

#include <cstdint>
#include <string>
#include <vector>

#include "hfcover/profile.hpp"
#include "hfcover/slope.hpp"

namespace hfcover {

// Tables are materialized; |p| above this is rejected.
inline constexpr std::int64_t kMaxTableOrder = std::int64_t{1} << 26;

struct HFDimTable {
  SurgerySlope slope{1, 1};
  std::string profile_name;
  std::vector<std::int64_t> dims;  // indexed by canonical residue 0..|p|-1
  std::int64_t total = 0;
  bool is_lspace = false;

  std::int64_t max_dim() const;
  std::int64_t min_dim() const;

  friend bool operator==(const HFDimTable&, const HFDimTable&) = default;
};

std::int64_t hf_dim(const KnotProfile& profile, const SurgerySlope& slope, std::int64_t i);

// The two positive-slope expressions evaluated on a possibly unreduced pair
// (p > 0, q >= 1), for checking that they coincide at p = (2nu-1) q.
struct PositiveBranches {
  std::int64_t large_slope;  // 1 + S
  std::int64_t small_slope;  // -1 + 2W + S
};
PositiveBranches positive_branches(const KnotProfile& profile, std::int64_t p, std::int64_t q,
                                   std::int64_t i);

// Classes evaluated in parallel with OpenMP.
HFDimTable hf_table(const KnotProfile& profile, const SurgerySlope& slope);
// Single-threaded reference.
HFDimTable hf_table_serial(const KnotProfile& profile, const SurgerySlope& slope);

bool is_zrz_lspace_surgery(const KnotProfile& profile, const SurgerySlope& slope);

}  // namespace hfcover
