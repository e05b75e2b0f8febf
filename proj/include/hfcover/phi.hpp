#pragma once

// The counting function
//
//   phi^{p/q}_{[i]}(s) = #{ n in Z : floor((i + p n) / q) = s }
//
// and its window sums. floor((i + p n)/q) = s is equivalent to
// q s <= i + p n <= q s + q - 1, so every quantity here is a count of an
// arithmetic progression inside a closed interval.
//
// The (p, q) overloads accept unreduced pairs (p != 0, q >= 1); the counting
// function is well defined there and some identities are stated on them.

#include <cstdint>

#include "hfcover/slope.hpp"

namespace hfcover {

struct PhiBounds {
  std::int64_t lower;  // floor(|q/p|)
  std::int64_t upper;  // ceil(|q/p|)
};

std::int64_t phi(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t s);
std::int64_t phi(const SurgerySlope& slope, std::int64_t i, std::int64_t s);

// Reference enumeration. Scans every candidate n in an explicit window around
// (q s - i)/p; cost is O(q/|p|) per call. Kept as an independent oracle.
std::int64_t phi_bruteforce(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t s);
std::int64_t phi_bruteforce(const SurgerySlope& slope, std::int64_t i, std::int64_t s);

PhiBounds phi_bounds(const SurgerySlope& slope);

// sum_{s = s_lo}^{s_hi} phi(i, s), evaluated as one interval count:
// #{ n : q s_lo <= i + p n <= q (s_hi + 1) - 1 }. Requires s_lo <= s_hi.
std::int64_t phi_window_sum(std::int64_t p, std::int64_t q, std::int64_t i, std::int64_t s_lo,
                            std::int64_t s_hi);
std::int64_t phi_window_sum(const SurgerySlope& slope, std::int64_t i, std::int64_t s_lo,
                            std::int64_t s_hi);

}  // namespace hfcover
