#pragma once

// Checked integer arithmetic. Public inputs are 63-bit signed; every
// intermediate is carried in 128 bits and every operation reports overflow
// instead of wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hfcover {

using wide_int = __int128;

class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

inline wide_int checked_add(wide_int a, wide_int b) {
  wide_int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline wide_int checked_sub(wide_int a, wide_int b) {
  wide_int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline wide_int checked_mul(wide_int a, wide_int b) {
  wide_int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t narrow(wide_int v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("result does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

// Mathematical floor(a / b), rounding toward negative infinity. b != 0.
inline wide_int floor_div(wide_int a, wide_int b) {
  if (b == -1) return checked_sub(0, a);
  wide_int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Mathematical ceil(a / b), rounding toward positive infinity. b != 0.
inline wide_int ceil_div(wide_int a, wide_int b) {
  if (b == -1) return checked_sub(0, a);
  wide_int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

// Least non-negative residue of a modulo m (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace hfcover
