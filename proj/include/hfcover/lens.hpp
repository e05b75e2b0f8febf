#pragma once

// Lens space arithmetic for the trefoil surgery family.

#include <cstdint>
#include <optional>
#include <string>

#include "hfcover/slope.hpp"

namespace hfcover {

// L(p, q) with p >= 1 and gcd(p, q) = 1, stored with 0 < q < p, or
// L(1, 0) = S^3.
class LensSpace {
 public:
  LensSpace(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_sphere() const { return p_ == 1; }
  std::string str() const;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

// Inverse of a modulo m (m >= 1) by the extended Euclidean algorithm, in [0, m).
std::optional<std::int64_t> modular_inverse(std::int64_t a, std::int64_t m);

struct PrimePower {
  std::int64_t prime;
  std::int64_t exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// r^n with r prime and n >= 1, by trial division; m <= 10^18.
std::optional<PrimePower> prime_power(std::int64_t m);

// p/q surgery on the right-handed trefoil is L(p, 4q) when |p - 6q| = 1.
// Throws std::invalid_argument for a non-positive slope.
std::optional<LensSpace> moser_trefoil(const SurgerySlope& slope);

// Unoriented classification: same p and b.q = +-a.q^{+-1} mod p.
bool lens_homeomorphic(const LensSpace& a, const LensSpace& b);

// The degree-fold cyclic cover L(p/d, q mod p/d) when d | p. Throws for d < 1.
std::optional<LensSpace> cyclic_cover(const LensSpace& base, std::int64_t degree);

// L(6q+-1, 4q) covering L(6q'+-1, 4q') for q' = q + k(6q +- 1).
struct TrefoilFamilyRecord {
  std::int64_t q = 0, k = 0, sign = 0;
  std::int64_t p = 0;       // 6q + sign
  std::int64_t q_base = 0;  // q'
  std::int64_t p_base = 0;  // 6q' + sign
  std::int64_t degree = 0;  // 6k + 1

  bool order_factors = false;     // (a) p' = p (6k + 1)
  bool moser_matches = false;     // (b) both slopes are Moser lens surgeries
  bool cover_matches = false;     // (c) the (6k+1)-fold cover of the base is the cover space
  bool degree_prime_power = false;  // (d)
  std::optional<PrimePower> degree_factorization;
  std::optional<LensSpace> cover_space;  // L(p, 4q)
  std::optional<LensSpace> base_space;   // L(p', 4q')
  std::optional<LensSpace> computed_cover;

  bool arithmetic_ok() const { return order_factors && moser_matches && cover_matches; }
};

// Throws std::invalid_argument unless q >= 1, k >= 1 and sign = +-1;
// OverflowError if the family leaves 63-bit range.
TrefoilFamilyRecord verify_trefoil_family(std::int64_t q, std::int64_t k, int sign);

}  // namespace hfcover
