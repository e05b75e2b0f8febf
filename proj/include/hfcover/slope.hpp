#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace hfcover {

// Reduced rational surgery coefficient p/q with q > 0 and p != 0.
// Construction from any pair with nonzero entries reduces by the gcd and
// moves the sign into the numerator.
class SurgerySlope {
 public:
  SurgerySlope(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t order() const { return p_ < 0 ? -p_ : p_; }  // |H_1| = |p|
  bool positive() const { return p_ > 0; }

  SurgerySlope negated() const { return SurgerySlope(-p_, q_); }
  std::string str() const;

  friend bool operator==(const SurgerySlope&, const SurgerySlope&) = default;
  // Numeric-lexicographic on (p, q); used for deterministic enumeration.
  friend auto operator<=>(const SurgerySlope&, const SurgerySlope&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

// Spin^c class [i] in Z/|p|Z, stored as its canonical residue.
struct SpincClass {
  std::int64_t residue;
  std::int64_t modulus;

  static SpincClass of(std::int64_t i, const SurgerySlope& slope);
};

}  // namespace hfcover
