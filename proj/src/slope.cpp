#include "hfcover/slope.hpp"

#include <numeric>
#include <stdexcept>

#include "hfcover/checked.hpp"

namespace hfcover {

SurgerySlope::SurgerySlope(std::int64_t p, std::int64_t q) {
  if (p == 0) throw std::invalid_argument("surgery slope numerator must be nonzero");
  if (q == 0) throw std::invalid_argument("surgery slope denominator must be nonzero");
  if (p == INT64_MIN || q == INT64_MIN)
    throw std::invalid_argument("surgery slope entries must fit in 63 bits");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

std::string SurgerySlope::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

SpincClass SpincClass::of(std::int64_t i, const SurgerySlope& slope) {
  return SpincClass{mod_floor(i, slope.order()), slope.order()};
}

}  // namespace hfcover
