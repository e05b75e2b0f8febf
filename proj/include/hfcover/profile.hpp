#pragma once

// Finite knot-invariant packages consumed by the surgery formula.
//
// A profile records the genus g, the invariant nu (already mirrored so that
// nu >= 0), and dim H_*(A-hat_s) for s in [-g, g] over the working prime
// field. Outside [-g, g] the dimension is 1.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hfcover/slope.hpp"

namespace hfcover {

// Profiles with larger genus are rejected at load time; the dimension vector
// is stored densely.
inline constexpr std::int64_t kMaxProfileGenus = 100000;

struct KnotProfile {
  std::string name;
  std::int64_t genus = 0;
  std::int64_t nu = 0;
  std::vector<std::int64_t> a_dims{1};  // a_dims[s + genus]
  bool nontrivial = false;
  std::string coefficient_note = "all primes";

  std::int64_t a_dim(std::int64_t s) const;
  bool all_dims_one() const;
  // Nontrivial, every dim H(A-hat_s) = 1 and nu = g.
  bool is_lspace_knot() const;

  friend bool operator==(const KnotProfile&, const KnotProfile&) = default;
};

namespace violation {
inline constexpr std::string_view kGenusNonnegative = "genus_nonnegative";
inline constexpr std::string_view kDimsDomain = "a_dims_domain";
inline constexpr std::string_view kNuNonnegative = "nu_nonnegative";
inline constexpr std::string_view kDimsPositive = "fact_ii_dims_positive";
inline constexpr std::string_view kNuPositive = "fact_iii_nu_positive";
inline constexpr std::string_view kNuAtMostGenus = "nu_at_most_genus";
inline constexpr std::string_view kTrivialShape = "trivial_knot_shape";
}  // namespace violation

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  bool has(std::string_view name) const;
};

ValidationReport validate(const KnotProfile& profile);

// Throws std::invalid_argument for genus < 1.
KnotProfile lspace_knot_profile(std::string name, std::int64_t genus);

// "unknot", "T(2,2n+1)" for n >= 1 (so "T(2,3)", "T(2,5)", ...), "P(-2,3,7)".
// Throws std::invalid_argument for unknown names.
KnotProfile builtin(std::string_view name);
std::vector<std::string> builtin_examples();

class ProfileError : public std::runtime_error {
 public:
  explicit ProfileError(const std::string& what) : std::runtime_error(what) {}
};

// Parses a profile document without validating invariants. Throws
// ProfileError with line/column for syntax errors and with the record index
// and field name for schema errors.
std::vector<KnotProfile> parse_profiles(std::string_view document);

// parse_profiles followed by validate on every record; throws ProfileError
// listing each failing profile with its violations.
std::vector<KnotProfile> load_profiles(std::string_view document);
std::vector<KnotProfile> load_profiles_file(const std::string& path);

std::string serialize_profiles(std::span<const KnotProfile> profiles);

// FNV-1a 64 of the canonical compact serialization, as 16 hex digits.
std::string profile_fingerprint(const KnotProfile& profile);

// S^{p/q}_{[i]} = sum_s phi(i, s) (dim H(A-hat_s) - 1).
std::int64_t big_s(const KnotProfile& profile, const SurgerySlope& slope, std::int64_t i);

}  // namespace hfcover
