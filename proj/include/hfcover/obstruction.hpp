#pragma once

// Covering obstructions between surgeries. Each test asks whether
// S^3_{cover_slope}(cover knot) can be an r^n-sheeted regular cover of
// S^3_{base_slope}(base knot) for a prime r and n >= 1.
//
// NotObstructed means "no obstruction found", never "a cover exists": every
// test here is one-directional. Verdicts concern regular prime-power covers
// only.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hfcover/profile.hpp"
#include "hfcover/slope.hpp"

namespace hfcover {

struct CoverQuery {
  KnotProfile cover_profile;
  SurgerySlope cover_slope;
  KnotProfile base_profile;
  SurgerySlope base_slope;
  // Pin a single prime r. Profiles whose coefficient_note does not cover r
  // cause the query to be rejected.
  std::optional<std::int64_t> prime;
};

// ceil(q/p) < floor(q'/p')
struct SameKnotHypotheses {
  std::int64_t ceil_cover;
  std::int64_t floor_base;

  friend bool operator==(const SameKnotHypotheses&, const SameKnotHypotheses&) = default;
};

// (2g(K) - 1) ceil(q/p) < (2g(K') - 1) floor(q'/p')
struct GenusHypotheses {
  std::int64_t cover_side;
  std::int64_t base_side;

  friend bool operator==(const GenusHypotheses&, const GenusHypotheses&) = default;
};

// max over cover classes < min over base classes
struct DimensionGap {
  std::int64_t max_cover_dim;
  std::int64_t min_base_dim;

  friend bool operator==(const DimensionGap&, const DimensionGap&) = default;
};

// cover is a Z/rZ L-space and base is not
struct LspaceContradiction {
  bool cover_is_lspace;
  bool base_is_lspace;

  friend bool operator==(const LspaceContradiction&, const LspaceContradiction&) = default;
};

using Certificate = std::variant<SameKnotHypotheses, GenusHypotheses, DimensionGap, LspaceContradiction>;

// Re-evaluates the certificate's strict inequality from its stored numbers.
bool certificate_holds(const Certificate& c);
std::string describe(const Certificate& c);

enum class CheckKind { SameKnot, Genus, DimensionGap, LspaceCover };
enum class CheckOutcome { Skipped, NotApplicable, Silent, Fired };

std::string_view to_string(CheckKind k);
std::string_view to_string(CheckOutcome o);

struct CheckReport {
  CheckKind kind;
  CheckOutcome outcome;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

enum class Status { Obstructed, NotObstructed };

struct ObstructionVerdict {
  Status status = Status::NotObstructed;
  std::vector<Certificate> certificates;
  std::vector<CheckReport> checks;
  // The (max cover, min base) pair whenever the dimension-gap test ran,
  // whether or not it fired.
  std::optional<DimensionGap> observed_gap;

  bool obstructed() const { return status == Status::Obstructed; }
  std::optional<CheckOutcome> outcome(CheckKind k) const;

  friend bool operator==(const ObstructionVerdict&, const ObstructionVerdict&) = default;
};

struct CheckSet {
  bool same_knot = true;
  bool genus = true;
  bool dimension_gap = true;
  bool lspace_cover = true;

  static CheckSet all() { return {}; }
};

// True iff the note is "all primes" or lists r among its integers.
bool note_covers_prime(std::string_view coefficient_note, std::int64_t r);

// Requires a nontrivial profile and positive slopes; throws
// std::invalid_argument otherwise.
ObstructionVerdict obstruct_same_knot(const KnotProfile& profile, const SurgerySlope& cover_slope,
                                      const SurgerySlope& base_slope);

// Requires nontrivial L-space-knot profiles and positive slopes.
ObstructionVerdict obstruct_lspace_knots(const KnotProfile& cover_profile, const SurgerySlope& cover_slope,
                                         const KnotProfile& base_profile, const SurgerySlope& base_slope);

ObstructionVerdict obstruct_by_dimension_gap(const CoverQuery& query);
ObstructionVerdict obstruct_lspace_cover(const CoverQuery& query);

// Runs every selected test that applies to the query and merges certificates.
ObstructionVerdict obstruct_all(const CoverQuery& query, const CheckSet& checks = CheckSet::all());

}  // namespace hfcover
