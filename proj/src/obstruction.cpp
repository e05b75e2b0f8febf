#include "hfcover/obstruction.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "hfcover/checked.hpp"
#include "hfcover/surgery.hpp"

namespace hfcover {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::int64_t ceil_ratio(std::int64_t num, std::int64_t den) { return narrow(ceil_div(num, den)); }
std::int64_t floor_ratio(std::int64_t num, std::int64_t den) { return narrow(floor_div(num, den)); }

void require_positive(const SurgerySlope& a, const SurgerySlope& b, const char* who) {
  if (!a.positive() || !b.positive())
    throw std::invalid_argument(std::string(who) + ": slopes must be positive");
}

ObstructionVerdict single(CheckKind kind, std::optional<Certificate> cert) {
  ObstructionVerdict v;
  v.checks.push_back({kind, cert ? CheckOutcome::Fired : CheckOutcome::Silent});
  if (cert) {
    v.status = Status::Obstructed;
    v.certificates.push_back(*cert);
  }
  return v;
}

bool is_prime(std::int64_t r) {
  if (r < 2) return false;
  for (std::int64_t d = 2; d <= r / d; ++d)
    if (r % d == 0) return false;
  return true;
}

void check_prime_pin(const CoverQuery& query) {
  if (!query.prime) return;
  const std::int64_t r = *query.prime;
  if (!is_prime(r)) throw std::invalid_argument("pinned coefficient r = " + std::to_string(r) + " is not prime");
  for (const KnotProfile* k : {&query.cover_profile, &query.base_profile})
    if (!note_covers_prime(k->coefficient_note, r))
      throw std::invalid_argument("profile '" + k->name + "' is not asserted valid over Z/" +
                                  std::to_string(r) + " (coefficient_note: " + k->coefficient_note + ")");
}

DimensionGap gap_from(const HFDimTable& cover, const HFDimTable& base) {
  return DimensionGap{cover.max_dim(), base.min_dim()};
}

bool same_knot_applies(const CoverQuery& q) {
  return q.cover_profile == q.base_profile && q.cover_profile.nontrivial && q.cover_slope.positive() &&
         q.base_slope.positive();
}

bool genus_applies(const CoverQuery& q) {
  return q.cover_profile.is_lspace_knot() && q.base_profile.is_lspace_knot() && q.cover_slope.positive() &&
         q.base_slope.positive();
}

}  // namespace

bool certificate_holds(const Certificate& c) {
  return std::visit(overloaded{
                        [](const SameKnotHypotheses& x) { return x.ceil_cover < x.floor_base; },
                        [](const GenusHypotheses& x) { return x.cover_side < x.base_side; },
                        [](const DimensionGap& x) { return x.max_cover_dim < x.min_base_dim; },
                        [](const LspaceContradiction& x) { return x.cover_is_lspace && !x.base_is_lspace; },
                    },
                    c);
}

std::string describe(const Certificate& c) {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  return std::visit(
      overloaded{
          [](const SameKnotHypotheses& x) {
            return "same-knot(" + std::to_string(x.ceil_cover) + " < " + std::to_string(x.floor_base) + ")";
          },
          [](const GenusHypotheses& x) {
            return "genus(" + std::to_string(x.cover_side) + " < " + std::to_string(x.base_side) + ")";
          },
          [](const DimensionGap& x) {
            return "dim-gap(" + std::to_string(x.max_cover_dim) + " < " + std::to_string(x.min_base_dim) + ")";
          },
          [&](const LspaceContradiction& x) {
            return "lspace(cover=" + b(x.cover_is_lspace) + ", base=" + b(x.base_is_lspace) + ")";
          },
      },
      c);
}

std::string_view to_string(CheckKind k) {
  switch (k) {
    case CheckKind::SameKnot: return "same-knot";
    case CheckKind::Genus: return "genus";
    case CheckKind::DimensionGap: return "dimension-gap";
    case CheckKind::LspaceCover: return "lspace-cover";
  }
  return "?";
}

std::string_view to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Skipped: return "skipped";
    case CheckOutcome::NotApplicable: return "n/a";
    case CheckOutcome::Silent: return "silent";
    case CheckOutcome::Fired: return "obstructed";
  }
  return "?";
}

std::optional<CheckOutcome> ObstructionVerdict::outcome(CheckKind k) const {
  for (const auto& c : checks)
    if (c.kind == k) return c.outcome;
  return std::nullopt;
}

bool note_covers_prime(std::string_view note, std::int64_t r) {
  std::string lower;
  for (char ch : note) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "all primes") return true;
  std::int64_t current = -1;
  for (std::size_t k = 0; k <= lower.size(); ++k) {
    if (k < lower.size() && std::isdigit(static_cast<unsigned char>(lower[k]))) {
      const std::int64_t digit = lower[k] - '0';
      current = current < 0 ? digit : (current > (INT64_MAX - digit) / 10 ? INT64_MAX : current * 10 + digit);
    } else {
      if (current == r) return true;
      current = -1;
    }
  }
  return false;
}

ObstructionVerdict obstruct_same_knot(const KnotProfile& profile, const SurgerySlope& cover_slope,
                                      const SurgerySlope& base_slope) {
  if (!profile.nontrivial)
    throw std::invalid_argument("same-knot obstruction requires a nontrivial knot");
  require_positive(cover_slope, base_slope, "same-knot obstruction");
  const SameKnotHypotheses cert{ceil_ratio(cover_slope.q(), cover_slope.p()),
                                floor_ratio(base_slope.q(), base_slope.p())};
  const bool fires = cover_slope.p() <= cover_slope.q() && cert.ceil_cover < cert.floor_base;
  return single(CheckKind::SameKnot, fires ? std::optional<Certificate>(cert) : std::nullopt);
}

ObstructionVerdict obstruct_lspace_knots(const KnotProfile& cover_profile, const SurgerySlope& cover_slope,
                                         const KnotProfile& base_profile, const SurgerySlope& base_slope) {
  for (const KnotProfile* k : {&cover_profile, &base_profile})
    if (!k->is_lspace_knot())
      throw std::invalid_argument("genus obstruction requires nontrivial L-space-knot profiles; '" + k->name +
                                  "' is not one");
  require_positive(cover_slope, base_slope, "genus obstruction");
  const GenusHypotheses cert{
      narrow(checked_mul(2 * cover_profile.genus - 1, ceil_ratio(cover_slope.q(), cover_slope.p()))),
      narrow(checked_mul(2 * base_profile.genus - 1, floor_ratio(base_slope.q(), base_slope.p())))};
  return single(CheckKind::Genus, certificate_holds(cert) ? std::optional<Certificate>(cert) : std::nullopt);
}

ObstructionVerdict obstruct_by_dimension_gap(const CoverQuery& query) {
  check_prime_pin(query);
  const DimensionGap gap =
      gap_from(hf_table(query.cover_profile, query.cover_slope), hf_table(query.base_profile, query.base_slope));
  ObstructionVerdict v =
      single(CheckKind::DimensionGap, certificate_holds(gap) ? std::optional<Certificate>(gap) : std::nullopt);
  v.observed_gap = gap;
  return v;
}

ObstructionVerdict obstruct_lspace_cover(const CoverQuery& query) {
  check_prime_pin(query);
  const LspaceContradiction cert{is_zrz_lspace_surgery(query.cover_profile, query.cover_slope),
                                 is_zrz_lspace_surgery(query.base_profile, query.base_slope)};
  return single(CheckKind::LspaceCover, certificate_holds(cert) ? std::optional<Certificate>(cert) : std::nullopt);
}

ObstructionVerdict obstruct_all(const CoverQuery& query, const CheckSet& checks) {
  check_prime_pin(query);
  ObstructionVerdict out;
  auto absorb = [&](ObstructionVerdict v) {
    out.checks.insert(out.checks.end(), v.checks.begin(), v.checks.end());
    out.certificates.insert(out.certificates.end(), v.certificates.begin(), v.certificates.end());
  };
  auto mark = [&](CheckKind kind, CheckOutcome o) { out.checks.push_back({kind, o}); };

  if (!checks.same_knot)
    mark(CheckKind::SameKnot, CheckOutcome::Skipped);
  else if (!same_knot_applies(query))
    mark(CheckKind::SameKnot, CheckOutcome::NotApplicable);
  else
    absorb(obstruct_same_knot(query.cover_profile, query.cover_slope, query.base_slope));

  if (!checks.genus)
    mark(CheckKind::Genus, CheckOutcome::Skipped);
  else if (!genus_applies(query))
    mark(CheckKind::Genus, CheckOutcome::NotApplicable);
  else
    absorb(obstruct_lspace_knots(query.cover_profile, query.cover_slope, query.base_profile, query.base_slope));

  // Both table-based tests share one pair of tables.
  std::optional<HFDimTable> cover_table, base_table;
  if (checks.dimension_gap || checks.lspace_cover) {
    cover_table = hf_table(query.cover_profile, query.cover_slope);
    base_table = hf_table(query.base_profile, query.base_slope);
  }

  if (!checks.dimension_gap) {
    mark(CheckKind::DimensionGap, CheckOutcome::Skipped);
  } else {
    const DimensionGap gap = gap_from(*cover_table, *base_table);
    out.observed_gap = gap;
    absorb(single(CheckKind::DimensionGap,
                  certificate_holds(gap) ? std::optional<Certificate>(gap) : std::nullopt));
  }

  if (!checks.lspace_cover) {
    mark(CheckKind::LspaceCover, CheckOutcome::Skipped);
  } else {
    const LspaceContradiction cert{cover_table->is_lspace, base_table->is_lspace};
    absorb(single(CheckKind::LspaceCover,
                  certificate_holds(cert) ? std::optional<Certificate>(cert) : std::nullopt));
  }

  out.status = out.certificates.empty() ? Status::NotObstructed : Status::Obstructed;
  return out;
}

}  // namespace hfcover
