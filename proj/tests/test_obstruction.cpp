#include <doctest.h>

#include "hfcover/obstruction.hpp"
#include "hfcover/surgery.hpp"
#include "oracle.hpp"

using namespace hfcover;

namespace {

CoverQuery query(const char* cover, SurgerySlope cs, const char* base, SurgerySlope bs) {
  return CoverQuery{builtin(cover), cs, builtin(base), bs, std::nullopt};
}

bool has_kind(const ObstructionVerdict& v, std::size_t index) {
  for (const auto& c : v.certificates)
    if (c.index() == index) return true;
  return false;
}

void expect_valid(const ObstructionVerdict& v) {
  CHECK(v.obstructed() == !v.certificates.empty());
  for (const auto& c : v.certificates) CHECK(certificate_holds(c));
}

}  // namespace

TEST_CASE("same-knot obstruction") {
  const auto t23 = builtin("T(2,3)");
  auto v = obstruct_same_knot(t23, SurgerySlope(1, 2), SurgerySlope(1, 5));
  CHECK(v.obstructed());
  REQUIRE(v.certificates.size() == 1);
  CHECK(std::get<SameKnotHypotheses>(v.certificates[0]) == SameKnotHypotheses{2, 5});

  CHECK_FALSE(obstruct_same_knot(t23, SurgerySlope(7, 1), SurgerySlope(49, 8)).obstructed());
  CHECK_FALSE(obstruct_same_knot(t23, SurgerySlope(1, 2), SurgerySlope(1, 2)).obstructed());
  // p/q > 1 is outside the hypotheses even when the ceil/floor inequality holds
  CHECK_FALSE(obstruct_same_knot(t23, SurgerySlope(3, 2), SurgerySlope(1, 5)).obstructed());

  CHECK_THROWS_AS(obstruct_same_knot(builtin("unknot"), SurgerySlope(1, 2), SurgerySlope(1, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(obstruct_same_knot(t23, SurgerySlope(-1, 2), SurgerySlope(1, 5)), std::invalid_argument);
}

TEST_CASE("genus obstruction for L-space knots") {
  const auto t23 = builtin("T(2,3)"), p237 = builtin("P(-2,3,7)");
  auto v = obstruct_lspace_knots(t23, SurgerySlope(1, 1), p237, SurgerySlope(1, 1));
  CHECK(v.obstructed());
  CHECK(std::get<GenusHypotheses>(v.certificates.at(0)) == GenusHypotheses{1, 9});
  CHECK_FALSE(obstruct_lspace_knots(p237, SurgerySlope(1, 1), t23, SurgerySlope(1, 1)).obstructed());
  CHECK_FALSE(obstruct_lspace_knots(t23, SurgerySlope(2, 1), t23, SurgerySlope(1, 1)).obstructed());

  KnotProfile thick = t23;
  thick.a_dims = {1, 3, 1};
  CHECK_THROWS_AS(obstruct_lspace_knots(thick, SurgerySlope(1, 1), t23, SurgerySlope(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(obstruct_lspace_knots(builtin("unknot"), SurgerySlope(1, 1), t23, SurgerySlope(1, 1)),
                  std::invalid_argument);
}

TEST_CASE("dimension-gap obstruction") {
  auto v = obstruct_by_dimension_gap(query("T(2,3)", {1, 2}, "T(2,3)", {1, 5}));
  CHECK(v.obstructed());
  CHECK(std::get<DimensionGap>(v.certificates.at(0)) == DimensionGap{3, 9});

  v = obstruct_by_dimension_gap(query("unknot", {1, 1}, "unknot", {5, 1}));
  CHECK_FALSE(v.obstructed());
  CHECK(v.observed_gap == DimensionGap{1, 1});

  v = obstruct_by_dimension_gap(query("T(2,3)", {7, 1}, "T(2,3)", {49, 8}));
  CHECK_FALSE(v.obstructed());
  CHECK(v.observed_gap == DimensionGap{1, 1});
}

TEST_CASE("L-space cover obstruction") {
  CHECK(obstruct_lspace_cover(query("T(2,3)", {7, 1}, "T(2,3)", {1, 2})).obstructed());
  CHECK_FALSE(obstruct_lspace_cover(query("T(2,3)", {1, 2}, "T(2,3)", {7, 1})).obstructed());
  auto v = obstruct_lspace_cover(query("P(-2,3,7)", {9, 1}, "T(2,3)", {1, 2}));
  CHECK(v.obstructed());
  CHECK(std::get<LspaceContradiction>(v.certificates.at(0)) == LspaceContradiction{true, false});
  // +1 surgery on the trefoil is the Poincare sphere, an L-space (1 >= 2g - 1)
  CHECK_FALSE(obstruct_lspace_cover(query("P(-2,3,7)", {9, 1}, "T(2,3)", {1, 1})).obstructed());
}

TEST_CASE("obstruct_all aggregates") {
  auto v = obstruct_all(query("T(2,3)", {1, 2}, "T(2,3)", {1, 5}));
  CHECK(v.obstructed());
  CHECK(has_kind(v, 0));
  CHECK(has_kind(v, 2));
  CHECK(v.outcome(CheckKind::SameKnot) == CheckOutcome::Fired);
  CHECK(v.outcome(CheckKind::DimensionGap) == CheckOutcome::Fired);
  expect_valid(v);

  v = obstruct_all(query("unknot", {1, 1}, "unknot", {5, 1}));
  CHECK_FALSE(v.obstructed());
  CHECK(v.certificates.empty());
  CHECK(v.outcome(CheckKind::SameKnot) == CheckOutcome::NotApplicable);

  v = obstruct_all(query("T(2,3)", {1, 1}, "P(-2,3,7)", {1, 1}));
  CHECK(v.obstructed());
  CHECK(has_kind(v, 1));
  CHECK(v.outcome(CheckKind::SameKnot) == CheckOutcome::NotApplicable);
  expect_valid(v);

  CheckSet only_gap{false, false, true, false};
  v = obstruct_all(query("T(2,3)", {1, 2}, "T(2,3)", {1, 5}), only_gap);
  CHECK(v.certificates.size() == 1);
  CHECK(v.outcome(CheckKind::SameKnot) == CheckOutcome::Skipped);
}

TEST_CASE("pinned primes respect coefficient notes") {
  CHECK(note_covers_prime("all primes", 5));
  CHECK(note_covers_prime("All Primes", 2));
  CHECK(note_covers_prime("2,3", 3));
  CHECK(note_covers_prime("r=2", 2));
  CHECK_FALSE(note_covers_prime("2,3", 5));
  CHECK_FALSE(note_covers_prime("23", 2));
  CHECK_FALSE(note_covers_prime("unspecified", 2));

  auto q = query("T(2,3)", {1, 2}, "T(2,3)", {1, 5});
  q.prime = 3;
  CHECK(obstruct_all(q).obstructed());
  q.base_profile.coefficient_note = "2";
  CHECK_THROWS_AS(obstruct_all(q), std::invalid_argument);
  CHECK_THROWS_AS(obstruct_by_dimension_gap(q), std::invalid_argument);
  q.prime = 4;
  CHECK_THROWS_AS(obstruct_all(q), std::invalid_argument);
}

TEST_CASE("same-knot firing implies a dimension gap") {
  for (const char* name : {"T(2,3)", "T(2,5)", "P(-2,3,7)"}) {
    const auto k = builtin(name);
    for (std::int64_t p = 1; p <= 12; ++p)
      for (std::int64_t q = 1; q <= 12; ++q) {
        if (oracle::gcd(p, q) != 1) continue;
        for (std::int64_t p2 = 1; p2 <= 12; ++p2)
          for (std::int64_t q2 = 1; q2 <= 12; ++q2) {
            if (oracle::gcd(p2, q2) != 1) continue;
            const auto same = obstruct_same_knot(k, {p, q}, {p2, q2});
            if (!same.obstructed()) continue;
            const auto gap = obstruct_by_dimension_gap(CoverQuery{k, {p, q}, k, {p2, q2}, std::nullopt});
            REQUIRE(gap.obstructed());
            expect_valid(gap);
          }
      }
  }
}

TEST_CASE("genus firing implies dimension gap or L-space contradiction") {
  const auto t23 = builtin("T(2,3)"), t25 = builtin("T(2,5)");
  for (const auto& [a, b] : {std::pair{t23, t25}, std::pair{t25, t23}})
    for (std::int64_t p = 1; p <= 8; ++p)
      for (std::int64_t q = 1; q <= 8; ++q) {
        if (oracle::gcd(p, q) != 1) continue;
        for (std::int64_t p2 = 1; p2 <= 8; ++p2)
          for (std::int64_t q2 = 1; q2 <= 8; ++q2) {
            if (oracle::gcd(p2, q2) != 1) continue;
            if (!obstruct_lspace_knots(a, {p, q}, b, {p2, q2}).obstructed()) continue;
            const CoverQuery cq{a, {p, q}, b, {p2, q2}, std::nullopt};
            if (p >= (2 * a.genus - 1) * q)
              REQUIRE(obstruct_lspace_cover(cq).obstructed());
            else
              REQUIRE(obstruct_by_dimension_gap(cq).obstructed());
          }
      }
}
