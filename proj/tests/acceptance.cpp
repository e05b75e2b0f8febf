// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hfcover/lens.hpp"
#include "hfcover/obstruction.hpp"
#include "hfcover/phi.hpp"
#include "hfcover/surgery.hpp"
#include "hfcover/survey.hpp"
#include "oracle.hpp"

using namespace hfcover;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. closed form == brute force on |p|, q <= 20, |i|, |s| <= 40; under 10 s
Outcome phi_oracle_equivalence() {
  Outcome out;
  const auto t0 = Clock::now();
  long checked = 0;
  for (std::int64_t p = -20; p <= 20; ++p) {
    if (p == 0) continue;
    for (std::int64_t q = 1; q <= 20; ++q) {
      if (oracle::gcd(p, q) != 1) continue;
      const SurgerySlope slope(p, q);
      for (std::int64_t i = -40; i <= 40; ++i)
        for (std::int64_t s = -40; s <= 40; ++s) {
          ++checked;
          if (phi(slope, i, s) != phi_bruteforce(slope, i, s))
            out.fail("mismatch at " + slope.str() + " i=" + std::to_string(i) + " s=" + std::to_string(s));
        }
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 10.0) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.pass) out.detail = std::to_string(checked) + " values in " + std::to_string(elapsed) + " s";
  return out;
}

// 2. floor|q/p| <= phi <= ceil|q/p| on the same grid
Outcome phi_bounds_hold() {
  Outcome out;
  for (std::int64_t p = -20; p <= 20; ++p) {
    if (p == 0) continue;
    for (std::int64_t q = 1; q <= 20; ++q) {
      if (oracle::gcd(p, q) != 1) continue;
      const SurgerySlope slope(p, q);
      const PhiBounds b = phi_bounds(slope);
      for (std::int64_t i = -40; i <= 40; ++i)
        for (std::int64_t s = -40; s <= 40; ++s) {
          const auto v = phi(slope, i, s);
          if (v < b.lower || v > b.upper) out.fail("bound violated at " + slope.str());
        }
    }
  }
  return out;
}

// 3. at p = (2nu-1) q the two positive-slope branches agree, g <= 5, q <= 10
Outcome branch_overlap() {
  Outcome out;
  for (std::int64_t g = 1; g <= 5; ++g) {
    const auto k = lspace_knot_profile("L-space knot g=" + std::to_string(g), g);
    for (std::int64_t q = 1; q <= 10; ++q) {
      const std::int64_t p = (2 * k.nu - 1) * q;
      for (std::int64_t i = 0; i < p; ++i) {
        const auto b = positive_branches(k, p, q, i);
        if (b.large_slope != b.small_slope)
          out.fail("g=" + std::to_string(g) + " q=" + std::to_string(q) + " i=" + std::to_string(i));
      }
      // the reduced slope (2nu-1)/1 through the public table
      const SurgerySlope reduced(p, q);
      for (std::int64_t i = 0; i < reduced.order(); ++i) {
        const auto b = positive_branches(k, reduced.p(), reduced.q(), i);
        if (b.large_slope != b.small_slope || hf_dim(k, reduced, i) != b.large_slope)
          out.fail("reduced slope mismatch g=" + std::to_string(g));
      }
    }
  }
  return out;
}

// 4. L-space iff p/q >= 2g - 1, g in 1..5, p <= 60, q <= 12
Outcome lspace_threshold() {
  Outcome out;
  long checked = 0;
  for (std::int64_t g = 1; g <= 5; ++g) {
    const auto k = lspace_knot_profile("g" + std::to_string(g), g);
    for (std::int64_t p = 1; p <= 60; ++p)
      for (std::int64_t q = 1; q <= 12; ++q) {
        if (oracle::gcd(p, q) != 1) continue;
        ++checked;
        const bool expected = p >= (2 * g - 1) * q;
        if (is_zrz_lspace_surgery(k, SurgerySlope(p, q)) != expected)
          out.fail("g=" + std::to_string(g) + " slope " + std::to_string(p) + "/" + std::to_string(q));
      }
  }
  if (out.pass) out.detail = std::to_string(checked) + " slopes";
  return out;
}

// 5. lens-space spot values
Outcome spot_values() {
  Outcome out;
  const auto t23 = builtin("T(2,3)");
  const auto table = hf_table(t23, SurgerySlope(7, 1));
  if (table.dims != std::vector<std::int64_t>(7, 1) || table.total != 7 || !table.is_lspace)
    out.fail("hf_table(T(2,3), 7/1) is not all ones with total 7");
  // expected values from the term-by-term oracle
  if (oracle::hf_dim(t23, -1, 1, 0) != 3 || oracle::hf_dim(t23, 1, 2, 0) != 3) out.fail("oracle disagrees");
  if (hf_dim(t23, SurgerySlope(-1, 1), 0) != 3) out.fail("hf_dim(T(2,3), -1/1, 0) != 3");
  if (hf_dim(t23, SurgerySlope(1, 2), 0) != 3) out.fail("hf_dim(T(2,3), 1/2, 0) != 3");
  return out;
}

// 6. same-knot hypotheses imply a dimension gap, positive and negative, <= 12
Outcome same_knot_soundness() {
  Outcome out;
  const auto t0 = Clock::now();
  const auto t23 = builtin("T(2,3)");
  long fired = 0;
  for (std::int64_t p = 1; p <= 12; ++p)
    for (std::int64_t q = 1; q <= 12; ++q) {
      if (oracle::gcd(p, q) != 1) continue;
      for (std::int64_t p2 = 1; p2 <= 12; ++p2)
        for (std::int64_t q2 = 1; q2 <= 12; ++q2) {
          if (oracle::gcd(p2, q2) != 1) continue;
          const SurgerySlope cover(p, q), base(p2, q2);
          if (!obstruct_same_knot(t23, cover, base).obstructed()) continue;
          ++fired;
          const auto pos = obstruct_by_dimension_gap(CoverQuery{t23, cover, t23, base, std::nullopt});
          const auto neg =
              obstruct_by_dimension_gap(CoverQuery{t23, cover.negated(), t23, base.negated(), std::nullopt});
          if (!pos.obstructed()) out.fail("no gap for " + cover.str() + " -> " + base.str());
          if (!neg.obstructed()) out.fail("no gap for -" + cover.str() + " -> -" + base.str());
        }
    }
  const double elapsed = seconds_since(t0);
  if (fired == 0) out.fail("hypotheses never held on the grid");
  if (elapsed >= 30.0) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.pass) out.detail = std::to_string(fired) + " hypothesis pairs in " + std::to_string(elapsed) + " s";
  return out;
}

// 7. genus hypotheses imply a dimension gap or an L-space contradiction
Outcome genus_soundness() {
  Outcome out;
  const auto t23 = builtin("T(2,3)"), p237 = builtin("P(-2,3,7)");
  long fired = 0;
  for (const auto& [k, k2] : {std::pair{t23, p237}, std::pair{p237, t23}})
    for (std::int64_t p = 1; p <= 10; ++p)
      for (std::int64_t q = 1; q <= 10; ++q) {
        if (oracle::gcd(p, q) != 1) continue;
        for (std::int64_t p2 = 1; p2 <= 10; ++p2)
          for (std::int64_t q2 = 1; q2 <= 10; ++q2) {
            if (oracle::gcd(p2, q2) != 1) continue;
            const SurgerySlope cover(p, q), base(p2, q2);
            if (!obstruct_lspace_knots(k, cover, k2, base).obstructed()) continue;
            ++fired;
            const CoverQuery query{k, cover, k2, base, std::nullopt};
            if (!obstruct_by_dimension_gap(query).obstructed() && !obstruct_lspace_cover(query).obstructed())
              out.fail(k.name + " " + cover.str() + " -> " + k2.name + " " + base.str());
          }
      }
  if (fired == 0) out.fail("hypotheses never held on the grid");
  if (out.pass) out.detail = std::to_string(fired) + " hypothesis pairs";
  return out;
}

// 8. known covers are never obstructed; family arithmetic (a)-(c) holds
Outcome known_covers() {
  Outcome out;
  long pairs = 0;
  auto no_test_fires = [&](const CoverQuery& query, const std::string& what) {
    ++pairs;
    const auto all = obstruct_all(query);
    if (all.obstructed()) out.fail(what + ": obstruct_all fired");
    if (obstruct_by_dimension_gap(query).obstructed()) out.fail(what + ": dimension gap fired");
    if (obstruct_lspace_cover(query).obstructed()) out.fail(what + ": L-space cover fired");
    const bool positive = query.cover_slope.positive() && query.base_slope.positive();
    if (positive && query.cover_profile.nontrivial && query.cover_profile == query.base_profile &&
        obstruct_same_knot(query.cover_profile, query.cover_slope, query.base_slope).obstructed())
      out.fail(what + ": same-knot fired");
    if (positive && query.cover_profile.is_lspace_knot() && query.base_profile.is_lspace_knot() &&
        obstruct_lspace_knots(query.cover_profile, query.cover_slope, query.base_profile, query.base_slope)
            .obstructed())
      out.fail(what + ": genus fired");
  };

  const auto unknot = builtin("unknot");
  for (std::int64_t q = 1; q <= 12; ++q)
    for (std::int64_t p2 = -12; p2 <= 12; ++p2) {
      if (p2 == 0) continue;
      for (std::int64_t q2 = 1; q2 <= 12; ++q2) {
        if (oracle::gcd(p2, q2) != 1) continue;
        no_test_fires(CoverQuery{unknot, SurgerySlope(1, q), unknot, SurgerySlope(p2, q2), std::nullopt},
                      "unknot 1/" + std::to_string(q) + " -> " + std::to_string(p2) + "/" + std::to_string(q2));
      }
    }

  const auto t23 = builtin("T(2,3)");
  for (std::int64_t q = 1; q <= 50; ++q)
    for (std::int64_t k = 1; k <= 10; ++k)
      for (int sign : {1, -1}) {
        const auto rec = verify_trefoil_family(q, k, sign);
        const std::string what = "family q=" + std::to_string(q) + " k=" + std::to_string(k) +
                                 (sign > 0 ? " +" : " -");
        if (!rec.arithmetic_ok()) out.fail(what + ": checks (a)-(c)");
        no_test_fires(CoverQuery{t23, SurgerySlope(rec.p, q), t23, SurgerySlope(rec.p_base, rec.q_base),
                                 std::nullopt},
                      what);
      }
  if (out.pass) out.detail = std::to_string(pairs) + " cover pairs";
  return out;
}

// 9. two runs of a 10^4-row survey produce identical bytes
Outcome survey_determinism() {
  Outcome out;
  SurveyJob job;
  job.profiles = {builtin("T(2,3)"), builtin("P(-2,3,7)")};
  job.cover_slopes = {-25, 25, 1, 1};
  job.base_slopes = {-25, 25, 1, 1};
  const auto t0 = Clock::now();
  const auto rows_a = run_survey(job);
  const auto rows_b = run_survey(job);
  if (rows_a.size() != 10000) out.fail("expected 10000 rows, got " + std::to_string(rows_a.size()));
  for (auto format : {ReportFormat::Jsonl, ReportFormat::Csv, ReportFormat::Text}) {
    const auto a = emit_report(rows_a, format, job.profiles);
    const auto b = emit_report(rows_b, format, job.profiles);
    if (a != b) out.fail("reports differ between runs");
  }
  if (run_survey_serial(job) != rows_a) out.fail("parallel rows differ from the serial reference");
  const auto parsed = parse_report_jsonl(emit_report(rows_a, ReportFormat::Jsonl, job.profiles));
  if (parsed.rows != rows_a) out.fail("JSONL round-trip lost data");
  if (out.pass) out.detail = "10000 rows x 2 runs in " + std::to_string(seconds_since(t0)) + " s";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 phi closed form == brute force", phi_oracle_equivalence},
      {"AC2 phi bounds", phi_bounds_hold},
      {"AC3 branch overlap identity", branch_overlap},
      {"AC4 L-space threshold 2g-1", lspace_threshold},
      {"AC5 lens-space spot values", spot_values},
      {"AC6 same-knot soundness", same_knot_soundness},
      {"AC7 genus soundness", genus_soundness},
      {"AC8 known covers not obstructed", known_covers},
      {"AC9 survey determinism", survey_determinism},
  };
  const auto t0 = Clock::now();
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("%s  %-38s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
              seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
