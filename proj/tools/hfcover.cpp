// hfcover: command-line front end.
//
// Exit codes: 0 ran (whatever the verdicts), 1 input error, 2 arithmetic overflow.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hfcover/checked.hpp"
#include "hfcover/lens.hpp"
#include "hfcover/obstruction.hpp"
#include "hfcover/phi.hpp"
#include "hfcover/profile.hpp"
#include "hfcover/surgery.hpp"
#include "hfcover/survey.hpp"

using namespace hfcover;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitOverflow = 2;

struct SlopeArgs {
  std::int64_t p = 0, q = 1;
};

struct ProfileArgs {
  std::string name;
  std::string file;
};

KnotProfile resolve(const std::string& name, const std::string& file) {
  if (!file.empty()) {
    for (const auto& k : load_profiles_file(file))
      if (k.name == name) return k;
  }
  return builtin(name);
}

std::string verdict_text(const ObstructionVerdict& v) {
  std::ostringstream out;
  out << (v.obstructed() ? "obstructed" : "not obstructed (no obstruction found)") << "\n";
  for (const auto& c : v.checks) out << "  " << to_string(c.kind) << ": " << to_string(c.outcome) << "\n";
  if (v.observed_gap)
    out << "  gap: max cover dim " << v.observed_gap->max_cover_dim << ", min base dim "
        << v.observed_gap->min_base_dim << "\n";
  for (const auto& c : v.certificates) out << "  certificate " << describe(c) << "\n";
  out << "  scope: regular prime-power covers\n";
  return out.str();
}

void print_lens(const std::optional<LensSpace>& l) { std::cout << (l ? l->str() : std::string("none")) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heegaard Floer dimension tables and covering obstructions for Dehn surgeries"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  SlopeArgs a, b;
  ProfileArgs prof, prof2;
  std::int64_t i = 0, s = 0;
  std::optional<std::int64_t> s_hi, prime;
  std::string format = "text";
  bool brute = false;

  auto add_slope = [](CLI::App* cmd, SlopeArgs& sl, const std::string& pn, const std::string& qn) {
    cmd->add_option(pn, sl.p, "surgery numerator")->required();
    cmd->add_option(qn, sl.q, "surgery denominator (default 1)");
  };
  auto add_profile = [](CLI::App* cmd, ProfileArgs& pa, const std::string& flag) {
    cmd->add_option(flag, pa.name, "built-in name or name in --profiles-file")->required();
    cmd->add_option("--profiles-file", pa.file, "profile document");
  };

  auto* phi_cmd = app.add_subcommand("phi", "count n with floor((i + p n)/q) = s");
  add_slope(phi_cmd, a, "--p", "--q");
  phi_cmd->add_option("--i", i, "Spin^c representative");
  phi_cmd->add_option("--s", s, "level s")->required();
  phi_cmd->add_option("--s-hi", s_hi, "sum phi over s..s-hi");
  phi_cmd->add_flag("--brute", brute, "use the enumeration oracle");

  auto* table_cmd = app.add_subcommand("hf-table", "per-class HF-hat dimensions of a surgery");
  add_profile(table_cmd, prof, "--profile");
  add_slope(table_cmd, a, "--p", "--q");
  table_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* lspace_cmd = app.add_subcommand("lspace", "is the surgery a Z/rZ L-space");
  add_profile(lspace_cmd, prof, "--profile");
  add_slope(lspace_cmd, a, "--p", "--q");

  auto* obstruct = app.add_subcommand("obstruct", "covering obstructions");
  obstruct->require_subcommand(1);
  auto* same_cmd = obstruct->add_subcommand("same-knot", "same knot, two positive slopes");
  add_profile(same_cmd, prof, "--profile");
  add_slope(same_cmd, a, "--p", "--q");
  add_slope(same_cmd, b, "--p2", "--q2");
  auto* pair_cmd = obstruct->add_subcommand("pair", "all tests: cover (--profile, --p/--q) over base (--profile2, --p2/--q2)");
  add_profile(pair_cmd, prof, "--profile");
  pair_cmd->add_option("--profile2", prof2.name, "base knot (defaults to --profile)");
  add_slope(pair_cmd, a, "--p", "--q");
  add_slope(pair_cmd, b, "--p2", "--q2");
  pair_cmd->add_option("--prime", prime, "pin the coefficient prime r");
  pair_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* lens = app.add_subcommand("lens", "lens space arithmetic");
  lens->require_subcommand(1);
  auto* moser_cmd = lens->add_subcommand("moser", "trefoil surgery lens space for |p - 6q| = 1");
  add_slope(moser_cmd, a, "--p", "--q");
  std::int64_t degree = 1, fam_q = 1, fam_k = 1;
  int sign = 1;
  auto* cover_cmd = lens->add_subcommand("cover", "cyclic cover of L(p,q)");
  cover_cmd->add_option("--p", a.p, "lens order p")->required();
  cover_cmd->add_option("--q", a.q, "lens parameter q")->required();
  cover_cmd->add_option("--degree", degree, "cover degree")->required();
  auto* family_cmd = lens->add_subcommand("family", "verify the trefoil cover family");
  family_cmd->add_option("--q", fam_q, "q >= 1")->required();
  family_cmd->add_option("--k", fam_k, "k >= 1 (degree 6k+1)")->required();
  family_cmd->add_option("--sign", sign, "+1 or -1")->check(CLI::IsMember({1, -1}));

  auto* survey = app.add_subcommand("survey", "batch surveys");
  survey->require_subcommand(1);
  std::string job_path, out_path;
  std::optional<std::string> survey_format;
  std::optional<int> workers;
  auto* run_cmd = survey->add_subcommand("run", "run a survey job file");
  run_cmd->add_option("--job", job_path, "job file")->required();
  run_cmd->add_option("--out", out_path, "report path (overrides the job; '-' for stdout)");
  run_cmd->add_option("--format", survey_format, "text, csv or jsonl")
      ->check(CLI::IsMember({"text", "csv", "jsonl"}));
  run_cmd->add_option("--workers", workers, "worker threads (0 = default)");

  auto* profile = app.add_subcommand("profile", "knot profiles");
  profile->require_subcommand(1);
  auto* validate_cmd = profile->add_subcommand("validate", "validate every record of a profile document");
  validate_cmd->add_option("--profiles-file", prof.file, "profile document")->required();
  auto* show_cmd = profile->add_subcommand("show", "print a profile as a profile document");
  show_cmd->add_option("--profile", prof.name, "profile name")->required();
  show_cmd->add_option("--profiles-file", prof.file, "profile document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*phi_cmd) {
      const SurgerySlope slope(a.p, a.q);
      std::int64_t v;
      if (s_hi)
        v = phi_window_sum(slope, i, s, *s_hi);
      else
        v = brute ? phi_bruteforce(slope, i, s) : phi(slope, i, s);
      std::cout << v << "\n";
    } else if (*table_cmd) {
      const auto t = hf_table(resolve(prof.name, prof.file), SurgerySlope(a.p, a.q));
      if (format == "json") {
        json j;
        j["profile"] = t.profile_name;
        j["p"] = t.slope.p();
        j["q"] = t.slope.q();
        j["dims"] = t.dims;
        j["total"] = t.total;
        j["is_lspace"] = t.is_lspace;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "# " << t.profile_name << " surgery " << t.slope.str() << "\n";
        for (std::size_t c = 0; c < t.dims.size(); ++c) std::cout << c << " " << t.dims[c] << "\n";
        std::cout << "total " << t.total << "\nlspace " << (t.is_lspace ? "yes" : "no") << "\n";
      }
    } else if (*lspace_cmd) {
      std::cout << (is_zrz_lspace_surgery(resolve(prof.name, prof.file), SurgerySlope(a.p, a.q)) ? "yes" : "no")
                << "\n";
    } else if (*same_cmd) {
      std::cout << verdict_text(obstruct_same_knot(resolve(prof.name, prof.file), SurgerySlope(a.p, a.q),
                                                   SurgerySlope(b.p, b.q)));
    } else if (*pair_cmd) {
      const KnotProfile cover = resolve(prof.name, prof.file);
      const KnotProfile base = prof2.name.empty() ? cover : resolve(prof2.name, prof.file);
      const auto v = obstruct_all(CoverQuery{cover, SurgerySlope(a.p, a.q), base, SurgerySlope(b.p, b.q), prime});
      if (format == "json") {
        SurveyRow row{cover.name, SurgerySlope(a.p, a.q), base.name, SurgerySlope(b.p, b.q), v, "", false};
        const std::vector<KnotProfile> used = {cover, base};
        const std::string doc = emit_report(std::span<const SurveyRow>(&row, 1), ReportFormat::Jsonl, used);
        std::cout << doc.substr(doc.find('\n') + 1);
      } else {
        std::cout << verdict_text(v);
      }
    } else if (*moser_cmd) {
      print_lens(moser_trefoil(SurgerySlope(a.p, a.q)));
    } else if (*cover_cmd) {
      print_lens(cyclic_cover(LensSpace(a.p, a.q), degree));
    } else if (*family_cmd) {
      const auto r = verify_trefoil_family(fam_q, fam_k, sign);
      std::cout << "cover   " << r.p << "/" << r.q << " -> " << (r.cover_space ? r.cover_space->str() : "none") << "\n"
                << "base    " << r.p_base << "/" << r.q_base << " -> "
                << (r.base_space ? r.base_space->str() : "none") << "\n"
                << "degree  " << r.degree;
      if (r.degree_factorization)
        std::cout << " = " << r.degree_factorization->prime << "^" << r.degree_factorization->exponent;
      std::cout << "\n(a) order factors      " << (r.order_factors ? "yes" : "no") << "\n"
                << "(b) Moser lens spaces  " << (r.moser_matches ? "yes" : "no") << "\n"
                << "(c) cyclic cover match " << (r.cover_matches ? "yes" : "no") << "\n"
                << "(d) prime-power degree " << (r.degree_prime_power ? "yes" : "no") << "\n";
    } else if (*run_cmd) {
      SurveyJob job = load_job_file(job_path);
      if (!out_path.empty()) job.output_path = out_path == "-" ? "" : out_path;
      if (survey_format) job.format = *parse_report_format(*survey_format);
      if (workers) job.workers = *workers;
      const auto rows = run_survey(job);
      const std::string doc = emit_report(rows, job.format, job.profiles);
      if (job.output_path.empty())
        std::cout << doc;
      else
        write_report(job.output_path, doc);
      for (const auto& row : rows)
        if (row.overflow) {
          std::cerr << "hfcover: overflow in " << row.cover_knot << " " << row.cover_slope.str() << " -> "
                    << row.base_knot << " " << row.base_slope.str() << "\n";
          return kExitOverflow;
        }
    } else if (*validate_cmd) {
      std::ifstream in(prof.file, std::ios::binary);
      if (!in) throw ProfileError("cannot open profile file '" + prof.file + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      bool all_ok = true;
      for (const auto& k : parse_profiles(buf.str())) {
        const auto r = validate(k);
        all_ok = all_ok && r.ok();
        std::cout << k.name << ": " << (r.ok() ? "valid" : "invalid");
        for (const auto& v : r.violations) std::cout << " " << v;
        std::cout << "\n";
      }
      return all_ok ? 0 : kExitInput;
    } else if (*show_cmd) {
      const std::vector<KnotProfile> one = {resolve(prof.name, prof.file)};
      std::cout << serialize_profiles(one);
    }
  } catch (const OverflowError& e) {
    std::cerr << "hfcover: overflow: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const std::exception& e) {
    std::cerr << "hfcover: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
