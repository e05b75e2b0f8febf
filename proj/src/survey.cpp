#include "hfcover/survey.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hfcover/checked.hpp"

namespace hfcover {

using json = nlohmann::ordered_json;

std::vector<SurgerySlope> enumerate_slopes(const SlopeRange& r) {
  if (r.q_min < 1) throw std::invalid_argument("slope range: q_min must be >= 1");
  if (r.p_min > r.p_max || r.q_min > r.q_max) return {};
  const wide_int points = checked_mul(checked_add(checked_sub(r.p_max, r.p_min), 1),
                                      checked_add(checked_sub(r.q_max, r.q_min), 1));
  if (points > 10'000'000) throw std::invalid_argument("slope range: more than 10^7 grid points");

  std::set<SurgerySlope> unique;
  // Loop counters stop before incrementing past p_max / q_max, which may be INT64_MAX.
  for (std::int64_t p = r.p_min;; ++p) {
    if (p != 0)
      for (std::int64_t q = r.q_min;; ++q) {
        unique.emplace(p, q);
        if (q == r.q_max) break;
      }
    if (p == r.p_max) break;
  }
  return {unique.begin(), unique.end()};
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "jsonl") return ReportFormat::Jsonl;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Job files

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& ctx) {
  for (const auto& item : obj.items())
    if (!known.count(item.key())) throw JobError(ctx + ": unknown field '" + item.key() + "'");
}

std::int64_t job_int(const json& obj, const std::string& key, const std::string& ctx) {
  if (!obj.contains(key)) throw JobError(ctx + ": field '" + key + "' missing");
  if (!obj[key].is_number_integer()) throw JobError(ctx + ": field '" + key + "' must be an integer");
  return obj[key].get<std::int64_t>();
}

SlopeRange parse_range(const json& doc, const std::string& key) {
  if (!doc.contains(key) || !doc[key].is_object()) throw JobError("field '" + key + "': expected an object");
  const json& r = doc[key];
  reject_unknown(r, {"p_min", "p_max", "q_min", "q_max"}, key);
  SlopeRange out{job_int(r, "p_min", key), job_int(r, "p_max", key), job_int(r, "q_min", key),
                 job_int(r, "q_max", key)};
  if (out.q_min < 1) throw JobError(key + ": q_min must be >= 1");
  return out;
}

CheckSet parse_checks(const json& doc) {
  if (!doc.contains("checks")) return CheckSet::all();
  if (!doc["checks"].is_array()) throw JobError("field 'checks': expected an array");
  CheckSet c{false, false, false, false};
  for (const auto& item : doc["checks"]) {
    const std::string name = item.is_string() ? item.get<std::string>() : "";
    if (name == "same-knot") c.same_knot = true;
    else if (name == "genus") c.genus = true;
    else if (name == "dimension-gap") c.dimension_gap = true;
    else if (name == "lspace-cover") c.lspace_cover = true;
    else throw JobError("field 'checks': unknown check '" + item.dump() + "'");
  }
  return c;
}

}  // namespace

SurveyJob parse_job(std::string_view document, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw JobError(std::string("job file: ") + e.what());
  }
  if (!doc.is_object()) throw JobError("job file must be an object");
  reject_unknown(doc,
                 {"profiles", "profiles_file", "pairs", "cover_slopes", "base_slopes", "checks", "output",
                  "workers"},
                 "job");

  SurveyJob job;
  std::vector<KnotProfile> from_file;
  if (doc.contains("profiles_file")) {
    if (!doc["profiles_file"].is_string()) throw JobError("field 'profiles_file': expected a string");
    std::filesystem::path path = doc["profiles_file"].get<std::string>();
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    from_file = load_profiles_file(path.string());
  }
  if (!doc.contains("profiles") || !doc["profiles"].is_array())
    throw JobError("field 'profiles': expected an array of profile names");
  for (const auto& ref : doc["profiles"]) {
    if (!ref.is_string()) throw JobError("field 'profiles': entries must be strings");
    const std::string name = ref.get<std::string>();
    auto hit = std::find_if(from_file.begin(), from_file.end(), [&](const KnotProfile& k) { return k.name == name; });
    if (hit != from_file.end()) {
      job.profiles.push_back(*hit);
      continue;
    }
    try {
      job.profiles.push_back(builtin(name));
    } catch (const std::invalid_argument& e) {
      throw JobError(std::string("field 'profiles': ") + e.what());
    }
  }

  if (doc.contains("pairs")) {
    const std::string mode = doc["pairs"].is_string() ? doc["pairs"].get<std::string>() : "";
    if (mode == "all") job.pairs = PairMode::All;
    else if (mode == "same") job.pairs = PairMode::Same;
    else throw JobError("field 'pairs': expected \"all\" or \"same\"");
  }
  job.cover_slopes = parse_range(doc, "cover_slopes");
  job.base_slopes = parse_range(doc, "base_slopes");
  job.checks = parse_checks(doc);

  if (doc.contains("output")) {
    const json& out = doc["output"];
    if (!out.is_object()) throw JobError("field 'output': expected an object");
    reject_unknown(out, {"path", "format"}, "output");
    if (out.contains("path")) {
      if (!out["path"].is_string()) throw JobError("output.path: expected a string");
      std::filesystem::path path = out["path"].get<std::string>();
      if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
      job.output_path = path.string();
    }
    if (out.contains("format")) {
      const auto f = out["format"].is_string() ? parse_report_format(out["format"].get<std::string>())
                                               : std::nullopt;
      if (!f) throw JobError("output.format: expected text, csv or jsonl");
      job.format = *f;
    }
  }
  if (doc.contains("workers")) {
    const std::int64_t w = job_int(doc, "workers", "job");
    if (w < 0 || w > 4096) throw JobError("field 'workers': expected 0..4096");
    job.workers = static_cast<int>(w);
  }
  return job;
}

SurveyJob load_job_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JobError("cannot open job file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_job(buf.str(), path.parent_path());
  } catch (const ProfileError& e) {
    throw JobError(path.string() + ": " + e.what());
  } catch (const JobError& e) {
    throw JobError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Running

namespace {

struct RowTask {
  std::size_t cover_profile, base_profile;
  SurgerySlope cover_slope, base_slope;
};

std::vector<RowTask> plan(const SurveyJob& job) {
  const auto covers = enumerate_slopes(job.cover_slopes);
  const auto bases = enumerate_slopes(job.base_slopes);
  std::vector<RowTask> tasks;
  const std::size_t n = job.profiles.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (job.pairs == PairMode::Same && a != b) continue;
      for (const auto& cs : covers)
        for (const auto& bs : bases) tasks.push_back({a, b, cs, bs});
    }
  return tasks;
}

SurveyRow evaluate(const SurveyJob& job, const RowTask& t) {
  SurveyRow row;
  const KnotProfile& cover = job.profiles[t.cover_profile];
  const KnotProfile& base = job.profiles[t.base_profile];
  row.cover_knot = cover.name;
  row.cover_slope = t.cover_slope;
  row.base_knot = base.name;
  row.base_slope = t.base_slope;
  try {
    row.verdict = obstruct_all(CoverQuery{cover, t.cover_slope, base, t.base_slope, std::nullopt}, job.checks);
  } catch (const OverflowError& e) {
    row.error = std::string("overflow: ") + e.what();
    row.overflow = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SurveyRow> run_survey(const SurveyJob& job) {
  const std::vector<RowTask> tasks = plan(job);
  std::vector<SurveyRow> rows(tasks.size());
  const std::int64_t count = static_cast<std::int64_t>(tasks.size());
  const int threads = job.workers > 0 ? job.workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    rows[idx] = evaluate(job, tasks[idx]);
  }
  return rows;
}

std::vector<SurveyRow> run_survey_serial(const SurveyJob& job) {
  std::vector<SurveyRow> rows;
  for (const RowTask& t : plan(job)) rows.push_back(evaluate(job, t));
  return rows;
}

// ---------------------------------------------------------------------------
// Reports

namespace {

std::string outcome_name(const SurveyRow& row, CheckKind k) {
  if (!row.verdict) return "error";
  const auto o = row.verdict->outcome(k);
  return o ? std::string(to_string(*o)) : "skipped";
}

std::string verdict_name(const SurveyRow& row) {
  if (!row.verdict) return "error";
  return row.verdict->obstructed() ? "obstructed" : "not-obstructed";
}

std::string gap_field(const SurveyRow& row, bool max_side) {
  if (!row.verdict || !row.verdict->observed_gap) return "";
  const DimensionGap& g = *row.verdict->observed_gap;
  return std::to_string(max_side ? g.max_cover_dim : g.min_base_dim);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string certificate_summary(const SurveyRow& row) {
  if (!row.verdict) return row.error;
  std::string s;
  for (const auto& c : row.verdict->certificates) s += (s.empty() ? "" : "; ") + describe(c);
  return s;
}

json certificate_json(const Certificate& c) {
  json j;
  if (const auto* x = std::get_if<SameKnotHypotheses>(&c)) {
    j["type"] = "same-knot";
    j["ceil_cover"] = x->ceil_cover;
    j["floor_base"] = x->floor_base;
  } else if (const auto* x = std::get_if<GenusHypotheses>(&c)) {
    j["type"] = "genus";
    j["cover_side"] = x->cover_side;
    j["base_side"] = x->base_side;
  } else if (const auto* x = std::get_if<DimensionGap>(&c)) {
    j["type"] = "dimension-gap";
    j["max_cover_dim"] = x->max_cover_dim;
    j["min_base_dim"] = x->min_base_dim;
  } else {
    const auto& y = std::get<LspaceContradiction>(c);
    j["type"] = "lspace-cover";
    j["cover_is_lspace"] = y.cover_is_lspace;
    j["base_is_lspace"] = y.base_is_lspace;
  }
  return j;
}

json header_json(std::span<const KnotProfile> profiles) {
  json h;
  h["kind"] = "header";
  h["tool"] = kToolName;
  h["version"] = kToolVersion;
  h["profiles"] = json::array();
  for (const auto& k : profiles) h["profiles"].push_back({{"name", k.name}, {"fnv1a64", profile_fingerprint(k)}});
  return h;
}

json row_json(const SurveyRow& row) {
  json j;
  j["kind"] = "row";
  j["cover_knot"] = row.cover_knot;
  j["cover_p"] = row.cover_slope.p();
  j["cover_q"] = row.cover_slope.q();
  j["base_knot"] = row.base_knot;
  j["base_p"] = row.base_slope.p();
  j["base_q"] = row.base_slope.q();
  j["verdict"] = verdict_name(row);
  if (!row.verdict) {
    j["error"] = row.error;
    j["overflow"] = row.overflow;
    return j;
  }
  j["checks"] = json::array();
  for (const auto& c : row.verdict->checks)
    j["checks"].push_back({{"check", to_string(c.kind)}, {"outcome", to_string(c.outcome)}});
  if (row.verdict->observed_gap)
    j["gap"] = {{"max_cover_dim", row.verdict->observed_gap->max_cover_dim},
                {"min_base_dim", row.verdict->observed_gap->min_base_dim}};
  else
    j["gap"] = nullptr;
  j["certificates"] = json::array();
  for (const auto& c : row.verdict->certificates) j["certificates"].push_back(certificate_json(c));
  return j;
}

void header_comments(std::ostream& out, std::span<const KnotProfile> profiles) {
  out << "# " << kToolName << " " << kToolVersion << " survey report\n";
  for (const auto& k : profiles) out << "# profile " << k.name << " fnv1a64=" << profile_fingerprint(k) << "\n";
}

}  // namespace

std::string emit_report(std::span<const SurveyRow> rows, ReportFormat format,
                        std::span<const KnotProfile> profiles) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Jsonl:
      out << header_json(profiles).dump() << "\n";
      for (const auto& row : rows) out << row_json(row).dump() << "\n";
      break;

    case ReportFormat::Csv:
      header_comments(out, profiles);
      out << "cover_knot,cover_p,cover_q,base_knot,base_p,base_q,same_knot,genus,dim_gap_max,dim_gap_min,"
             "lspace_cover,verdict\n";
      for (const auto& row : rows) {
        out << csv_field(row.cover_knot) << ',' << row.cover_slope.p() << ',' << row.cover_slope.q() << ','
            << csv_field(row.base_knot) << ',' << row.base_slope.p() << ',' << row.base_slope.q() << ','
            << outcome_name(row, CheckKind::SameKnot) << ',' << outcome_name(row, CheckKind::Genus) << ','
            << gap_field(row, true) << ',' << gap_field(row, false) << ','
            << outcome_name(row, CheckKind::LspaceCover) << ',' << csv_field(verdict_name(row)) << '\n';
      }
      break;

    case ReportFormat::Text: {
      header_comments(out, profiles);
      auto line = [&](const std::vector<std::string>& cells) {
        static const int widths[] = {12, 10, 12, 10, 11, 11, 14, 14, 0};
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (widths[c] > 0)
            out << std::left << std::setw(widths[c]) << cells[c] << ' ';
          else
            out << cells[c];
        }
        out << '\n';
      };
      line({"cover", "slope", "base", "slope", "same-knot", "genus", "lspace-cover", "verdict", "certificates"});
      for (const auto& row : rows)
        line({row.cover_knot, row.cover_slope.str(), row.base_knot, row.base_slope.str(),
              outcome_name(row, CheckKind::SameKnot), outcome_name(row, CheckKind::Genus),
              outcome_name(row, CheckKind::LspaceCover), verdict_name(row), certificate_summary(row)});
      break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parsing JSONL reports

namespace {

CheckKind check_kind_from(const std::string& s) {
  for (CheckKind k : {CheckKind::SameKnot, CheckKind::Genus, CheckKind::DimensionGap, CheckKind::LspaceCover})
    if (to_string(k) == s) return k;
  throw JobError("report: unknown check '" + s + "'");
}

CheckOutcome check_outcome_from(const std::string& s) {
  for (CheckOutcome o : {CheckOutcome::Skipped, CheckOutcome::NotApplicable, CheckOutcome::Silent,
                         CheckOutcome::Fired})
    if (to_string(o) == s) return o;
  throw JobError("report: unknown outcome '" + s + "'");
}

Certificate certificate_from(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "same-knot")
    return SameKnotHypotheses{j.at("ceil_cover").get<std::int64_t>(), j.at("floor_base").get<std::int64_t>()};
  if (type == "genus")
    return GenusHypotheses{j.at("cover_side").get<std::int64_t>(), j.at("base_side").get<std::int64_t>()};
  if (type == "dimension-gap")
    return DimensionGap{j.at("max_cover_dim").get<std::int64_t>(), j.at("min_base_dim").get<std::int64_t>()};
  if (type == "lspace-cover")
    return LspaceContradiction{j.at("cover_is_lspace").get<bool>(), j.at("base_is_lspace").get<bool>()};
  throw JobError("report: unknown certificate type '" + type + "'");
}

SurveyRow row_from(const json& j) {
  SurveyRow row;
  row.cover_knot = j.at("cover_knot").get<std::string>();
  row.cover_slope = SurgerySlope(j.at("cover_p").get<std::int64_t>(), j.at("cover_q").get<std::int64_t>());
  row.base_knot = j.at("base_knot").get<std::string>();
  row.base_slope = SurgerySlope(j.at("base_p").get<std::int64_t>(), j.at("base_q").get<std::int64_t>());
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "error") {
    row.error = j.at("error").get<std::string>();
    row.overflow = j.at("overflow").get<bool>();
    return row;
  }
  ObstructionVerdict v;
  for (const auto& c : j.at("checks"))
    v.checks.push_back({check_kind_from(c.at("check").get<std::string>()),
                        check_outcome_from(c.at("outcome").get<std::string>())});
  if (!j.at("gap").is_null())
    v.observed_gap = DimensionGap{j["gap"].at("max_cover_dim").get<std::int64_t>(),
                                  j["gap"].at("min_base_dim").get<std::int64_t>()};
  for (const auto& c : j.at("certificates")) v.certificates.push_back(certificate_from(c));
  v.status = v.certificates.empty() ? Status::NotObstructed : Status::Obstructed;
  if ((verdict == "obstructed") != v.obstructed()) throw JobError("report: verdict disagrees with certificates");
  row.verdict = std::move(v);
  return row;
}

}  // namespace

ParsedReport parse_report_jsonl(std::string_view document) {
  ParsedReport report;
  std::istringstream in{std::string(document)};
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "header") {
        report.tool = j.at("tool").get<std::string>();
        report.version = j.at("version").get<std::string>();
        for (const auto& p : j.at("profiles"))
          report.fingerprints.emplace_back(p.at("name").get<std::string>(), p.at("fnv1a64").get<std::string>());
        have_header = true;
      } else if (kind == "row") {
        report.rows.push_back(row_from(j));
      } else {
        throw JobError("unknown record kind '" + kind + "'");
      }
    } catch (const JobError& e) {
      throw JobError("report line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::exception& e) {
      throw JobError("report line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_header) throw JobError("report: missing header record");
  return report;
}

void write_report(const std::filesystem::path& path, std::string_view document) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open report '" + path.string() + "' for writing");
  out.write(document.data(), static_cast<std::streamsize>(document.size()));
  if (!out) throw std::runtime_error("failed writing report '" + path.string() + "'");
}

}  // namespace hfcover
