#pragma once

// Batch surveys over slope grids and the report formats they emit.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hfcover/obstruction.hpp"
#include "hfcover/profile.hpp"
#include "hfcover/slope.hpp"

namespace hfcover {

inline constexpr std::string_view kToolName = "hfcover";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Numerators p_min..p_max (0 skipped), denominators q_min..q_max (>= 1).
struct SlopeRange {
  std::int64_t p_min = 1, p_max = 0;
  std::int64_t q_min = 1, q_max = 1;
};

// Reduced, de-duplicated and sorted by (p, q). Throws std::invalid_argument
// for q_min < 1 or a grid above 10^7 points.
std::vector<SurgerySlope> enumerate_slopes(const SlopeRange& range);

enum class PairMode { All, Same };
enum class ReportFormat { Text, Csv, Jsonl };

std::optional<ReportFormat> parse_report_format(std::string_view name);

struct SurveyJob {
  std::vector<KnotProfile> profiles;
  PairMode pairs = PairMode::All;
  SlopeRange cover_slopes;
  SlopeRange base_slopes;
  CheckSet checks;
  std::string output_path;  // empty: stdout
  ReportFormat format = ReportFormat::Csv;
  int workers = 0;          // 0: OpenMP default
};

class JobError : public std::runtime_error {
 public:
  explicit JobError(const std::string& what) : std::runtime_error(what) {}
};

// Profile references resolve against "profiles_file" (relative to base_dir)
// first, then the built-in catalog.
SurveyJob parse_job(std::string_view document, const std::filesystem::path& base_dir = {});
SurveyJob load_job_file(const std::filesystem::path& path);

struct SurveyRow {
  std::string cover_knot;
  SurgerySlope cover_slope{1, 1};
  std::string base_knot;
  SurgerySlope base_slope{1, 1};
  std::optional<ObstructionVerdict> verdict;  // absent iff the row failed
  std::string error;
  bool overflow = false;

  friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

// One row per (profile pair, slope pair), ordered by cover profile, base
// profile, cover slope, base slope. Rows are evaluated concurrently.
std::vector<SurveyRow> run_survey(const SurveyJob& job);
std::vector<SurveyRow> run_survey_serial(const SurveyJob& job);

std::string emit_report(std::span<const SurveyRow> rows, ReportFormat format,
                        std::span<const KnotProfile> profiles);

struct ParsedReport {
  std::string tool;
  std::string version;
  std::vector<std::pair<std::string, std::string>> fingerprints;  // (name, fnv1a64)
  std::vector<SurveyRow> rows;
};

// Inverse of emit_report for ReportFormat::Jsonl. Throws JobError.
ParsedReport parse_report_jsonl(std::string_view document);

// Throws std::runtime_error naming the path on I/O failure.
void write_report(const std::filesystem::path& path, std::string_view document);

}  // namespace hfcover
