#include "hfcover/profile.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hfcover/checked.hpp"
#include "hfcover/phi.hpp"

namespace hfcover {

using json = nlohmann::ordered_json;

std::int64_t KnotProfile::a_dim(std::int64_t s) const {
  if (s < -genus || s > genus) return 1;
  return a_dims.at(static_cast<std::size_t>(s + genus));
}

bool KnotProfile::all_dims_one() const {
  return std::all_of(a_dims.begin(), a_dims.end(), [](std::int64_t d) { return d == 1; });
}

bool KnotProfile::is_lspace_knot() const {
  return nontrivial && genus >= 1 && nu == genus && all_dims_one();
}

bool ValidationReport::has(std::string_view name) const {
  return std::find(violations.begin(), violations.end(), name) != violations.end();
}

ValidationReport validate(const KnotProfile& profile) {
  ValidationReport report;
  auto flag = [&](std::string_view v) { report.violations.emplace_back(v); };

  if (profile.genus < 0) flag(violation::kGenusNonnegative);
  const bool domain_ok = profile.genus >= 0 && profile.genus <= kMaxProfileGenus &&
                         profile.a_dims.size() == static_cast<std::size_t>(2 * profile.genus + 1);
  if (!domain_ok) flag(violation::kDimsDomain);
  if (profile.nu < 0) flag(violation::kNuNonnegative);
  if (std::any_of(profile.a_dims.begin(), profile.a_dims.end(), [](std::int64_t d) { return d < 1; }))
    flag(violation::kDimsPositive);

  if (profile.nontrivial) {
    if (profile.all_dims_one()) {
      if (profile.nu <= 0) flag(violation::kNuPositive);
      if (profile.nu > profile.genus) flag(violation::kNuAtMostGenus);
    }
  } else if (profile.genus != 0 || profile.nu != 0 || profile.a_dims != std::vector<std::int64_t>{1}) {
    flag(violation::kTrivialShape);
  }
  return report;
}

KnotProfile lspace_knot_profile(std::string name, std::int64_t genus) {
  if (genus < 1) throw std::invalid_argument("L-space knot profile needs genus >= 1; use the unknot");
  if (genus > kMaxProfileGenus) throw std::invalid_argument("genus too large");
  KnotProfile k;
  k.name = std::move(name);
  k.genus = genus;
  k.nu = genus;
  k.a_dims.assign(static_cast<std::size_t>(2 * genus + 1), 1);
  k.nontrivial = true;
  k.coefficient_note = "all primes";
  return k;
}

KnotProfile builtin(std::string_view name) {
  if (name == "unknot") {
    KnotProfile u;
    u.name = "unknot";
    return u;
  }
  if (name == "P(-2,3,7)") return lspace_knot_profile(std::string(name), 5);

  static const std::regex torus(R"(T\(2,(\d{1,6})\))");
  std::match_results<std::string_view::const_iterator> m;
  if (std::regex_match(name.begin(), name.end(), m, torus)) {
    const std::int64_t k = std::stoll(m[1].str());
    if (k >= 3 && k % 2 == 1) return lspace_knot_profile(std::string(name), (k - 1) / 2);
  }
  throw std::invalid_argument("unknown built-in profile '" + std::string(name) + "'");
}

std::vector<std::string> builtin_examples() {
  return {"unknot", "T(2,3)", "T(2,5)", "T(2,2n+1)", "P(-2,3,7)"};
}

namespace {

std::string where(std::size_t index, const json& record) {
  std::string s = "profiles[" + std::to_string(index) + "]";
  if (record.is_object() && record.contains("name") && record["name"].is_string())
    s += " ('" + record["name"].get<std::string>() + "')";
  return s;
}

[[noreturn]] void field_error(std::size_t index, const json& record, const std::string& field,
                              const std::string& problem) {
  throw ProfileError(where(index, record) + ": field '" + field + "': " + problem);
}

std::int64_t get_int(std::size_t index, const json& record, const std::string& field) {
  if (!record.contains(field)) field_error(index, record, field, "missing");
  const json& v = record[field];
  if (!v.is_number_integer()) field_error(index, record, field, "expected an integer");
  return v.get<std::int64_t>();
}

bool get_bool(std::size_t index, const json& record, const std::string& field, const bool* fallback) {
  if (!record.contains(field)) {
    if (fallback) return *fallback;
    field_error(index, record, field, "missing");
  }
  if (!record[field].is_boolean()) field_error(index, record, field, "expected a boolean");
  return record[field].get<bool>();
}

std::string get_string(std::size_t index, const json& record, const std::string& field,
                       const char* fallback) {
  if (!record.contains(field)) {
    if (fallback) return fallback;
    field_error(index, record, field, "missing");
  }
  if (!record[field].is_string()) field_error(index, record, field, "expected a string");
  return record[field].get<std::string>();
}

std::int64_t parse_key(std::size_t index, const json& record, const std::string& key) {
  std::int64_t s = 0;
  const char* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, s);
  if (ec != std::errc() || ptr != end || key.empty())
    field_error(index, record, "a_dims", "key '" + key + "' is not an integer");
  return s;
}

KnotProfile parse_record(std::size_t index, const json& record) {
  static const std::set<std::string> known = {"name", "genus", "nu", "nontrivial", "a_dims",
                                              "mirror_symmetric", "coefficient_note"};
  if (!record.is_object()) throw ProfileError(where(index, record) + ": expected an object");
  for (const auto& item : record.items())
    if (!known.count(item.key())) field_error(index, record, item.key(), "unknown field");

  KnotProfile k;
  k.name = get_string(index, record, "name", nullptr);
  k.genus = get_int(index, record, "genus");
  if (k.genus < 0) field_error(index, record, "genus", "must be >= 0");
  if (k.genus > kMaxProfileGenus)
    field_error(index, record, "genus", "exceeds limit " + std::to_string(kMaxProfileGenus));
  k.nu = get_int(index, record, "nu");
  k.nontrivial = get_bool(index, record, "nontrivial", nullptr);
  const bool no = false;
  const bool mirror = get_bool(index, record, "mirror_symmetric", &no);
  k.coefficient_note = get_string(index, record, "coefficient_note", "unspecified");

  if (!record.contains("a_dims")) field_error(index, record, "a_dims", "missing");
  const json& dims = record["a_dims"];
  if (!dims.is_object()) field_error(index, record, "a_dims", "expected an object");

  k.a_dims.assign(static_cast<std::size_t>(2 * k.genus + 1), 1);
  std::set<std::int64_t> seen;
  for (const auto& item : dims.items()) {
    const std::int64_t s = parse_key(index, record, item.key());
    if (s < -k.genus || s > k.genus)
      field_error(index, record, "a_dims", "key " + item.key() + " outside [-genus, genus]");
    if (mirror && s < 0)
      field_error(index, record, "a_dims", "negative key " + item.key() + " with mirror_symmetric");
    if (!seen.insert(s).second)
      field_error(index, record, "a_dims", "duplicate key " + item.key());
    if (!item.value().is_number_integer())
      field_error(index, record, "a_dims", "value at key " + item.key() + " is not an integer");
    const std::int64_t d = item.value().get<std::int64_t>();
    k.a_dims[static_cast<std::size_t>(s + k.genus)] = d;
    if (mirror) k.a_dims[static_cast<std::size_t>(-s + k.genus)] = d;
  }
  return k;
}

}  // namespace

std::vector<KnotProfile> parse_profiles(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    // Convert the byte offset into a line/column pair.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, document.size());
    for (std::size_t b = 0; b < stop; ++b) {
      if (document[b] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ProfileError("parse error at line " + std::to_string(line) + ", column " +
                       std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) throw ProfileError("profile document must be an object");
  for (const auto& item : doc.items())
    if (item.key() != "profiles") throw ProfileError("unknown top-level field '" + item.key() + "'");
  if (!doc.contains("profiles") || !doc["profiles"].is_array())
    throw ProfileError("field 'profiles': expected an array");

  std::vector<KnotProfile> out;
  const json& records = doc["profiles"];
  for (std::size_t idx = 0; idx < records.size(); ++idx) out.push_back(parse_record(idx, records[idx]));
  return out;
}

std::vector<KnotProfile> load_profiles(std::string_view document) {
  std::vector<KnotProfile> profiles = parse_profiles(document);
  std::string failures;
  for (std::size_t idx = 0; idx < profiles.size(); ++idx) {
    const ValidationReport r = validate(profiles[idx]);
    if (r.ok()) continue;
    failures += "\n  profiles[" + std::to_string(idx) + "] ('" + profiles[idx].name + "'):";
    for (const auto& v : r.violations) failures += " " + v;
  }
  if (!failures.empty()) throw ProfileError("invalid profiles:" + failures);
  return profiles;
}

std::vector<KnotProfile> load_profiles_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProfileError("cannot open profile file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return load_profiles(buf.str());
  } catch (const ProfileError& e) {
    throw ProfileError(path + ": " + e.what());
  }
}

namespace {

json to_json(const KnotProfile& k) {
  json dims = json::object();
  for (std::int64_t s = -k.genus; s <= k.genus; ++s) dims[std::to_string(s)] = k.a_dim(s);
  json rec;
  rec["name"] = k.name;
  rec["genus"] = k.genus;
  rec["nu"] = k.nu;
  rec["nontrivial"] = k.nontrivial;
  rec["a_dims"] = std::move(dims);
  rec["mirror_symmetric"] = false;
  rec["coefficient_note"] = k.coefficient_note;
  return rec;
}

}  // namespace

std::string serialize_profiles(std::span<const KnotProfile> profiles) {
  json doc;
  doc["profiles"] = json::array();
  for (const auto& k : profiles) doc["profiles"].push_back(to_json(k));
  return doc.dump(2) + "\n";
}

std::string profile_fingerprint(const KnotProfile& profile) {
  const std::string bytes = to_json(profile).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

std::int64_t big_s(const KnotProfile& profile, const SurgerySlope& slope, std::int64_t i) {
  wide_int total = 0;
  for (std::int64_t s = -profile.genus; s <= profile.genus; ++s) {
    const std::int64_t excess = profile.a_dim(s) - 1;
    if (excess == 0) continue;
    total = checked_add(total, checked_mul(phi(slope, i, s), excess));
  }
  return narrow(total);
}

}  // namespace hfcover
