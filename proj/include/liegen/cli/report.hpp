#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <locale>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "liegen/cli/config.hpp"
#include "liegen/numeric/rational.hpp"

namespace liegen::cli {

enum class CheckStatus { pass, fail, diagnostic, skipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::diagnostic: return "diagnostic";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

inline CheckStatus parse_status(const std::string& s) {
  for (auto st : {CheckStatus::pass, CheckStatus::fail, CheckStatus::diagnostic, CheckStatus::skipped})
    if (s == status_name(st)) return st;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

/// One check: exact checks carry exact_zero, numeric ones a float residual.
/// Exact checks also store a float magnitude (0 when exact_zero) so every
/// record has a comparable number.
struct CheckRecord {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  bool exact = false;
  bool exact_zero = false;
  double residual = 0;
  CheckStatus status = CheckStatus::pass;
  std::string note;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> checks;  // sorted by id

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
  }
  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
  }
  void sort() {
    std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  }

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

struct RunReport {
  std::vector<SuiteReport> suites;
  nlohmann::json config = nlohmann::json::object();
  std::optional<double> wall_time_seconds;  // only with --timing

  bool passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
  }

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Builds a suite with checks appended in any order, then sorted.
class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string name) { report_.suite = std::move(name); }

  /// Exact identity: passes iff the residual is identically zero.
  void exact(std::string id, nlohmann::json params, bool zero, double magnitude = 0, std::string note = {}) {
    report_.checks.push_back({std::move(id), std::move(params), true, zero, zero ? 0.0 : magnitude,
                              zero ? CheckStatus::pass : CheckStatus::fail, std::move(note)});
  }

  /// Numeric check against a pinned tolerance.
  void numeric(std::string id, nlohmann::json params, double residual, double tol, std::string note = {}) {
    params["tolerance"] = tol;
    const bool ok = std::isfinite(residual) && residual < tol;
    report_.checks.push_back({std::move(id), std::move(params), false, false, residual,
                              ok ? CheckStatus::pass : CheckStatus::fail, std::move(note)});
  }

  /// Boolean property (ordering, monotonicity) with the measured value kept.
  void property(std::string id, nlohmann::json params, double value, bool ok, std::string note = {}) {
    report_.checks.push_back({std::move(id), std::move(params), false, false, value,
                              ok ? CheckStatus::pass : CheckStatus::fail, std::move(note)});
  }

  /// Recorded, never gated.
  void diagnostic(std::string id, nlohmann::json params, double value, std::string note = {}) {
    report_.checks.push_back({std::move(id), std::move(params), false, false, value, CheckStatus::diagnostic,
                              std::move(note)});
  }

  void skipped(std::string id, nlohmann::json params, std::string note) {
    report_.checks.push_back({std::move(id), std::move(params), false, false, 0, CheckStatus::skipped, std::move(note)});
  }

  SuiteReport finish() {
    report_.sort();
    return std::move(report_);
  }

 private:
  SuiteReport report_;
};

// ---- JSON ----

inline nlohmann::json to_json(const CheckRecord& c) {
  nlohmann::json j{{"id", c.id},       {"params", c.params},        {"exact", c.exact},
                   {"exact_zero", c.exact_zero}, {"status", status_name(c.status)}};
  j["residual"] = std::isfinite(c.residual) ? nlohmann::json(c.residual) : nlohmann::json(nullptr);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline CheckRecord check_from_json(const nlohmann::json& j) {
  CheckRecord c;
  c.id = j.at("id").get<std::string>();
  c.params = j.at("params");
  c.exact = j.at("exact").get<bool>();
  c.exact_zero = j.at("exact_zero").get<bool>();
  c.residual = j.at("residual").is_null() ? std::nan("") : j.at("residual").get<double>();
  c.status = parse_status(j.at("status").get<std::string>());
  if (j.contains("note")) c.note = j.at("note").get<std::string>();
  return c;
}

inline nlohmann::json to_json(const SuiteReport& s) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  return {{"suite", s.suite},
          {"status", s.passed() ? "pass" : "fail"},
          {"counts",
           {{"pass", s.count(CheckStatus::pass)},
            {"fail", s.count(CheckStatus::fail)},
            {"diagnostic", s.count(CheckStatus::diagnostic)},
            {"skipped", s.count(CheckStatus::skipped)}}},
          {"checks", checks}};
}

inline SuiteReport suite_from_json(const nlohmann::json& j) {
  SuiteReport s;
  s.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("checks")) s.checks.push_back(check_from_json(c));
  return s;
}

inline nlohmann::json to_json(const RunReport& r) {
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& s : r.suites) suites.push_back(to_json(s));
  nlohmann::json j{{"status", r.passed() ? "pass" : "fail"}, {"config", r.config}, {"suites", suites}};
  if (r.wall_time_seconds) j["wall_time_seconds"] = *r.wall_time_seconds;
  return j;
}

inline RunReport run_report_from_json(const nlohmann::json& j) {
  RunReport r;
  r.config = j.at("config");
  for (const auto& s : j.at("suites")) r.suites.push_back(suite_from_json(s));
  if (j.contains("wall_time_seconds")) r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
  return r;
}

inline std::string emit_json(const RunReport& r) { return to_json(r).dump(2) + "\n"; }

// ---- CSV / text ----

/// Shortest round-trip decimal, '.' separator regardless of locale.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string emit_csv(const RunReport& r) {
  std::ostringstream os;
  os << "suite,id,status,exact,exact_zero,residual,params,note\n";
  for (const auto& s : r.suites)
    for (const auto& c : s.checks)
      os << csv_quote(s.suite) << ',' << csv_quote(c.id) << ',' << status_name(c.status) << ','
         << (c.exact ? "true" : "false") << ',' << (c.exact_zero ? "true" : "false") << ',' << format_double(c.residual)
         << ',' << csv_quote(c.params.dump()) << ',' << csv_quote(c.note) << '\n';
  return os.str();
}

inline std::string emit_text(const RunReport& r) {
  std::ostringstream os;
  for (const auto& s : r.suites) {
    os << "== " << s.suite << ": " << (s.passed() ? "PASS" : "FAIL") << " (" << s.count(CheckStatus::pass) << " pass, "
       << s.count(CheckStatus::fail) << " fail, " << s.count(CheckStatus::diagnostic) << " diagnostic, "
       << s.count(CheckStatus::skipped) << " skipped)\n";
    for (const auto& c : s.checks) {
      std::string tag = status_name(c.status);
      for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      os << "  [" << tag << "] " << c.id << "  ";
      if (c.exact)
        os << (c.exact_zero ? "exact zero" : "nonzero residual " + format_double(c.residual));
      else
        os << "value " << format_double(c.residual);
      if (!c.note.empty()) os << "  (" << c.note << ")";
      os << '\n';
    }
  }
  os << "overall: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  if (r.wall_time_seconds) os << "wall time: " << format_double(*r.wall_time_seconds) << " s\n";
  return os.str();
}

inline std::string emit(const RunReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return emit_json(r);
    case OutputFormat::csv: return emit_csv(r);
    case OutputFormat::text: return emit_text(r);
  }
  return {};
}

}  // namespace liegen::cli
