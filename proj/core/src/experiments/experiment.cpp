// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/experiments/experiment.hpp"

#include <chrono>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "conmat/common/error.hpp"

namespace conmat {

std::string to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::kPass:
      return "PASS";
    case ReportStatus::kFail:
      return "FAIL";
    case ReportStatus::kError:
      return "ERROR";
  }
  return "?";
}

namespace {

std::string join_panels(const Report& r, bool expected) {
  std::string out;
  for (const auto& p : r.panels) {
    if (!out.empty()) out += "; ";
    if (r.panels.size() > 1) out += p.label + ": ";
    out += expected ? p.profile.expected.to_string() : p.profile.observed;
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string Report::expected() const { return join_panels(*this, true); }
std::string Report::observed() const { return join_panels(*this, false); }

// --- Configuration -----------------------------------------------------------

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line without '='", line_start);
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError("config line without a key", line_start);
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

// --- ExperimentContext -------------------------------------------------------

ExperimentContext::ExperimentContext(const ExperimentSpec& spec, const RunOptions& options,
                                     Report& report)
    : spec_(spec), options_(options), report_(report) {}

std::optional<std::string> ExperimentContext::config(const std::string& key) const {
  auto it = options_.config.find(spec_.name + "." + key);
  if (it != options_.config.end()) return it->second;
  it = options_.config.find(key);
  if (it != options_.config.end()) return it->second;
  return std::nullopt;
}

long ExperimentContext::param(const std::string& key, long fallback) const {
  const auto v = config(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const long x = std::stol(*v, &used);
    if (used == v->size()) return x;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("config key '" + key + "' expects an integer, got '" + *v + "'");
}

std::size_t ExperimentContext::n() const {
  if (options_.n_max) return *options_.n_max;
  const long n = param("n_max", static_cast<long>(spec_.default_n));
  if (n < 1) throw InvalidArgument("n_max must be positive");
  return static_cast<std::size_t>(n);
}

FamilySpec ExperimentContext::family(const std::string& key, const std::string& fallback) const {
  const auto v = config(key);
  return parse_family_spec(v ? *v : fallback);
}

Panel& ExperimentContext::panel(const std::string& label, const std::string& op,
                                const std::string& inv, const FamilySpec& rows,
                                const FamilySpec& cols, std::size_t n,
                                const Expectation& expected) {
  Matrix m = build_connection_matrix(op, inv, rows, cols, n, options_.jobs);
  report_.entries += n * n;
  return panel(label, op, inv, rows.to_string(), cols.to_string(), std::move(m), expected);
}

Panel& ExperimentContext::panel(const std::string& label, const std::string& op,
                                const std::string& inv, const std::string& rows,
                                const std::string& cols, Matrix m, const Expectation& expected) {
  Panel p;
  p.label = label;
  p.op = op;
  p.invariant = inv;
  p.rows = rows;
  p.cols = cols;
  p.n = std::min(m.rows(), m.cols());
  p.profile = rank_profile(m, p.n, expected);
  p.matrix = std::move(m);
  report_.panels.push_back(std::move(p));
  return report_.panels.back();
}

void ExperimentContext::check(const std::string& name, bool pass, const std::string& detail) {
  report_.checks.push_back(Check{name, pass, detail});
}

void ExperimentContext::threshold(const std::string& instance, const std::string& claimed,
                                  const std::string& measured) {
  const bool agree = claimed == measured;
  report_.thresholds.push_back(ThresholdRow{instance, claimed, measured, agree});
  if (!agree) {
    warn("threshold mismatch on " + instance + ": claimed " + claimed + ", measured " + measured);
  }
}

void ExperimentContext::warn(const std::string& message) { report_.warnings.push_back(message); }

// --- Runner --------------------------------------------------------------------

const ExperimentSpec& find_experiment(const std::string& name) {
  for (const auto& spec : registered_experiments()) {
    if (spec.name == name) return spec;
  }
  throw InvalidArgument("unknown experiment '" + name + "'");
}

Report run_experiment(const std::string& name, const RunOptions& options) {
  const ExperimentSpec& spec = find_experiment(name);
  Report report;
  report.name = spec.name;
  report.claim = spec.claim;
  const auto start = std::chrono::steady_clock::now();
  try {
    ExperimentContext ctx(spec, options, report);
    spec.body(ctx);
    bool pass = !report.panels.empty() || !report.checks.empty();
    for (const auto& p : report.panels) pass = pass && p.profile.pass;
    for (const auto& c : report.checks) pass = pass && c.pass;
    report.status = pass ? ReportStatus::kPass : ReportStatus::kFail;
  } catch (const Error& e) {
    report.status = ReportStatus::kError;
    report.error = e.what();
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// --- Serialization -------------------------------------------------------------

namespace {

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["format_version"] = Report::kFormatVersion;
  j["experiment"] = r.name;
  j["claim"] = r.claim;
  j["status"] = to_string(r.status);
  j["expected"] = r.expected();
  j["observed"] = r.observed();
  if (!r.error.empty()) j["error"] = r.error;
  auto panels = nlohmann::ordered_json::array();
  for (const auto& p : r.panels) {
    nlohmann::ordered_json pj;
    pj["label"] = p.label;
    pj["op"] = p.op;
    pj["invariant"] = p.invariant;
    pj["rows"] = p.rows;
    pj["cols"] = p.cols;
    pj["n"] = p.n;
    pj["rank_profile"] = p.profile.ranks;
    pj["expected"] = p.profile.expected.to_string();
    pj["observed"] = p.profile.observed;
    pj["pass"] = p.profile.pass;
    pj["row_labels"] = p.matrix.row_labels();
    pj["col_labels"] = p.matrix.col_labels();
    auto entries = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < p.matrix.rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < p.matrix.cols(); ++c) row.push_back(p.matrix.at(i, c).to_string());
      entries.push_back(std::move(row));
    }
    pj["entries"] = std::move(entries);
    panels.push_back(std::move(pj));
  }
  j["panels"] = std::move(panels);
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  auto thresholds = nlohmann::ordered_json::array();
  for (const auto& t : r.thresholds) {
    thresholds.push_back({{"instance", t.instance},
                          {"claimed", t.claimed},
                          {"measured", t.measured},
                          {"agree", t.agree}});
  }
  j["thresholds"] = std::move(thresholds);
  j["warnings"] = r.warnings;
  j["entry_count"] = r.entries;
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string reports_json(const std::vector<Report>& reports) {
  nlohmann::ordered_json j;
  j["format_version"] = Report::kFormatVersion;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  j["reports"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string reports_csv(const std::vector<Report>& reports) {
  std::ostringstream out;
  out << "format_version,experiment,status,kind,label,rank_profile,expected,observed,result,detail,"
         "wall_seconds\n";
  for (const auto& r : reports) {
    const std::string head = std::to_string(Report::kFormatVersion) + "," + csv_field(r.name) +
                             "," + to_string(r.status) + ",";
    std::ostringstream wall;
    wall << r.wall_seconds;
    for (const auto& p : r.panels) {
      out << head << "panel," << csv_field(p.label) << "," << csv_field(format_profile(p.profile.ranks))
          << "," << csv_field(p.profile.expected.to_string()) << "," << csv_field(p.profile.observed)
          << "," << (p.profile.pass ? "PASS" : "FAIL") << ","
          << csv_field(p.op + " " + p.invariant + " " + p.rows + " x " + p.cols) << ","
          << wall.str() << "\n";
    }
    for (const auto& c : r.checks) {
      out << head << "check," << csv_field(c.name) << ",,,," << (c.pass ? "PASS" : "FAIL") << ","
          << csv_field(c.detail) << "," << wall.str() << "\n";
    }
    for (const auto& t : r.thresholds) {
      out << head << "threshold," << csv_field(t.instance) << ",," << csv_field(t.claimed) << ","
          << csv_field(t.measured) << "," << (t.agree ? "AGREE" : "WARN") << ",," << wall.str()
          << "\n";
    }
    if (!r.error.empty()) {
      out << head << "error,,,,,ERROR," << csv_field(r.error) << "," << wall.str() << "\n";
    }
  }
  return out.str();
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  out << to_string(r.status) << "  " << r.name << "\n";
  out << "  claim:    " << r.claim << "\n";
  for (const auto& p : r.panels) {
    out << "  panel " << p.label << ": " << p.op << " " << p.invariant << " over " << p.rows;
    if (p.cols != p.rows) out << " x " << p.cols;
    out << "\n    r(N) = " << format_profile(p.profile.ranks) << "  expected "
        << p.profile.expected.to_string() << ", observed " << p.profile.observed
        << (p.profile.pass ? "" : "  <-- FAIL") << "\n";
  }
  for (const auto& c : r.checks) {
    out << "  check " << (c.pass ? "ok  " : "FAIL") << " " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  if (!r.thresholds.empty()) {
    out << "  thresholds (claimed vs measured):\n";
    for (const auto& t : r.thresholds) {
      out << "    " << t.instance << ": " << t.claimed << " vs " << t.measured
          << (t.agree ? "" : "  WARN") << "\n";
    }
  }
  for (const auto& w : r.warnings) {
    if (w.rfind("threshold mismatch", 0) != 0) out << "  WARN " << w << "\n";  // shown above
  }
  if (!r.error.empty()) out << "  error: " << r.error << "\n";
  std::ostringstream wall;
  wall.precision(3);
  wall << std::fixed << r.wall_seconds;
  out << "  entries " << r.entries << ", " << wall.str() << " s\n";
  return out.str();
}

}  // namespace conmat
