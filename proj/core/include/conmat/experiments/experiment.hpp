// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conmat/exactalg/connection.hpp"
#include "conmat/exactalg/matrix.hpp"

namespace conmat {

// One named self-check inside an experiment (an entry pattern, an identity,
// an oracle confirmation, ...).
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// A threshold comparison between the value claimed in the literature and the
// value measured by brute force on one instance. Disagreements are reported
// as warnings; the experiment then runs with the measured threshold.
struct ThresholdRow {
  std::string instance;
  std::string claimed;
  std::string measured;
  bool agree = false;
};

// One connection matrix of an experiment with its rank profile.
struct Panel {
  std::string label;
  std::string op;
  std::string invariant;
  std::string rows;
  std::string cols;
  std::size_t n = 0;
  RankProfile profile;
  Matrix matrix;
};

enum class ReportStatus { kPass, kFail, kError };

std::string to_string(ReportStatus status);

struct Report {
  static constexpr int kFormatVersion = 1;

  std::string name;
  std::string claim;
  std::vector<Panel> panels;
  std::vector<Check> checks;
  std::vector<ThresholdRow> thresholds;
  std::vector<std::string> warnings;
  std::size_t entries = 0;  // matrix entries evaluated
  double wall_seconds = 0;
  ReportStatus status = ReportStatus::kFail;
  std::string error;  // set when status is kError

  // Expected and observed verdicts of all panels, joined by "; ".
  std::string expected() const;
  std::string observed() const;
};

// Per-run settings. `config` holds key=value overrides; a key may be scoped to
// one experiment as "<experiment>.<key>". Recognized keys: n_max, rows, cols
// (family specs of the first panel) and experiment parameters such as k, t.
struct RunOptions {
  std::optional<std::size_t> n_max;
  int jobs = 0;
  std::map<std::string, std::string> config;
};

// Parses "key = value" lines ('#' comments, blank lines ignored).
std::map<std::string, std::string> parse_config(const std::string& text);
std::map<std::string, std::string> load_config(const std::string& path);

class ExperimentContext;

struct ExperimentSpec {
  std::string name;
  std::string claim;     // the mathematical statement being checked
  std::string op;        // gluing operation of the main panel
  std::string invariant; // invariant of the main panel
  std::string expected;  // declared verdict of the main panel
  std::size_t default_n = 6;
  std::function<void(ExperimentContext&)> body;
};

// Gives experiment bodies access to options and collects the report.
class ExperimentContext {
 public:
  ExperimentContext(const ExperimentSpec& spec, const RunOptions& options, Report& report);

  // N for the main panel: --n-max / config override / default.
  std::size_t n() const;
  int jobs() const { return options_.jobs; }

  std::optional<std::string> config(const std::string& key) const;
  long param(const std::string& key, long fallback) const;
  // Family spec of the main panel, overridable by config keys rows / cols.
  FamilySpec family(const std::string& key, const std::string& fallback) const;

  // Builds op/inv over rows x cols (N x N) and records the panel.
  Panel& panel(const std::string& label, const std::string& op, const std::string& inv,
               const FamilySpec& rows, const FamilySpec& cols, std::size_t n,
               const Expectation& expected);
  // Records a panel for a matrix built by other means.
  Panel& panel(const std::string& label, const std::string& op, const std::string& inv,
               const std::string& rows, const std::string& cols, Matrix m,
               const Expectation& expected);

  void check(const std::string& name, bool pass, const std::string& detail = "");
  void threshold(const std::string& instance, const std::string& claimed,
                 const std::string& measured);
  void warn(const std::string& message);

  Report& report() { return report_; }

 private:
  const ExperimentSpec& spec_;
  const RunOptions& options_;
  Report& report_;
};

// All registered experiments in registration order.
const std::vector<ExperimentSpec>& registered_experiments();
const ExperimentSpec& find_experiment(const std::string& name);

// Runs one experiment. Evaluator size guards and bad overrides produce a
// kError report; a violated expectation or check produces kFail.
Report run_experiment(const std::string& name, const RunOptions& options = {});

// Report serialization. JSON is deterministic apart from wall_seconds.
std::string report_json(const Report& r);
std::string reports_json(const std::vector<Report>& reports);
// One header line, then one line per panel, check and threshold row.
std::string reports_csv(const std::vector<Report>& reports);
// Human-readable summary (one block per experiment).
std::string report_text(const Report& r);

}  // namespace conmat
