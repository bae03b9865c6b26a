// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

// conmat: command-line front end for the connection-matrix experiments,
// the Feferman-Vaught reducer and the invariant registry.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "conmat/common/error.hpp"
#include "conmat/experiments/experiment.hpp"
#include "conmat/fv/corpus.hpp"
#include "conmat/fv/reduction.hpp"
#include "conmat/invariants/registry.hpp"
#include "conmat/logic/formula.hpp"
#include "conmat/structures/graph.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw conmat::InvalidArgument("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw conmat::InvalidArgument("cannot write '" + path + "'");
  out << text;
}

// Every panel as "# <experiment>/<label>" followed by its CSV form.
std::string dump_matrices(const std::vector<conmat::Report>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    for (const auto& p : r.panels) {
      out << "# " << r.name << "/" << p.label << ": " << p.op << " " << p.invariant << "\n";
      out << p.matrix.to_csv() << "\n";
    }
  }
  return out.str();
}

struct RunArgs {
  std::vector<std::string> names;
  bool all = false;
  std::size_t n_max = 0;
  std::string format = "text";
  std::string out;
  std::string dump;
  int jobs = 0;
  std::string config;
  std::vector<std::string> sets;
};

int do_list() {
  for (const auto& s : conmat::registered_experiments()) {
    std::cout << s.name << "\t" << s.op << "\t" << s.invariant << "\t" << s.expected << "\n";
  }
  return kExitPass;
}

int do_run(const RunArgs& a) {
  if (a.all == !a.names.empty()) {
    throw CLI::ValidationError("run", "give experiment names or --all (not both)");
  }
  conmat::RunOptions options;
  options.jobs = a.jobs;
  if (a.n_max > 0) options.n_max = a.n_max;
  if (!a.config.empty()) options.config = conmat::load_config(a.config);
  for (const auto& kv : a.sets) {
    for (const auto& [k, v] : conmat::parse_config(kv)) options.config[k] = v;
  }
  std::vector<std::string> names = a.names;
  if (a.all) {
    for (const auto& s : conmat::registered_experiments()) names.push_back(s.name);
  }
  for (const auto& n : names) conmat::find_experiment(n);  // unknown names are usage errors

  std::vector<conmat::Report> reports;
  bool any_fail = false, any_error = false;
  for (const auto& n : names) {
    reports.push_back(conmat::run_experiment(n, options));
    const auto& r = reports.back();
    any_fail = any_fail || r.status == conmat::ReportStatus::kFail;
    any_error = any_error || r.status == conmat::ReportStatus::kError;
    if (a.format == "text" && (a.out.empty() || a.out == "-")) std::cout << conmat::report_text(r) << std::flush;
  }
  if (a.format == "json") {
    write_output(a.out, reports.size() == 1 ? conmat::report_json(reports.front()) : conmat::reports_json(reports));
  } else if (a.format == "csv") {
    write_output(a.out, conmat::reports_csv(reports));
  } else if (!a.out.empty() && a.out != "-") {
    std::string text;
    for (const auto& r : reports) text += conmat::report_text(r);
    write_output(a.out, text);
  }
  if (!a.dump.empty()) write_output(a.dump, dump_matrices(reports));
  if (any_error) return kExitUsage;
  return any_fail ? kExitFail : kExitPass;
}

int do_fv_reduce(const std::string& op_text, const std::string& formula) {
  const conmat::FvOperation op = conmat::parse_fv_operation(op_text);
  const conmat::Formula phi = conmat::parse_formula(formula);
  const auto rs = conmat::reduce(op, phi, conmat::ordered_graph_vocabulary());
  std::cout << conmat::to_string(rs);
  return kExitPass;
}

int do_fv_check(const std::string& op_text, const std::vector<std::string>& formulas, int max_n, int jobs) {
  const conmat::FvOperation op = conmat::parse_fv_operation(op_text);
  std::vector<std::string> corpus = formulas;
  if (corpus.empty()) {
    corpus = op == conmat::FvOperation::kProduct ? conmat::fv_product_corpus() : conmat::fv_union_corpus();
  }
  const auto res = conmat::run_fv_differential(op, corpus, max_n, jobs == 0 ? 1 : jobs);
  std::cout << (res.passed() ? "PASS" : "FAIL") << "  " << conmat::to_string(op) << ": "
            << res.agreements << " of " << res.checks << " checks agree (" << res.formulas
            << " sentences, " << res.structures << " structures with <= " << max_n << " vertices)\n"
            << "  longest sequence " << res.max_length << ", largest combiner " << res.max_nodes
            << " nodes (" << res.max_expanded.get_str() << " expanded), max component rank "
            << res.max_component_rank << "\n";
  for (const auto& m : res.mismatches) std::cout << "  mismatch: " << m << "\n";
  return res.passed() ? kExitPass : kExitFail;
}

int do_invariants_list() {
  for (const auto& info : conmat::registered_invariants()) {
    std::string name = info.name;
    if (!info.params.empty()) name += "@" + info.params;
    std::cout << name << "\t" << conmat::to_string(info.kind) << "\t" << info.description << "\n";
  }
  return kExitPass;
}

int do_invariants_eval(const std::vector<std::string>& ids, const std::string& graph_path,
                       const std::string& family) {
  if (graph_path.empty() == family.empty()) {
    throw CLI::ValidationError("invariants eval", "give exactly one of --graph and --family");
  }
  const conmat::Graph g = family.empty()
                              ? (graph_path == "-" ? conmat::read_graph(std::cin)
                                                   : conmat::parse_graph(read_file(graph_path)))
                              : conmat::generate(conmat::parse_family_id(family));
  for (const auto& id : ids) {
    std::cout << id << " = " << conmat::evaluate(id, g).to_string() << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connection matrices of graph invariants: experiments, FV reductions, invariants"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the registered experiments");

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run experiments and report rank profiles");
  run->add_option("names", run_args.names, "Experiment names");
  run->add_flag("--all", run_args.all, "Run every registered experiment");
  run->add_option("--n-max", run_args.n_max, "Size N of the main panel")->check(CLI::PositiveNumber);
  run->add_option("--format", run_args.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  run->add_option("--out", run_args.out, "Write the report to PATH ('-' = stdout)");
  run->add_option("--dump-matrix", run_args.dump, "Write every panel matrix as CSV to PATH");
  run->add_option("--jobs", run_args.jobs, "Worker threads (0 = hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--config", run_args.config, "key = value file overriding families and parameters");
  run->add_option("--set", run_args.sets, "Single key=value override (repeatable)");

  auto* fv = app.add_subcommand("fv", "Feferman-Vaught reductions over ordered graphs");
  fv->require_subcommand(1);
  std::string fv_op = "product", fv_formula;
  std::vector<std::string> fv_formulas;
  int fv_max_n = 4, fv_jobs = 0;
  auto* fv_reduce = fv->add_subcommand("reduce", "Print the reduction sequence of a sentence");
  fv_reduce->add_option("--op", fv_op, "product | union")->required();
  fv_reduce->add_option("--formula", fv_formula, "Sentence over {E, <}")->required();
  auto* fv_check = fv->add_subcommand("check", "Differential test against direct evaluation");
  fv_check->add_option("--op", fv_op, "product | union")->required();
  fv_check->add_option("--formula", fv_formulas, "Sentences to test (default: bundled corpus)");
  fv_check->add_option("--max-n", fv_max_n, "Largest component order")->check(CLI::Range(1, 5));
  fv_check->add_option("--jobs", fv_jobs, "Worker threads")->check(CLI::NonNegativeNumber);

  auto* inv = app.add_subcommand("invariants", "Inspect and evaluate graph invariants");
  inv->require_subcommand(1);
  auto* inv_list = inv->add_subcommand("list", "List registered invariants");
  std::vector<std::string> inv_ids;
  std::string inv_graph, inv_family;
  auto* inv_eval = inv->add_subcommand("eval", "Evaluate invariants on one graph");
  inv_eval->add_option("--id", inv_ids, "Invariant ids, e.g. chromatic@3 or planar")->required();
  inv_eval->add_option("--graph", inv_graph, "Graph file in the text format ('-' = stdin)");
  inv_eval->add_option("--family", inv_family, "Family member, e.g. Clique(4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*list) return do_list();
    if (*run) return do_run(run_args);
    if (*fv_reduce) return do_fv_reduce(fv_op, fv_formula);
    if (*fv_check) return do_fv_check(fv_op, fv_formulas, fv_max_n, fv_jobs);
    if (*inv_list) return do_invariants_list();
    if (*inv_eval) return do_invariants_eval(inv_ids, inv_graph, inv_family);
  } catch (const CLI::Error& e) {
    std::cerr << "conmat: " << e.what() << "\n";
    return kExitUsage;
  } catch (const conmat::Error& e) {
    std::cerr << "conmat: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
