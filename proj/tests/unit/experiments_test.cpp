// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "conmat/common/error.hpp"
#include "conmat/experiments/experiment.hpp"

namespace conmat {
namespace {

TEST(Experiments, RegistryContainsRequiredNames) {
  std::set<std::string> names;
  for (const auto& s : registered_experiments()) {
    EXPECT_TRUE(names.insert(s.name).second) << "duplicate " << s.name;
    EXPECT_FALSE(s.claim.empty()) << s.name;
  }
  for (const std::string required :
       {"words-L1", "words-ell", "words-mL-bar", "even-limitation", "forest-phiF", "oddcycle-phiF", "tree-phiT",
        "connected-phiT", "planar-phiP", "bridgeless-phiB", "2conn-phiB", "ellconn-join-Kl", "hamiltonian-join",
        "perfect-matching-join", "wellcovered-join", "spanning-deg3-modjoin", "regular-union", "bidegree-union",
        "avgdeg-union", "aperiodic-union", "asymmetric-union", "matching-ksum1-rank2", "matching-bilinear",
        "vandermonde-product", "chromatic-join-threshold", "mcc-join-threshold", "vacyclic-join", "pcoloring-join",
        "rainbow-ksum1", "convex-union", "timproper-ksum1", "nonrep-ksum1", "harmonious-union", "maxcc-union",
        "means-arith", "means-quadratic", "means-harmonic", "cfol-params-finite", "spnf-phiF", "spnt-phiT",
        "cyc-phiF", "kcomp-phiT", "tw-phiP", "blk-phiB", "fv-product-differential", "fv-union-differential",
        "transduction-fundamental"}) {
    EXPECT_TRUE(names.count(required)) << required;
  }
  EXPECT_THROW(find_experiment("no-such-experiment"), InvalidArgument);
}

TEST(Experiments, HamiltonianJoinGrowsFully) {
  RunOptions options;
  options.n_max = 6;
  const Report r = run_experiment("hamiltonian-join", options);
  EXPECT_EQ(r.status, ReportStatus::kPass);
  ASSERT_EQ(r.panels.size(), 1u);
  EXPECT_EQ(r.panels[0].profile.ranks, (std::vector<std::size_t>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(r.entries, 36u);
}

TEST(Experiments, MatchingOneSumHasRankTwo) {
  const Report r = run_experiment("matching-ksum1-rank2");
  EXPECT_EQ(r.status, ReportStatus::kPass);
  EXPECT_EQ(r.panels[0].profile.observed, "Bounded(2)");
}

TEST(Experiments, JsonIsDeterministicApartFromWallTime) {
  RunOptions options;
  options.jobs = 2;
  auto strip = [](const Report& r) {
    auto j = nlohmann::json::parse(report_json(r));
    j.erase("wall_seconds");
    return j.dump();
  };
  const std::string a = strip(run_experiment("rainbow-ksum1", options));
  options.jobs = 1;
  const std::string b = strip(run_experiment("rainbow-ksum1", options));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"format_version\":1"), std::string::npos);
}

TEST(Experiments, ThresholdDisagreementsAreWarnings) {
  const Report r = run_experiment("rainbow-ksum1");
  ASSERT_FALSE(r.thresholds.empty());
  EXPECT_FALSE(r.thresholds[0].agree);
  EXPECT_EQ(r.thresholds[0].claimed, "zero iff r > 7");
  EXPECT_EQ(r.thresholds[0].measured, "zero iff r > 5");
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Experiments, ConfigOverridesFamiliesAndParameters) {
  RunOptions options;
  options.config = parse_config("# comment\nhamiltonian-join.rows = Edgeless:3\nhamiltonian-join.cols = Edgeless:3\nn_max = 3\n");
  const Report r = run_experiment("hamiltonian-join", options);
  EXPECT_EQ(r.panels[0].rows, "Edgeless:3:1");
  EXPECT_EQ(r.panels[0].n, 3u);

  options.config = parse_config("k = 2");
  const Report c = run_experiment("chromatic-join-threshold", options);
  EXPECT_EQ(c.status, ReportStatus::kPass);
  EXPECT_EQ(c.panels[0].label, "k=2");
  EXPECT_THROW(parse_config("no equals sign"), ParseError);
}

TEST(Experiments, BoundErrorsAreDistinctFromFailures) {
  RunOptions options;
  options.config = parse_config("rows = Asym:30\ncols = Asym:30");
  options.n_max = 2;
  const Report r = run_experiment("asymmetric-union", options);
  EXPECT_EQ(r.status, ReportStatus::kError);
  EXPECT_NE(r.error.find("entry"), std::string::npos);

  const Report fail = run_experiment("blk-phiB");
  EXPECT_EQ(fail.status, ReportStatus::kFail);
}

TEST(Experiments, CsvHasOneLinePerItem) {
  const Report r = run_experiment("words-L1");
  const std::string csv = reports_csv({r});
  std::size_t lines = 0;
  for (char c : csv) lines += c == '\n';
  EXPECT_EQ(lines, 1 + r.panels.size() + r.checks.size() + r.thresholds.size());
  EXPECT_EQ(csv.rfind("format_version,experiment,status", 0), 0u);
}

}  // namespace
}  // namespace conmat
