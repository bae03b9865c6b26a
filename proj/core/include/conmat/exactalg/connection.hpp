// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conmat/exact/value.hpp"
#include "conmat/exactalg/matrix.hpp"
#include "conmat/gluing/ops.hpp"
#include "conmat/invariants/registry.hpp"
#include "conmat/structures/families.hpp"

namespace conmat {

// An indexed family of graphs labelling the rows or columns of a connection
// matrix: either the arithmetic progression kind(start), kind(start+step), ...
// or an explicit member list.
//
// Text forms: "Clique:2:1" (kind, start, step), "Clique:2" (step 1),
// "CompleteBipartite:2:1:3" (fixed second index 3) and
// "list:Path(2);Clique(3);Star(2)".
struct FamilySpec {
  FamilyKind kind = FamilyKind::kEdgeless;
  int start = 0;
  int step = 1;
  int index2 = 0;
  std::vector<FamilyId> members;  // when nonempty, overrides the progression

  FamilyId member(std::size_t i) const;
  // Number of members available (unbounded progressions report SIZE_MAX).
  std::size_t available() const;
  std::string to_string() const;
};

FamilySpec family_spec(FamilyKind kind, int start, int step = 1, int index2 = 0);
FamilySpec family_list(std::vector<FamilyId> members);
FamilySpec parse_family_spec(const std::string& text);

// Lazily filled, memoized matrix of exact values. Entries are computed on
// first request by `entry` and stored; concurrent requests for the same
// entry may both compute it, but the stored value is identical because the
// entry function is pure.
class ConnectionMatrix {
 public:
  using EntryFn = std::function<Value(std::size_t, std::size_t)>;
  using LabelFn = std::function<std::string(std::size_t)>;

  ConnectionMatrix(EntryFn entry, LabelFn row_label, LabelFn col_label);

  Value entry(std::size_t i, std::size_t j);
  // Dense rows x cols block, computing missing entries on up to `jobs`
  // workers (0 = default). Errors are rethrown with the offending (i,j).
  Matrix materialize(std::size_t rows, std::size_t cols, int jobs = 0);
  // Number of entries computed so far.
  std::size_t computed() const;

 private:
  EntryFn entry_;
  LabelFn row_label_;
  LabelFn col_label_;
  mutable std::mutex mutex_;
  std::map<std::pair<std::size_t, std::size_t>, Value> memo_;
};

// Entry (i,j) = inv(op(rows[i], cols[j])); Booleans become 0/1 integers.
ConnectionMatrix connection_matrix(const GluingOp& op, const InvariantId& inv,
                                   const FamilySpec& rows, const FamilySpec& cols);

// Materialized N x N connection matrix.
Matrix build_connection_matrix(const GluingOp& op, const InvariantId& inv,
                               const FamilySpec& rows, const FamilySpec& cols,
                               std::size_t n, int jobs = 0);
Matrix build_connection_matrix(const std::string& op, const std::string& inv,
                               const FamilySpec& rows, const FamilySpec& cols,
                               std::size_t n, int jobs = 0);

// Booleans as 0/1 integers; other values unchanged.
Value matrix_entry(const Value& v);

// --- Rank profiles -----------------------------------------------------------

// The shape a rank profile r(1..N) is expected to have.
struct Expectation {
  enum class Kind {
    kBounded,             // r(N) <= bound for all N and r(N_max-1) = r(N_max)
    kFullDiagonalGrowth,  // r(N) = N for all N >= from
    kStrictlyIncreasing,  // r(N) < r(N+1) for all N < N_max
    kAtLeastNMinus1,      // r(N) >= N - 1 for all N >= from
    kStabilizes,          // r(N) constant for all N >= from
    kCustom,              // predicate supplied by the caller
  };

  Kind kind = Kind::kFullDiagonalGrowth;
  std::size_t bound = 0;
  std::size_t from = 1;
  std::string description;  // kCustom only
  std::function<bool(const std::vector<std::size_t>&)> predicate;

  std::string to_string() const;
};

Expectation bounded(std::size_t c);
// r(N) = N for all N >= from (from = 2 admits a zero first entry, as in the
// complement of the identity).
Expectation full_diagonal_growth(std::size_t from = 1);
Expectation strictly_increasing();
Expectation at_least_n_minus_1(std::size_t from = 1);
Expectation stabilizes(std::size_t from);
Expectation custom_expectation(std::string description,
                               std::function<bool(const std::vector<std::size_t>&)> predicate);

// Checks the expectation on r(1..N_max).
bool satisfies(const std::vector<std::size_t>& profile, const Expectation& e);

// The most specific shape the profile exhibits, e.g. "FullDiagonalGrowth",
// "StrictlyIncreasing", "Bounded(2)" or "Irregular".
std::string classify(const std::vector<std::size_t>& profile);

struct RankProfile {
  std::vector<std::size_t> ranks;  // r(1), ..., r(N_max)
  Expectation expected;
  std::string observed;
  bool pass = false;
};

RankProfile rank_profile(const Matrix& m, std::size_t n_max, const Expectation& expected);
RankProfile rank_profile(const GluingOp& op, const InvariantId& inv, const FamilySpec& rows,
                         const FamilySpec& cols, std::size_t n_max, const Expectation& expected,
                         int jobs = 0);

std::string format_profile(const std::vector<std::size_t>& ranks);

}  // namespace conmat
