// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/exactalg/connection.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "conmat/common/error.hpp"
#include "conmat/common/parallel.hpp"

namespace conmat {

// --- FamilySpec --------------------------------------------------------------

FamilyId FamilySpec::member(std::size_t i) const {
  if (!members.empty()) {
    if (i >= members.size()) {
      throw InvalidArgument("family " + to_string() + " has only " +
                            std::to_string(members.size()) + " members");
    }
    return members[i];
  }
  return FamilyId{kind, start + static_cast<int>(i) * step, index2};
}

std::size_t FamilySpec::available() const {
  return members.empty() ? std::numeric_limits<std::size_t>::max() : members.size();
}

std::string FamilySpec::to_string() const {
  if (!members.empty()) {
    std::string out = "list:";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) out += ';';
      out += conmat::to_string(members[i]);
    }
    return out;
  }
  std::string out = family_name(kind) + ":" + std::to_string(start) + ":" + std::to_string(step);
  if (kind == FamilyKind::kCompleteBipartite) out += ":" + std::to_string(index2);
  return out;
}

FamilySpec family_spec(FamilyKind kind, int start, int step, int index2) {
  if (start < family_minimum(kind)) {
    throw InvalidArgument("family " + family_name(kind) + " starts at " +
                          std::to_string(family_minimum(kind)));
  }
  if (step < 1) throw InvalidArgument("family step must be positive");
  FamilySpec spec;
  spec.kind = kind;
  spec.start = start;
  spec.step = step;
  spec.index2 = index2;
  return spec;
}

FamilySpec family_list(std::vector<FamilyId> members) {
  if (members.empty()) throw InvalidArgument("family list is empty");
  FamilySpec spec;
  spec.kind = members.front().kind;
  spec.start = members.front().index;
  spec.members = std::move(members);
  return spec;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InvalidArgument("bad integer '" + s + "' in " + context);
  return v;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  if (text.rfind("list:", 0) == 0) {
    std::vector<FamilyId> members;
    for (const auto& part : split(text.substr(5), ';')) {
      if (!part.empty()) members.push_back(parse_family_id(part));
    }
    return family_list(std::move(members));
  }
  const auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 4) {
    throw InvalidArgument("family spec '" + text + "' is not of the form Kind:start[:step[:second]]");
  }
  const FamilyKind kind = parse_family_kind(parts[0]);
  const int start = parse_int(parts[1], text);
  const int step = parts.size() > 2 ? parse_int(parts[2], text) : 1;
  const int second = parts.size() > 3 ? parse_int(parts[3], text) : 0;
  return family_spec(kind, start, step, second);
}

// --- ConnectionMatrix --------------------------------------------------------

ConnectionMatrix::ConnectionMatrix(EntryFn entry, LabelFn row_label, LabelFn col_label)
    : entry_(std::move(entry)), row_label_(std::move(row_label)), col_label_(std::move(col_label)) {}

namespace {

// Rethrows the active library error with the entry position prepended,
// preserving its type.
[[noreturn]] void rethrow_at(std::size_t i, std::size_t j) {
  const std::string where = "entry (" + std::to_string(i) + "," + std::to_string(j) + "): ";
  try {
    throw;
  } catch (const BoundExceeded& e) {
    throw BoundExceeded(where + e.what());
  } catch (const MixedKinds& e) {
    throw MixedKinds(where + e.what());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(where + e.what());
  } catch (const Error& e) {
    throw Error(where + e.what());
  }
}

}  // namespace

Value ConnectionMatrix::entry(std::size_t i, std::size_t j) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find({i, j});
    if (it != memo_.end()) return it->second;
  }
  Value v;
  try {
    v = matrix_entry(entry_(i, j));
  } catch (const Error&) {
    rethrow_at(i, j);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(std::make_pair(i, j), std::move(v)).first->second;
}

Matrix ConnectionMatrix::materialize(std::size_t rows, std::size_t cols, int jobs) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) m.row_labels().push_back(row_label_(i));
  for (std::size_t j = 0; j < cols; ++j) m.col_labels().push_back(col_label_(j));
  std::vector<Value> values(rows * cols);
  parallel_for(rows * cols, jobs == 0 ? default_jobs() : jobs, [&](std::size_t k) {
    values[k] = entry(k / cols, k % cols);
  });
  for (std::size_t k = 0; k < values.size(); ++k) m.set(k / cols, k % cols, std::move(values[k]));
  return m;
}

std::size_t ConnectionMatrix::computed() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

Value matrix_entry(const Value& v) {
  if (v.kind() == ValueKind::kBoolean) return Value(v.as_bool() ? 1 : 0);
  return v;
}

ConnectionMatrix connection_matrix(const GluingOp& op, const InvariantId& inv,
                                   const FamilySpec& rows, const FamilySpec& cols) {
  invariant_kind(inv);  // rejects unknown ids before any work
  auto entry = [op, inv, rows, cols](std::size_t i, std::size_t j) {
    return evaluate(inv, apply(op, generate(rows.member(i)), generate(cols.member(j))));
  };
  auto row_label = [rows](std::size_t i) { return to_string(rows.member(i)); };
  auto col_label = [cols](std::size_t j) { return to_string(cols.member(j)); };
  return ConnectionMatrix(entry, row_label, col_label);
}

Matrix build_connection_matrix(const GluingOp& op, const InvariantId& inv, const FamilySpec& rows,
                               const FamilySpec& cols, std::size_t n, int jobs) {
  if (n > rows.available() || n > cols.available()) {
    throw InvalidArgument("family lists are shorter than N = " + std::to_string(n));
  }
  return connection_matrix(op, inv, rows, cols).materialize(n, n, jobs);
}

Matrix build_connection_matrix(const std::string& op, const std::string& inv,
                               const FamilySpec& rows, const FamilySpec& cols, std::size_t n,
                               int jobs) {
  return build_connection_matrix(parse_gluing_op(op), parse_invariant_id(inv), rows, cols, n, jobs);
}

// --- Rank profiles -----------------------------------------------------------

std::string Expectation::to_string() const {
  switch (kind) {
    case Kind::kBounded:
      return "Bounded(" + std::to_string(bound) + ")";
    case Kind::kFullDiagonalGrowth:
      return from <= 1 ? "FullDiagonalGrowth" : "FullDiagonalGrowth(from " + std::to_string(from) + ")";
    case Kind::kStrictlyIncreasing:
      return "StrictlyIncreasing";
    case Kind::kAtLeastNMinus1:
      return from <= 1 ? "AtLeast(N-1)" : "AtLeast(N-1, from " + std::to_string(from) + ")";
    case Kind::kStabilizes:
      return "Stabilizes(from " + std::to_string(from) + ")";
    case Kind::kCustom:
      return "Custom(" + description + ")";
  }
  return "?";
}

Expectation bounded(std::size_t c) {
  Expectation e;
  e.kind = Expectation::Kind::kBounded;
  e.bound = c;
  return e;
}

Expectation full_diagonal_growth(std::size_t from) {
  Expectation e;
  e.kind = Expectation::Kind::kFullDiagonalGrowth;
  e.from = from;
  return e;
}

Expectation strictly_increasing() {
  Expectation e;
  e.kind = Expectation::Kind::kStrictlyIncreasing;
  return e;
}

Expectation at_least_n_minus_1(std::size_t from) {
  Expectation e;
  e.kind = Expectation::Kind::kAtLeastNMinus1;
  e.from = from;
  return e;
}

Expectation stabilizes(std::size_t from) {
  Expectation e;
  e.kind = Expectation::Kind::kStabilizes;
  e.from = from;
  return e;
}

Expectation custom_expectation(std::string description,
                               std::function<bool(const std::vector<std::size_t>&)> predicate) {
  Expectation e;
  e.kind = Expectation::Kind::kCustom;
  e.description = std::move(description);
  e.predicate = std::move(predicate);
  return e;
}

bool satisfies(const std::vector<std::size_t>& r, const Expectation& e) {
  if (r.empty()) return false;
  const std::size_t n_max = r.size();
  switch (e.kind) {
    case Expectation::Kind::kBounded:
      return *std::max_element(r.begin(), r.end()) <= e.bound &&
             (n_max < 2 || r[n_max - 2] == r[n_max - 1]);
    case Expectation::Kind::kFullDiagonalGrowth:
      if (e.from > n_max) return false;
      for (std::size_t n = e.from; n <= n_max; ++n) {
        if (r[n - 1] != n) return false;
      }
      return true;
    case Expectation::Kind::kStrictlyIncreasing:
      for (std::size_t n = 1; n < n_max; ++n) {
        if (r[n - 1] >= r[n]) return false;
      }
      return true;
    case Expectation::Kind::kAtLeastNMinus1:
      if (e.from > n_max) return false;
      for (std::size_t n = e.from; n <= n_max; ++n) {
        if (r[n - 1] + 1 < n) return false;
      }
      return true;
    case Expectation::Kind::kStabilizes:
      if (e.from > n_max) return false;
      for (std::size_t n = e.from; n <= n_max; ++n) {
        if (r[n - 1] != r[e.from - 1]) return false;
      }
      return true;
    case Expectation::Kind::kCustom:
      return e.predicate && e.predicate(r);
  }
  return false;
}

std::string classify(const std::vector<std::size_t>& r) {
  if (r.empty()) return "Empty";
  if (satisfies(r, full_diagonal_growth(1))) return "FullDiagonalGrowth";
  if (r.size() >= 2 && satisfies(r, full_diagonal_growth(2))) return "FullDiagonalGrowth(from 2)";
  if (r.size() >= 2 && satisfies(r, strictly_increasing())) return "StrictlyIncreasing";
  if (satisfies(r, at_least_n_minus_1())) return "AtLeast(N-1)";
  const std::size_t top = *std::max_element(r.begin(), r.end());
  if (satisfies(r, bounded(top))) return "Bounded(" + std::to_string(top) + ")";
  return "Irregular";
}

RankProfile rank_profile(const Matrix& m, std::size_t n_max, const Expectation& expected) {
  RankProfile p;
  p.ranks = leading_rank_profile(m, n_max);
  p.expected = expected;
  p.observed = classify(p.ranks);
  p.pass = satisfies(p.ranks, expected);
  return p;
}

RankProfile rank_profile(const GluingOp& op, const InvariantId& inv, const FamilySpec& rows,
                         const FamilySpec& cols, std::size_t n_max, const Expectation& expected,
                         int jobs) {
  return rank_profile(build_connection_matrix(op, inv, rows, cols, n_max, jobs), n_max, expected);
}

std::string format_profile(const std::vector<std::size_t>& ranks) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ranks.size(); ++i) out << (i ? "," : "") << ranks[i];
  return out.str();
}

}  // namespace conmat
