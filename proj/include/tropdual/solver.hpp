// Copyright 2026 The tropdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropdual/matrix.hpp"

namespace tropdual {

// ---------------------------------------------------------------------------
// Witness verification
// ---------------------------------------------------------------------------

struct RowReport {
  bool ok = false;
  std::size_t finite_count = 0;
  std::optional<Rational> minimum;
  /// Set when exactly one column attains the minimum.
  std::optional<std::size_t> unique_argmin;
};

struct WitnessReport {
  std::vector<RowReport> rows;

  [[nodiscard]] bool all_ok() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const RowReport& r) { return r.ok; });
  }

  [[nodiscard]] std::vector<std::size_t> violated() const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].ok) out.push_back(r);
    }
    return out;
  }
};

/// A row is satisfied when min over finite entries of (entry + y_col) is
/// attained at two or more columns. Rows with fewer than two finite entries
/// are never satisfied.
inline WitnessReport verify_witness(const TropMatrix& m,
                                    std::span<const Rational> y) {
  if (y.size() != m.cols()) {
    throw DimensionMismatch("witness has " + std::to_string(y.size()) +
                            " values for " + std::to_string(m.cols()) +
                            " columns");
  }
  WitnessReport report;
  report.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    RowReport rr;
    std::size_t hits = 0;
    std::size_t arg = 0;
    for (const auto& e : m.row(r)) {
      ++rr.finite_count;
      Rational v = e.value + y[e.col];
      if (!rr.minimum || v < *rr.minimum) {
        rr.minimum = std::move(v);
        hits = 1;
        arg = e.col;
      } else if (v == *rr.minimum) {
        ++hits;
      }
    }
    rr.ok = hits >= 2;
    if (hits == 1) rr.unique_argmin = arg;
    report.rows.push_back(std::move(rr));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

enum class Status { feasible, infeasible, unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::feasible:
      return "feasible";
    case Status::infeasible:
      return "infeasible";
    case Status::unknown:
      return "unknown";
  }
  return "unknown";
}

/// Unordered pair of columns asserted to attain a row minimum; first < second.
using ColumnPair = std::pair<std::size_t, std::size_t>;

struct RefutationNode;

struct RefutationBranch {
  ColumnPair pair;
  /// Null when the pair is inconsistent with the constraints on the path.
  std::unique_ptr<RefutationNode> child;
};

/// One node of the explored pair-assignment tree: every candidate pair of
/// `row` is listed, in lexicographic order, and each is closed either by a
/// direct contradiction or by a refuted subtree.
struct RefutationNode {
  std::size_t row = 0;
  std::vector<RefutationBranch> branches;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t lift_steps = 0;
};

struct FeasibilityResult {
  Status status = Status::unknown;
  /// Column-indexed, normalized to y[0] = 0. Only set when feasible.
  std::vector<Rational> witness;
  /// Set for infeasible results of the exact engine unless the tree exceeded
  /// the node cap.
  std::shared_ptr<const RefutationNode> refutation;
  SearchStats stats;
};

enum class Engine { exact, lift, automatic };

inline const char* to_string(Engine e) {
  switch (e) {
    case Engine::exact:
      return "exact";
    case Engine::lift:
      return "lift";
    case Engine::automatic:
      return "auto";
  }
  return "auto";
}

struct ExactOptions {
  /// Largest refutation tree kept in the result.
  std::uint64_t refutation_node_cap = 20000;
};

namespace detail {

/// Entries scaled by the lcm of all denominators.
struct ScaledMatrix {
  Integer scale = 1;
  Integer max_abs = 0;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> rows;
};

inline ScaledMatrix scale_to_integers(const TropMatrix& m) {
  ScaledMatrix s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) {
      const Integer d = denominator_of(e.value);
      s.scale = boost::multiprecision::lcm(s.scale, d);
    }
  }
  s.rows.resize(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) {
      const Rational scaled = e.value * Rational(s.scale);
      Integer v = numerator_of(scaled);
      s.max_abs = std::max(s.max_abs, Integer(abs(v)));
      s.rows[r].emplace_back(e.col, std::move(v));
    }
  }
  return s;
}

template <typename Int>
Int convert_int(const Integer& v) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return v;
  } else {
    return v.template convert_to<Int>();
  }
}

template <typename Int>
Integer to_integer(const Int& v) {
  return Integer(v);
}

/// Pair-branching search over difference constraints.
///
/// Each row chooses two finite columns P, Q that attain its minimum. The
/// choice becomes y_P + c_P = y_Q + c_Q <= y_K + c_K for every finite K in the
/// row. The constraint set is kept as a closed difference-bound matrix, so a
/// choice is consistent iff it closes no negative cycle, which for edges that
/// all touch P reduces to O(row size) lookups.
template <typename Int>
class ExactSearch {
 public:
  ExactSearch(const ScaledMatrix& s, std::size_t cols, ExactOptions options)
      : n_(cols), options_(options) {
    rows_.resize(s.rows.size());
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
      for (const auto& [c, v] : s.rows[r]) {
        rows_[r].push_back({c, convert_int<Int>(v)});
      }
    }
    // Any simple path sums at most n edges of weight <= 2 * max_abs.
    inf_ = convert_int<Int>(Integer(2) * s.max_abs * Integer(n_ + 2) + 1);
    dist_.assign(n_ * n_, inf_);
    for (std::size_t v = 0; v < n_; ++v) dist_[v * n_ + v] = Int(0);
    assigned_.assign(rows_.size(), false);
    order_.resize(rows_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return rows_[a].size() < rows_[b].size();
                     });
  }

  /// Runs the search. On success fills `witness` with integer values in
  /// scaled units.
  bool run(std::vector<Int>& witness,
           std::unique_ptr<RefutationNode>& refutation) {
    refutation = std::make_unique<RefutationNode>();
    const bool found = search(refutation.get(), 0);
    if (found) {
      refutation.reset();
      witness = extract();
    } else if (truncated_) {
      refutation.reset();
    }
    return found;
  }

  [[nodiscard]] const SearchStats& stats() const { return stats_; }

 private:
  struct Cell {
    std::size_t col;
    Int value;
  };

  Int& d(std::size_t u, std::size_t v) { return dist_[u * n_ + v]; }

  // P, Q given as positions within the row.
  bool viable(const std::vector<Cell>& row, std::size_t p, std::size_t q) {
    return can_be_min(row, p) && can_be_min(row, q);
  }

  // Adding y_P <= y_K + c_K - c_P for all K closes no negative cycle.
  bool can_be_min(const std::vector<Cell>& row, std::size_t p) {
    const std::size_t pc = row[p].col;
    for (const auto& k : row) {
      const Int& dk = d(pc, k.col);
      if (dk != inf_ && dk + k.value - row[p].value < 0) return false;
    }
    return true;
  }

  // y_v - y_u <= w
  bool add_edge(std::size_t u, std::size_t v, const Int& w) {
    if (d(v, u) != inf_ && d(v, u) + w < 0) return false;
    if (d(u, v) != inf_ && d(u, v) <= w) return true;
    sources_.clear();
    targets_.clear();
    for (std::size_t a = 0; a < n_; ++a) {
      if (d(a, u) != inf_) sources_.push_back(a);
      if (d(v, a) != inf_) targets_.push_back(a);
    }
    for (const auto a : sources_) {
      const Int via = d(a, u) + w;
      for (const auto b : targets_) {
        Int cand = via + d(v, b);
        Int& cur = d(a, b);
        if (cur == inf_ || cand < cur) {
          trail_.emplace_back(a * n_ + b, cur);
          cur = std::move(cand);
        }
      }
    }
    return true;
  }

  bool commit(const std::vector<Cell>& row, std::size_t p, std::size_t q) {
    const auto pc = row[p].col;
    const auto qc = row[q].col;
    if (!add_edge(qc, pc, row[q].value - row[p].value)) return false;
    if (!add_edge(pc, qc, row[p].value - row[q].value)) return false;
    for (const auto& k : row) {
      if (k.col == pc || k.col == qc) continue;
      if (!add_edge(k.col, pc, k.value - row[p].value)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      dist_[trail_.back().first] = std::move(trail_.back().second);
      trail_.pop_back();
    }
  }

  static std::vector<std::pair<std::size_t, std::size_t>> pairs_of(
      std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) out.emplace_back(p, q);
    }
    return out;
  }

  std::size_t count_viable(const std::vector<Cell>& row, std::size_t cap) {
    const std::size_t k = row.size();
    std::vector<char> ok(k);
    for (std::size_t p = 0; p < k; ++p) ok[p] = can_be_min(row, p);
    std::size_t count = 0;
    for (std::size_t p = 0; p < k; ++p) {
      if (!ok[p]) continue;
      for (std::size_t q = p + 1; q < k; ++q) {
        if (ok[q] && ++count >= cap) return count;
      }
    }
    return count;
  }

  RefutationNode* new_child(RefutationBranch& branch) {
    if (truncated_) return nullptr;
    if (++tree_nodes_ > options_.refutation_node_cap) {
      truncated_ = true;
      return nullptr;
    }
    branch.child = std::make_unique<RefutationNode>();
    return branch.child.get();
  }

  static void close_all(RefutationNode* node, std::size_t row,
                        std::size_t k, const std::vector<Cell>& cells) {
    if (!node) return;
    node->row = row;
    for (const auto& [p, q] : pairs_of(k)) {
      node->branches.push_back({{cells[p].col, cells[q].col}, nullptr});
    }
  }

  bool search(RefutationNode* node, std::uint64_t depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    std::optional<std::size_t> best;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (const auto r : order_) {
      if (assigned_[r]) continue;
      const std::size_t count = count_viable(rows_[r], best_count);
      if (count == 0) {
        close_all(node, r, rows_[r].size(), rows_[r]);
        return false;
      }
      if (count < best_count) {
        best = r;
        best_count = count;
      }
    }
    if (!best) return true;

    const std::size_t r = *best;
    const auto& row = rows_[r];
    if (node) node->row = r;
    assigned_[r] = true;
    for (const auto& [p, q] : pairs_of(row.size())) {
      RefutationBranch branch{{row[p].col, row[q].col}, nullptr};
      if (viable(row, p, q)) {
        const std::size_t mark = trail_.size();
        if (!commit(row, p, q)) {
          throw InvariantViolation("viable pair closed a negative cycle");
        }
        RefutationNode* child = node ? new_child(branch) : nullptr;
        if (search(child, depth + 1)) return true;
        undo(mark);
      }
      if (node) node->branches.push_back(std::move(branch));
    }
    assigned_[r] = false;
    return false;
  }

  // Shortest distances from a virtual source joined to every column by a
  // zero edge, shifted so column 0 gets 0.
  std::vector<Int> extract() {
    std::vector<Int> y(n_, Int(0));
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t u = 0; u < n_; ++u) {
        if (d(u, v) != inf_ && d(u, v) < y[v]) y[v] = d(u, v);
      }
    }
    if (n_ > 0) {
      const Int base = y[0];
      for (auto& v : y) v -= base;
    }
    return y;
  }

  std::size_t n_;
  ExactOptions options_;
  std::vector<std::vector<Cell>> rows_;
  Int inf_;
  std::vector<Int> dist_;
  std::vector<std::pair<std::size_t, Int>> trail_;
  std::vector<bool> assigned_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> sources_;
  std::vector<std::size_t> targets_;
  SearchStats stats_;
  std::uint64_t tree_nodes_ = 1;
  bool truncated_ = false;
};

inline bool fits_int64(const Integer& bound) {
  static const Integer limit = Integer(1) << 60;
  return bound < limit;
}

inline FeasibilityResult trivially_infeasible(const TropMatrix& m,
                                              std::size_t row) {
  FeasibilityResult res;
  res.status = Status::infeasible;
  auto node = std::make_shared<RefutationNode>();
  node->row = row;
  const auto& cells = m.row(row);
  for (std::size_t p = 0; p < cells.size(); ++p) {
    for (std::size_t q = p + 1; q < cells.size(); ++q) {
      node->branches.push_back({{cells[p].col, cells[q].col}, nullptr});
    }
  }
  res.refutation = std::move(node);
  return res;
}

template <typename Int>
std::vector<Rational> unscale(const std::vector<Int>& y, const Integer& scale) {
  std::vector<Rational> out;
  out.reserve(y.size());
  for (const auto& v : y) out.emplace_back(to_integer(v), scale);
  return out;
}

}  // namespace detail

/// Complete decision procedure: Feasible with a verified witness, or
/// Infeasible with the explored pair-assignment tree.
inline FeasibilityResult decide_exact(const TropMatrix& m,
                                      const ExactOptions& options = {}) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).size() < 2) return detail::trivially_infeasible(m, r);
  }
  const auto scaled = detail::scale_to_integers(m);
  FeasibilityResult res;
  std::unique_ptr<RefutationNode> tree;
  auto run = [&](auto tag) {
    using Int = decltype(tag);
    detail::ExactSearch<Int> search(scaled, m.cols(), options);
    std::vector<Int> y;
    const bool found = search.run(y, tree);
    res.stats = search.stats();
    if (found) {
      res.status = Status::feasible;
      res.witness = detail::unscale(y, scaled.scale);
    } else {
      res.status = Status::infeasible;
      res.refutation = std::shared_ptr<const RefutationNode>(std::move(tree));
    }
  };
  if (detail::fits_int64(scaled.max_abs * Integer(2 * m.cols() + 4))) {
    run(std::int64_t{});
  } else {
    run(Integer{});
  }
  if (res.status == Status::feasible &&
      !verify_witness(m, res.witness).all_ok()) {
    throw InvariantViolation("exact engine produced an invalid witness");
  }
  return res;
}

namespace detail {

template <typename Int>
FeasibilityResult lift_impl(const TropMatrix& m, const ScaledMatrix& s,
                            std::uint64_t budget) {
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::pair<std::size_t, Int>>> rows(s.rows.size());
  std::vector<std::vector<std::size_t>> rows_of(cols);
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    for (const auto& [c, v] : s.rows[r]) {
      rows[r].emplace_back(c, convert_int<Int>(v));
      rows_of[c].push_back(r);
    }
  }
  std::vector<Int> y(cols, Int(0));

  // Returns the lift needed for the unique argmin, or nothing when satisfied.
  struct Lift {
    std::size_t col;
    Int amount;
  };
  auto inspect = [&](std::size_t r) -> std::optional<Lift> {
    const auto& row = rows[r];
    std::size_t arg = row[0].first;
    Int best = row[0].second + y[row[0].first];
    std::optional<Int> second;
    for (std::size_t k = 1; k < row.size(); ++k) {
      Int v = row[k].second + y[row[k].first];
      if (v < best) {
        second = best;
        best = std::move(v);
        arg = row[k].first;
      } else if (!second || v < *second) {
        second = std::move(v);
      }
    }
    if (*second == best) return std::nullopt;
    return Lift{arg, *second - best};
  };

  std::set<std::size_t> violated;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (inspect(r)) violated.insert(r);
  }
  FeasibilityResult res;
  std::uint64_t steps = 0;
  while (!violated.empty()) {
    if (steps >= budget) {
      res.status = Status::unknown;
      res.stats.lift_steps = steps;
      return res;
    }
    const auto lift = inspect(*violated.begin());
    y[lift->col] += lift->amount;
    ++steps;
    for (const auto r : rows_of[lift->col]) {
      if (inspect(r)) {
        violated.insert(r);
      } else {
        violated.erase(r);
      }
    }
  }
  if (cols > 0) {
    const Int base = y[0];
    for (auto& v : y) v -= base;
  }
  res.status = Status::feasible;
  res.stats.lift_steps = steps;
  res.witness = unscale(y, s.scale);
  return res;
}

}  // namespace detail

/// Monotone lifting from y = 0: the first violated row raises its unique
/// argmin column until it ties the runner-up. Never reports infeasibility;
/// gives Unknown once `budget` lifts have been spent.
inline FeasibilityResult lift_heuristic(const TropMatrix& m,
                                        std::uint64_t budget) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).size() < 2) {
      FeasibilityResult res;
      res.status = Status::unknown;
      return res;
    }
  }
  const auto scaled = detail::scale_to_integers(m);
  const Integer reach =
      scaled.max_abs * Integer(2) * Integer(budget + 2) + Integer(1);
  FeasibilityResult res = detail::fits_int64(reach)
                              ? detail::lift_impl<std::int64_t>(m, scaled, budget)
                              : detail::lift_impl<Integer>(m, scaled, budget);
  if (res.status == Status::feasible &&
      !verify_witness(m, res.witness).all_ok()) {
    throw InvariantViolation("lift produced an invalid witness");
  }
  return res;
}

inline std::uint64_t default_lift_budget(const TropMatrix& m) {
  return 10ULL * m.rows() * m.cols();
}

/// `automatic` runs the lift with budget 10 * rows * cols and falls back to
/// the exact engine, so only `lift` can return Unknown.
inline FeasibilityResult decide(const TropMatrix& m, Engine engine,
                                const ExactOptions& options = {}) {
  switch (engine) {
    case Engine::exact:
      return decide_exact(m, options);
    case Engine::lift:
      return lift_heuristic(m, default_lift_budget(m));
    case Engine::automatic: {
      auto lifted = lift_heuristic(m, default_lift_budget(m));
      if (lifted.status == Status::feasible) return lifted;
      auto exact = decide_exact(m, options);
      exact.stats.lift_steps = lifted.stats.lift_steps;
      return exact;
    }
  }
  return decide_exact(m, options);
}

// ---------------------------------------------------------------------------
// Refutation checking
// ---------------------------------------------------------------------------

namespace detail {

struct DiffEdge {
  std::size_t from;
  std::size_t to;
  Rational weight;  // y_to - y_from <= weight
};

// Plain Bellman-Ford from a virtual source.
inline bool has_negative_cycle(std::size_t n,
                               const std::vector<DiffEdge>& edges) {
  std::vector<Rational> pot(n, Rational(0));
  for (std::size_t it = 0; it <= n; ++it) {
    bool changed = false;
    for (const auto& e : edges) {
      Rational cand = pot[e.from] + e.weight;
      if (cand < pot[e.to]) {
        pot[e.to] = std::move(cand);
        changed = true;
      }
    }
    if (!changed) return false;
  }
  return true;
}

inline void pair_constraints(const TropMatrix::Row& row, std::size_t pc,
                             std::size_t qc, std::vector<DiffEdge>& out) {
  Rational cp, cq;
  for (const auto& e : row) {
    if (e.col == pc) cp = e.value;
    if (e.col == qc) cq = e.value;
  }
  out.push_back({qc, pc, cq - cp});
  out.push_back({pc, qc, cp - cq});
  for (const auto& e : row) {
    if (e.col != pc && e.col != qc) out.push_back({e.col, pc, e.value - cp});
  }
}

inline bool check_node(const TropMatrix& m, const RefutationNode& node,
                       std::vector<DiffEdge>& edges) {
  if (node.row >= m.rows()) return false;
  const auto& row = m.row(node.row);
  std::vector<ColumnPair> expected;
  for (std::size_t p = 0; p < row.size(); ++p) {
    for (std::size_t q = p + 1; q < row.size(); ++q) {
      expected.emplace_back(row[p].col, row[q].col);
    }
  }
  if (expected.size() != node.branches.size()) return false;
  for (std::size_t b = 0; b < expected.size(); ++b) {
    const auto& branch = node.branches[b];
    if (branch.pair != expected[b]) return false;
    const std::size_t mark = edges.size();
    pair_constraints(row, branch.pair.first, branch.pair.second, edges);
    const bool ok = branch.child
                        ? check_node(m, *branch.child, edges)
                        : has_negative_cycle(m.cols(), edges);
    edges.resize(mark);
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// Independently replays a refutation tree with Bellman-Ford: every pair of
/// every node must be listed and closed by a negative cycle or a valid
/// subtree.
inline bool check_refutation(const TropMatrix& m, const RefutationNode& root) {
  std::vector<detail::DiffEdge> edges;
  return detail::check_node(m, root, edges);
}

inline std::uint64_t refutation_size(const RefutationNode& node) {
  std::uint64_t total = 1;
  for (const auto& b : node.branches) {
    if (b.child) total += refutation_size(*b.child);
  }
  return total;
}

}  // namespace tropdual
