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
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tropdual/cayley.hpp"
#include "tropdual/dual_nss.hpp"
#include "tropdual/solver.hpp"

namespace tropdual {

using Point2 = std::array<Rational, 2>;

/// Locus alpha * x + beta * y + gamma = 0 where two monomials of one
/// polynomial tie.
struct TieLine {
  Rational alpha;
  Rational beta;
  Rational gamma;
  std::size_t poly = 0;
  Exponent first;
  Exponent second;
};

/// One line per unordered pair of distinct terms.
inline std::vector<TieLine> tie_lines(const TropPoly& f,
                                      std::size_t poly = 0) {
  if (f.n() != 2) {
    throw UnsupportedDimension("tie_lines needs n = 2");
  }
  std::vector<TieLine> out;
  for (auto a = f.terms().begin(); a != f.terms().end(); ++a) {
    for (auto b = std::next(a); b != f.terms().end(); ++b) {
      out.push_back({Rational(a->first[0] - b->first[0]),
                     Rational(a->first[1] - b->first[1]),
                     a->second - b->second, poly, a->first, b->first});
    }
  }
  return out;
}

namespace detail {

struct Line {
  Rational a, b, c;  // a x + b y + c = 0, first nonzero of (a, b) is 1

  friend bool operator<(const Line& l, const Line& r) {
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.c < r.c;
  }
  friend bool operator==(const Line&, const Line&) = default;

  // Points are parametrised by x, or by y for vertical lines.
  [[nodiscard]] Rational param(const Point2& p) const {
    return b != 0 ? p[0] : p[1];
  }
  [[nodiscard]] Point2 at(const Rational& t) const {
    if (b != 0) return {t, -(a * t + c) / b};
    return {-c / a, t};
  }
};

inline Line normalize(const TieLine& t) {
  const Rational lead = t.alpha != 0 ? t.alpha : t.beta;
  return {t.alpha / lead, t.beta / lead, t.gamma / lead};
}

inline std::optional<Point2> intersect(const Line& l, const Line& m) {
  const Rational det = l.a * m.b - l.b * m.a;
  if (det == 0) return std::nullopt;
  return Point2{(l.b * m.c - l.c * m.b) / det, (l.c * m.a - l.a * m.c) / det};
}

inline bool common_zero(std::span<const TropPoly> system, const Point2& p) {
  for (const auto& f : system) {
    if (!is_tropical_zero(f, std::span<const Rational>(p))) return false;
  }
  return true;
}

}  // namespace detail

/// Decides whether a bivariate system has a common tropical zero.
///
/// Every zero of a polynomial lies on one of its tie lines, and along an
/// open edge of the arrangement of all tie lines the order of all monomial
/// values is constant. Testing every vertex of the arrangement, the midpoint
/// of every bounded edge, a point past each end of every line and a point on
/// every line without vertices is therefore complete. Samples are tried in
/// that order, each group sorted, and the first common zero is returned.
inline std::optional<Point2> bivariate_solve(
    std::span<const TropPoly> system) {
  if (system.empty()) return std::nullopt;
  std::vector<detail::Line> lines;
  for (std::size_t j = 0; j < system.size(); ++j) {
    if (system[j].n() != 2) {
      throw UnsupportedDimension("bivariate_solve needs n = 2");
    }
    if (system[j].size() < 2) return std::nullopt;
    for (const auto& t : tie_lines(system[j], j)) {
      lines.push_back(detail::normalize(t));
    }
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

  std::vector<Point2> vertices;
  std::vector<std::vector<Rational>> on_line(lines.size());
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      if (auto p = detail::intersect(lines[a], lines[b])) {
        on_line[a].push_back(lines[a].param(*p));
        on_line[b].push_back(lines[b].param(*p));
        vertices.push_back(std::move(*p));
      }
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  for (const auto& v : vertices) {
    if (detail::common_zero(system, v)) return v;
  }

  for (std::size_t l = 0; l < lines.size(); ++l) {
    auto& ts = on_line[l];
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<Rational> samples;
    if (ts.empty()) {
      samples.push_back(Rational(0));
    } else {
      samples.push_back(ts.front() - 1);
      for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
        samples.push_back((ts[k] + ts[k + 1]) / 2);
      }
      samples.push_back(ts.back() + 1);
    }
    for (const auto& t : samples) {
      const auto p = lines[l].at(t);
      if (detail::common_zero(system, p)) return p;
    }
  }
  return std::nullopt;
}

/// Ground truth for a system with n = 1 or n = 2.
inline std::optional<std::vector<Rational>> find_common_zero(
    std::span<const TropPoly> system) {
  if (system.empty()) throw DimensionMismatch("empty system");
  if (system.front().n() == 1) {
    if (auto x = univariate_common_root(system)) {
      return std::vector<Rational>{*x};
    }
    return std::nullopt;
  }
  if (auto p = bivariate_solve(system)) {
    return std::vector<Rational>{(*p)[0], (*p)[1]};
  }
  return std::nullopt;
}

struct ProbeRow {
  std::int64_t shift_bound = 0;
  Status status = Status::unknown;
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// For solvable systems: the witness built from the zero verified.
  std::optional<bool> root_witness_ok;
};

struct ProbeReport {
  std::optional<std::vector<Rational>> zero;
  std::vector<ProbeRow> table;
  /// Solvable implies every tested C_N is feasible.
  bool easy_direction_holds = true;
  /// Unsolvable systems: the first tested N with C_N infeasible.
  std::optional<std::int64_t> first_infeasible;
};

/// Feasibility of C_N for N = 0 .. max_n next to the ground truth. Data
/// only: for unsolvable systems nothing is concluded from the table.
inline ProbeReport conjecture_probe(std::span<const TropPoly> system,
                                    std::int64_t max_n,
                                    Engine engine = Engine::automatic) {
  ProbeReport rep;
  rep.zero = find_common_zero(system);
  for (std::int64_t n = 0; n <= max_n; ++n) {
    const auto c = build_cayley(system, n);
    ProbeRow row;
    row.shift_bound = n;
    row.rows = c.rows.size();
    row.cols = c.cols.size();
    row.status = decide(c.matrix, engine).status;
    if (rep.zero) {
      const auto y = root_to_witness(system, *rep.zero, c.cols);
      row.root_witness_ok = verify_witness(c.matrix, c.index(y)).all_ok();
      if (!*row.root_witness_ok || row.status != Status::feasible) {
        rep.easy_direction_holds = false;
      }
    } else if (!rep.first_infeasible && row.status == Status::infeasible) {
      rep.first_infeasible = n;
    }
    rep.table.push_back(row);
  }
  return rep;
}

}  // namespace tropdual
