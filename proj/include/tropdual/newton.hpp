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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropdual/poly.hpp"

namespace tropdual {

/// Vertex of a univariate Newton polygon, in (exponent, coefficient) terms.
struct HullVertex {
  std::int64_t exp;
  Rational coeff;

  friend bool operator==(const HullVertex&, const HullVertex&) = default;
};

/// Finite edge of the lower envelope. Its direction in the
/// (height, exponent) plane is (slope, 1).
struct HullEdge {
  std::size_t from;
  std::size_t to;
  Rational slope;
  std::int64_t lattice_length;
};

/// Lower convex envelope of the points (coeff_k, k) of a univariate
/// polynomial. Upward rays are implicit. Edges run left to right, so slopes
/// strictly increase.
struct NewtonPolygon {
  std::vector<HullVertex> vertices;
  std::vector<HullEdge> edges;

  [[nodiscard]] std::int64_t min_exp() const { return vertices.front().exp; }
  [[nodiscard]] std::int64_t max_exp() const { return vertices.back().exp; }

  /// Height of the lower envelope at an exponent inside [min_exp, max_exp].
  [[nodiscard]] Rational height_at(std::int64_t exp) const {
    if (exp < min_exp() || exp > max_exp()) {
      throw InvariantViolation("height_at outside the exponent span");
    }
    for (const auto& e : edges) {
      const auto& a = vertices[e.from];
      const auto& b = vertices[e.to];
      if (exp >= a.exp && exp <= b.exp) {
        return a.coeff + e.slope * Rational(exp - a.exp);
      }
    }
    return vertices.front().coeff;  // single vertex
  }

  /// Index of the edge containing `exp`. A shared vertex of edges r and r+1
  /// is attributed to edge r, so the left endpoint of the first edge is the
  /// only exponent mapped by its left end.
  [[nodiscard]] std::optional<std::size_t> edge_containing(
      std::int64_t exp) const {
    for (std::size_t r = 0; r < edges.size(); ++r) {
      const auto lo = vertices[edges[r].from].exp;
      const auto hi = vertices[edges[r].to].exp;
      if ((exp > lo || (r == 0 && exp == lo)) && exp <= hi) return r;
    }
    return std::nullopt;
  }

  /// True when `exp` is the common vertex of two consecutive edges.
  [[nodiscard]] bool is_inner_vertex(std::int64_t exp) const {
    for (std::size_t v = 1; v + 1 < vertices.size(); ++v) {
      if (vertices[v].exp == exp) return true;
    }
    return false;
  }

  /// Edge whose slope equals `slope`, if any.
  [[nodiscard]] std::optional<std::size_t> edge_with_slope(
      const Rational& slope) const {
    for (std::size_t r = 0; r < edges.size(); ++r) {
      if (edges[r].slope == slope) return r;
    }
    return std::nullopt;
  }
};

namespace detail {

inline void require_univariate(const TropPoly& f, const char* what) {
  if (f.n() != 1) {
    throw UnsupportedDimension(std::string(what) + " needs n = 1, got n = " +
                               std::to_string(f.n()));
  }
}

}  // namespace detail

inline NewtonPolygon newton_polygon(const TropPoly& f) {
  detail::require_univariate(f, "newton_polygon");
  NewtonPolygon poly;
  // Terms are sorted by exponent; monotone chain keeping strict convexity.
  for (const auto& [e, c] : f.terms()) {
    HullVertex p{e[0], c};
    while (poly.vertices.size() >= 2) {
      const auto& a = poly.vertices[poly.vertices.size() - 2];
      const auto& b = poly.vertices.back();
      // Drop b unless slope(a, b) < slope(b, p).
      const Rational lhs = (b.coeff - a.coeff) * Rational(p.exp - b.exp);
      const Rational rhs = (p.coeff - b.coeff) * Rational(b.exp - a.exp);
      if (lhs < rhs) break;
      poly.vertices.pop_back();
    }
    poly.vertices.push_back(std::move(p));
  }
  for (std::size_t v = 0; v + 1 < poly.vertices.size(); ++v) {
    const auto& a = poly.vertices[v];
    const auto& b = poly.vertices[v + 1];
    const std::int64_t len = b.exp - a.exp;
    poly.edges.push_back(
        {v, v + 1, (b.coeff - a.coeff) / Rational(len), len});
  }
  return poly;
}

namespace detail {

inline TropPoly convex_form_univariate(const TropPoly& f) {
  const NewtonPolygon hull = newton_polygon(f);
  TropPoly::Terms out;
  for (auto k = hull.min_exp(); k <= hull.max_exp(); ++k) {
    out.emplace(Exponent{k}, hull.height_at(k));
  }
  return TropPoly(1, std::move(out));
}

struct Lattice2 {
  std::int64_t x;
  std::int64_t y;
};

inline Integer cross2(const Lattice2& o, const Lattice2& a,
                      const Lattice2& b) {
  return Integer(a.x - o.x) * (b.y - o.y) - Integer(a.y - o.y) * (b.x - o.x);
}

// Lowest point of the Newton polyhedron above `p`, by exact minimization over
// every singleton, segment and triangle of plotted points containing `p`.
inline std::optional<Rational> envelope_height2(
    const std::vector<std::pair<Lattice2, Rational>>& pts, const Lattice2& p) {
  std::optional<Rational> best;
  auto offer = [&](Rational h) {
    if (!best || h < *best) best = std::move(h);
  };
  const std::size_t m = pts.size();
  for (std::size_t a = 0; a < m; ++a) {
    const auto& [pa, ca] = pts[a];
    if (pa.x == p.x && pa.y == p.y) offer(ca);
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto& [pb, cb] = pts[b];
      if (cross2(pa, pb, p) == 0) {
        const Integer dot = Integer(p.x - pa.x) * (pb.x - pa.x) +
                            Integer(p.y - pa.y) * (pb.y - pa.y);
        const Integer len2 = Integer(pb.x - pa.x) * (pb.x - pa.x) +
                             Integer(pb.y - pa.y) * (pb.y - pa.y);
        if (dot >= 0 && dot <= len2) {
          const Rational t = make_rational(dot, len2);
          offer(ca + t * (cb - ca));
        }
      }
      for (std::size_t c = b + 1; c < m; ++c) {
        const auto& [pc, cc] = pts[c];
        const Integer d = cross2(pa, pb, pc);
        if (d == 0) continue;
        const Rational lb = make_rational(cross2(pa, p, pc), d);
        const Rational lc = make_rational(cross2(pa, pb, p), d);
        const Rational la = Rational(1) - lb - lc;
        if (la < 0 || lb < 0 || lc < 0) continue;
        offer(la * ca + lb * cb + lc * cc);
      }
    }
  }
  return best;
}

inline TropPoly convex_form_bivariate(const TropPoly& f) {
  std::vector<std::pair<Lattice2, Rational>> pts;
  std::int64_t x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    pts.push_back({{e[0], e[1]}, c});
    if (first) {
      x0 = x1 = e[0];
      y0 = y1 = e[1];
      first = false;
    }
    x0 = std::min(x0, e[0]);
    x1 = std::max(x1, e[0]);
    y0 = std::min(y0, e[1]);
    y1 = std::max(y1, e[1]);
  }
  TropPoly::Terms out;
  for (auto x = x0; x <= x1; ++x) {
    for (auto y = y0; y <= y1; ++y) {
      if (auto h = envelope_height2(pts, {x, y})) {
        out.emplace(Exponent{x, y}, std::move(*h));
      }
    }
  }
  return TropPoly(2, std::move(out));
}

}  // namespace detail

/// Replaces the coefficients by the lower envelope of the Newton polyhedron at
/// every lattice point of the convex hull of the exponents. The zero set is
/// unchanged. Supported for n = 1 and n = 2.
inline TropPoly convex_form(const TropPoly& f) {
  if (f.n() == 1) return detail::convex_form_univariate(f);
  if (f.n() == 2) return detail::convex_form_bivariate(f);
  throw UnsupportedDimension("convex_form supports n <= 2, got n = " +
                             std::to_string(f.n()));
}

struct Root {
  Rational value;
  std::int64_t multiplicity;

  friend bool operator==(const Root&, const Root&) = default;
};

/// Sorted by value, strictly increasing.
using RootMultiset = std::vector<Root>;

/// Tropical roots of a univariate polynomial. Each edge of the Newton polygon
/// with direction (b, 1) contributes the root -b with multiplicity equal to
/// its lattice length. A single-term polynomial has no roots.
inline RootMultiset univariate_roots(const TropPoly& f) {
  const NewtonPolygon hull = newton_polygon(f);
  RootMultiset roots;
  // Slopes increase left to right, so roots come out decreasing.
  for (auto it = hull.edges.rbegin(); it != hull.edges.rend(); ++it) {
    roots.push_back({-it->slope, it->lattice_length});
  }
  return roots;
}

/// Smallest rational that is a tropical zero of every polynomial, if any.
inline std::optional<Rational> univariate_common_root(
    std::span<const TropPoly> system) {
  if (system.empty()) return std::nullopt;
  std::vector<Rational> common;
  for (const auto& r : univariate_roots(system.front())) {
    common.push_back(r.value);
  }
  for (const auto& f : system.subspan(1)) {
    const auto roots = univariate_roots(f);
    std::vector<Rational> kept;
    for (const auto& x : common) {
      for (const auto& r : roots) {
        if (r.value == x) {
          kept.push_back(x);
          break;
        }
      }
    }
    common = std::move(kept);
  }
  if (common.empty()) return std::nullopt;
  return common.front();
}

}  // namespace tropdual
