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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropdual/cayley.hpp"
#include "tropdual/newton.hpp"
#include "tropdual/solver.hpp"

namespace tropdual {

// Geometry of a univariate system against a Cayley witness y. Points live in
// the (height, exponent) plane; the witness is lifted to Y = {(-y_l, l)} and
// each shifted Newton polygon P_i = P(f) + (a_i, i) is the lowest translate
// lying above Y.

/// y_l for a univariate Cayley matrix, keyed by column exponent l.
using LineWitness = std::map<std::int64_t, Rational>;

inline LineWitness line_witness(const ExponentWitness& y) {
  LineWitness out;
  for (const auto& [e, v] : y) {
    if (e.size() != 1) throw UnsupportedDimension("line witness needs n = 1");
    out.emplace(e[0], v);
  }
  return out;
}

/// A point (u, l): height u, exponent l.
struct PlanePoint {
  Rational height;
  std::int64_t exp;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// a_i for every shift i in [lo, hi].
struct ShiftProfile {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<Rational> values;

  [[nodiscard]] const Rational& at(std::int64_t i) const {
    if (i < lo || i > hi) throw DimensionMismatch("shift outside profile");
    return values[static_cast<std::size_t>(i - lo)];
  }
};

namespace detail {

inline const Rational& witness_at(const LineWitness& y, std::int64_t l) {
  auto it = y.find(l);
  if (it == y.end()) {
    throw DimensionMismatch("witness misses column " + std::to_string(l));
  }
  return it->second;
}

inline Rational shift_height(const TropPoly& form, const LineWitness& y,
                             std::int64_t i) {
  std::optional<Rational> best;
  for (const auto& [e, c] : form.terms()) {
    Rational v = -witness_at(y, e[0] + i) - c;
    if (!best || v > *best) best = std::move(v);
  }
  return *best;
}

}  // namespace detail

/// a_i = max_k (-y_{k+i} - coeff_k), the smallest lift of P(f) + (0, i) that
/// lies above Y. Equals minus the row minimum of row (j, i) under y.
inline ShiftProfile shift_profile(const TropPoly& form, const LineWitness& y,
                                  std::int64_t lo, std::int64_t hi) {
  detail::require_univariate(form, "shift_profile");
  ShiftProfile p;
  p.lo = lo;
  p.hi = hi;
  for (auto i = lo; i <= hi; ++i) {
    p.values.push_back(detail::shift_height(form, y, i));
  }
  return p;
}

/// Points of P_i that touch Y, sorted by exponent.
inline std::vector<PlanePoint> extremal_points(const TropPoly& form,
                                               const LineWitness& y,
                                               std::int64_t i) {
  detail::require_univariate(form, "extremal_points");
  const Rational a = detail::shift_height(form, y, i);
  std::vector<PlanePoint> out;
  for (const auto& [e, c] : form.terms()) {
    const auto l = e[0] + i;
    const Rational& yl = detail::witness_at(y, l);
    if (c + a == -yl) out.push_back({-yl, l});
  }
  return out;
}

/// Vertex of E with the shifts it is extremal for (ascending).
struct DiagramVertex {
  PlanePoint point;
  std::vector<std::int64_t> shifts;

  [[nodiscard]] bool extremal_for(std::int64_t i) const {
    return std::binary_search(shifts.begin(), shifts.end(), i);
  }
};

/// Extremal points of every shifted polygon in a window and the chain E
/// through their union, ordered by exponent.
struct ExtremalDiagram {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  ShiftProfile profile;
  std::vector<std::vector<PlanePoint>> extremal;  // indexed by i - lo
  std::vector<DiagramVertex> chain;

  [[nodiscard]] const std::vector<PlanePoint>& at_shift(std::int64_t i) const {
    return extremal.at(static_cast<std::size_t>(i - lo));
  }

  [[nodiscard]] Rational edge_slope(std::size_t e) const {
    const auto& a = chain[e].point;
    const auto& b = chain[e + 1].point;
    return (b.height - a.height) / Rational(b.exp - a.exp);
  }

  /// Height of the chain at an exponent inside its span.
  [[nodiscard]] Rational height_at(const Rational& l) const {
    return height_on_edge(edge_at(l), l);
  }

  /// Index of the chain edge containing `l` (the left one at a vertex).
  [[nodiscard]] std::size_t edge_at(const Rational& l) const {
    for (std::size_t e = 0; e + 1 < chain.size(); ++e) {
      if (l <= Rational(chain[e + 1].point.exp)) return e;
    }
    return chain.size() - 2;
  }

  [[nodiscard]] Rational height_on_edge(std::size_t e,
                                        const Rational& l) const {
    const auto& a = chain[e].point;
    return a.height + edge_slope(e) * (l - Rational(a.exp));
  }
};

/// Builds E(f) over shifts [lo, hi]. Every shift needs at least two extremal
/// points, i.e. the rows must pass witness verification.
inline ExtremalDiagram build_extremal_diagram(const TropPoly& form,
                                              const LineWitness& y,
                                              std::int64_t lo,
                                              std::int64_t hi) {
  if (lo > hi) throw DimensionMismatch("empty shift window");
  ExtremalDiagram d;
  d.lo = lo;
  d.hi = hi;
  d.profile = shift_profile(form, y, lo, hi);
  std::map<std::int64_t, DiagramVertex> by_exp;
  for (auto i = lo; i <= hi; ++i) {
    auto pts = extremal_points(form, y, i);
    if (pts.size() < 2) {
      throw WitnessViolation("shift " + std::to_string(i) + " has " +
                             std::to_string(pts.size()) +
                             " extremal point(s)");
    }
    for (const auto& p : pts) {
      auto& v = by_exp[p.exp];
      v.point = p;
      v.shifts.push_back(i);
    }
    d.extremal.push_back(std::move(pts));
  }
  for (auto& [l, v] : by_exp) d.chain.push_back(std::move(v));
  return d;
}

enum class EdgeKind {
  principal,          // parallel to an edge of the Newton polygon
  intermediate_same,  // both ends extremal for one shift i
  intermediate_next,  // from shift i to shift i + 1
  unclassified,
};

inline const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::principal:
      return "principal";
    case EdgeKind::intermediate_same:
      return "intermediate1";
    case EdgeKind::intermediate_next:
      return "intermediate2";
    case EdgeKind::unclassified:
      return "unclassified";
  }
  return "unclassified";
}

struct EdgeClass {
  EdgeKind kind = EdgeKind::unclassified;
  /// Newton polygon edge index, for principal edges.
  std::size_t polygon_edge = 0;
  /// Shift i used for intermediate edges.
  std::int64_t shift = 0;
  /// Projection (l - i, l' - i) or (l - i, l' - i - 1).
  std::int64_t proj_lo = 0;
  std::int64_t proj_hi = 0;
};

/// Labels every edge of E: principal when parallel to an edge of P, else
/// intermediate of the first kind when both ends are extremal for a common
/// shift, else of the second kind when they are extremal for consecutive
/// shifts. The smallest qualifying shift is used.
inline std::vector<EdgeClass> classify_edges(const ExtremalDiagram& d,
                                             const NewtonPolygon& p) {
  std::vector<EdgeClass> out;
  for (std::size_t e = 0; e + 1 < d.chain.size(); ++e) {
    const auto& v = d.chain[e];
    const auto& w = d.chain[e + 1];
    EdgeClass c;
    if (auto r = p.edge_with_slope(d.edge_slope(e))) {
      c.kind = EdgeKind::principal;
      c.polygon_edge = *r;
      out.push_back(c);
      continue;
    }
    for (const auto i : v.shifts) {
      if (w.extremal_for(i)) {
        c.kind = EdgeKind::intermediate_same;
        c.shift = i;
        c.proj_lo = v.point.exp - i;
        c.proj_hi = w.point.exp - i;
        break;
      }
    }
    if (c.kind == EdgeKind::unclassified) {
      for (const auto i : v.shifts) {
        if (w.extremal_for(i + 1)) {
          c.kind = EdgeKind::intermediate_next;
          c.shift = i;
          c.proj_lo = v.point.exp - i;
          c.proj_hi = w.point.exp - i - 1;
          break;
        }
      }
    }
    out.push_back(c);
  }
  return out;
}

/// Maximal piece of the intersection of the regions above every E_j on which
/// the set of active (boundary) chains and their edges do not change.
struct EnvelopePiece {
  Rational from;
  Rational to;
  Rational slope;
  std::vector<std::size_t> active;  // diagram indices
  std::vector<std::size_t> edges;   // chain edge per active diagram
};

struct Envelope {
  Rational lo;
  Rational hi;
  std::vector<EnvelopePiece> pieces;
};

/// Upper envelope of the chains over their common exponent range.
inline Envelope intersect_diagrams(std::span<const ExtremalDiagram> ds) {
  if (ds.empty()) throw DimensionMismatch("no diagrams to intersect");
  Envelope env;
  env.lo = Rational(ds.front().chain.front().point.exp);
  env.hi = Rational(ds.front().chain.back().point.exp);
  for (const auto& d : ds) {
    env.lo = std::max(env.lo, Rational(d.chain.front().point.exp));
    env.hi = std::min(env.hi, Rational(d.chain.back().point.exp));
  }
  if (!(env.lo < env.hi)) throw DimensionMismatch("empty common window");

  std::vector<Rational> cuts{env.lo, env.hi};
  for (const auto& d : ds) {
    for (const auto& v : d.chain) {
      const Rational l(v.point.exp);
      if (env.lo < l && l < env.hi) cuts.push_back(l);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  // Pairwise crossings strictly inside each elementary interval.
  std::vector<Rational> crossings;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const Rational mid = (cuts[c] + cuts[c + 1]) / 2;
    for (std::size_t a = 0; a < ds.size(); ++a) {
      const auto ea = ds[a].edge_at(mid);
      const Rational sa = ds[a].edge_slope(ea);
      const Rational ha = ds[a].height_on_edge(ea, mid);
      for (std::size_t b = a + 1; b < ds.size(); ++b) {
        const auto eb = ds[b].edge_at(mid);
        const Rational sb = ds[b].edge_slope(eb);
        if (sa == sb) continue;
        const Rational hb = ds[b].height_on_edge(eb, mid);
        const Rational t = mid + (hb - ha) / (sa - sb);
        if (cuts[c] < t && t < cuts[c + 1]) crossings.push_back(t);
      }
    }
  }
  cuts.insert(cuts.end(), crossings.begin(), crossings.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const Rational mid = (cuts[c] + cuts[c + 1]) / 2;
    EnvelopePiece piece;
    piece.from = cuts[c];
    piece.to = cuts[c + 1];
    std::optional<Rational> top;
    for (std::size_t a = 0; a < ds.size(); ++a) {
      const auto ea = ds[a].edge_at(mid);
      Rational h = ds[a].height_on_edge(ea, mid);
      if (!top || h > *top) {
        top = h;
        piece.active.assign(1, a);
        piece.edges.assign(1, ea);
        piece.slope = ds[a].edge_slope(ea);
      } else if (h == *top) {
        piece.active.push_back(a);
        piece.edges.push_back(ea);
      }
    }
    if (!env.pieces.empty() && env.pieces.back().active == piece.active &&
        env.pieces.back().edges == piece.edges) {
      env.pieces.back().to = piece.to;
    } else {
      env.pieces.push_back(std::move(piece));
    }
  }
  return env;
}

/// Common root recovered from a Cayley witness.
struct RootCertificate {
  Rational root;
  /// Exponent range of the common principal piece of the envelope.
  Rational from;
  Rational to;
  /// Per polynomial: index of the Newton polygon edge parallel to the piece.
  std::vector<std::size_t> polygon_edges;
  /// Per polynomial: b_j with the supporting line z_1 + root * z_2 = b_j.
  std::vector<Rational> offsets;
};

/// Everything the geometric argument computes for one system and witness.
struct SystemGeometry {
  std::vector<TropPoly> forms;
  std::vector<NewtonPolygon> polygons;
  std::vector<ExtremalDiagram> diagrams;
  std::vector<std::vector<EdgeClass>> classes;
  Envelope envelope;
  std::int64_t degree_sum = 0;
};

inline SystemGeometry analyze_system(std::span<const TropPoly> system,
                                     const LineWitness& y, std::int64_t lo,
                                     std::int64_t hi) {
  if (system.empty()) throw DimensionMismatch("empty system");
  SystemGeometry g;
  for (const auto& f : system) {
    detail::require_univariate(f, "analyze_system");
    g.forms.push_back(convex_form(f));
    g.polygons.push_back(newton_polygon(g.forms.back()));
    g.diagrams.push_back(build_extremal_diagram(g.forms.back(), y, lo, hi));
    g.classes.push_back(classify_edges(g.diagrams.back(), g.polygons.back()));
  }
  g.degree_sum = total_degree(system);
  g.envelope = intersect_diagrams(g.diagrams);
  return g;
}

namespace detail {

inline bool common_principal(const SystemGeometry& g,
                             const EnvelopePiece& piece) {
  if (piece.active.size() != g.diagrams.size()) return false;
  for (std::size_t k = 0; k < piece.active.size(); ++k) {
    const auto& c = g.classes[piece.active[k]][piece.edges[k]];
    if (c.kind != EdgeKind::principal) return false;
  }
  return true;
}

}  // namespace detail

/// Finds a piece of the envelope lying on a principal edge of every E_j
/// inside the window of length 4 * sum trdeg centred on the common range,
/// and reads the root off its direction. Throws InvariantViolation if there
/// is none.
inline RootCertificate witness_to_root(std::span<const TropPoly> system,
                                       const LineWitness& y,
                                       std::int64_t shift_bound) {
  const auto g = analyze_system(system, y, -shift_bound, shift_bound);
  const Rational centre = (g.envelope.lo + g.envelope.hi) / 2;
  const Rational half(2 * g.degree_sum);
  const Rational lo = std::max(g.envelope.lo, centre - half);
  const Rational hi = std::min(g.envelope.hi, centre + half);
  for (const auto& piece : g.envelope.pieces) {
    if (!(piece.from < hi && lo < piece.to)) continue;
    if (!detail::common_principal(g, piece)) continue;
    RootCertificate cert;
    cert.root = -piece.slope;
    cert.from = std::max(piece.from, lo);
    cert.to = std::min(piece.to, hi);
    for (std::size_t j = 0; j < system.size(); ++j) {
      cert.polygon_edges.push_back(
          g.classes[j][piece.edges[j]].polygon_edge);
      if (!is_tropical_zero(system[j], cert.root)) {
        throw InvariantViolation("extracted root " + to_string(cert.root) +
                                 " is not a zero of polynomial " +
                                 std::to_string(j + 1));
      }
      cert.offsets.push_back(
          evaluate(system[j], std::span<const Rational>(&cert.root, 1))
              .value);
    }
    return cert;
  }
  throw InvariantViolation(
      "no common principal edge in the centred window of the envelope");
}

inline RootCertificate witness_to_root(std::span<const TropPoly> system,
                                       const ExponentWitness& y,
                                       std::int64_t shift_bound) {
  return witness_to_root(system, line_witness(y), shift_bound);
}

/// y_I = <x, I> on the given columns. Throws WitnessViolation unless x is a
/// common tropical zero.
inline ExponentWitness root_to_witness(std::span<const TropPoly> system,
                                       std::span<const Rational> x,
                                       std::span<const Exponent> columns) {
  for (std::size_t j = 0; j < system.size(); ++j) {
    if (!is_tropical_zero(system[j], x)) {
      throw WitnessViolation("point is not a zero of polynomial " +
                             std::to_string(j + 1));
    }
  }
  ExponentWitness y;
  for (const auto& col : columns) {
    if (col.size() != x.size()) {
      throw DimensionMismatch("column length does not match the point");
    }
    Rational v = 0;
    for (std::size_t k = 0; k < col.size(); ++k) v += Rational(col[k]) * x[k];
    y.emplace(col, std::move(v));
  }
  return y;
}

// ---------------------------------------------------------------------------
// Proof invariants
// ---------------------------------------------------------------------------

/// Outcome of one family of checks.
struct InvariantCheck {
  explicit InvariantCheck(std::string check_name = {})
      : name(std::move(check_name)) {}

  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violated = 0;
  std::vector<std::string> examples;  // first few violations

  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++violated;
    if (examples.size() < 5) examples.push_back(what);
  }
};

struct ProofReport {
  InvariantCheck shift_convexity{"shift_convexity"};
  InvariantCheck slope_bound{"slope_bound"};
  InvariantCheck chain_convexity{"chain_convexity"};
  InvariantCheck trichotomy{"trichotomy"};
  InvariantCheck gap_bound{"gap_bound"};
  InvariantCheck projection_adjacency{"projection_adjacency"};
  InvariantCheck length_accounting{"length_accounting"};
  Rational intermediate_length = 0;
  Rational principal_length = 0;
  Rational common_length = 0;
  std::int64_t degree_sum = 0;

  [[nodiscard]] std::vector<const InvariantCheck*> checks() const {
    return {&shift_convexity, &slope_bound,          &chain_convexity,
            &trichotomy,      &gap_bound,            &projection_adjacency,
            &length_accounting};
  }

  [[nodiscard]] bool ok() const {
    for (const auto* c : checks()) {
      if (c->violated) return false;
    }
    return true;
  }
};

namespace detail {

// Shifts the shared vertex may be attributed to by an intermediate edge.
inline std::vector<std::int64_t> end_shifts(const DiagramVertex& v,
                                            const DiagramVertex& w) {
  std::vector<std::int64_t> out;
  for (const auto i : w.shifts) {
    if (v.extremal_for(i) || v.extremal_for(i - 1)) out.push_back(i);
  }
  return out;
}

inline std::vector<std::int64_t> start_shifts(const DiagramVertex& v,
                                              const DiagramVertex& w) {
  std::vector<std::int64_t> out;
  for (const auto i : v.shifts) {
    if (w.extremal_for(i) || w.extremal_for(i + 1)) out.push_back(i);
  }
  return out;
}

}  // namespace detail

/// Checks the convex-geometric facts behind the degree bound on one
/// verified witness over shifts [lo, hi]:
///   shift_convexity       2 a_i <= a_{i-1} + a_{i+1}
///   slope_bound           a_{i+1} - a_i >= b_r, r the polygon edge holding
///                         the rightmost extremal point of P_i
///   chain_convexity       E has nondecreasing edge slopes
///   trichotomy            every interior edge of E is classified
///   gap_bound             interior principal edges span at most the lattice
///                         length of their polygon edge
///   projection_adjacency  consecutive interior intermediate edges have
///                         adjacent projections
///   length_accounting     on the interior of the envelope, intermediate
///                         pieces total <= 3 sum trdeg and non-common
///                         principal pieces total <= sum trdeg
/// Interior edges are those whose endpoints cannot be extremal for shifts
/// outside the window.
inline ProofReport proof_invariant_report(std::span<const TropPoly> system,
                                          const LineWitness& y,
                                          std::int64_t lo, std::int64_t hi) {
  const auto g = analyze_system(system, y, lo, hi);
  ProofReport rep;
  rep.degree_sum = g.degree_sum;
  Rational inner_lo = g.envelope.lo;
  Rational inner_hi = g.envelope.hi;

  for (std::size_t j = 0; j < system.size(); ++j) {
    const auto& d = g.diagrams[j];
    const auto& p = g.polygons[j];
    const auto& cls = g.classes[j];
    const std::string tag = "poly " + std::to_string(j + 1);
    for (auto i = lo + 1; i < hi; ++i) {
      rep.shift_convexity.record(
          2 * d.profile.at(i) <= d.profile.at(i - 1) + d.profile.at(i + 1),
          tag + " shift " + std::to_string(i));
    }
    for (auto i = lo; i < hi; ++i) {
      const auto k = d.at_shift(i).back().exp - i;
      const auto r = p.edge_containing(k);
      rep.slope_bound.record(
          r && d.profile.at(i + 1) - d.profile.at(i) >= p.edges[*r].slope,
          tag + " shift " + std::to_string(i));
    }
    for (std::size_t e = 1; e + 1 < d.chain.size(); ++e) {
      rep.chain_convexity.record(d.edge_slope(e - 1) <= d.edge_slope(e),
                                 tag + " vertex l=" +
                                     std::to_string(d.chain[e].point.exp));
    }

    const std::int64_t first = lo + p.max_exp();
    const std::int64_t last = hi + p.min_exp();
    inner_lo = std::max(inner_lo, Rational(first));
    inner_hi = std::min(inner_hi, Rational(last));
    auto interior = [&](std::size_t e) {
      return d.chain[e].point.exp >= first && d.chain[e + 1].point.exp <= last;
    };
    for (std::size_t e = 0; e < cls.size(); ++e) {
      if (!interior(e)) continue;
      const std::string where =
          tag + " edge l=" + std::to_string(d.chain[e].point.exp) + ".." +
          std::to_string(d.chain[e + 1].point.exp);
      rep.trichotomy.record(cls[e].kind != EdgeKind::unclassified, where);
      if (cls[e].kind == EdgeKind::principal) {
        const auto gap = d.chain[e + 1].point.exp - d.chain[e].point.exp;
        rep.gap_bound.record(
            gap <= p.edges[cls[e].polygon_edge].lattice_length, where);
      }
      const bool both_intermediate =
          e + 1 < cls.size() && interior(e + 1) &&
          cls[e].kind != EdgeKind::principal &&
          cls[e].kind != EdgeKind::unclassified &&
          cls[e + 1].kind != EdgeKind::principal &&
          cls[e + 1].kind != EdgeKind::unclassified;
      if (both_intermediate) {
        const auto in = detail::end_shifts(d.chain[e], d.chain[e + 1]);
        const auto out = detail::start_shifts(d.chain[e + 1], d.chain[e + 2]);
        bool shared = false;
        for (const auto i : in) {
          shared = shared || std::find(out.begin(), out.end(), i) != out.end();
        }
        rep.projection_adjacency.record(shared, where);
      }
    }
  }

  for (const auto& piece : g.envelope.pieces) {
    const Rational from = std::max(piece.from, inner_lo);
    const Rational to = std::min(piece.to, inner_hi);
    if (!(from < to)) continue;
    const Rational len = to - from;
    if (detail::common_principal(g, piece)) {
      rep.common_length += len;
      continue;
    }
    bool intermediate = false;
    for (std::size_t k = 0; k < piece.active.size(); ++k) {
      const auto kind = g.classes[piece.active[k]][piece.edges[k]].kind;
      intermediate = intermediate || kind != EdgeKind::principal;
    }
    (intermediate ? rep.intermediate_length : rep.principal_length) += len;
  }
  rep.length_accounting.record(
      rep.intermediate_length <= Rational(3 * g.degree_sum),
      "intermediate length " + to_string(rep.intermediate_length));
  rep.length_accounting.record(
      rep.principal_length <= Rational(g.degree_sum),
      "principal length " + to_string(rep.principal_length));
  return rep;
}

// ---------------------------------------------------------------------------
// Degree bound verification
// ---------------------------------------------------------------------------

/// Smallest N with C_N infeasible, scanning N = 0 .. 4 sum trdeg. Absent for
/// solvable systems, and also when no N in range is infeasible.
inline std::optional<std::int64_t> minimal_infeasible_n(
    std::span<const TropPoly> system, Engine engine = Engine::automatic) {
  if (univariate_common_root(system)) return std::nullopt;
  const auto bound = 4 * total_degree(system);
  for (std::int64_t n = 0; n <= bound; ++n) {
    const auto c = build_cayley(system, n);
    if (decide(c.matrix, engine).status == Status::infeasible) return n;
  }
  return std::nullopt;
}

struct TheoremReport {
  std::int64_t degree_sum = 0;
  std::int64_t shift_bound = 0;
  std::optional<Rational> direct_root;
  Status cayley_status = Status::unknown;
  bool agree = false;
  std::optional<ExponentWitness> witness;
  std::optional<RootCertificate> extracted;
  /// root_to_witness passed verification on C_N (solvable systems).
  std::optional<bool> root_witness_verified;
  std::optional<std::int64_t> minimal_infeasible;
  SearchStats stats;
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Compares direct solvability with feasibility of C_N at N = 4 sum trdeg
/// and runs the witness/root conversions in both directions.
inline TheoremReport theorem1_verify(std::span<const TropPoly> system,
                                     Engine engine = Engine::automatic) {
  if (system.empty()) throw DimensionMismatch("empty system");
  for (const auto& f : system) detail::require_univariate(f, "theorem");
  TheoremReport rep;
  rep.degree_sum = total_degree(system);
  rep.shift_bound = 4 * rep.degree_sum;
  rep.direct_root = univariate_common_root(system);
  const auto c = build_cayley(system, rep.shift_bound);
  const auto res = decide(c.matrix, engine);
  rep.stats = res.stats;
  rep.cayley_status = res.status;
  rep.agree = rep.direct_root.has_value() == (res.status == Status::feasible);
  if (!rep.agree) rep.failures.push_back("solvability and feasibility differ");

  if (res.status == Status::feasible) {
    rep.witness = c.label(res.witness);
    try {
      rep.extracted = witness_to_root(system, *rep.witness, rep.shift_bound);
    } catch (const Error& e) {
      rep.failures.push_back(std::string("witness_to_root: ") + e.what());
    }
  }
  if (rep.direct_root) {
    const auto y = root_to_witness(
        system, std::span<const Rational>(&*rep.direct_root, 1), c.cols);
    rep.root_witness_verified =
        verify_witness(c.matrix, c.index(y)).all_ok();
    if (!*rep.root_witness_verified) {
      rep.failures.push_back("root_to_witness failed verification");
    }
  } else {
    rep.minimal_infeasible = minimal_infeasible_n(system, engine);
    if (!rep.minimal_infeasible) {
      rep.failures.push_back("no infeasible C_N up to the bound");
    }
  }
  return rep;
}

}  // namespace tropdual
