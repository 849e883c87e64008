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
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropdual/bivariate.hpp"
#include "tropdual/cayley.hpp"
#include "tropdual/dual_nss.hpp"
#include "tropdual/solver.hpp"

namespace tropdual {

/// Insertion-ordered JSON so that reports keep a stable, readable layout.
using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace detail {

inline const Json& field(const Json& obj, const char* key,
                         const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

inline std::int64_t as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected integer");
  return v.get<std::int64_t>();
}

inline Rational as_rational(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (!v.is_string()) {
    throw ParseError(where + ": expected rational string \"p/q\"");
  }
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline Exponent as_exponent(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected integer array");
  Exponent e;
  for (std::size_t k = 0; k < v.size(); ++k) {
    e.push_back(as_int(v[k], where + "[" + std::to_string(k) + "]"));
  }
  return e;
}

inline Json exponent_json(const Exponent& e) {
  Json out = Json::array();
  for (const auto v : e) out.push_back(v);
  return out;
}

inline std::string exponent_key(const Exponent& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(e[k]);
  }
  return out;
}

inline Exponent parse_exponent_key(const std::string& key) {
  Exponent e;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    Integer v;
    if (!parse_integer_digits(part, v)) {
      throw ParseError("invalid column key '" + key + "'");
    }
    e.push_back(v.convert_to<std::int64_t>());
  }
  if (e.empty()) throw ParseError("empty column key");
  return e;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Systems
// ---------------------------------------------------------------------------

/// { "n": int, "polys": [ [ {"exp": [ints], "coef": "p/q"}, ... ], ... ] }
/// Exponents must be nonnegative.
inline std::vector<TropPoly> parse_system(const Json& doc) {
  const auto n = detail::as_int(detail::field(doc, "n", "system"), "n");
  if (n < 1) throw ParseError("n: must be positive");
  const auto& polys = detail::field(doc, "polys", "system");
  if (!polys.is_array() || polys.empty()) {
    throw ParseError("polys: expected a nonempty array");
  }
  std::vector<TropPoly> out;
  for (std::size_t j = 0; j < polys.size(); ++j) {
    const std::string pw = "polys[" + std::to_string(j) + "]";
    if (!polys[j].is_array() || polys[j].empty()) {
      throw ParseError(pw + ": expected a nonempty array of terms");
    }
    std::vector<Monomial> terms;
    for (std::size_t t = 0; t < polys[j].size(); ++t) {
      const std::string tw = pw + "[" + std::to_string(t) + "]";
      const auto& term = polys[j][t];
      Exponent e = detail::as_exponent(detail::field(term, "exp", tw),
                                       tw + ".exp");
      if (e.size() != static_cast<std::size_t>(n)) {
        throw ParseError(tw + ".exp: expected " + std::to_string(n) +
                         " entries");
      }
      for (const auto v : e) {
        if (v < 0) throw ParseError(tw + ".exp: negative exponent");
      }
      terms.push_back(
          {detail::as_rational(detail::field(term, "coef", tw), tw + ".coef"),
           std::move(e)});
    }
    out.emplace_back(static_cast<std::size_t>(n), terms);
  }
  return out;
}

inline std::vector<TropPoly> read_system_file(const std::string& path) {
  const auto doc = read_json_file(path);
  try {
    return parse_system(doc);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Json system_to_json(std::span<const TropPoly> system) {
  Json doc;
  doc["n"] = system.empty() ? 1 : system.front().n();
  Json polys = Json::array();
  for (const auto& f : system) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
      terms.push_back({{"exp", detail::exponent_json(e)},
                       {"coef", to_string(c)}});
    }
    polys.push_back(std::move(terms));
  }
  doc["polys"] = std::move(polys);
  return doc;
}

// ---------------------------------------------------------------------------
// Matrices and witnesses
// ---------------------------------------------------------------------------

/// Row and column labels are 1-based polynomial index plus shift, and column
/// exponents; entries are sparse triples with infinity omitted.
inline Json matrix_to_json(const CayleyMatrix& c) {
  Json doc;
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    rows.push_back(Json::array({r.poly + 1, detail::exponent_json(r.shift)}));
  }
  Json cols = Json::array();
  for (const auto& e : c.cols) cols.push_back(detail::exponent_json(e));
  Json entries = Json::array();
  for (std::size_t r = 0; r < c.matrix.rows(); ++r) {
    for (const auto& e : c.matrix.row(r)) {
      entries.push_back(Json::array({r, e.col, to_string(e.value)}));
    }
  }
  doc["rows"] = std::move(rows);
  doc["cols"] = std::move(cols);
  doc["entries"] = std::move(entries);
  return doc;
}

/// A matrix read back from JSON, with its labels.
struct LabelledMatrix {
  std::vector<RowId> rows;
  std::vector<Exponent> cols;
  TropMatrix matrix;
};

inline LabelledMatrix parse_matrix(const Json& doc) {
  LabelledMatrix m;
  const auto& rows = detail::field(doc, "rows", "matrix");
  const auto& cols = detail::field(doc, "cols", "matrix");
  const auto& entries = detail::field(doc, "entries", "matrix");
  if (!rows.is_array() || !cols.is_array() || !entries.is_array()) {
    throw ParseError("matrix: rows, cols and entries must be arrays");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string w = "rows[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != 2) {
      throw ParseError(w + ": expected [j, [I...]]");
    }
    const auto j = detail::as_int(rows[r][0], w + "[0]");
    if (j < 1) throw ParseError(w + "[0]: polynomial index starts at 1");
    m.rows.push_back({static_cast<std::size_t>(j - 1),
                      detail::as_exponent(rows[r][1], w + "[1]")});
  }
  for (std::size_t c = 0; c < cols.size(); ++c) {
    m.cols.push_back(
        detail::as_exponent(cols[c], "cols[" + std::to_string(c) + "]"));
  }
  std::vector<TropMatrix::Row> table(m.rows.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string w = "entries[" + std::to_string(k) + "]";
    const auto& t = entries[k];
    if (!t.is_array() || t.size() != 3) {
      throw ParseError(w + ": expected [row, col, \"p/q\"]");
    }
    const auto r = detail::as_int(t[0], w + "[0]");
    const auto c = detail::as_int(t[1], w + "[1]");
    if (r < 0 || static_cast<std::size_t>(r) >= m.rows.size() || c < 0 ||
        static_cast<std::size_t>(c) >= m.cols.size()) {
      throw ParseError(w + ": index out of range");
    }
    if (t[2].is_string() && t[2].get<std::string>() == "inf") continue;
    table[static_cast<std::size_t>(r)].push_back(
        {static_cast<std::size_t>(c), detail::as_rational(t[2], w + "[2]")});
  }
  m.matrix = TropMatrix(m.cols.size());
  for (std::size_t r = 0; r < table.size(); ++r) {
    try {
      m.matrix.add_row(std::move(table[r]));
    } catch (const DimensionMismatch& e) {
      throw ParseError("rows[" + std::to_string(r) + "]: " + e.what());
    }
  }
  return m;
}

/// { "<i1,...,in>": "p/q", ... } keyed by column exponent.
inline Json witness_to_json(const ExponentWitness& y) {
  Json out = Json::object();
  for (const auto& [e, v] : y) out[detail::exponent_key(e)] = to_string(v);
  return out;
}

/// Accepts a bare column map or any object with a "witness" member (such as
/// a feasibility report).
inline ExponentWitness parse_witness(const Json& doc) {
  const Json& map =
      doc.is_object() && doc.contains("witness") ? doc.at("witness") : doc;
  if (!map.is_object()) throw ParseError("witness: expected an object");
  ExponentWitness y;
  for (const auto& [key, value] : map.items()) {
    y.emplace(detail::parse_exponent_key(key),
              detail::as_rational(value, "witness[" + key + "]"));
  }
  return y;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json refutation_to_json(const RefutationNode& node) {
  Json branches = Json::array();
  for (const auto& b : node.branches) {
    Json jb;
    jb["pair"] = Json::array({b.pair.first, b.pair.second});
    jb["closed_by"] = b.child ? "subtree" : "negative_cycle";
    if (b.child) jb["subtree"] = refutation_to_json(*b.child);
    branches.push_back(std::move(jb));
  }
  return {{"row", node.row}, {"branches", std::move(branches)}};
}

inline Json stats_to_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"max_depth", s.max_depth},
          {"lift_steps", s.lift_steps}};
}

/// { "status": ..., "witness": {...}, "stats": {...}, "refutation": ... }
inline Json result_to_json(const FeasibilityResult& res,
                           std::span<const Exponent> cols,
                           bool with_refutation) {
  Json doc;
  doc["status"] = to_string(res.status);
  if (res.status == Status::feasible) {
    ExponentWitness y;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      y.emplace(cols[c], res.witness[c]);
    }
    doc["witness"] = witness_to_json(y);
  }
  doc["stats"] = stats_to_json(res.stats);
  if (with_refutation && res.status == Status::infeasible) {
    doc["refutation"] =
        res.refutation ? refutation_to_json(*res.refutation) : Json(nullptr);
  }
  return doc;
}

inline Json roots_to_json(const RootMultiset& roots) {
  Json out = Json::object();
  for (const auto& r : roots) out[to_string(r.value)] = r.multiplicity;
  return out;
}

inline Json point_to_json(std::span<const Rational> x) {
  Json out = Json::array();
  for (const auto& v : x) out.push_back(to_string(v));
  return out;
}

inline Json certificate_to_json(const RootCertificate& c) {
  Json edges = Json::array();
  for (const auto r : c.polygon_edges) edges.push_back(r + 1);
  Json offsets = Json::array();
  for (const auto& b : c.offsets) offsets.push_back(to_string(b));
  return {{"root", to_string(c.root)},
          {"piece", Json::array({to_string(c.from), to_string(c.to)})},
          {"polygon_edges", std::move(edges)},
          {"offsets", std::move(offsets)}};
}

inline Json theorem_to_json(const TheoremReport& r) {
  Json doc;
  doc["degree_sum"] = r.degree_sum;
  doc["n_shift"] = r.shift_bound;
  doc["solvable"] = r.direct_root.has_value();
  doc["root"] = r.direct_root ? Json(to_string(*r.direct_root)) : Json(nullptr);
  doc["cayley"] = to_string(r.cayley_status);
  doc["agree"] = r.agree;
  doc["extracted"] =
      r.extracted ? certificate_to_json(*r.extracted) : Json(nullptr);
  doc["root_witness_verified"] =
      r.root_witness_verified ? Json(*r.root_witness_verified) : Json(nullptr);
  doc["minimal_infeasible_n"] =
      r.minimal_infeasible ? Json(*r.minimal_infeasible) : Json(nullptr);
  doc["stats"] = stats_to_json(r.stats);
  doc["failures"] = r.failures;
  return doc;
}

inline Json proof_report_to_json(const ProofReport& r) {
  Json checks = Json::object();
  for (const auto* c : r.checks()) {
    checks[c->name] = {{"checked", c->checked},
                       {"violated", c->violated},
                       {"examples", c->examples}};
  }
  return {{"ok", r.ok()},
          {"degree_sum", r.degree_sum},
          {"intermediate_length", to_string(r.intermediate_length)},
          {"principal_length", to_string(r.principal_length)},
          {"common_length", to_string(r.common_length)},
          {"checks", std::move(checks)}};
}

inline Json probe_to_json(const ProbeReport& r) {
  Json table = Json::array();
  for (const auto& row : r.table) {
    table.push_back(
        {{"n_shift", row.shift_bound},
         {"status", to_string(row.status)},
         {"rows", row.rows},
         {"cols", row.cols},
         {"root_witness_ok",
          row.root_witness_ok ? Json(*row.root_witness_ok) : Json(nullptr)}});
  }
  return {{"solvable", r.zero.has_value()},
          {"zero", r.zero ? point_to_json(*r.zero) : Json(nullptr)},
          {"easy_direction_holds", r.easy_direction_holds},
          {"first_infeasible_n",
           r.first_infeasible ? Json(*r.first_infeasible) : Json(nullptr)},
          {"table", std::move(table)}};
}

/// Newton polygons of a univariate system and, when present, the extremal
/// diagrams and their envelope.
inline Json geometry_to_json(std::span<const NewtonPolygon> polygons,
                             const SystemGeometry* g) {
  auto plane = [](const Rational& exp, const Rational& height) {
    return Json::array({to_string(exp), to_string(height)});
  };
  Json polys = Json::array();
  for (const auto& p : polygons) {
    Json vertices = Json::array();
    for (const auto& v : p.vertices) {
      vertices.push_back(plane(Rational(v.exp), v.coeff));
    }
    Json edges = Json::array();
    for (const auto& e : p.edges) {
      edges.push_back({{"slope", to_string(e.slope)},
                       {"lattice_length", e.lattice_length}});
    }
    polys.push_back({{"vertices", std::move(vertices)},
                     {"edges", std::move(edges)}});
  }
  Json doc = {{"polygons", std::move(polys)}};
  if (!g) return doc;
  Json diagrams = Json::array();
  for (std::size_t j = 0; j < g->diagrams.size(); ++j) {
    const auto& d = g->diagrams[j];
    Json profile = Json::array();
    for (const auto& a : d.profile.values) profile.push_back(to_string(a));
    Json chain = Json::array();
    for (const auto& v : d.chain) {
      chain.push_back({{"point", plane(Rational(v.point.exp), v.point.height)},
                       {"shifts", v.shifts}});
    }
    Json kinds = Json::array();
    for (const auto& c : g->classes[j]) kinds.push_back(to_string(c.kind));
    diagrams.push_back({{"window", Json::array({d.lo, d.hi})},
                        {"shift_profile", std::move(profile)},
                        {"chain", std::move(chain)},
                        {"edge_kinds", std::move(kinds)}});
  }
  Json pieces = Json::array();
  for (const auto& p : g->envelope.pieces) {
    Json active = Json::array();
    for (const auto j : p.active) active.push_back(j + 1);
    pieces.push_back({{"from", to_string(p.from)},
                      {"to", to_string(p.to)},
                      {"slope", to_string(p.slope)},
                      {"active", std::move(active)}});
  }
  doc["diagrams"] = std::move(diagrams);
  doc["envelope"] = {{"lo", to_string(g->envelope.lo)},
                     {"hi", to_string(g->envelope.hi)},
                     {"pieces", std::move(pieces)}};
  return doc;
}

}  // namespace tropdual
