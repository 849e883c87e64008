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
#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropdual/matrix.hpp"
#include "tropdual/newton.hpp"

namespace tropdual {

/// Row label (j, I): the shifted polynomial X^I (x) f_j. `poly` is 0-based.
struct RowId {
  std::size_t poly;
  Exponent shift;

  friend auto operator<=>(const RowId&, const RowId&) = default;
  friend bool operator==(const RowId&, const RowId&) = default;
};

/// Cayley witness: one value per column exponent.
using ExponentWitness = std::map<Exponent, Rational>;

/// Truncated tropical Cayley matrix of a polynomial system.
///
/// Rows are (j, I) with |I|_1 <= N ordered by j then I; columns are the
/// exponents touched by those rows, sorted. entry((j, I), J) is the
/// coefficient of J - I in the convex form of f_j.
struct CayleyMatrix {
  std::size_t n = 0;
  std::int64_t shift_bound = 0;
  std::vector<TropPoly> forms;
  std::vector<RowId> rows;
  std::vector<Exponent> cols;
  TropMatrix matrix;

  [[nodiscard]] std::optional<std::size_t> col_index(const Exponent& e) const {
    auto it = std::lower_bound(cols.begin(), cols.end(), e);
    if (it == cols.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - cols.begin());
  }

  [[nodiscard]] std::optional<std::size_t> row_index(const RowId& id) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), id);
    if (it == rows.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - rows.begin());
  }

  /// Column-indexed vector -> exponent-keyed witness.
  [[nodiscard]] ExponentWitness label(std::span<const Rational> y) const {
    if (y.size() != cols.size()) {
      throw DimensionMismatch("witness length does not match columns");
    }
    ExponentWitness out;
    for (std::size_t c = 0; c < cols.size(); ++c) out.emplace(cols[c], y[c]);
    return out;
  }

  /// Exponent-keyed witness -> column-indexed vector. Every column must be
  /// present.
  [[nodiscard]] std::vector<Rational> index(const ExponentWitness& y) const {
    std::vector<Rational> out;
    out.reserve(cols.size());
    for (const auto& c : cols) {
      auto it = y.find(c);
      if (it == y.end()) {
        throw DimensionMismatch("witness misses column " + to_string(c));
      }
      out.push_back(it->second);
    }
    return out;
  }
};

/// All integer vectors of length n with |I|_1 <= bound, lexicographic.
inline std::vector<Exponent> l1_ball(std::size_t n, std::int64_t bound) {
  std::vector<Exponent> out;
  Exponent cur(n, 0);
  auto rec = [&](auto&& self, std::size_t k, std::int64_t left) -> void {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = -left; v <= left; ++v) {
      cur[k] = v;
      self(self, k + 1, left - std::abs(v));
    }
  };
  rec(rec, 0, bound);
  return out;
}

/// Builds C_N for the system. Every polynomial is first put in convex form.
inline CayleyMatrix build_cayley(std::span<const TropPoly> system,
                                 std::int64_t shift_bound) {
  if (system.empty()) throw DimensionMismatch("empty system");
  if (shift_bound < 0) throw DimensionMismatch("negative shift bound");
  CayleyMatrix c;
  c.n = system.front().n();
  c.shift_bound = shift_bound;
  for (const auto& f : system) {
    if (f.n() != c.n) {
      throw DimensionMismatch("polynomials do not share n");
    }
    c.forms.push_back(convex_form(f));
  }
  const auto shifts = l1_ball(c.n, shift_bound);
  std::vector<Exponent> cols;
  for (std::size_t j = 0; j < c.forms.size(); ++j) {
    for (const auto& shift : shifts) {
      c.rows.push_back({j, shift});
      for (const auto& [e, coeff] : c.forms[j].terms()) {
        Exponent col = e;
        for (std::size_t k = 0; k < c.n; ++k) col[k] += shift[k];
        cols.push_back(std::move(col));
      }
    }
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  c.cols = std::move(cols);
  c.matrix = TropMatrix(c.cols.size());
  for (const auto& id : c.rows) {
    TropMatrix::Row row;
    for (const auto& [e, coeff] : c.forms[id.poly].terms()) {
      Exponent col = e;
      for (std::size_t k = 0; k < c.n; ++k) col[k] += id.shift[k];
      row.push_back({*c.col_index(col), coeff});
    }
    c.matrix.add_row(std::move(row));
  }
  return c;
}

/// Reconstructs X^I (x) convex_form(f_j) from the stored row.
inline TropPoly row_polynomial(const CayleyMatrix& c, const RowId& id) {
  const auto r = c.row_index(id);
  if (!r) {
    throw DimensionMismatch("row (" + std::to_string(id.poly + 1) + ", " +
                            to_string(id.shift) + ") not in matrix");
  }
  TropPoly::Terms terms;
  for (const auto& e : c.matrix.row(*r)) terms.emplace(c.cols[e.col], e.value);
  return TropPoly(c.n, std::move(terms));
}

}  // namespace tropdual
