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

// Shared builders and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library's own algorithms.

#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropdual/tropdual.hpp"

namespace tropdual::testing {

inline Rational Q(const char* text) { return parse_rational(text); }
template <std::integral T>
Rational Q(T v) {
  return Rational(v);
}

/// Univariate polynomial from {exponent, "coefficient"} pairs.
inline TropPoly P1(std::initializer_list<std::pair<std::int64_t, const char*>> terms) {
  std::vector<Monomial> ms;
  for (const auto& [e, c] : terms) ms.push_back({Q(c), {e}});
  return TropPoly(1, ms);
}

/// Bivariate polynomial from {{i, j}, "coefficient"} entries.
inline TropPoly P2(
    std::initializer_list<std::pair<std::pair<std::int64_t, std::int64_t>, const char*>> terms) {
  std::vector<Monomial> ms;
  for (const auto& [e, c] : terms) ms.push_back({Q(c), {e.first, e.second}});
  return TropPoly(2, ms);
}

/// X (+) 0 and X (+) c style lines.
inline TropPoly line(const char* constant) { return P1({{1, "0"}, {0, constant}}); }

inline ExponentWitness constant_witness(const CayleyMatrix& c, const Rational& v) {
  ExponentWitness y;
  for (const auto& col : c.cols) y.emplace(col, v);
  return y;
}

/// y_l = slope * l on every column of a univariate Cayley matrix.
inline ExponentWitness linear_witness(const CayleyMatrix& c, const Rational& slope) {
  ExponentWitness y;
  for (const auto& col : c.cols) y.emplace(col, slope * Rational(col[0]));
  return y;
}

inline LineWitness linear_line_witness(std::int64_t lo, std::int64_t hi,
                                       const Rational& slope) {
  LineWitness y;
  for (auto l = lo; l <= hi; ++l) y.emplace(l, slope * Rational(l));
  return y;
}

// ---------------------------------------------------------------------------
// Univariate root oracle: every zero is a tie of two monomials, so candidate
// points come from pairwise coefficient ties (a_k - a_l) / (l - k).
// ---------------------------------------------------------------------------

inline std::set<Rational> root_oracle(const TropPoly& f) {
  std::set<Rational> out;
  const auto& t = f.terms();
  for (auto a = t.begin(); a != t.end(); ++a) {
    for (auto b = std::next(a); b != t.end(); ++b) {
      const Rational x = (a->second - b->second) / Rational(b->first[0] - a->first[0]);
      // Direct evaluation, not evaluate(): count the monomials at the minimum.
      std::optional<Rational> best;
      int hits = 0;
      for (const auto& [e, c] : t) {
        const Rational v = c + Rational(e[0]) * x;
        if (!best || v < *best) {
          best = v;
          hits = 1;
        } else if (v == *best) {
          ++hits;
        }
      }
      if (hits >= 2) out.insert(x);
    }
  }
  return out;
}

/// Lower envelope height at exponent k: minimum over plotted points at k and
/// over segments between plotted points straddling k.
inline std::optional<Rational> envelope_oracle(const TropPoly& f, std::int64_t k) {
  std::optional<Rational> best;
  for (const auto& [ea, ca] : f.terms()) {
    for (const auto& [eb, cb] : f.terms()) {
      const auto a = ea[0], b = eb[0];
      if (a > k || b < k) continue;
      Rational h = a == b ? ca : ca + (cb - ca) * Rational(k - a) / Rational(b - a);
      if (!best || h < *best) best = h;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Matrix oracle: exhaustive integer witnesses with y_0 = 0 and every other
// coordinate in [-K, K], K = cols * (2M + 1), M = max |entry|.
// ---------------------------------------------------------------------------

using IntTable = std::vector<std::vector<std::optional<std::int64_t>>>;

inline bool grid_row_ok(const std::vector<std::optional<std::int64_t>>& row,
                        const std::vector<std::int64_t>& y) {
  std::optional<std::int64_t> best;
  int hits = 0;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (!row[c]) continue;
    const auto v = *row[c] + y[c];
    if (!best || v < *best) {
      best = v;
      hits = 1;
    } else if (v == *best) {
      ++hits;
    }
  }
  return hits >= 2;
}

inline std::optional<std::vector<std::int64_t>> grid_oracle(const IntTable& t,
                                                            std::size_t cols) {
  std::int64_t m = 0;
  for (const auto& row : t) {
    for (const auto& v : row) {
      if (v) m = std::max<std::int64_t>(m, *v < 0 ? -*v : *v);
    }
  }
  const std::int64_t k = static_cast<std::int64_t>(cols) * (2 * m + 1);
  std::vector<std::int64_t> y(cols, 0);
  if (cols == 0) return std::nullopt;
  for (std::size_t c = 1; c < cols; ++c) y[c] = -k;
  for (;;) {
    bool ok = true;
    for (const auto& row : t) {
      if (!grid_row_ok(row, y)) {
        ok = false;
        break;
      }
    }
    if (ok) return y;
    std::size_t c = 1;
    while (c < cols && y[c] == k) y[c++] = -k;
    if (c >= cols) return std::nullopt;
    ++y[c];
  }
}

/// Random table with entries in {0..max_entry} and the given infinity
/// probability (percent).
inline IntTable random_table(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                             int max_entry, int inf_percent) {
  std::uniform_int_distribution<int> entry(0, max_entry);
  std::uniform_int_distribution<int> percent(0, 99);
  IntTable t(rows, std::vector<std::optional<std::int64_t>>(cols));
  for (auto& row : t) {
    for (auto& v : row) {
      if (percent(rng) >= inf_percent) v = entry(rng);
    }
  }
  return t;
}

inline TropMatrix to_matrix(const IntTable& t, std::size_t cols) {
  std::vector<std::vector<TropValue>> dense;
  for (const auto& row : t) {
    std::vector<TropValue> r;
    for (const auto& v : row) r.push_back(v ? TropValue(Rational(*v)) : TropValue());
    dense.push_back(std::move(r));
  }
  TropMatrix m = TropMatrix::dense(dense);
  if (t.empty()) m = TropMatrix(cols);
  return m;
}

// ---------------------------------------------------------------------------
// Bivariate probing oracle: all pairwise tie-line intersections, plus random
// points on every tie line. Lines are recomputed here by Cramer's rule.
// ---------------------------------------------------------------------------

inline bool zero_of_all(std::span<const TropPoly> system, const std::vector<Rational>& p) {
  for (const auto& f : system) {
    if (!is_tropical_zero(f, p)) return false;
  }
  return true;
}

inline std::optional<std::vector<Rational>> probe_oracle(std::span<const TropPoly> system,
                                                         std::mt19937_64& rng, int random_points) {
  struct L {
    Rational a, b, c;  // a x + b y = c
  };
  std::vector<L> lines;
  for (const auto& f : system) {
    for (auto p = f.terms().begin(); p != f.terms().end(); ++p) {
      for (auto q = std::next(p); q != f.terms().end(); ++q) {
        lines.push_back({Rational(p->first[0] - q->first[0]),
                         Rational(p->first[1] - q->first[1]), q->second - p->second});
      }
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& u = lines[i];
      const auto& v = lines[j];
      const Rational det = u.a * v.b - u.b * v.a;
      if (det == 0) continue;
      std::vector<Rational> p{(u.c * v.b - u.b * v.c) / det, (u.a * v.c - u.c * v.a) / det};
      if (zero_of_all(system, p)) return p;
    }
  }
  if (lines.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, lines.size() - 1);
  std::uniform_int_distribution<int> num(-400, 400);
  for (int k = 0; k < random_points; ++k) {
    const auto& u = lines[pick(rng)];
    const Rational t(num(rng), 7);
    std::vector<Rational> p;
    if (u.b != 0) {
      p = {t, (u.c - u.a * t) / u.b};
    } else {
      p = {u.c / u.a, t};
    }
    if (zero_of_all(system, p)) return p;
  }
  return std::nullopt;
}

}  // namespace tropdual::testing
