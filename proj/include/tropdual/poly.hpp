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
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropdual/rational.hpp"

namespace tropdual {

/// Integer exponent vector (i_1, ..., i_n). Ordered lexicographically.
using Exponent = std::vector<std::int64_t>;

inline std::string to_string(const Exponent& e) {
  std::string out = "(";
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(e[k]);
  }
  return out + ")";
}

/// a (x) X_1^i_1 (x) ... (x) X_n^i_n
struct Monomial {
  Rational coeff;
  Exponent exps;
};

/// Tropical polynomial: a min over monomials.
///
/// Terms are keyed by exponent; constructing from monomials with repeated
/// exponents keeps the smallest coefficient, which is what the tropical sum
/// of like terms gives. Exponents may be negative (shifted polynomials).
class TropPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  TropPoly(std::size_t n, const std::vector<Monomial>& monomials) : n_(n) {
    for (const auto& m : monomials) add_term(m.exps, m.coeff);
    check();
  }

  TropPoly(std::size_t n, Terms terms) : n_(n), terms_(std::move(terms)) {
    for (const auto& [e, c] : terms_) check_length(e);
    check();
  }

  /// Univariate convenience: {exponent, coefficient} pairs.
  static TropPoly univariate(
      std::initializer_list<std::pair<std::int64_t, Rational>> terms) {
    std::vector<Monomial> ms;
    for (const auto& [e, c] : terms) ms.push_back({c, {e}});
    return TropPoly(1, ms);
  }

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  friend bool operator==(const TropPoly&, const TropPoly&) = default;

 private:
  void check_length(const Exponent& e) const {
    if (e.size() != n_) {
      throw DimensionMismatch("exponent " + tropdual::to_string(e) +
                              " has length " + std::to_string(e.size()) +
                              ", expected " + std::to_string(n_));
    }
  }

  void add_term(const Exponent& e, const Rational& c) {
    check_length(e);
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted && c < it->second) it->second = c;
  }

  void check() const {
    if (n_ == 0) throw DimensionMismatch("polynomial needs n >= 1");
    if (terms_.empty()) throw DimensionMismatch("polynomial has no terms");
  }

  std::size_t n_;
  Terms terms_;
};

struct EvalResult {
  Rational value;
  std::vector<Exponent> argmins;  // lexicographic order
};

namespace detail {

inline Rational monomial_value(const Exponent& e, const Rational& coeff,
                               std::span<const Rational> x) {
  Rational v = coeff;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] != 0) v += Rational(e[k]) * x[k];
  }
  return v;
}

}  // namespace detail

/// Minimum over terms of coeff + <exps, x>, with every term attaining it.
inline EvalResult evaluate(const TropPoly& f, std::span<const Rational> x) {
  if (x.size() != f.n()) {
    throw DimensionMismatch("point has " + std::to_string(x.size()) +
                            " coordinates, polynomial has n = " +
                            std::to_string(f.n()));
  }
  EvalResult out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational v = detail::monomial_value(e, c, x);
    if (first || v < out.value) {
      out.value = std::move(v);
      out.argmins.assign(1, e);
      first = false;
    } else if (v == out.value) {
      out.argmins.push_back(e);
    }
  }
  return out;
}

/// True when the minimum is attained by at least two distinct monomials.
inline bool is_tropical_zero(const TropPoly& f, std::span<const Rational> x) {
  return evaluate(f, x).argmins.size() >= 2;
}

inline bool is_tropical_zero(const TropPoly& f, const Rational& x) {
  return is_tropical_zero(f, std::span<const Rational>(&x, 1));
}

/// X^I (x) f: translates every exponent by `shift`.
inline TropPoly monomial_shift(const TropPoly& f,
                               std::span<const std::int64_t> shift) {
  if (shift.size() != f.n()) {
    throw DimensionMismatch("shift length " + std::to_string(shift.size()) +
                            " != n = " + std::to_string(f.n()));
  }
  TropPoly::Terms out;
  for (const auto& [e, c] : f.terms()) {
    Exponent moved = e;
    for (std::size_t k = 0; k < moved.size(); ++k) moved[k] += shift[k];
    out.emplace(std::move(moved), c);
  }
  return TropPoly(f.n(), std::move(out));
}

/// Largest total degree i_1 + ... + i_n over the terms.
inline std::int64_t trop_degree(const TropPoly& f) {
  std::int64_t best = 0;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const auto d = std::accumulate(e.begin(), e.end(), std::int64_t{0});
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

/// Sum of tropical degrees over a system.
inline std::int64_t total_degree(std::span<const TropPoly> system) {
  std::int64_t sum = 0;
  for (const auto& f : system) sum += trop_degree(f);
  return sum;
}

/// Human readable form, e.g. "2 (+) 0X^1 (+) 1X^2" for univariate input.
inline std::string to_string(const TropPoly& f) {
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (!out.empty()) out += " (+) ";
    out += to_string(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      out += f.n() == 1 ? "X" : "X" + std::to_string(k + 1);
      out += "^" + std::to_string(e[k]);
    }
  }
  return out;
}

}  // namespace tropdual
