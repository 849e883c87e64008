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

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropdual/error.hpp"

namespace tropdual {

/// Arbitrary precision integer. Expression templates are off so that `auto`
/// and std::min/std::max behave as with builtin types.
using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& r) {
  return Integer(boost::multiprecision::numerator(r));
}

inline Integer denominator_of(const Rational& r) {
  return Integer(boost::multiprecision::denominator(r));
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

namespace detail {

inline bool parse_integer_digits(std::string_view text, Integer& out) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return false;
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    value = value * 10 + (c - '0');
  }
  out = negative ? Integer(-value) : value;
  return true;
}

}  // namespace detail

/// Parses "p/q" or "p" with an optional sign on p. The result is normalized.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!detail::parse_integer_digits(text, num)) {
      throw ParseError("invalid rational '" + std::string(text) + "'");
    }
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!detail::parse_integer_digits(text.substr(0, slash), num) ||
        den_text.empty() || den_text.front() == '+' || den_text.front() == '-' ||
        !detail::parse_integer_digits(den_text, den)) {
      throw ParseError("invalid rational '" + std::string(text) + "'");
    }
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

/// num / den for any nonzero den. Boost 1.74 rejects a negative denominator
/// in the two-argument constructor, so the sign is moved to the numerator.
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  const Integer den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

inline double to_double(const Rational& r) {
  return r.convert_to<double>();
}

inline Rational floor_of(const Rational& r) {
  const Integer num = numerator_of(r);
  const Integer den = denominator_of(r);
  Integer q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q);
}

inline Rational ceil_of(const Rational& r) {
  return -floor_of(-r);
}

}  // namespace tropdual
