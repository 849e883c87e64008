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

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "tropdual/rational.hpp"

namespace tropdual {

/// Element of the min-plus semiring: a finite rational or +infinity.
///
/// Infinity is the neutral element of t_add and absorbs under t_mul. There is
/// no -infinity.
class TropValue {
 public:
  /// Default construction gives infinity, the additive identity.
  TropValue() = default;
  TropValue(Rational value) : value_(std::move(value)) {}  // NOLINT
  TropValue(long long value) : value_(Rational(value)) {}  // NOLINT

  static TropValue infinity() { return TropValue(); }

  [[nodiscard]] bool is_infinite() const { return !value_.has_value(); }
  [[nodiscard]] bool is_finite() const { return value_.has_value(); }

  /// Finite value; throws InvariantViolation on infinity.
  [[nodiscard]] const Rational& value() const {
    if (!value_) throw InvariantViolation("TropValue::value() on infinity");
    return *value_;
  }

  friend bool operator==(const TropValue& a, const TropValue& b) {
    return a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const TropValue& a,
                                          const TropValue& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    if (*a.value_ < *b.value_) return std::strong_ordering::less;
    if (*b.value_ < *a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::optional<Rational> value_;
};

/// Tropical sum: min(a, b).
inline TropValue t_add(const TropValue& a, const TropValue& b) {
  return b < a ? b : a;
}

/// Tropical product: a + b, infinite if either operand is.
inline TropValue t_mul(const TropValue& a, const TropValue& b) {
  if (a.is_infinite() || b.is_infinite()) return TropValue::infinity();
  return TropValue(a.value() + b.value());
}

inline std::string to_string(const TropValue& v) {
  return v.is_infinite() ? std::string("inf") : to_string(v.value());
}

inline TropValue parse_trop_value(std::string_view text) {
  if (text == "inf") return TropValue::infinity();
  return TropValue(parse_rational(text));
}

}  // namespace tropdual
