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
#include <sstream>
#include <string>
#include <vector>

#include "tropdual/cayley.hpp"
#include "tropdual/dual_nss.hpp"
#include "tropdual/solver.hpp"

namespace tropdual {

/// Fixed-point decimal with `digits` fractional digits, rounded half away
/// from zero. Only used when writing coordinates.
inline std::string to_decimal(const Rational& v, int digits = 6) {
  Integer scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  const Rational scaled = abs(v) * Rational(scale);
  const Integer whole = Integer(numerator_of(floor_of(scaled + Rational(1, 2))));
  const Integer ip = whole / scale;
  Integer fp = whole % scale;
  std::string frac = fp.str();
  frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (v < 0 && whole != 0) ? "-" : "";
  out += ip.str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

namespace detail {

/// Plot plane: horizontal axis exponent, vertical axis height (up).
class SvgCanvas {
 public:
  void include(const Rational& exp, const Rational& height) {
    if (!seen_) {
      xmin_ = xmax_ = exp;
      ymin_ = ymax_ = height;
      seen_ = true;
      return;
    }
    xmin_ = std::min(xmin_, exp);
    xmax_ = std::max(xmax_, exp);
    ymin_ = std::min(ymin_, height);
    ymax_ = std::max(ymax_, height);
  }

  [[nodiscard]] std::string point(const Rational& exp,
                                  const Rational& height) const {
    return to_decimal(px(exp)) + "," + to_decimal(py(height));
  }
  [[nodiscard]] Rational px(const Rational& exp) const {
    return (exp - xmin_) * kScale + kMargin;
  }
  [[nodiscard]] Rational py(const Rational& height) const {
    return (top() - height) * kScale + kMargin;
  }
  [[nodiscard]] Rational top() const { return ymax_ + Rational(1); }
  [[nodiscard]] Rational width() const {
    return (xmax_ - xmin_) * kScale + 2 * kMargin;
  }
  [[nodiscard]] Rational height() const {
    return (top() - ymin_) * kScale + 2 * kMargin;
  }

 private:
  inline static const Rational kScale{40};
  inline static const Rational kMargin{20};
  bool seen_ = false;
  Rational xmin_, xmax_, ymin_, ymax_;
};

inline const char* palette(std::size_t j) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                 "#9467bd", "#ff7f0e", "#8c564b"};
  return colors[j % 6];
}

}  // namespace detail

/// SVG of the Newton polygons of a univariate system and, with a witness of
/// C_N, the lifted witness points Y, the chains E(f_j) and their envelope.
/// Throws WitnessViolation naming the violated rows if the witness fails.
inline std::string render_svg(std::span<const TropPoly> system,
                              const std::optional<ExponentWitness>& witness,
                              std::int64_t shift_bound) {
  if (system.empty()) throw DimensionMismatch("empty system");
  std::vector<TropPoly> forms;
  std::vector<NewtonPolygon> polygons;
  for (const auto& f : system) {
    detail::require_univariate(f, "render_svg");
    forms.push_back(convex_form(f));
    polygons.push_back(newton_polygon(f));
  }

  std::optional<SystemGeometry> geometry;
  LineWitness y;
  if (witness) {
    const auto c = build_cayley(system, shift_bound);
    const auto report = verify_witness(c.matrix, c.index(*witness));
    if (!report.all_ok()) {
      std::string msg = "witness violates rows";
      for (auto r : report.violated()) {
        msg += " (" + std::to_string(c.rows[r].poly + 1) + "," +
               to_string(c.rows[r].shift) + ")";
      }
      throw WitnessViolation(msg);
    }
    y = line_witness(*witness);
    geometry = analyze_system(system, y, -shift_bound, shift_bound);
  }

  detail::SvgCanvas canvas;
  for (const auto& p : polygons) {
    for (const auto& v : p.vertices) canvas.include(Rational(v.exp), v.coeff);
  }
  if (geometry) {
    for (const auto& [l, v] : y) canvas.include(Rational(l), -v);
    for (const auto& d : geometry->diagrams) {
      for (const auto& v : d.chain) {
        canvas.include(Rational(v.point.exp), v.point.height);
      }
    }
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << to_decimal(canvas.width()) << "\" height=\""
      << to_decimal(canvas.height()) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t j = 0; j < polygons.size(); ++j) {
    const auto& p = polygons[j];
    const char* color = detail::palette(j);
    out << "<g class=\"newton\" data-poly=\"" << j + 1 << "\" stroke=\""
        << color << "\" fill=\"none\">\n";
    out << "<polyline class=\"hull\" points=\"";
    for (std::size_t k = 0; k < p.vertices.size(); ++k) {
      if (k) out << ' ';
      out << canvas.point(Rational(p.vertices[k].exp), p.vertices[k].coeff);
    }
    out << "\"/>\n";
    for (const auto* v : {&p.vertices.front(), &p.vertices.back()}) {
      out << "<line class=\"ray\" stroke-dasharray=\"4 3\" x1=\""
          << to_decimal(canvas.px(Rational(v->exp))) << "\" y1=\""
          << to_decimal(canvas.py(v->coeff)) << "\" x2=\""
          << to_decimal(canvas.px(Rational(v->exp))) << "\" y2=\""
          << to_decimal(canvas.py(canvas.top())) << "\"/>\n";
      if (p.vertices.size() == 1) break;
    }
    out << "</g>\n";
  }

  if (geometry) {
    out << "<g class=\"Y\" fill=\"black\">\n";
    for (const auto& [l, v] : y) {
      out << "<circle r=\"2.5\" cx=\"" << to_decimal(canvas.px(Rational(l)))
          << "\" cy=\"" << to_decimal(canvas.py(-v)) << "\"/>\n";
    }
    out << "</g>\n";
    for (std::size_t j = 0; j < geometry->diagrams.size(); ++j) {
      const auto& d = geometry->diagrams[j];
      out << "<polyline class=\"E\" data-poly=\"" << j + 1
          << "\" fill=\"none\" stroke=\"" << detail::palette(j)
          << "\" stroke-width=\"2\" points=\"";
      for (std::size_t k = 0; k < d.chain.size(); ++k) {
        if (k) out << ' ';
        out << canvas.point(Rational(d.chain[k].point.exp),
                            d.chain[k].point.height);
      }
      out << "\"/>\n";
    }
    const auto& env = geometry->envelope;
    auto height = [&](const EnvelopePiece& p, const Rational& l) {
      return geometry->diagrams[p.active.front()].height_on_edge(
          p.edges.front(), l);
    };
    out << "<polyline class=\"envelope\" fill=\"none\" stroke=\"black\" "
           "stroke-width=\"1\" stroke-dasharray=\"2 2\" points=\"";
    for (std::size_t k = 0; k < env.pieces.size(); ++k) {
      const auto& p = env.pieces[k];
      if (k == 0) out << canvas.point(p.from, height(p, p.from));
      out << ' ' << canvas.point(p.to, height(p, p.to));
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tropdual
