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

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace tropdual {
namespace {

using testing::P1;
using testing::P2;
using testing::Q;

TEST(NewtonPolygon, QuadraticHasTwoEdges) {
  const auto p = newton_polygon(P1({{0, "2"}, {1, "0"}, {2, "1"}}));
  ASSERT_EQ(p.vertices.size(), 3u);
  EXPECT_EQ(p.vertices[0].exp, 0);
  EXPECT_EQ(p.vertices[0].coeff, Q(2));
  EXPECT_EQ(p.vertices[1].coeff, Q(0));
  EXPECT_EQ(p.vertices[2].coeff, Q(1));
  ASSERT_EQ(p.edges.size(), 2u);
  EXPECT_EQ(p.edges[0].slope, Q(-2));
  EXPECT_EQ(p.edges[1].slope, Q(1));
}

TEST(NewtonPolygon, PointAboveSegmentIsDropped) {
  const auto p = newton_polygon(P1({{0, "0"}, {1, "5"}, {2, "0"}}));
  ASSERT_EQ(p.vertices.size(), 2u);
  ASSERT_EQ(p.edges.size(), 1u);
  EXPECT_EQ(p.edges[0].slope, Q(0));
  EXPECT_EQ(p.edges[0].lattice_length, 2);
}

TEST(NewtonPolygon, CollinearMiddlePointIsNotAVertex) {
  const auto p = newton_polygon(P1({{0, "0"}, {1, "1"}, {2, "2"}}));
  EXPECT_EQ(p.vertices.size(), 2u);
  EXPECT_EQ(p.edges[0].lattice_length, 2);
}

TEST(NewtonPolygon, SharedVertexBelongsToTheLeftEdge) {
  const auto p = newton_polygon(P1({{0, "2"}, {1, "0"}, {2, "1"}}));
  EXPECT_EQ(p.edge_containing(0), 0u);
  EXPECT_EQ(p.edge_containing(1), 0u);
  EXPECT_EQ(p.edge_containing(2), 1u);
  EXPECT_FALSE(p.edge_containing(3).has_value());
  EXPECT_TRUE(p.is_inner_vertex(1));
  EXPECT_FALSE(p.is_inner_vertex(0));
}

TEST(NewtonPolygon, RequiresUnivariate) {
  EXPECT_THROW(newton_polygon(P2({{{1, 0}, "0"}, {{0, 0}, "0"}})), UnsupportedDimension);
}

TEST(ConvexForm, FillsInteriorLatticePoints) {
  EXPECT_EQ(convex_form(P1({{0, "0"}, {2, "0"}})).terms(),
            P1({{0, "0"}, {1, "0"}, {2, "0"}}).terms());
  EXPECT_EQ(convex_form(P1({{0, "0"}, {1, "5"}, {2, "0"}})).terms(),
            P1({{0, "0"}, {1, "0"}, {2, "0"}}).terms());
  EXPECT_EQ(convex_form(testing::line("0")).terms(), testing::line("0").terms());
}

TEST(ConvexForm, BivariateTriangleInterior) {
  // Plotted points (0,0):0, (2,0):0, (0,2):0, (1,1):7. The envelope is 0 on
  // the whole triangle, (1,0) and (0,1) get added and (1,1) drops to 0.
  const auto f = P2({{{0, 0}, "0"}, {{2, 0}, "0"}, {{0, 2}, "0"}, {{1, 1}, "7"}});
  const auto g = convex_form(f);
  EXPECT_EQ(g.terms().size(), 6u);
  for (const auto& [e, c] : g.terms()) {
    EXPECT_LE(e[0] + e[1], 2);
    EXPECT_EQ(c, Q(0));
  }
}

TEST(ConvexForm, BivariateTiltedPlane) {
  // All points on the plane h = i + 2j: the envelope reproduces it.
  const auto f = P2({{{0, 0}, "0"}, {{3, 0}, "3"}, {{0, 3}, "6"}});
  const auto g = convex_form(f);
  for (const auto& [e, c] : g.terms()) EXPECT_EQ(c, Q(e[0] + 2 * e[1]));
  EXPECT_EQ(g.terms().size(), 10u);
}

TEST(ConvexForm, HigherDimensionUnsupported) {
  const TropPoly f(3, std::vector<Monomial>{{Q(0), {1, 0, 0}}, {Q(0), {0, 0, 0}}});
  EXPECT_THROW(convex_form(f), UnsupportedDimension);
}

TEST(Roots, Examples) {
  EXPECT_EQ(univariate_roots(testing::line("0")), (RootMultiset{{Q(0), 1}}));
  EXPECT_EQ(univariate_roots(testing::line("1")), (RootMultiset{{Q(1), 1}}));
  EXPECT_EQ(univariate_roots(P1({{0, "2"}, {1, "0"}, {2, "1"}})),
            (RootMultiset{{Q(-1), 1}, {Q(2), 1}}));
  EXPECT_TRUE(univariate_roots(P1({{4, "1"}})).empty());
  EXPECT_EQ(univariate_roots(P1({{0, "0"}, {2, "0"}})), (RootMultiset{{Q(0), 2}}));
}

TEST(CommonRoot, Examples) {
  const std::vector<TropPoly> disjoint{testing::line("0"), testing::line("1")};
  EXPECT_FALSE(univariate_common_root(disjoint).has_value());
  const std::vector<TropPoly> shared{testing::line("0"), P1({{0, "0"}, {2, "0"}})};
  EXPECT_EQ(univariate_common_root(shared), Q(0));
  const std::vector<TropPoly> single{testing::line("0")};
  EXPECT_EQ(univariate_common_root(single), Q(0));
  const std::vector<TropPoly> monomial{testing::line("0"), P1({{2, "0"}})};
  EXPECT_FALSE(univariate_common_root(monomial).has_value());
}

TropPoly random_univariate(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 6), c(-5, 5), terms(2, 6);
  std::vector<Monomial> ms;
  const int k = terms(rng);
  for (int t = 0; t < k; ++t) ms.push_back({Rational(c(rng)), {e(rng)}});
  return TropPoly(1, ms);
}

class RandomUnivariate : public ::testing::Test {
 protected:
  std::mt19937_64 rng{2024};
};

TEST_F(RandomUnivariate, RootsMatchPairwiseTieOracle) {
  for (int k = 0; k < 400; ++k) {
    const auto f = random_univariate(rng);
    std::set<Rational> got;
    for (const auto& r : univariate_roots(f)) {
      got.insert(r.value);
      EXPECT_TRUE(is_tropical_zero(f, r.value));
    }
    EXPECT_EQ(got, testing::root_oracle(f)) << to_string(f);
  }
}

TEST_F(RandomUnivariate, MultiplicitiesSumToExponentSpan) {
  for (int k = 0; k < 400; ++k) {
    const auto f = random_univariate(rng);
    const auto p = newton_polygon(f);
    std::int64_t total = 0;
    for (const auto& r : univariate_roots(f)) total += r.multiplicity;
    EXPECT_EQ(total, f.terms().rbegin()->first[0] - f.terms().begin()->first[0]);
    for (std::size_t r = 0; r + 1 < p.edges.size(); ++r) {
      EXPECT_LT(p.edges[r].slope, p.edges[r + 1].slope);
    }
  }
}

TEST_F(RandomUnivariate, ConvexFormMatchesEnvelopeOracle) {
  for (int k = 0; k < 400; ++k) {
    const auto f = random_univariate(rng);
    const auto g = convex_form(f);
    const auto lo = f.terms().begin()->first[0];
    const auto hi = f.terms().rbegin()->first[0];
    EXPECT_EQ(g.size(), static_cast<std::size_t>(hi - lo + 1));
    for (auto e = lo; e <= hi; ++e) {
      EXPECT_EQ(g.terms().at({e}), *testing::envelope_oracle(f, e));
    }
    EXPECT_EQ(convex_form(g).terms(), g.terms());
    EXPECT_EQ(univariate_roots(g), univariate_roots(f));
  }
}

TEST_F(RandomUnivariate, VerticesAreTheKinksOfTheEnvelope) {
  for (int k = 0; k < 300; ++k) {
    const auto f = random_univariate(rng);
    const auto p = newton_polygon(f);
    const auto lo = p.min_exp(), hi = p.max_exp();
    std::vector<std::int64_t> kinks;
    for (auto e = lo; e <= hi; ++e) {
      if (e == lo || e == hi) {
        kinks.push_back(e);
        continue;
      }
      const auto h = *testing::envelope_oracle(f, e);
      if (2 * h < *testing::envelope_oracle(f, e - 1) + *testing::envelope_oracle(f, e + 1)) {
        kinks.push_back(e);
      }
    }
    std::vector<std::int64_t> got;
    for (const auto& v : p.vertices) got.push_back(v.exp);
    EXPECT_EQ(got, kinks);
  }
}

TEST(ConvexForm, BivariatePreservesZerosOnSamples) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> e(0, 3), c(-4, 4), terms(2, 5), coord(-12, 12);
  for (int k = 0; k < 150; ++k) {
    std::vector<Monomial> ms;
    const int t = terms(rng);
    for (int i = 0; i < t; ++i) ms.push_back({Rational(c(rng)), {e(rng), e(rng)}});
    const TropPoly f(2, ms);
    const auto g = convex_form(f);
    EXPECT_EQ(convex_form(g).terms(), g.terms());
    for (const auto& [ex, cf] : f.terms()) EXPECT_LE(g.terms().at(ex), cf);
    for (int s = 0; s < 40; ++s) {
      const std::vector<Rational> x{Rational(coord(rng), 2), Rational(coord(rng), 2)};
      EXPECT_EQ(evaluate(f, x).value, evaluate(g, x).value);
      EXPECT_EQ(is_tropical_zero(f, x), is_tropical_zero(g, x)) << to_string(f);
    }
  }
}

}  // namespace
}  // namespace tropdual
