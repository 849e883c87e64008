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

using testing::Q;

const TropValue kInf = TropValue::infinity();

TropMatrix disjoint_c0() {
  const std::vector<TropPoly> s{testing::line("0"), testing::line("1")};
  return build_cayley(s, 0).matrix;
}

TEST(VerifyWitness, ReportsUniqueArgmin) {
  const std::vector<Rational> y{Q(0), Q(0)};
  const auto rep = verify_witness(disjoint_c0(), y);
  EXPECT_TRUE(rep.rows[0].ok);
  EXPECT_FALSE(rep.rows[1].ok);
  EXPECT_EQ(rep.rows[1].unique_argmin, 1u);
  EXPECT_EQ(rep.violated(), (std::vector<std::size_t>{1}));
}

TEST(VerifyWitness, AllZeroMatrixTies) {
  const auto m = TropMatrix::dense({{Q(0), Q(0), Q(0)}, {Q(0), Q(0), Q(0)}});
  EXPECT_TRUE(verify_witness(m, std::vector<Rational>(3, Q(0))).all_ok());
}

TEST(VerifyWitness, SingleFiniteEntryIsViolated) {
  const auto m = TropMatrix::dense({{Q(0), kInf}});
  EXPECT_FALSE(verify_witness(m, std::vector<Rational>{Q(5), Q(-5)}).all_ok());
  EXPECT_THROW(verify_witness(m, std::vector<Rational>{Q(0)}), DimensionMismatch);
}

TEST(DecideExact, SingleRowTies) {
  const auto m = TropMatrix::dense({{Q(0), Q(3)}});
  const auto res = decide_exact(m);
  ASSERT_EQ(res.status, Status::feasible);
  EXPECT_EQ(res.witness, (std::vector<Rational>{Q(0), Q(-3)}));
}

TEST(DecideExact, DisjointLinesAreInfeasibleWithCheckedRefutation) {
  const auto m = disjoint_c0();
  const auto res = decide_exact(m);
  ASSERT_EQ(res.status, Status::infeasible);
  ASSERT_TRUE(res.refutation);
  EXPECT_TRUE(check_refutation(m, *res.refutation));
}

TEST(DecideExact, RowWithOneFiniteEntry) {
  const auto m = TropMatrix::dense({{Q(0), Q(0)}, {kInf, Q(2)}});
  const auto res = decide_exact(m);
  EXPECT_EQ(res.status, Status::infeasible);
  ASSERT_TRUE(res.refutation);
  EXPECT_TRUE(check_refutation(m, *res.refutation));
}

TEST(DecideExact, FractionalEntries) {
  const auto m = TropMatrix::dense({{Q("1/2"), Q("1/3"), kInf}, {kInf, Q("-1/6"), Q("5/7")}});
  const auto res = decide_exact(m);
  ASSERT_EQ(res.status, Status::feasible);
  EXPECT_TRUE(verify_witness(m, res.witness).all_ok());
  EXPECT_EQ(res.witness[0], Q(0));
}

TEST(DecideExact, EmptyMatrixIsFeasible) {
  EXPECT_EQ(decide_exact(TropMatrix(3)).status, Status::feasible);
}

TEST(CheckRefutation, RejectsTamperedTrees) {
  const auto m = disjoint_c0();
  const auto res = decide_exact(m);
  ASSERT_TRUE(res.refutation);
  // Dropping a branch or swapping the row must fail the check.
  RefutationNode missing;
  missing.row = res.refutation->row;
  EXPECT_FALSE(check_refutation(m, missing));
  RefutationNode shallow;
  shallow.row = res.refutation->row;
  shallow.branches.push_back({{0, 1}, nullptr});
  EXPECT_FALSE(check_refutation(m, shallow));  // one row alone is satisfiable
  const auto ok_matrix = TropMatrix::dense({{Q(0), Q(0)}, {Q(0), Q(0)}});
  EXPECT_FALSE(check_refutation(ok_matrix, *res.refutation));
}

TEST(Lift, AllZeroNeedsNoSteps) {
  const auto m = TropMatrix::dense(std::vector<std::vector<TropValue>>(3, std::vector<TropValue>(4, Q(0))));
  const auto res = lift_heuristic(m, 100);
  ASSERT_EQ(res.status, Status::feasible);
  EXPECT_EQ(res.stats.lift_steps, 0u);
  EXPECT_EQ(res.witness, std::vector<Rational>(4, Q(0)));
}

TEST(Lift, DisjointLinesRunOutOfBudget) {
  const auto res = lift_heuristic(disjoint_c0(), 1000);
  EXPECT_EQ(res.status, Status::unknown);
  EXPECT_EQ(res.stats.lift_steps, 1000u);
}

TEST(Lift, SingleRowRaisesTheArgminOnce) {
  // y = 0 gives values (0, 3); column 0 is raised by 3, then y is shifted so
  // that y_0 = 0.
  const auto res = lift_heuristic(TropMatrix::dense({{Q(0), Q(3)}}), 10);
  ASSERT_EQ(res.status, Status::feasible);
  EXPECT_EQ(res.stats.lift_steps, 1u);
  EXPECT_EQ(res.witness, (std::vector<Rational>{Q(0), Q(-3)}));
}

TEST(Decide, AutoFallsBackToExact) {
  EXPECT_EQ(decide(disjoint_c0(), Engine::automatic).status, Status::infeasible);
  const auto zero = TropMatrix::dense({{Q(0), Q(0)}});
  const auto res = decide(zero, Engine::automatic);
  EXPECT_EQ(res.status, Status::feasible);
  EXPECT_EQ(res.witness, (std::vector<Rational>{Q(0), Q(0)}));
  EXPECT_EQ(decide(disjoint_c0(), Engine::lift).status, Status::unknown);
}

TEST(Decide, DisjointLinesInfeasibleAtEveryShiftBound) {
  const std::vector<TropPoly> s{testing::line("0"), testing::line("1")};
  for (std::int64_t n = 0; n <= 8; ++n) {
    const auto c = build_cayley(s, n);
    const auto res = decide_exact(c.matrix);
    EXPECT_EQ(res.status, Status::infeasible) << "N = " << n;
    ASSERT_TRUE(res.refutation);
    EXPECT_TRUE(check_refutation(c.matrix, *res.refutation));
  }
}

class RandomMatrices : public ::testing::Test {
 protected:
  std::mt19937_64 rng{77};
};

TEST_F(RandomMatrices, ExactAgreesWithGridOracle) {
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int k = 0; k < 250; ++k) {
    const auto rows = dim(rng), cols = dim(rng);
    const auto t = testing::random_table(rng, rows, cols, 3, 30);
    const auto m = testing::to_matrix(t, cols);
    const auto res = decide_exact(m);
    const auto oracle = testing::grid_oracle(t, cols);
    EXPECT_EQ(res.status == Status::feasible, oracle.has_value()) << "instance " << k;
    if (res.status == Status::feasible) {
      EXPECT_TRUE(verify_witness(m, res.witness).all_ok());
    } else if (res.refutation) {
      EXPECT_TRUE(check_refutation(m, *res.refutation));
    }
  }
}

TEST_F(RandomMatrices, LiftNeverContradictsExact) {
  std::uniform_int_distribution<std::size_t> dim(2, 6);
  for (int k = 0; k < 200; ++k) {
    const auto rows = dim(rng), cols = dim(rng);
    const auto m = testing::to_matrix(testing::random_table(rng, rows, cols, 5, 25), cols);
    const auto lifted = lift_heuristic(m, default_lift_budget(m));
    const auto exact = decide_exact(m);
    if (lifted.status == Status::feasible) {
      EXPECT_EQ(exact.status, Status::feasible);
      EXPECT_TRUE(verify_witness(m, lifted.witness).all_ok());
    }
    EXPECT_NE(lifted.status, Status::infeasible);
  }
}

TEST_F(RandomMatrices, ExactIsDeterministic) {
  std::uniform_int_distribution<std::size_t> dim(2, 6);
  for (int k = 0; k < 50; ++k) {
    const auto rows = dim(rng), cols = dim(rng);
    const auto m = testing::to_matrix(testing::random_table(rng, rows, cols, 4, 20), cols);
    const auto a = decide_exact(m);
    const auto b = decide_exact(m);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.stats.nodes, b.stats.nodes);
  }
}

TEST_F(RandomMatrices, ColumnShiftPreservesVerification) {
  std::uniform_int_distribution<std::size_t> dim(2, 5);
  std::uniform_int_distribution<int> delta(-4, 4);
  for (int k = 0; k < 100; ++k) {
    const auto rows = dim(rng), cols = dim(rng);
    auto t = testing::random_table(rng, rows, cols, 4, 20);
    const auto m = testing::to_matrix(t, cols);
    const auto res = decide_exact(m);
    if (res.status != Status::feasible) continue;
    const std::size_t col = k % cols;
    const int d = delta(rng);
    for (auto& row : t) {
      if (row[col]) *row[col] += d;
    }
    auto y = res.witness;
    y[col] -= d;
    EXPECT_TRUE(verify_witness(testing::to_matrix(t, cols), y).all_ok());
  }
}

TEST(DecideExact, LargeEntriesUseBigIntegers) {
  // With b = big the rows force y1 = y0 + b and y2 = y1 + b - 1, so the third
  // row ties only when its first finite entry is 1 - 2b.
  const Rational big = parse_rational("123456789012345678901234567890");
  const auto feasible =
      TropMatrix::dense({{big, Q(0), kInf}, {kInf, big, Q(1)}, {Q(0), kInf, 1 - 2 * big}});
  const auto res = decide_exact(feasible);
  ASSERT_EQ(res.status, Status::feasible);
  EXPECT_TRUE(verify_witness(feasible, res.witness).all_ok());
  EXPECT_EQ(res.witness[1] - res.witness[0], big);

  const auto cyclic = TropMatrix::dense({{big, Q(0), kInf}, {kInf, big, Q(1)}, {Q(0), kInf, big}});
  const auto refuted = decide_exact(cyclic);
  ASSERT_EQ(refuted.status, Status::infeasible);
  ASSERT_TRUE(refuted.refutation);
  EXPECT_TRUE(check_refutation(cyclic, *refuted.refutation));
}

}  // namespace
}  // namespace tropdual
