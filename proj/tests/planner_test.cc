// Copyright 2026 The SRP Authors.
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

#include "srp/planner.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "test_support.h"

namespace srp {
namespace {

using testing::Dot;
using testing::GridMax;
using testing::MakeCmp;

// Largest |V - T V| of the Bellman optimality operator.
double BellmanResidual(const Cmp& cmp, const RewardFunction& reward,
                       const ValueVector& v) {
  double worst = 0.0;
  for (StateId s = 0; s < cmp.num_states(); ++s) {
    double best = -1e300;
    for (ActionId a = 0; a < cmp.num_actions(); ++a) {
      best = std::max(best, Dot(cmp.Row(s, a), v));
    }
    const double backup =
        reward(s) + (cmp.IsTerminal(s) ? 0.0 : cmp.discount() * best);
    worst = std::max(worst, std::abs(backup - v[s]));
  }
  return worst;
}

TEST(PolicyEvaluationTest, SingleStateIsRewardOverQ) {
  const Cmp cmp = MakeCmp({{{1.0}}}, {1.0}, 0.5);
  const ValueVector v = PolicyEvaluation(cmp, RewardFunction({1.0}),
                                         StationaryPolicy::LowestIndex(1));
  EXPECT_NEAR(v[0], 2.0, 1e-12);
}

TEST(PolicyEvaluationTest, QEqualOneIsReward) {
  const Cmp cmp = GenerateRandomCmp(3, 2, 1.0, 4);
  const RewardFunction reward({0.2, 0.5, 0.3});
  const ValueVector v =
      PolicyEvaluation(cmp, reward, StationaryPolicy({1, 0, 1}));
  for (StateId s = 0; s < 3; ++s) EXPECT_NEAR(v[s], reward(s), 1e-12);
}

// V0 = 1 + 0.5 V1, V1 = 0.5 V0.
TEST(PolicyEvaluationTest, TwoStateCycle) {
  const Cmp cmp = MakeCmp({{{0.0, 1.0}}, {{1.0, 0.0}}}, {0.5, 0.5}, 0.5);
  const RewardFunction reward({1.0, 0.0});
  const auto policy = StationaryPolicy::LowestIndex(2);
  const ValueVector v = PolicyEvaluation(cmp, reward, policy);
  EXPECT_NEAR(v[0], 4.0 / 3.0, 1e-12);
  EXPECT_NEAR(v[1], 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(StageValue(cmp, reward, policy), 1.0, 1e-12);
  const Cmp from_zero =
      MakeCmp({{{0.0, 1.0}}, {{1.0, 0.0}}}, {1.0, 0.0}, 0.5);
  EXPECT_NEAR(StageValue(from_zero, reward, policy), 4.0 / 3.0, 1e-12);
}

TEST(PolicyEvaluationTest, TerminalStateCollectsOnlyItsReward) {
  const Cmp cmp = MakeCmp({{{0.0, 1.0}}, {{0.0, 1.0}}}, {1.0, 0.0}, 0.1, {1});
  const ValueVector v = PolicyEvaluation(cmp, RewardFunction({0.25, 0.75}),
                                         StationaryPolicy::LowestIndex(2));
  EXPECT_NEAR(v[1], 0.75, 1e-12);
  EXPECT_NEAR(v[0], 0.25 + 0.9 * 0.75, 1e-12);
}

TEST(PolicyEvaluationTest, ValuesBoundedByOneOverQ) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Cmp cmp = GenerateRandomCmp(4, 3, 0.2, seed);
    Rng rng(seed);
    const RewardFunction reward(SampleUniformSimplex(4, rng));
    const ValueVector v = PolicyEvaluation(
        cmp, reward, StationaryPolicy::FromIndex(seed, 4, 3));
    for (double x : v) {
      EXPECT_GE(x, -1e-12);
      EXPECT_LE(x, 1.0 / 0.2 + 1e-9);
    }
  }
}

// One action strictly dominates: it stays in the rewarded state.
TEST(OraclePolicyTest, PicksDominantAction) {
  const Cmp cmp = MakeCmp({{{0.0, 1.0}, {1.0, 0.0}}, {{1.0, 0.0}, {0.0, 1.0}}},
                          {1.0, 0.0}, 0.5);
  const PlanResult plan = OraclePolicy(cmp, RewardFunction({1.0, 0.0}));
  EXPECT_EQ(plan.policy(0), 1);
  EXPECT_EQ(plan.policy(1), 0);
  EXPECT_NEAR(plan.values[0], 2.0, 1e-8);
}

TEST(OraclePolicyTest, ZeroRewardGivesZeroValuesAndLowestActions) {
  const Cmp cmp = GenerateRandomCmp(4, 3, 0.5, 2);
  const PlanResult plan = OraclePolicy(cmp, RewardFunction::Zero(4));
  for (StateId s = 0; s < 4; ++s) {
    EXPECT_EQ(plan.values[s], 0.0);
    EXPECT_EQ(plan.policy(s), 0);
  }
}

TEST(OraclePolicyTest, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Cmp cmp = GenerateRandomCmp(3, 2, 0.5, seed);
    Rng rng(1000 + seed);
    const RewardFunction reward(SampleUniformSimplex(3, rng));
    const PlanResult plan = OraclePolicy(cmp, reward);
    EXPECT_NEAR(StageValue(cmp, reward, plan.policy),
                testing::BruteForceBestStageValue(cmp, reward), 1e-6)
        << "seed " << seed;
    EXPECT_LT(BellmanResidual(cmp, reward, plan.values), 1e-8);
  }
}

TEST(OraclePolicyTest, ValueIterationContracts) {
  const Cmp cmp = GenerateRandomCmp(5, 3, 0.1, 9);
  Rng rng(3);
  const RewardFunction reward(SampleUniformSimplex(5, rng));
  std::vector<double> trace;
  PlannerOptions options;
  options.residual_trace = &trace;
  OraclePolicy(cmp, reward, options);
  ASSERT_GE(trace.size(), 2u);
  for (std::size_t i = 1; i < trace.size(); ++i) {
    EXPECT_LE(trace[i], cmp.discount() * trace[i - 1] + 1e-12);
  }
}

TEST(WeissmanRadiusTest, Examples) {
  EXPECT_DOUBLE_EQ(WeissmanRadius(0, 4, 0.1), 2.0);
  EXPECT_NEAR(WeissmanRadius(100, 2, 0.05),
              std::sqrt(2.0 * (std::log(2.0) - std::log(0.05)) / 100.0),
              1e-12);
  EXPECT_NEAR(WeissmanRadius(100, 2, 0.05), 0.271620, 1e-6);
  EXPECT_DOUBLE_EQ(WeissmanRadius(1, 10, 0.01), 2.0);
  EXPECT_THROW(WeissmanRadius(-1, 2, 0.1), std::invalid_argument);
  EXPECT_THROW(WeissmanRadius(10, 2, 0.0), std::invalid_argument);
}

TEST(WeissmanRadiusTest, ShrinksWithSamples) {
  double previous = 2.0;
  for (std::int64_t n = 1; n < 5000; n *= 2) {
    const double r = WeissmanRadius(n, 4, 0.1);
    EXPECT_LE(r, previous);
    previous = r;
  }
}

TEST(WeissmanRadiusTest, CoversEmpiricalDeviation) {
  Rng rng(42);
  const int reps = 10000;
  const int n = 50;
  const double radius = WeissmanRadius(n, 4, 0.1);
  int misses = 0;
  for (int rep = 0; rep < reps; ++rep) {
    const std::vector<double> p = SampleUniformSimplex(4, rng);
    std::vector<double> hat(4, 0.0);
    for (int i = 0; i < n; ++i) hat[SampleCategorical(p, rng)] += 1.0 / n;
    if (testing::L1Distance(hat, p) > radius) ++misses;
  }
  EXPECT_LE(static_cast<double>(misses) / reps,
            0.1 + 3 * std::sqrt(0.1 * 0.9 / reps));
}

TEST(OptimisticRowTest, MatchesGridSearch) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> samples(1, 40);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> values = {unit(gen), unit(gen), unit(gen)};
    std::vector<double> empirical(3, 0.0);
    const int n = samples(gen);
    for (int i = 0; i < n; ++i) empirical[gen() % 3] += 1.0 / n;
    const double radius = 0.01 + 1.99 * unit(gen);
    const std::vector<double> p = OptimisticRow(values, empirical, radius);
    const double exact = Dot(p, values);
    const double grid = GridMax(values, empirical, radius);
    EXPECT_GE(exact, grid - 1e-12) << "trial " << trial;
    EXPECT_LE(exact - grid, 2e-3) << "trial " << trial;
  }
}

TEST(OptimisticRowTest, StaysInsideBall) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<double> values = SampleUniformSimplex(6, rng);
    const std::vector<double> empirical = SampleUniformSimplex(6, rng);
    const double radius = 2.0 * Uniform01(rng);
    const std::vector<double> p = OptimisticRow(values, empirical, radius);
    double sum = 0.0;
    for (double x : p) {
      EXPECT_GE(x, -1e-12);
      sum += x;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
    EXPECT_LE(testing::L1Distance(p, empirical), radius + 1e-9);
    EXPECT_GE(Dot(p, values), Dot(empirical, values) - 1e-12);
  }
}

TEST(OptimisticRowTest, RadiusZeroAndTwo) {
  const std::vector<double> values = {0.3, 0.9, 0.1};
  const std::vector<double> empirical = {0.5, 0.2, 0.3};
  EXPECT_EQ(OptimisticRow(values, empirical, 0.0), empirical);
  const std::vector<double> full = OptimisticRow(values, empirical, 2.0);
  EXPECT_NEAR(full[1], 1.0, 1e-12);
  EXPECT_NEAR(full[0], 0.0, 1e-12);
  EXPECT_NEAR(full[2], 0.0, 1e-12);
}

TEST(DescendingOrderTest, TiesGoToLowerIndex) {
  const std::vector<double> values = {0.5, 0.9, 0.5, 0.1};
  EXPECT_EQ(DescendingOrder(values), (std::vector<StateId>{1, 0, 2, 3}));
}

TEST(OptimisticPlanTest, RadiusZeroMatchesEmpiricalOracle) {
  const Cmp truth = GenerateRandomCmp(4, 2, 0.5, 5);
  Rng rng(6);
  CountTable counts(4, 2);
  for (int i = 0; i < 400; ++i) {
    const StateId s = i % 4;
    const ActionId a = (i / 4) % 2;
    counts.Add(s, a, SampleCategorical(truth.Row(s, a), rng));
  }
  const RewardFunction reward(SampleUniformSimplex(4, rng));
  const Cmp empirical = EmpiricalCmp(counts, 0.5, truth.start_dist());
  const PlanResult oracle = OraclePolicy(empirical, reward);
  const OptimisticPlanResult plan =
      OptimisticPlan(counts, reward, 0.5, ConfidenceTable::Constant(4, 2, 0.0),
                     truth.start_dist());
  EXPECT_EQ(plan.policy, oracle.policy);
  for (StateId s = 0; s < 4; ++s) {
    EXPECT_NEAR(plan.values[s], oracle.values[s], 1e-8);
  }
}

// With no data every ball is the whole simplex, so each state can reach the
// rewarded state and stay there: V(rewarded) = r / q.
TEST(OptimisticPlanTest, NoDataIsFullyOptimistic) {
  const CountTable counts(3, 2);
  const RewardFunction reward = RewardFunction::PointMass(3, 2);
  const OptimisticPlanResult plan =
      OptimisticPlan(counts, reward, 0.5, 0.1, UniformDistribution(3));
  EXPECT_NEAR(plan.values[2], 2.0, 1e-8);
  EXPECT_NEAR(plan.values[0], 1.0, 1e-8);
  EXPECT_NEAR(plan.start_value, 4.0 / 3.0, 1e-8);
}

// The optimistic value dominates the best value of every model whose rows
// lie inside the confidence balls; the truth is such a model when the
// radii cover it.
TEST(OptimisticPlanTest, DominatesTruthInsideBalls) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Cmp truth = GenerateRandomCmp(3, 2, 0.5, seed);
    Rng rng(100 + seed);
    CountTable counts(3, 2);
    for (int i = 0; i < 60; ++i) {
      const StateId s = i % 3;
      const ActionId a = (i / 3) % 2;
      counts.Add(s, a, SampleCategorical(truth.Row(s, a), rng));
    }
    const Cmp empirical = EmpiricalCmp(counts, 0.5, truth.start_dist());
    double radius = 0.0;
    for (StateId s = 0; s < 3; ++s) {
      for (ActionId a = 0; a < 2; ++a) {
        radius = std::max(radius, testing::L1Distance(empirical.Row(s, a),
                                                      truth.Row(s, a)));
      }
    }
    const RewardFunction reward(SampleUniformSimplex(3, rng));
    const OptimisticPlanResult plan = OptimisticPlan(
        counts, reward, 0.5, ConfidenceTable::Constant(3, 2, radius),
        truth.start_dist());
    EXPECT_GE(plan.start_value,
              testing::BruteForceBestStageValue(truth, reward) - 1e-8);
    EXPECT_GE(plan.start_value,
              testing::BruteForceBestStageValue(empirical, reward) - 1e-8);
  }
}

TEST(OptimisticPlanTest, OptimismShrinksWithRadius) {
  const Cmp truth = GenerateRandomCmp(4, 2, 0.3, 12);
  Rng rng(12);
  CountTable counts(4, 2);
  for (int i = 0; i < 200; ++i) {
    const StateId s = i % 4;
    const ActionId a = (i / 4) % 2;
    counts.Add(s, a, SampleCategorical(truth.Row(s, a), rng));
  }
  const RewardFunction reward(SampleUniformSimplex(4, rng));
  double previous = 1e300;
  for (double radius : {2.0, 1.0, 0.5, 0.25, 0.1, 0.0}) {
    const double value =
        OptimisticPlan(counts, reward, 0.3,
                       ConfidenceTable::Constant(4, 2, radius),
                       truth.start_dist())
            .start_value;
    EXPECT_LE(value, previous + 1e-9);
    previous = value;
  }
}

TEST(OptimisticPlanTest, ExtendedIterationContracts) {
  const Cmp truth = GenerateRandomCmp(4, 2, 0.2, 3);
  Rng rng(3);
  CountTable counts(4, 2);
  for (int i = 0; i < 40; ++i) {
    counts.Add(i % 4, (i / 4) % 2,
               SampleCategorical(truth.Row(i % 4, (i / 4) % 2), rng));
  }
  std::vector<double> trace;
  PlannerOptions options;
  options.residual_trace = &trace;
  OptimisticPlan(counts, RewardFunction::PointMass(4, 1), 0.2, 0.5,
                 truth.start_dist(), options);
  ASSERT_GE(trace.size(), 2u);
  for (std::size_t i = 1; i < trace.size(); ++i) {
    EXPECT_LE(trace[i], 0.8 * trace[i - 1] + 1e-12);
  }
}

TEST(ConfidenceTableTest, SplitsDeltaOverPairs) {
  CountTable counts(3, 2);
  counts.Add(0, 1, 2, 10);
  const ConfidenceTable table = ConfidenceTable::FromCounts(counts, 0.6);
  EXPECT_DOUBLE_EQ(table.pair_delta(), 0.1);
  EXPECT_DOUBLE_EQ(table.radius(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(table.radius(0, 1), WeissmanRadius(10, 3, 0.1));
}

TEST(StageValueTest, MonteCarloAgreesWithExactValue) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Cmp cmp = GenerateRandomCmp(4, 2, 0.5, seed);
    Rng rng(seed + 50);
    const RewardFunction reward(SampleUniformSimplex(4, rng));
    const StationaryPolicy policy = StationaryPolicy::FromIndex(seed, 4, 2);
    std::vector<double> payoffs;
    for (int i = 0; i < 20000; ++i) {
      payoffs.push_back(SimulateStage(cmp, policy, reward, rng).payoff);
    }
    const auto stats = testing::Summarize(payoffs);
    EXPECT_NEAR(stats.mean, StageValue(cmp, reward, policy),
                3 * stats.std_error);
  }
}

}  // namespace
}  // namespace srp
