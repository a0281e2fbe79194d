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

#ifndef SRP_TESTS_TEST_SUPPORT_H_
#define SRP_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "srp/agents.h"
#include "srp/mdp_core.h"
#include "srp/planner.h"

namespace srp::testing {

// Test double that plans on the true model. Its stage regret is zero by
// construction.
class OracleAgent : public Agent {
 public:
  explicit OracleAgent(Cmp truth)
      : Agent(truth.num_states(), truth.num_actions(),
              truth.termination_prob()),
        truth_(std::move(truth)) {}

  std::string_view name() const override { return "oracle"; }
  StationaryPolicy BeginStage(const RewardFunction& reward, Rng&) override {
    return OraclePolicy(truth_, reward).policy;
  }

 protected:
  void Observe(const Trajectory&) override {}

 private:
  Cmp truth_;
};

// Builds a Cmp from nested rows: rows[s][a] is the next-state distribution.
inline Cmp MakeCmp(const std::vector<std::vector<std::vector<double>>>& rows,
                   std::vector<double> start, double q,
                   std::vector<StateId> terminal = {}) {
  const int n = static_cast<int>(rows.size());
  const int m = static_cast<int>(rows[0].size());
  std::vector<double> kernel;
  for (const auto& per_action : rows) {
    for (const auto& row : per_action) {
      kernel.insert(kernel.end(), row.begin(), row.end());
    }
  }
  return Cmp(n, m, std::move(kernel), std::move(start), q,
             std::move(terminal));
}

// Brute-force maximum of start_dist . V over every deterministic policy.
inline double BruteForceBestStageValue(const Cmp& cmp,
                                       const RewardFunction& reward) {
  std::uint64_t total = 1;
  for (int s = 0; s < cmp.num_states(); ++s) total *= cmp.num_actions();
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < total; ++i) {
    const auto policy = StationaryPolicy::FromIndex(i, cmp.num_states(),
                                                    cmp.num_actions());
    best = std::max(best, StageValue(cmp, reward, policy));
  }
  return best;
}

inline double L1Distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

inline double Dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// max p . values over the 3-outcome simplex on a 1e-3 grid, subject to
// ||p - empirical||_1 <= radius.
inline double GridMax(std::span<const double> values,
                      std::span<const double> empirical, double radius) {
  constexpr int kSteps = 1000;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kSteps; ++i) {
    for (int j = 0; i + j <= kSteps; ++j) {
      const double p[3] = {i / double(kSteps), j / double(kSteps),
                           (kSteps - i - j) / double(kSteps)};
      if (L1Distance(p, empirical) > radius + 1e-12) continue;
      best = std::max(best, Dot(p, values));
    }
  }
  return best;
}

// E_{p ~ Beta(a, b)} KL(Bernoulli(p) || Bernoulli(a / (a + b))) by a
// 1000-point midpoint rule with the density normalized through lgamma.
inline double ExpectedBernoulliKl(double a, double b) {
  constexpr int kPoints = 1000;
  const double m = a / (a + b);
  const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  double total = 0.0;
  for (int i = 0; i < kPoints; ++i) {
    const double p = (i + 0.5) / kPoints;
    const double density =
        std::exp(log_norm + (a - 1) * std::log(p) + (b - 1) * std::log1p(-p));
    const double kl =
        p * std::log(p / m) + (1 - p) * std::log((1 - p) / (1 - m));
    total += density * kl / kPoints;
  }
  return total;
}

// Mean and standard error of a sample.
struct SampleStats {
  double mean = 0.0;
  double std_error = 0.0;
};

inline SampleStats Summarize(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / xs.size();
  double sq = 0.0;
  for (double x : xs) sq += (x - mean) * (x - mean);
  return {mean, std::sqrt(sq / (xs.size() - 1) / xs.size())};
}

}  // namespace srp::testing

#endif  // SRP_TESTS_TEST_SUPPORT_H_
