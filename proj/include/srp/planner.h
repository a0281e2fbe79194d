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

#ifndef SRP_PLANNER_H_
#define SRP_PLANNER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "srp/mdp_core.h"

namespace srp {

// Expected stage payoff from each start state.
using ValueVector = std::vector<double>;

struct PlannerOptions {
  // Sweeps stop once the sup-norm change falls to this level.
  double tolerance = 1e-10;
  int max_sweeps = 100000;
  // When non-null, receives the sup-norm change of every sweep.
  std::vector<double>* residual_trace = nullptr;
};

struct PlanResult {
  StationaryPolicy policy;
  ValueVector values;
  int sweeps = 0;
};

// Exact value of a fixed policy: the solution of
//   V(s) = r(s) + (1 - q) * sum_s' P(s' | s, policy(s)) V(s')
// by a direct LU solve.
ValueVector PolicyEvaluation(const Cmp& cmp, const RewardFunction& reward,
                             const StationaryPolicy& policy);

// Optimal stationary policy for a known model by value iteration followed by
// greedy extraction. Ties go to the lowest action index.
PlanResult OraclePolicy(const Cmp& cmp, const RewardFunction& reward,
                        const PlannerOptions& options = {});

// start_dist . PolicyEvaluation(cmp, reward, policy).
double StageValue(const Cmp& cmp, const RewardFunction& reward,
                  const StationaryPolicy& policy);

// L1 deviation bound for the empirical distribution of n samples over m
// outcomes, holding with probability at least 1 - delta:
//   min(2, sqrt(2 * ((m - 1) ln 2 - ln delta) / n)),  and 2 when n = 0.
double WeissmanRadius(std::int64_t n, int support_size, double delta);

// Per-pair L1 radii around the empirical rows.
class ConfidenceTable {
 public:
  // Splits the total failure budget `delta` uniformly over all (s, a) pairs.
  static ConfidenceTable FromCounts(const CountTable& counts, double delta);
  // Same radius for every pair.
  static ConfidenceTable Constant(int num_states, int num_actions,
                                  double radius);

  double radius(StateId s, ActionId a) const {
    return radii_[static_cast<std::size_t>(s) * num_actions_ + a];
  }
  double delta() const { return delta_; }
  double pair_delta() const { return pair_delta_; }

 private:
  ConfidenceTable(int num_actions, double delta, double pair_delta,
                  std::vector<double> radii)
      : num_actions_(num_actions),
        delta_(delta),
        pair_delta_(pair_delta),
        radii_(std::move(radii)) {}

  int num_actions_;
  double delta_;
  double pair_delta_;
  std::vector<double> radii_;
};

// Maximizes sum_s p(s) values(s) over distributions p with
// ||p - empirical||_1 <= radius. Moves up to radius / 2 mass onto the
// highest-value state and removes the same amount from the lowest-value
// states. `order` lists states by decreasing value; only the ordering of
// the values matters.
void OptimisticRow(std::span<const double> empirical, double radius,
                   std::span<const StateId> order, std::span<double> out);

// Convenience overload that sorts the states itself.
std::vector<double> OptimisticRow(std::span<const double> values,
                                  std::span<const double> empirical,
                                  double radius);

// States sorted by decreasing value, ties broken toward the lower index.
std::vector<StateId> DescendingOrder(std::span<const double> values);

struct OptimisticPlanResult {
  StationaryPolicy policy;
  // Optimistic values per state.
  ValueVector values;
  // start_dist . values.
  double start_value = 0.0;
  int sweeps = 0;
};

// Extended value iteration: each (s, a) picks the most favorable next-state
// distribution inside its confidence ball, the planner then acts greedily
// on the converged optimistic values.
OptimisticPlanResult OptimisticPlan(const CountTable& counts,
                                    const RewardFunction& reward,
                                    double termination_prob, double delta,
                                    std::span<const double> start_dist,
                                    const PlannerOptions& options = {});

// Same as above with explicit radii. Used to check the planner against
// enumeration and by tests that force specific radii.
OptimisticPlanResult OptimisticPlan(const CountTable& counts,
                                    const RewardFunction& reward,
                                    double termination_prob,
                                    const ConfidenceTable& confidence,
                                    std::span<const double> start_dist,
                                    const PlannerOptions& options = {});

}  // namespace srp

#endif  // SRP_PLANNER_H_
