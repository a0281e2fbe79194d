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

#ifndef SRP_MDP_CORE_H_
#define SRP_MDP_CORE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "srp/random.h"

namespace srp {

using StateId = int;
using ActionId = int;

// Tolerance for probability rows summing to one.
inline constexpr double kProbTolerance = 1e-9;

// A tabular controlled Markov process: an MDP without rewards. Stages end at
// a terminal state, or with probability `termination_prob` at any other state.
//
// Immutable after construction; the constructor validates every invariant
// and throws std::invalid_argument on violation.
class Cmp {
 public:
  // `kernel` is laid out [s][a][s'] in row-major order.
  Cmp(int num_states, int num_actions, std::vector<double> kernel,
      std::vector<double> start_dist, double termination_prob,
      std::vector<StateId> terminal_states = {});

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  double termination_prob() const { return termination_prob_; }
  // Effective discount of the equivalent infinite-horizon problem.
  double discount() const { return 1.0 - termination_prob_; }

  std::span<const double> Row(StateId s, ActionId a) const {
    return {kernel_.data() + RowOffset(s, a),
            static_cast<std::size_t>(num_states_)};
  }
  double Transition(StateId s, ActionId a, StateId next) const {
    return kernel_[RowOffset(s, a) + next];
  }
  std::span<const double> start_dist() const { return start_dist_; }
  const std::vector<double>& kernel() const { return kernel_; }
  const std::vector<StateId>& terminal_states() const {
    return terminal_states_;
  }
  bool IsTerminal(StateId s) const { return terminal_mask_[s] != 0; }

  bool operator==(const Cmp&) const = default;

 private:
  std::size_t RowOffset(StateId s, ActionId a) const {
    return (static_cast<std::size_t>(s) * num_actions_ + a) * num_states_;
  }

  int num_states_;
  int num_actions_;
  std::vector<double> kernel_;
  std::vector<double> start_dist_;
  double termination_prob_;
  std::vector<StateId> terminal_states_;
  std::vector<char> terminal_mask_;
};

// Additive stage payoff: every visit to state s pays r(s). Entries lie in
// [0, 1] and sum to at most 1.
class RewardFunction {
 public:
  explicit RewardFunction(std::vector<double> rewards);

  static RewardFunction Zero(int num_states) {
    return RewardFunction(std::vector<double>(num_states, 0.0));
  }
  static RewardFunction PointMass(int num_states, StateId target);

  int num_states() const { return static_cast<int>(rewards_.size()); }
  double operator()(StateId s) const { return rewards_[s]; }
  const std::vector<double>& values() const { return rewards_; }

  bool operator==(const RewardFunction&) const = default;

 private:
  std::vector<double> rewards_;
};

// Deterministic state -> action map, fixed for a whole stage.
class StationaryPolicy {
 public:
  StationaryPolicy() = default;
  explicit StationaryPolicy(std::vector<ActionId> actions)
      : actions_(std::move(actions)) {}

  // Every state takes action 0.
  static StationaryPolicy LowestIndex(int num_states) {
    return StationaryPolicy(std::vector<ActionId>(num_states, 0));
  }
  // Decodes policy number `index` in base `num_actions`, state 0 being the
  // least significant digit. Enumerates all num_actions^num_states policies.
  static StationaryPolicy FromIndex(std::uint64_t index, int num_states,
                                    int num_actions);

  int num_states() const { return static_cast<int>(actions_.size()); }
  ActionId operator()(StateId s) const { return actions_[s]; }
  const std::vector<ActionId>& actions() const { return actions_; }

  // Throws std::invalid_argument unless the policy fits a Cmp of this shape.
  void Validate(int num_states, int num_actions) const;

  bool operator==(const StationaryPolicy&) const = default;

 private:
  std::vector<ActionId> actions_;
};

// One stage's history. `actions[t]` was taken at `states[t]` and led to
// `states[t + 1]`; the final state has no resolved action, so
// actions.size() == states.size() - 1.
struct Trajectory {
  std::vector<StateId> states;
  std::vector<ActionId> actions;
  double payoff = 0.0;

  int num_transitions() const { return static_cast<int>(actions.size()); }
};

// What every player knows about a game before it starts. The kernel stays
// hidden.
struct PublicInfo {
  int num_states = 0;
  int num_actions = 0;
  double termination_prob = 1.0;
  std::vector<double> start_dist;

  static PublicInfo Of(const Cmp& cmp) {
    return {cmp.num_states(), cmp.num_actions(), cmp.termination_prob(),
            std::vector<double>(cmp.start_dist().begin(),
                                cmp.start_dist().end())};
  }
};

// Visit counts n(s, a, s') of observed transitions.
class CountTable {
 public:
  CountTable(int num_states, int num_actions);

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }

  std::int64_t Count(StateId s, ActionId a, StateId next) const {
    return counts_[RowOffset(s, a) + next];
  }
  std::span<const std::int64_t> Row(StateId s, ActionId a) const {
    return {counts_.data() + RowOffset(s, a),
            static_cast<std::size_t>(num_states_)};
  }
  std::int64_t PairCount(StateId s, ActionId a) const {
    return pair_totals_[static_cast<std::size_t>(s) * num_actions_ + a];
  }
  std::int64_t Total() const;

  void Add(StateId s, ActionId a, StateId next, std::int64_t n = 1);

  bool operator==(const CountTable&) const = default;

 private:
  std::size_t RowOffset(StateId s, ActionId a) const {
    return (static_cast<std::size_t>(s) * num_actions_ + a) * num_states_;
  }

  int num_states_;
  int num_actions_;
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> pair_totals_;
};

// Random instance: every kernel row drawn uniformly from the simplex, uniform
// start distribution, no terminal states. Deterministic in `seed`.
Cmp GenerateRandomCmp(int num_states, int num_actions, double termination_prob,
                      std::uint64_t seed);

// Plays one stage. The reward of every visited state is collected before the
// termination check, including the first state.
Trajectory SimulateStage(const Cmp& cmp, const StationaryPolicy& policy,
                         const RewardFunction& reward, Rng& rng);

// Adds every resolved transition of `trajectory` to `counts`.
void AccumulateCounts(CountTable& counts, const Trajectory& trajectory);

// Maximum-likelihood model. Unvisited pairs get a uniform row.
Cmp EmpiricalCmp(const CountTable& counts, double termination_prob,
                 std::span<const double> start_dist);

// Uniform distribution over n states.
std::vector<double> UniformDistribution(int n);

}  // namespace srp

#endif  // SRP_MDP_CORE_H_
