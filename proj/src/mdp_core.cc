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

#include "srp/mdp_core.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace srp {
namespace {

void CheckDistribution(std::span<const double> row, const std::string& what) {
  double total = 0.0;
  for (double p : row) {
    if (!(p >= 0.0 && p <= 1.0 + kProbTolerance)) {
      throw std::invalid_argument(what + " has an entry outside [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kProbTolerance) {
    throw std::invalid_argument(what + " does not sum to 1 (sum = " +
                                std::to_string(total) + ")");
  }
}

void CheckDimensions(int num_states, int num_actions) {
  if (num_states < 1) throw std::invalid_argument("num_states must be >= 1");
  if (num_actions < 1) throw std::invalid_argument("num_actions must be >= 1");
}

void CheckTerminationProb(double q) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw std::invalid_argument("termination probability must lie in (0, 1]");
  }
}

}  // namespace

Cmp::Cmp(int num_states, int num_actions, std::vector<double> kernel,
         std::vector<double> start_dist, double termination_prob,
         std::vector<StateId> terminal_states)
    : num_states_(num_states),
      num_actions_(num_actions),
      kernel_(std::move(kernel)),
      start_dist_(std::move(start_dist)),
      termination_prob_(termination_prob),
      terminal_states_(std::move(terminal_states)) {
  CheckDimensions(num_states, num_actions);
  CheckTerminationProb(termination_prob);
  const std::size_t rows = static_cast<std::size_t>(num_states) * num_actions;
  if (kernel_.size() != rows * num_states) {
    throw std::invalid_argument("kernel has the wrong number of entries");
  }
  if (start_dist_.size() != static_cast<std::size_t>(num_states)) {
    throw std::invalid_argument("start_dist has the wrong length");
  }
  for (StateId s = 0; s < num_states; ++s) {
    for (ActionId a = 0; a < num_actions; ++a) {
      CheckDistribution(Row(s, a), "kernel row (" + std::to_string(s) + ", " +
                                       std::to_string(a) + ")");
    }
  }
  CheckDistribution(start_dist_, "start_dist");
  terminal_mask_.assign(num_states, 0);
  for (StateId s : terminal_states_) {
    if (s < 0 || s >= num_states) {
      throw std::invalid_argument("terminal state out of range");
    }
    terminal_mask_[s] = 1;
  }
}

RewardFunction::RewardFunction(std::vector<double> rewards)
    : rewards_(std::move(rewards)) {
  if (rewards_.empty()) {
    throw std::invalid_argument("reward function must cover >= 1 state");
  }
  double total = 0.0;
  for (double r : rewards_) {
    if (!(r >= 0.0 && r <= 1.0)) {
      throw std::invalid_argument("rewards must lie in [0, 1]");
    }
    total += r;
  }
  if (total > 1.0 + kProbTolerance) {
    throw std::invalid_argument("rewards must sum to at most 1");
  }
}

RewardFunction RewardFunction::PointMass(int num_states, StateId target) {
  std::vector<double> r(num_states, 0.0);
  r.at(target) = 1.0;
  return RewardFunction(std::move(r));
}

StationaryPolicy StationaryPolicy::FromIndex(std::uint64_t index,
                                             int num_states, int num_actions) {
  std::vector<ActionId> actions(num_states);
  for (int s = 0; s < num_states; ++s) {
    actions[s] = static_cast<ActionId>(index % num_actions);
    index /= num_actions;
  }
  return StationaryPolicy(std::move(actions));
}

void StationaryPolicy::Validate(int num_states, int num_actions) const {
  if (this->num_states() != num_states) {
    throw std::invalid_argument("policy covers " +
                                std::to_string(this->num_states()) +
                                " states, expected " +
                                std::to_string(num_states));
  }
  for (ActionId a : actions_) {
    if (a < 0 || a >= num_actions) {
      throw std::invalid_argument("policy action out of range");
    }
  }
}

CountTable::CountTable(int num_states, int num_actions)
    : num_states_(num_states), num_actions_(num_actions) {
  CheckDimensions(num_states, num_actions);
  counts_.assign(static_cast<std::size_t>(num_states) * num_actions * num_states,
                 0);
  pair_totals_.assign(static_cast<std::size_t>(num_states) * num_actions, 0);
}

std::int64_t CountTable::Total() const {
  return std::accumulate(pair_totals_.begin(), pair_totals_.end(),
                         std::int64_t{0});
}

void CountTable::Add(StateId s, ActionId a, StateId next, std::int64_t n) {
  counts_[RowOffset(s, a) + next] += n;
  pair_totals_[static_cast<std::size_t>(s) * num_actions_ + a] += n;
}

std::vector<double> UniformDistribution(int n) {
  return std::vector<double>(n, 1.0 / n);
}

Cmp GenerateRandomCmp(int num_states, int num_actions, double termination_prob,
                      std::uint64_t seed) {
  CheckDimensions(num_states, num_actions);
  CheckTerminationProb(termination_prob);
  Rng rng(seed);
  const std::size_t rows = static_cast<std::size_t>(num_states) * num_actions;
  std::vector<double> kernel(rows * num_states);
  const std::vector<double> ones(num_states, 1.0);
  for (std::size_t row = 0; row < rows; ++row) {
    SampleDirichlet(ones, rng,
                    std::span<double>(kernel.data() + row * num_states,
                                      num_states));
  }
  return Cmp(num_states, num_actions, std::move(kernel),
             UniformDistribution(num_states), termination_prob);
}

Trajectory SimulateStage(const Cmp& cmp, const StationaryPolicy& policy,
                         const RewardFunction& reward, Rng& rng) {
  policy.Validate(cmp.num_states(), cmp.num_actions());
  if (reward.num_states() != cmp.num_states()) {
    throw std::invalid_argument("reward function dimension mismatch");
  }
  Trajectory out;
  StateId s = SampleCategorical(cmp.start_dist(), rng);
  for (;;) {
    out.states.push_back(s);
    out.payoff += reward(s);
    if (cmp.IsTerminal(s)) break;
    if (Uniform01(rng) < cmp.termination_prob()) break;
    const ActionId a = policy(s);
    out.actions.push_back(a);
    s = SampleCategorical(cmp.Row(s, a), rng);
  }
  return out;
}

void AccumulateCounts(CountTable& counts, const Trajectory& trajectory) {
  for (int t = 0; t < trajectory.num_transitions(); ++t) {
    counts.Add(trajectory.states[t], trajectory.actions[t],
               trajectory.states[t + 1]);
  }
}

Cmp EmpiricalCmp(const CountTable& counts, double termination_prob,
                 std::span<const double> start_dist) {
  const int n_states = counts.num_states();
  const int n_actions = counts.num_actions();
  std::vector<double> kernel;
  kernel.reserve(static_cast<std::size_t>(n_states) * n_actions * n_states);
  for (StateId s = 0; s < n_states; ++s) {
    for (ActionId a = 0; a < n_actions; ++a) {
      const std::int64_t n = counts.PairCount(s, a);
      for (std::int64_t c : counts.Row(s, a)) {
        kernel.push_back(n > 0 ? static_cast<double>(c) / n : 1.0 / n_states);
      }
    }
  }
  return Cmp(n_states, n_actions, std::move(kernel),
             std::vector<double>(start_dist.begin(), start_dist.end()),
             termination_prob);
}

}  // namespace srp
