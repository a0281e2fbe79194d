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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace srp {
namespace {

void CheckReward(const Cmp& cmp, const RewardFunction& reward) {
  if (reward.num_states() != cmp.num_states()) {
    throw std::invalid_argument("reward function dimension mismatch");
  }
}

double Dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// First maximizer, so ties go to the lowest action index.
ActionId ArgMaxLowest(std::span<const double> q_values) {
  ActionId best = 0;
  for (ActionId a = 1; a < static_cast<ActionId>(q_values.size()); ++a) {
    if (q_values[a] > q_values[best]) best = a;
  }
  return best;
}

double SupNormDiff(const ValueVector& a, const ValueVector& b) {
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
  }
  return diff;
}

// Generic value iteration. `continuation(s, a, values)` returns the expected
// next-state value of taking a at s, possibly after an inner maximization.
template <typename Continuation>
PlanResult IterateValues(int num_states, int num_actions,
                         const RewardFunction& reward, double discount,
                         std::span<const char> terminal,
                         const PlannerOptions& options,
                         Continuation&& continuation) {
  ValueVector values(reward.values());
  ValueVector next(num_states);
  std::vector<double> q_values(num_actions);
  int sweeps = 0;
  while (sweeps < options.max_sweeps) {
    continuation.Prepare(values);
    for (StateId s = 0; s < num_states; ++s) {
      if (terminal[s]) {
        next[s] = reward(s);
        continue;
      }
      double best = continuation(s, 0, values);
      for (ActionId a = 1; a < num_actions; ++a) {
        best = std::max(best, continuation(s, a, values));
      }
      next[s] = reward(s) + discount * best;
    }
    ++sweeps;
    const double change = SupNormDiff(values, next);
    values.swap(next);
    if (options.residual_trace != nullptr) {
      options.residual_trace->push_back(change);
    }
    if (change <= options.tolerance) break;
  }

  continuation.Prepare(values);
  std::vector<ActionId> actions(num_states, 0);
  for (StateId s = 0; s < num_states; ++s) {
    if (terminal[s]) continue;
    for (ActionId a = 0; a < num_actions; ++a) {
      q_values[a] = continuation(s, a, values);
    }
    actions[s] = ArgMaxLowest(q_values);
  }
  return {StationaryPolicy(std::move(actions)), std::move(values), sweeps};
}

std::vector<char> TerminalMask(const Cmp& cmp) {
  std::vector<char> mask(cmp.num_states());
  for (StateId s = 0; s < cmp.num_states(); ++s) mask[s] = cmp.IsTerminal(s);
  return mask;
}

struct KnownModel {
  const Cmp& cmp;
  void Prepare(const ValueVector&) {}
  double operator()(StateId s, ActionId a, const ValueVector& values) const {
    return Dot(cmp.Row(s, a), values);
  }
};

class OptimisticModel {
 public:
  OptimisticModel(const CountTable& counts, const ConfidenceTable& confidence)
      : counts_(counts),
        confidence_(confidence),
        num_states_(counts.num_states()),
        empirical_(num_states_),
        row_(num_states_) {}

  void Prepare(const ValueVector& values) { order_ = DescendingOrder(values); }

  double operator()(StateId s, ActionId a, const ValueVector& values) {
    const std::int64_t n = counts_.PairCount(s, a);
    const auto row = counts_.Row(s, a);
    for (StateId i = 0; i < num_states_; ++i) {
      empirical_[i] =
          n > 0 ? static_cast<double>(row[i]) / n : 1.0 / num_states_;
    }
    OptimisticRow(empirical_, confidence_.radius(s, a), order_, row_);
    return Dot(row_, values);
  }

 private:
  const CountTable& counts_;
  const ConfidenceTable& confidence_;
  int num_states_;
  std::vector<StateId> order_;
  std::vector<double> empirical_;
  std::vector<double> row_;
};

}  // namespace

ValueVector PolicyEvaluation(const Cmp& cmp, const RewardFunction& reward,
                             const StationaryPolicy& policy) {
  CheckReward(cmp, reward);
  policy.Validate(cmp.num_states(), cmp.num_actions());
  const int n = cmp.num_states();
  const double discount = cmp.discount();
  Eigen::VectorXd rhs(n);
  for (StateId s = 0; s < n; ++s) rhs(s) = reward(s);
  if (discount == 0.0) return reward.values();

  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n);
  for (StateId s = 0; s < n; ++s) {
    if (cmp.IsTerminal(s)) continue;
    const auto row = cmp.Row(s, policy(s));
    for (StateId next = 0; next < n; ++next) {
      system(s, next) -= discount * row[next];
    }
  }
  const Eigen::VectorXd solution = system.partialPivLu().solve(rhs);
  ValueVector values(n);
  for (StateId s = 0; s < n; ++s) values[s] = std::max(0.0, solution(s));
  return values;
}

PlanResult OraclePolicy(const Cmp& cmp, const RewardFunction& reward,
                        const PlannerOptions& options) {
  CheckReward(cmp, reward);
  const auto terminal = TerminalMask(cmp);
  return IterateValues(cmp.num_states(), cmp.num_actions(), reward,
                       cmp.discount(), terminal, options, KnownModel{cmp});
}

double StageValue(const Cmp& cmp, const RewardFunction& reward,
                  const StationaryPolicy& policy) {
  return Dot(cmp.start_dist(), PolicyEvaluation(cmp, reward, policy));
}

double WeissmanRadius(std::int64_t n, int support_size, double delta) {
  if (support_size < 1) throw std::invalid_argument("support_size must be >= 1");
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1]");
  }
  if (n < 0) throw std::invalid_argument("sample count must be >= 0");
  if (n == 0) return 2.0;
  const double log_term = (support_size - 1) * std::log(2.0) - std::log(delta);
  return std::min(2.0, std::sqrt(2.0 * log_term / static_cast<double>(n)));
}

ConfidenceTable ConfidenceTable::FromCounts(const CountTable& counts,
                                            double delta) {
  const int n_states = counts.num_states();
  const int n_actions = counts.num_actions();
  const double pair_delta = delta / (static_cast<double>(n_states) * n_actions);
  std::vector<double> radii;
  radii.reserve(static_cast<std::size_t>(n_states) * n_actions);
  for (StateId s = 0; s < n_states; ++s) {
    for (ActionId a = 0; a < n_actions; ++a) {
      radii.push_back(WeissmanRadius(counts.PairCount(s, a), n_states,
                                     pair_delta));
    }
  }
  return ConfidenceTable(n_actions, delta, pair_delta, std::move(radii));
}

ConfidenceTable ConfidenceTable::Constant(int num_states, int num_actions,
                                          double radius) {
  return ConfidenceTable(
      num_actions, 0.0, 0.0,
      std::vector<double>(static_cast<std::size_t>(num_states) * num_actions,
                          radius));
}

std::vector<StateId> DescendingOrder(std::span<const double> values) {
  std::vector<StateId> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](StateId a, StateId b) {
    return values[a] > values[b];
  });
  return order;
}

void OptimisticRow(std::span<const double> empirical, double radius,
                   std::span<const StateId> order, std::span<double> out) {
  std::copy(empirical.begin(), empirical.end(), out.begin());
  const StateId best = order.front();
  const double added = std::min(1.0 - empirical[best], radius / 2.0);
  if (added <= 0.0) return;
  out[best] = empirical[best] + added;
  double excess = added;
  for (auto it = order.rbegin(); it != order.rend() && excess > 0.0; ++it) {
    if (*it == best) continue;
    const double removed = std::min(out[*it], excess);
    out[*it] -= removed;
    excess -= removed;
  }
}

std::vector<double> OptimisticRow(std::span<const double> values,
                                  std::span<const double> empirical,
                                  double radius) {
  const auto order = DescendingOrder(values);
  std::vector<double> out(empirical.size());
  OptimisticRow(empirical, radius, order, out);
  return out;
}

OptimisticPlanResult OptimisticPlan(const CountTable& counts,
                                    const RewardFunction& reward,
                                    double termination_prob, double delta,
                                    std::span<const double> start_dist,
                                    const PlannerOptions& options) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1]");
  }
  return OptimisticPlan(counts, reward, termination_prob,
                        ConfidenceTable::FromCounts(counts, delta), start_dist,
                        options);
}

OptimisticPlanResult OptimisticPlan(const CountTable& counts,
                                    const RewardFunction& reward,
                                    double termination_prob,
                                    const ConfidenceTable& confidence,
                                    std::span<const double> start_dist,
                                    const PlannerOptions& options) {
  if (!(termination_prob > 0.0 && termination_prob <= 1.0)) {
    throw std::invalid_argument("termination probability must lie in (0, 1]");
  }
  if (reward.num_states() != counts.num_states() ||
      static_cast<int>(start_dist.size()) != counts.num_states()) {
    throw std::invalid_argument("optimistic plan dimension mismatch");
  }
  const std::vector<char> terminal(counts.num_states(), 0);
  PlanResult plan = IterateValues(
      counts.num_states(), counts.num_actions(), reward, 1.0 - termination_prob,
      terminal, options, OptimisticModel(counts, confidence));
  OptimisticPlanResult out;
  out.start_value = Dot(start_dist, plan.values);
  out.policy = std::move(plan.policy);
  out.values = std::move(plan.values);
  out.sweeps = plan.sweeps;
  return out;
}

}  // namespace srp
