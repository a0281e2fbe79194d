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

#include "srp/beliefs.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace srp {
namespace {

// Dynamics-only rollout; rewards are irrelevant to the information gain.
Trajectory Rollout(const Cmp& cmp, const StationaryPolicy& policy,
                   int forced_steps, Rng& rng) {
  Trajectory out;
  StateId s = SampleCategorical(cmp.start_dist(), rng);
  for (int t = 0;; ++t) {
    out.states.push_back(s);
    if (cmp.IsTerminal(s)) break;
    if (t >= forced_steps && Uniform01(rng) < cmp.termination_prob()) break;
    const ActionId a = policy(s);
    out.actions.push_back(a);
    s = SampleCategorical(cmp.Row(s, a), rng);
  }
  return out;
}

}  // namespace

DirichletBelief::DirichletBelief(int num_states, int num_actions,
                                 double termination_prob,
                                 std::vector<double> alpha)
    : num_states_(num_states),
      num_actions_(num_actions),
      termination_prob_(termination_prob),
      alpha_(std::move(alpha)) {
  if (num_states < 1 || num_actions < 1) {
    throw std::invalid_argument("belief needs >= 1 state and action");
  }
  if (!(termination_prob > 0.0 && termination_prob <= 1.0)) {
    throw std::invalid_argument("termination probability must lie in (0, 1]");
  }
  if (alpha_.size() !=
      static_cast<std::size_t>(num_states) * num_actions * num_states) {
    throw std::invalid_argument("alpha has the wrong number of entries");
  }
  for (double x : alpha_) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw std::invalid_argument("concentrations must be positive");
    }
  }
}

DirichletBelief Prior(int num_states, int num_actions,
                      double termination_prob) {
  return DirichletBelief(
      num_states, num_actions, termination_prob,
      std::vector<double>(
          static_cast<std::size_t>(num_states) * num_actions * num_states,
          1.0));
}

DirichletBelief Update(DirichletBelief belief, const Trajectory& trajectory) {
  for (int t = 0; t < trajectory.num_transitions(); ++t) {
    belief.AddObservation(trajectory.states[t], trajectory.actions[t],
                          trajectory.states[t + 1]);
  }
  return belief;
}

Cmp SampleCmp(const DirichletBelief& belief, Rng& rng) {
  const int n = belief.num_states();
  std::vector<double> kernel(belief.alpha().size());
  for (StateId s = 0; s < n; ++s) {
    for (ActionId a = 0; a < belief.num_actions(); ++a) {
      const std::size_t offset =
          (static_cast<std::size_t>(s) * belief.num_actions() + a) * n;
      SampleDirichlet(belief.Row(s, a), rng,
                      std::span<double>(kernel.data() + offset, n));
    }
  }
  return Cmp(n, belief.num_actions(), std::move(kernel), UniformDistribution(n),
             belief.termination_prob());
}

Cmp MeanCmp(const DirichletBelief& belief) {
  const int n = belief.num_states();
  std::vector<double> kernel;
  kernel.reserve(belief.alpha().size());
  for (StateId s = 0; s < n; ++s) {
    for (ActionId a = 0; a < belief.num_actions(); ++a) {
      const auto row = belief.Row(s, a);
      const double total = std::accumulate(row.begin(), row.end(), 0.0);
      for (double x : row) kernel.push_back(x / total);
    }
  }
  return Cmp(n, belief.num_actions(), std::move(kernel), UniformDistribution(n),
             belief.termination_prob());
}

double TransitionLogLikelihood(const Cmp& cmp, const Trajectory& trajectory) {
  double log_p = 0.0;
  for (int t = 0; t < trajectory.num_transitions(); ++t) {
    log_p += std::log(cmp.Transition(trajectory.states[t],
                                     trajectory.actions[t],
                                     trajectory.states[t + 1]));
  }
  return log_p;
}

double LogMarginalLikelihood(const DirichletBelief& belief,
                             const Trajectory& trajectory) {
  DirichletBelief running = belief;
  double log_p = 0.0;
  for (int t = 0; t < trajectory.num_transitions(); ++t) {
    const StateId s = trajectory.states[t];
    const ActionId a = trajectory.actions[t];
    const StateId next = trajectory.states[t + 1];
    const auto row = running.Row(s, a);
    const double total = std::accumulate(row.begin(), row.end(), 0.0);
    log_p += std::log(running.Alpha(s, a, next) / total);
    running.AddObservation(s, a, next);
  }
  return log_p;
}

InfoGainEstimate ExpectedInformationGain(const DirichletBelief& belief,
                                         const StationaryPolicy& policy,
                                         const InfoGainOptions& options,
                                         Rng& rng) {
  if (options.num_model_samples < 1 || options.num_rollouts < 1) {
    throw std::invalid_argument("information gain needs >= 1 sample");
  }
  policy.Validate(belief.num_states(), belief.num_actions());
  const int models = options.num_model_samples;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int m = 0; m < models; ++m) {
    const Cmp model = SampleCmp(belief, rng);
    double model_sum = 0.0;
    for (int r = 0; r < options.num_rollouts; ++r) {
      const Trajectory x = Rollout(model, policy, options.forced_steps, rng);
      model_sum += TransitionLogLikelihood(model, x) -
                   LogMarginalLikelihood(belief, x);
    }
    const double model_mean = model_sum / options.num_rollouts;
    sum += model_mean;
    sum_sq += model_mean * model_mean;
  }
  InfoGainEstimate out;
  out.mean = sum / models;
  if (models > 1) {
    const double variance =
        std::max(0.0, (sum_sq - models * out.mean * out.mean) / (models - 1));
    out.std_error = std::sqrt(variance / models);
  }
  return out;
}

}  // namespace srp
