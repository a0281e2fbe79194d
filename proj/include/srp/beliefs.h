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

#ifndef SRP_BELIEFS_H_
#define SRP_BELIEFS_H_

#include <span>
#include <vector>

#include "srp/mdp_core.h"

namespace srp {

// Product-Dirichlet posterior over transition kernels: one independent
// Dirichlet per (s, a) row. The termination probability and the start
// distribution are public and are not inferred.
class DirichletBelief {
 public:
  // `alpha` is laid out [s][a][s'] like Cmp::kernel(). Every concentration
  // must be strictly positive.
  DirichletBelief(int num_states, int num_actions, double termination_prob,
                  std::vector<double> alpha);

  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  double termination_prob() const { return termination_prob_; }

  double Alpha(StateId s, ActionId a, StateId next) const {
    return alpha_[RowOffset(s, a) + next];
  }
  std::span<const double> Row(StateId s, ActionId a) const {
    return {alpha_.data() + RowOffset(s, a),
            static_cast<std::size_t>(num_states_)};
  }
  const std::vector<double>& alpha() const { return alpha_; }

  // Conjugate update: alpha(s, a, s') += n.
  void AddObservation(StateId s, ActionId a, StateId next, double n = 1.0) {
    alpha_[RowOffset(s, a) + next] += n;
  }

  bool operator==(const DirichletBelief&) const = default;

 private:
  std::size_t RowOffset(StateId s, ActionId a) const {
    return (static_cast<std::size_t>(s) * num_actions_ + a) * num_states_;
  }

  int num_states_;
  int num_actions_;
  double termination_prob_;
  std::vector<double> alpha_;
};

// All-ones concentrations: the same law GenerateRandomCmp draws from.
DirichletBelief Prior(int num_states, int num_actions, double termination_prob);

// Posterior after observing every resolved transition of `trajectory`.
DirichletBelief Update(DirichletBelief belief, const Trajectory& trajectory);

// One kernel drawn from the posterior; uniform start distribution.
Cmp SampleCmp(const DirichletBelief& belief, Rng& rng);

// Posterior-mean kernel (alpha normalized per row).
Cmp MeanCmp(const DirichletBelief& belief);

// Sum over the trajectory's transitions of ln P(s' | s, a) under `cmp`.
// Start-state and termination factors are omitted; they are shared by every
// model with the same public start distribution and termination law.
double TransitionLogLikelihood(const Cmp& cmp, const Trajectory& trajectory);

// ln of the belief's marginal (Dirichlet-multinomial) probability of the
// trajectory's transitions, computed by updating the predictive
// alpha(s, a, s') / sum alpha(s, a, .) one transition at a time.
double LogMarginalLikelihood(const DirichletBelief& belief,
                             const Trajectory& trajectory);

struct InfoGainOptions {
  int num_model_samples = 1000;
  int num_rollouts = 10;
  // Transitions taken before geometric termination applies. With
  // termination_prob = 1 and forced_steps = 1 every experiment observes
  // exactly one transition.
  int forced_steps = 0;
};

struct InfoGainEstimate {
  double mean = 0.0;
  // Standard error over the per-model averages.
  double std_error = 0.0;
};

// Monte-Carlo estimate of the expected information gain of running `policy`
// for one stage:
//   E_{mu ~ belief} E_{x ~ P_mu} [ln P_mu(x) - ln P_belief(x)].
// Rewards do not influence trajectories, so none are taken. Diagnostic
// only; no agent acts on it.
InfoGainEstimate ExpectedInformationGain(const DirichletBelief& belief,
                                         const StationaryPolicy& policy,
                                         const InfoGainOptions& options,
                                         Rng& rng);

}  // namespace srp

#endif  // SRP_BELIEFS_H_
