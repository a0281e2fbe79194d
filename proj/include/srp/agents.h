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

#ifndef SRP_AGENTS_H_
#define SRP_AGENTS_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "srp/beliefs.h"
#include "srp/mdp_core.h"
#include "srp/planner.h"

namespace srp {

// Stage-policy selector. Each stage the game calls BeginStage once with the
// revealed payoff, plays the returned policy for the whole stage, then hands
// the trajectory to EndStage. Agents are pure functions of their model
// state, the reward and the generator passed in.
class Agent {
 public:
  Agent(int num_states, int num_actions, double termination_prob)
      : num_states_(num_states),
        num_actions_(num_actions),
        termination_prob_(termination_prob) {}
  virtual ~Agent() = default;

  virtual std::string_view name() const = 0;
  virtual StationaryPolicy BeginStage(const RewardFunction& reward,
                                      Rng& rng) = 0;

  void EndStage(const Trajectory& trajectory) {
    Observe(trajectory);
    ++stage_index_;
  }

  // 1-based index of the stage about to be (or being) played.
  int stage_index() const { return stage_index_; }
  int num_states() const { return num_states_; }
  int num_actions() const { return num_actions_; }
  double termination_prob() const { return termination_prob_; }

 protected:
  virtual void Observe(const Trajectory& trajectory) = 0;

 private:
  int num_states_;
  int num_actions_;
  double termination_prob_;
  int stage_index_ = 1;
};

// Certainty equivalence: plans on the posterior-mean model.
class GreedyAgent : public Agent {
 public:
  GreedyAgent(int num_states, int num_actions, double termination_prob);

  std::string_view name() const override { return "greedy"; }
  StationaryPolicy BeginStage(const RewardFunction& reward, Rng& rng) override;

  const DirichletBelief& belief() const { return belief_; }

 protected:
  void Observe(const Trajectory& trajectory) override;

 private:
  DirichletBelief belief_;
};

// Optimism: plans in the most favorable model inside per-pair L1 balls with
// failure budget 1/k at stage k.
class UcsrpAgent : public Agent {
 public:
  UcsrpAgent(int num_states, int num_actions, double termination_prob,
             std::vector<double> start_dist);

  std::string_view name() const override { return "ucsrp"; }
  StationaryPolicy BeginStage(const RewardFunction& reward, Rng& rng) override;

  const CountTable& counts() const { return counts_; }
  // Optimistic start value of the most recent BeginStage.
  double last_optimistic_value() const { return last_optimistic_value_; }
  double CurrentDelta() const { return 1.0 / stage_index(); }

 protected:
  void Observe(const Trajectory& trajectory) override;

 private:
  CountTable counts_;
  std::vector<double> start_dist_;
  double last_optimistic_value_ = 0.0;
};

// Posterior sampling: plans on one model drawn from the belief.
class BtsrpAgent : public Agent {
 public:
  BtsrpAgent(int num_states, int num_actions, double termination_prob);

  std::string_view name() const override { return "btsrp"; }
  StationaryPolicy BeginStage(const RewardFunction& reward, Rng& rng) override;

  const DirichletBelief& belief() const { return belief_; }

 protected:
  void Observe(const Trajectory& trajectory) override;

 private:
  DirichletBelief belief_;
};

// Agent names accepted on the command line and in config files.
inline constexpr std::string_view kAgentNames[] = {"greedy", "ucsrp", "btsrp"};

bool IsAgentName(std::string_view name);

// Throws std::invalid_argument on an unknown name.
std::unique_ptr<Agent> MakeAgent(std::string_view name, const PublicInfo& info);

}  // namespace srp

#endif  // SRP_AGENTS_H_
