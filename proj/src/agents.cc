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

#include "srp/agents.h"

#include <algorithm>
#include <stdexcept>

namespace srp {

GreedyAgent::GreedyAgent(int num_states, int num_actions,
                         double termination_prob)
    : Agent(num_states, num_actions, termination_prob),
      belief_(Prior(num_states, num_actions, termination_prob)) {}

StationaryPolicy GreedyAgent::BeginStage(const RewardFunction& reward, Rng&) {
  return OraclePolicy(MeanCmp(belief_), reward).policy;
}

void GreedyAgent::Observe(const Trajectory& trajectory) {
  belief_ = Update(std::move(belief_), trajectory);
}

UcsrpAgent::UcsrpAgent(int num_states, int num_actions,
                       double termination_prob, std::vector<double> start_dist)
    : Agent(num_states, num_actions, termination_prob),
      counts_(num_states, num_actions),
      start_dist_(std::move(start_dist)) {
  if (static_cast<int>(start_dist_.size()) != num_states) {
    throw std::invalid_argument("start_dist has the wrong length");
  }
}

StationaryPolicy UcsrpAgent::BeginStage(const RewardFunction& reward, Rng&) {
  OptimisticPlanResult plan = OptimisticPlan(
      counts_, reward, termination_prob(), CurrentDelta(), start_dist_);
  last_optimistic_value_ = plan.start_value;
  return std::move(plan.policy);
}

void UcsrpAgent::Observe(const Trajectory& trajectory) {
  AccumulateCounts(counts_, trajectory);
}

BtsrpAgent::BtsrpAgent(int num_states, int num_actions,
                       double termination_prob)
    : Agent(num_states, num_actions, termination_prob),
      belief_(Prior(num_states, num_actions, termination_prob)) {}

StationaryPolicy BtsrpAgent::BeginStage(const RewardFunction& reward,
                                        Rng& rng) {
  return OraclePolicy(SampleCmp(belief_, rng), reward).policy;
}

void BtsrpAgent::Observe(const Trajectory& trajectory) {
  belief_ = Update(std::move(belief_), trajectory);
}

bool IsAgentName(std::string_view name) {
  return std::ranges::find(kAgentNames, name) != std::end(kAgentNames);
}

std::unique_ptr<Agent> MakeAgent(std::string_view name,
                                 const PublicInfo& info) {
  if (name == "greedy") {
    return std::make_unique<GreedyAgent>(info.num_states, info.num_actions,
                                         info.termination_prob);
  }
  if (name == "ucsrp") {
    return std::make_unique<UcsrpAgent>(info.num_states, info.num_actions,
                                        info.termination_prob, info.start_dist);
  }
  if (name == "btsrp") {
    return std::make_unique<BtsrpAgent>(info.num_states, info.num_actions,
                                        info.termination_prob);
  }
  throw std::invalid_argument("unknown agent '" + std::string(name) +
                              "' (expected greedy, ucsrp or btsrp)");
}

}  // namespace srp
