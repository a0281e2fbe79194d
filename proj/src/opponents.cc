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

#include "srp/opponents.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace srp {

NatureOpponent::NatureOpponent(int num_states) : num_states_(num_states) {
  if (num_states < 1) throw std::invalid_argument("num_states must be >= 1");
}

RewardFunction NatureOpponent::ChooseReward(Rng& rng) {
  return RewardFunction(SampleUniformSimplex(num_states_, rng));
}

AdversarialOpponent::AdversarialOpponent(Cmp truth)
    : truth_(std::move(truth)),
      counts_(truth_.num_states(), truth_.num_actions()) {
  const int n = truth_.num_states();
  oracle_values_.reserve(n);
  for (StateId s = 0; s < n; ++s) {
    const RewardFunction r = RewardFunction::PointMass(n, s);
    oracle_values_.push_back(
        StageValue(truth_, r, OraclePolicy(truth_, r).policy));
  }
}

std::vector<double> AdversarialOpponent::CandidateGaps() const {
  const int n = truth_.num_states();
  const Cmp empirical =
      EmpiricalCmp(counts_, truth_.termination_prob(), truth_.start_dist());
  std::vector<double> gaps;
  gaps.reserve(n);
  for (StateId s = 0; s < n; ++s) {
    const RewardFunction r = RewardFunction::PointMass(n, s);
    const StationaryPolicy believed = OraclePolicy(empirical, r).policy;
    gaps.push_back(oracle_values_[s] - StageValue(truth_, r, believed));
  }
  return gaps;
}

RewardFunction AdversarialOpponent::ChooseReward(Rng&) {
  const std::vector<double> gaps = CandidateGaps();
  const auto best = std::distance(gaps.begin(),
                                  std::max_element(gaps.begin(), gaps.end()));
  return RewardFunction::PointMass(truth_.num_states(),
                                   static_cast<StateId>(best));
}

void AdversarialOpponent::Observe(const Trajectory& trajectory) {
  AccumulateCounts(counts_, trajectory);
}

bool IsOpponentName(std::string_view name) {
  return std::ranges::find(kOpponentNames, name) != std::end(kOpponentNames);
}

std::unique_ptr<Opponent> MakeOpponent(std::string_view name,
                                       const Cmp& truth) {
  if (name == "nature") {
    return std::make_unique<NatureOpponent>(truth.num_states());
  }
  if (name == "adversarial") {
    return std::make_unique<AdversarialOpponent>(truth);
  }
  throw std::invalid_argument("unknown opponent '" + std::string(name) +
                              "' (expected nature or adversarial)");
}

}  // namespace srp
