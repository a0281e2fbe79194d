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

#ifndef SRP_OPPONENTS_H_
#define SRP_OPPONENTS_H_

#include <memory>
#include <string_view>
#include <vector>

#include "srp/mdp_core.h"
#include "srp/planner.h"

namespace srp {

// Chooses the payoff of each stage and watches the public trajectories.
class Opponent {
 public:
  virtual ~Opponent() = default;

  virtual std::string_view name() const = 0;
  virtual RewardFunction ChooseReward(Rng& rng) = 0;
  virtual void Observe(const Trajectory& trajectory) = 0;
};

// Draws every stage's rewards i.i.d. uniformly from the simplex over states.
class NatureOpponent : public Opponent {
 public:
  explicit NatureOpponent(int num_states);

  std::string_view name() const override { return "nature"; }
  RewardFunction ChooseReward(Rng& rng) override;
  void Observe(const Trajectory&) override {}

 private:
  int num_states_;
};

// Myopic adversary. Knows the true model and keeps the public empirical
// estimate; each stage it places a unit reward on the single state whose
// point mass maximizes
//   V(r, oracle(true, r)) - V(r, oracle(empirical, r)),
// both values taken in the true model. Ties go to the lowest state index.
class AdversarialOpponent : public Opponent {
 public:
  explicit AdversarialOpponent(Cmp truth);

  std::string_view name() const override { return "adversarial"; }
  RewardFunction ChooseReward(Rng& rng) override;
  void Observe(const Trajectory& trajectory) override;

  // Gap of every candidate point mass, recomputed from the current counts.
  std::vector<double> CandidateGaps() const;
  const CountTable& counts() const { return counts_; }
  const Cmp& truth() const { return truth_; }

 private:
  Cmp truth_;
  CountTable counts_;
  // Oracle stage value in the true model for each candidate point mass.
  std::vector<double> oracle_values_;
};

inline constexpr std::string_view kOpponentNames[] = {"nature", "adversarial"};

bool IsOpponentName(std::string_view name);

// Throws std::invalid_argument on an unknown name.
std::unique_ptr<Opponent> MakeOpponent(std::string_view name, const Cmp& truth);

}  // namespace srp

#endif  // SRP_OPPONENTS_H_
