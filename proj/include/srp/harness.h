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

#ifndef SRP_HARNESS_H_
#define SRP_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "srp/agents.h"
#include "srp/mdp_core.h"
#include "srp/opponents.h"

namespace srp {

// Reported when a config file is malformed. `field()` names the offending
// key, or is empty for whole-document problems.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ExperimentConfig {
  int num_states = 4;
  int num_actions = 2;
  double q = 0.5;
  int num_stages = 500;
  int num_runs = 100;
  // One or more agent names. Every agent plays the same environments and,
  // against nature, the same reward sequences.
  std::vector<std::string> agents = {"greedy"};
  std::string opponent = "nature";
  std::uint64_t master_seed = 0;
  std::string output_path;

  // Throws ConfigError naming the first invalid field.
  void Validate() const;
};

// Parses one config object from JSON text. Keys are exactly the
// ExperimentConfig fields in snake_case with `agent` holding a name or a
// list of names; unknown keys are rejected. `master_seed` defaults to 0 and
// `output_path` to empty.
ExperimentConfig ParseConfig(const std::string& json_text);

// Reads a file holding either one config object or an array of them.
std::vector<ExperimentConfig> LoadConfigs(const std::string& path);

// Seed of run `run_index` (1-based): DeriveSeed(master_seed, run_index).
// Within a run, stream 0 generates the environment and stream 1 drives the
// game.
std::uint64_t RunSeed(std::uint64_t master_seed, int run_index);

// Plays `num_stages` stages and returns the exact expected regret of each:
//   StageValue(oracle policy) - StageValue(agent policy), both in `cmp`.
// `rng` is split into independent opponent, agent and simulation streams,
// so an agent's consumption of randomness never shifts the payoffs drawn
// by the opponent.
std::vector<double> RunGame(const Cmp& cmp, Agent& agent, Opponent& opponent,
                            int num_stages, Rng& rng);

struct RegretSeries {
  std::string agent;
  std::string opponent;
  int num_stages = 0;
  // [run][stage] expected regret of each stage.
  std::vector<std::vector<double>> stage_regret;
  // [run][stage] running sum of stage_regret.
  std::vector<std::vector<double>> cumulative;
  // Across-run mean and standard error of the cumulative regret per stage.
  std::vector<double> mean;
  std::vector<double> std_error;

  int num_runs() const { return static_cast<int>(stage_regret.size()); }
};

// Fills `cumulative`, `mean` and `std_error` from `stage_regret`.
void Aggregate(RegretSeries& series);

struct RunOptions {
  // Worker threads; 0 picks the hardware concurrency. Results do not depend
  // on this value.
  int threads = 0;
};

// One series per configured agent, in config order.
std::vector<RegretSeries> RunExperiment(const ExperimentConfig& config,
                                        const RunOptions& options = {});

// Columns: stage, agent, opponent, mean_cumulative_regret, stderr, runs.
// Stages are 1-based; floats use 9 significant digits.
void WriteSummaryCsv(std::ostream& out, const std::vector<RegretSeries>& all);

// Columns: run, stage, stage_regret, cumulative_regret.
void WriteRunsCsv(std::ostream& out, const RegretSeries& series);

// "%.9g" formatting shared by both writers.
std::string FormatDouble(double x);

}  // namespace srp

#endif  // SRP_HARNESS_H_
