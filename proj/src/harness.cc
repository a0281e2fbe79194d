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

#include "srp/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "srp/planner.h"

namespace srp {
namespace {

using nlohmann::json;

constexpr const char* kConfigKeys[] = {
    "num_states", "num_actions", "q",           "num_stages",  "num_runs",
    "agent",      "opponent",    "master_seed", "output_path",
};

int GetPositiveInt(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ConfigError(key, "missing required field");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ConfigError(key, "must be an integer");
  const auto value = v.get<std::int64_t>();
  if (value < 1 || value > 1'000'000'000) {
    throw ConfigError(key, "must be a positive integer");
  }
  return static_cast<int>(value);
}

ExperimentConfig FromJson(const json& doc) {
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (std::ranges::find(kConfigKeys, key) == std::end(kConfigKeys)) {
      throw ConfigError(key, "unknown field");
    }
  }
  ExperimentConfig config;
  config.num_states = GetPositiveInt(doc, "num_states");
  config.num_actions = GetPositiveInt(doc, "num_actions");
  config.num_stages = GetPositiveInt(doc, "num_stages");
  config.num_runs = GetPositiveInt(doc, "num_runs");

  if (!doc.contains("q")) throw ConfigError("q", "missing required field");
  if (!doc.at("q").is_number()) throw ConfigError("q", "must be a number");
  config.q = doc.at("q").get<double>();

  if (!doc.contains("agent")) throw ConfigError("agent", "missing required field");
  const json& agent = doc.at("agent");
  config.agents.clear();
  if (agent.is_string()) {
    config.agents.push_back(agent.get<std::string>());
  } else if (agent.is_array()) {
    for (const json& name : agent) {
      if (!name.is_string()) throw ConfigError("agent", "names must be strings");
      config.agents.push_back(name.get<std::string>());
    }
  } else {
    throw ConfigError("agent", "must be a name or a list of names");
  }

  if (!doc.contains("opponent")) {
    throw ConfigError("opponent", "missing required field");
  }
  if (!doc.at("opponent").is_string()) {
    throw ConfigError("opponent", "must be a string");
  }
  config.opponent = doc.at("opponent").get<std::string>();

  if (doc.contains("master_seed")) {
    const json& seed = doc.at("master_seed");
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
      throw ConfigError("master_seed", "must be a non-negative integer");
    }
    if (seed.is_number_integer() && !seed.is_number_unsigned() &&
        seed.get<std::int64_t>() < 0) {
      throw ConfigError("master_seed", "must be a non-negative integer");
    }
    config.master_seed = seed.get<std::uint64_t>();
  }
  if (doc.contains("output_path")) {
    if (!doc.at("output_path").is_string()) {
      throw ConfigError("output_path", "must be a string");
    }
    config.output_path = doc.at("output_path").get<std::string>();
  }
  config.Validate();
  return config;
}

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
}

// Every (agent, run) pair is independent; each worker claims the next index.
template <typename Task>
void ParallelFor(std::size_t count, int threads, Task&& task) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(
      count, threads > 0 ? static_cast<std::size_t>(threads) : hw);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (num_states < 1) throw ConfigError("num_states", "must be >= 1");
  if (num_actions < 1) throw ConfigError("num_actions", "must be >= 1");
  if (!(q > 0.0 && q <= 1.0)) throw ConfigError("q", "must lie in (0, 1]");
  if (num_stages < 1) throw ConfigError("num_stages", "must be >= 1");
  if (num_runs < 1) throw ConfigError("num_runs", "must be >= 1");
  if (agents.empty()) throw ConfigError("agent", "at least one agent required");
  for (const std::string& name : agents) {
    if (!IsAgentName(name)) {
      throw ConfigError("agent", "unknown agent '" + name +
                                     "' (expected greedy, ucsrp or btsrp)");
    }
  }
  if (!IsOpponentName(opponent)) {
    throw ConfigError("opponent", "unknown opponent '" + opponent +
                                      "' (expected nature or adversarial)");
  }
}

ExperimentConfig ParseConfig(const std::string& json_text) {
  return FromJson(ParseJson(json_text));
}

std::vector<ExperimentConfig> LoadConfigs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const json doc = ParseJson(buffer.str());
  std::vector<ExperimentConfig> configs;
  if (doc.is_array()) {
    for (const json& item : doc) configs.push_back(FromJson(item));
    if (configs.empty()) throw ConfigError("", "config list is empty");
  } else {
    configs.push_back(FromJson(doc));
  }
  return configs;
}

std::uint64_t RunSeed(std::uint64_t master_seed, int run_index) {
  return DeriveSeed(master_seed, static_cast<std::uint64_t>(run_index));
}

std::vector<double> RunGame(const Cmp& cmp, Agent& agent, Opponent& opponent,
                            int num_stages, Rng& rng) {
  Rng opponent_rng = SplitRng(rng);
  Rng agent_rng = SplitRng(rng);
  Rng simulation_rng = SplitRng(rng);

  std::vector<double> regret;
  regret.reserve(num_stages);
  for (int k = 1; k <= num_stages; ++k) {
    const RewardFunction reward = opponent.ChooseReward(opponent_rng);
    const StationaryPolicy policy = agent.BeginStage(reward, agent_rng);
    const StationaryPolicy best = OraclePolicy(cmp, reward).policy;
    regret.push_back(StageValue(cmp, reward, best) -
                     StageValue(cmp, reward, policy));
    const Trajectory trajectory =
        SimulateStage(cmp, policy, reward, simulation_rng);
    agent.EndStage(trajectory);
    opponent.Observe(trajectory);
  }
  return regret;
}

void Aggregate(RegretSeries& series) {
  const int runs = series.num_runs();
  const int stages = series.num_stages;
  series.cumulative.assign(runs, std::vector<double>(stages, 0.0));
  for (int r = 0; r < runs; ++r) {
    double total = 0.0;
    for (int k = 0; k < stages; ++k) {
      total += series.stage_regret[r][k];
      series.cumulative[r][k] = total;
    }
  }
  series.mean.assign(stages, 0.0);
  series.std_error.assign(stages, 0.0);
  for (int k = 0; k < stages; ++k) {
    double sum = 0.0;
    for (int r = 0; r < runs; ++r) sum += series.cumulative[r][k];
    const double mean = sum / runs;
    double squares = 0.0;
    for (int r = 0; r < runs; ++r) {
      const double d = series.cumulative[r][k] - mean;
      squares += d * d;
    }
    series.mean[k] = mean;
    series.std_error[k] =
        runs > 1 ? std::sqrt(squares / (runs - 1) / runs) : 0.0;
  }
}

std::vector<RegretSeries> RunExperiment(const ExperimentConfig& config,
                                        const RunOptions& options) {
  config.Validate();
  const std::size_t num_agents = config.agents.size();
  const std::size_t runs = static_cast<std::size_t>(config.num_runs);

  std::vector<RegretSeries> all(num_agents);
  for (std::size_t i = 0; i < num_agents; ++i) {
    all[i].agent = config.agents[i];
    all[i].opponent = config.opponent;
    all[i].num_stages = config.num_stages;
    all[i].stage_regret.resize(runs);
  }

  ParallelFor(num_agents * runs, options.threads, [&](std::size_t item) {
    const std::size_t agent_index = item / runs;
    const int run_index = static_cast<int>(item % runs) + 1;
    const std::uint64_t run_seed = RunSeed(config.master_seed, run_index);
    const Cmp env = GenerateRandomCmp(config.num_states, config.num_actions,
                                      config.q, DeriveSeed(run_seed, 0));
    auto agent = MakeAgent(config.agents[agent_index], PublicInfo::Of(env));
    auto opponent = MakeOpponent(config.opponent, env);
    Rng game_rng(DeriveSeed(run_seed, 1));
    all[agent_index].stage_regret[run_index - 1] =
        RunGame(env, *agent, *opponent, config.num_stages, game_rng);
  });

  for (RegretSeries& series : all) Aggregate(series);
  return all;
}

std::string FormatDouble(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", x);
  return buffer;
}

void WriteSummaryCsv(std::ostream& out, const std::vector<RegretSeries>& all) {
  out << "stage,agent,opponent,mean_cumulative_regret,stderr,runs\n";
  for (const RegretSeries& series : all) {
    for (int k = 0; k < series.num_stages; ++k) {
      out << (k + 1) << ',' << series.agent << ',' << series.opponent << ','
          << FormatDouble(series.mean[k]) << ','
          << FormatDouble(series.std_error[k]) << ',' << series.num_runs()
          << '\n';
    }
  }
}

void WriteRunsCsv(std::ostream& out, const RegretSeries& series) {
  out << "run,stage,stage_regret,cumulative_regret\n";
  for (int r = 0; r < series.num_runs(); ++r) {
    for (int k = 0; k < series.num_stages; ++k) {
      out << (r + 1) << ',' << (k + 1) << ','
          << FormatDouble(series.stage_regret[r][k]) << ','
          << FormatDouble(series.cumulative[r][k]) << '\n';
    }
  }
}

}  // namespace srp
