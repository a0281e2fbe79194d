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

#include "srp/cli.h"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srp/harness.h"

namespace srp {
namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void WriteFile(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file << contents;
  file.close();
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

// "runs.csv" -> "runs.ucsrp.csv" when several agents share one dump path.
fs::path PerAgentPath(const fs::path& path, const std::string& agent) {
  fs::path out = path;
  out.replace_filename(path.stem().string() + "." + agent +
                       path.extension().string());
  return out;
}

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  int threads = 0;
};

void RunOne(const ExperimentConfig& config, const CommonFlags& flags,
            const std::string& dump_runs, std::ostream& out) {
  if (config.output_path.empty()) {
    throw ConfigError("output_path",
                      "no output path in config and no --output given");
  }
  const std::vector<RegretSeries> all =
      RunExperiment(config, RunOptions{flags.threads});

  std::ostringstream summary;
  WriteSummaryCsv(summary, all);
  WriteFile(config.output_path, summary.str());
  out << "wrote " << config.output_path << " (" << config.opponent << ", "
      << all.size() << " agent(s) x " << config.num_stages << " stages, "
      << config.num_runs << " runs)\n";

  if (dump_runs.empty()) return;
  for (const RegretSeries& series : all) {
    const fs::path path = all.size() == 1
                              ? fs::path(dump_runs)
                              : PerAgentPath(dump_runs, series.agent);
    std::ostringstream runs;
    WriteRunsCsv(runs, series);
    WriteFile(path, runs.str());
    out << "wrote " << path.string() << '\n';
  }
}

}  // namespace

int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Sparse reward process experiments"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::string output;
  std::string dump_runs;
  CLI::App* run = app.add_subcommand("run", "Run one experiment config");
  run->add_option("--config", run_flags.config_path, "JSON config file")
      ->required();
  run->add_option("--seed", run_flags.seed, "Override master_seed")
      ->take_last();
  run->add_option("--output", output, "Override output_path")->take_last();
  run->add_option("--dump-runs", dump_runs, "Write per-run regret CSV");
  run->add_option("--threads", run_flags.threads,
                  "Worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);

  CommonFlags sweep_flags;
  std::string output_dir;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Run every config of a JSON array");
  sweep->add_option("--config", sweep_flags.config_path,
                    "JSON file with a config object or array")
      ->required();
  sweep->add_option("--seed", sweep_flags.seed, "Override every master_seed")
      ->take_last();
  sweep->add_option("--output-dir", output_dir,
                    "Resolve relative output paths against this directory");
  sweep->add_option("--threads", sweep_flags.threads,
                    "Worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (*run) {
      std::vector<ExperimentConfig> configs =
          LoadConfigs(run_flags.config_path);
      if (configs.size() != 1) {
        throw ConfigError("", "run expects a single config object; use sweep");
      }
      ExperimentConfig& config = configs.front();
      if (run_flags.seed) config.master_seed = *run_flags.seed;
      if (!output.empty()) config.output_path = output;
      RunOne(config, run_flags, dump_runs, out);
    } else {
      std::vector<ExperimentConfig> configs =
          LoadConfigs(sweep_flags.config_path);
      for (ExperimentConfig& config : configs) {
        if (sweep_flags.seed) config.master_seed = *sweep_flags.seed;
        if (!output_dir.empty() && !config.output_path.empty() &&
            fs::path(config.output_path).is_relative()) {
          config.output_path = (fs::path(output_dir) / config.output_path)
                                   .string();
        }
      }
      for (const ExperimentConfig& config : configs) {
        RunOne(config, sweep_flags, "", out);
      }
    }
  } catch (const ConfigError& e) {
    err << "srp: config error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const IoError& e) {
    err << "srp: " << e.what() << '\n';
    return kExitRuntimeError;
  } catch (const std::exception& e) {
    err << "srp: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace srp
