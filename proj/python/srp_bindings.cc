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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "srp/agents.h"
#include "srp/beliefs.h"
#include "srp/cli.h"
#include "srp/harness.h"
#include "srp/mdp_core.h"
#include "srp/opponents.h"
#include "srp/planner.h"
#include "srp/random.h"

namespace py = pybind11;

namespace srp {
namespace {

std::vector<double> ToVector(std::span<const double> s) {
  return {s.begin(), s.end()};
}

// Python-side random generator: a seeded Rng.
struct Generator {
  explicit Generator(std::uint64_t seed) : rng(seed) {}
  Rng rng;
};

}  // namespace
}  // namespace srp

PYBIND11_MODULE(_core, m) {
  using namespace srp;
  m.doc() = "Sparse reward process planning, learning agents and experiments";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<Generator>(m, "Generator")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", [](Generator& g) { return Uniform01(g.rng); });

  m.def("derive_seed", &DeriveSeed, py::arg("master"), py::arg("index"));

  py::class_<Cmp>(m, "Cmp")
      .def(py::init<int, int, std::vector<double>, std::vector<double>, double,
                    std::vector<StateId>>(),
           py::arg("num_states"), py::arg("num_actions"), py::arg("kernel"),
           py::arg("start_dist"), py::arg("termination_prob"),
           py::arg("terminal_states") = std::vector<StateId>{})
      .def_property_readonly("num_states", &Cmp::num_states)
      .def_property_readonly("num_actions", &Cmp::num_actions)
      .def_property_readonly("termination_prob", &Cmp::termination_prob)
      .def_property_readonly("kernel", &Cmp::kernel)
      .def_property_readonly("start_dist",
                             [](const Cmp& c) { return ToVector(c.start_dist()); })
      .def_property_readonly("terminal_states", &Cmp::terminal_states)
      .def("row", [](const Cmp& c, StateId s, ActionId a) {
        return ToVector(c.Row(s, a));
      })
      .def("transition", &Cmp::Transition)
      .def(py::self == py::self);

  py::class_<RewardFunction>(m, "RewardFunction")
      .def(py::init<std::vector<double>>(), py::arg("rewards"))
      .def_static("zero", &RewardFunction::Zero)
      .def_static("point_mass", &RewardFunction::PointMass)
      .def_property_readonly("values", &RewardFunction::values)
      .def("__call__", &RewardFunction::operator())
      .def(py::self == py::self);

  py::class_<StationaryPolicy>(m, "StationaryPolicy")
      .def(py::init<std::vector<ActionId>>(), py::arg("actions"))
      .def_static("lowest_index", &StationaryPolicy::LowestIndex)
      .def_static("from_index", &StationaryPolicy::FromIndex)
      .def_property_readonly("actions", &StationaryPolicy::actions)
      .def("__call__", &StationaryPolicy::operator())
      .def(py::self == py::self);

  py::class_<Trajectory>(m, "Trajectory")
      .def(py::init<std::vector<StateId>, std::vector<ActionId>, double>(),
           py::arg("states"), py::arg("actions"), py::arg("payoff") = 0.0)
      .def_readonly("states", &Trajectory::states)
      .def_readonly("actions", &Trajectory::actions)
      .def_readonly("payoff", &Trajectory::payoff)
      .def_property_readonly("num_transitions", &Trajectory::num_transitions);

  py::class_<CountTable>(m, "CountTable")
      .def(py::init<int, int>())
      .def("count", &CountTable::Count)
      .def("pair_count", &CountTable::PairCount)
      .def("total", &CountTable::Total)
      .def("add", &CountTable::Add, py::arg("s"), py::arg("a"), py::arg("next"),
           py::arg("n") = 1)
      .def(py::self == py::self);

  m.def("generate_random_cmp", &GenerateRandomCmp, py::arg("num_states"),
        py::arg("num_actions"), py::arg("termination_prob"), py::arg("seed"));
  m.def(
      "simulate_stage",
      [](const Cmp& cmp, const StationaryPolicy& policy,
         const RewardFunction& reward, Generator& g) {
        return SimulateStage(cmp, policy, reward, g.rng);
      },
      py::arg("cmp"), py::arg("policy"), py::arg("reward"), py::arg("rng"));
  m.def("accumulate_counts", &AccumulateCounts);
  m.def("empirical_cmp",
        [](const CountTable& counts, double q, std::vector<double> start) {
          return EmpiricalCmp(counts, q, start);
        });

  m.def("policy_evaluation", &PolicyEvaluation);
  m.def("stage_value", &StageValue);
  m.def(
      "oracle_policy",
      [](const Cmp& cmp, const RewardFunction& reward) {
        const PlanResult plan = OraclePolicy(cmp, reward);
        return py::make_tuple(plan.policy, plan.values);
      },
      "Returns (policy, values).");
  m.def("weissman_radius", &WeissmanRadius, py::arg("n"),
        py::arg("support_size"), py::arg("delta"));
  m.def(
      "optimistic_row",
      [](std::vector<double> values, std::vector<double> empirical,
         double radius) { return OptimisticRow(values, empirical, radius); },
      py::arg("values"), py::arg("empirical"), py::arg("radius"));
  m.def(
      "optimistic_plan",
      [](const CountTable& counts, const RewardFunction& reward, double q,
         double delta, std::vector<double> start) {
        const OptimisticPlanResult plan =
            OptimisticPlan(counts, reward, q, delta, start);
        return py::make_tuple(plan.policy, plan.values, plan.start_value);
      },
      py::arg("counts"), py::arg("reward"), py::arg("termination_prob"),
      py::arg("delta"), py::arg("start_dist"),
      "Returns (policy, optimistic values, optimistic start value).");

  py::class_<DirichletBelief>(m, "DirichletBelief")
      .def(py::init<int, int, double, std::vector<double>>())
      .def_property_readonly("alpha", &DirichletBelief::alpha)
      .def("add_observation", &DirichletBelief::AddObservation, py::arg("s"),
           py::arg("a"), py::arg("next"), py::arg("n") = 1.0)
      .def(py::self == py::self);
  m.def("prior", &Prior);
  m.def("update", &Update);
  m.def("sample_cmp", [](const DirichletBelief& b, Generator& g) {
    return SampleCmp(b, g.rng);
  });
  m.def("mean_cmp", &MeanCmp);
  m.def(
      "expected_information_gain",
      [](const DirichletBelief& belief, const StationaryPolicy& policy,
         Generator& g, int num_model_samples, int num_rollouts,
         int forced_steps) {
        const InfoGainEstimate e = ExpectedInformationGain(
            belief, policy,
            InfoGainOptions{num_model_samples, num_rollouts, forced_steps},
            g.rng);
        return py::make_tuple(e.mean, e.std_error);
      },
      py::arg("belief"), py::arg("policy"), py::arg("rng"),
      py::arg("num_model_samples") = 1000, py::arg("num_rollouts") = 10,
      py::arg("forced_steps") = 0, "Returns (mean, standard error).");

  py::class_<Agent>(m, "Agent")
      .def_property_readonly("name",
                             [](const Agent& a) { return std::string(a.name()); })
      .def_property_readonly("stage_index", &Agent::stage_index)
      .def("begin_stage",
           [](Agent& a, const RewardFunction& reward, Generator& g) {
             return a.BeginStage(reward, g.rng);
           })
      .def("end_stage", &Agent::EndStage);
  m.def(
      "make_agent",
      [](const std::string& name, const Cmp& env) {
        return MakeAgent(name, PublicInfo::Of(env));
      },
      py::arg("name"), py::arg("env"),
      "Agent given the public parameters of `env`.");

  py::class_<Opponent>(m, "Opponent")
      .def_property_readonly(
          "name", [](const Opponent& o) { return std::string(o.name()); })
      .def("choose_reward",
           [](Opponent& o, Generator& g) { return o.ChooseReward(g.rng); })
      .def("observe", &Opponent::Observe);
  m.def("make_opponent", [](const std::string& name, const Cmp& truth) {
    return MakeOpponent(name, truth);
  });

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("num_states", &ExperimentConfig::num_states)
      .def_readwrite("num_actions", &ExperimentConfig::num_actions)
      .def_readwrite("q", &ExperimentConfig::q)
      .def_readwrite("num_stages", &ExperimentConfig::num_stages)
      .def_readwrite("num_runs", &ExperimentConfig::num_runs)
      .def_readwrite("agents", &ExperimentConfig::agents)
      .def_readwrite("opponent", &ExperimentConfig::opponent)
      .def_readwrite("master_seed", &ExperimentConfig::master_seed)
      .def_readwrite("output_path", &ExperimentConfig::output_path)
      .def("validate", &ExperimentConfig::Validate);
  m.def("parse_config", &ParseConfig, py::arg("json_text"));

  py::class_<RegretSeries>(m, "RegretSeries")
      .def_readonly("agent", &RegretSeries::agent)
      .def_readonly("opponent", &RegretSeries::opponent)
      .def_readonly("num_stages", &RegretSeries::num_stages)
      .def_readonly("stage_regret", &RegretSeries::stage_regret)
      .def_readonly("cumulative", &RegretSeries::cumulative)
      .def_readonly("mean", &RegretSeries::mean)
      .def_readonly("std_error", &RegretSeries::std_error);
  m.def(
      "run_experiment",
      [](const ExperimentConfig& config, int threads) {
        py::gil_scoped_release release;
        return RunExperiment(config, RunOptions{threads});
      },
      py::arg("config"), py::arg("threads") = 0);
  m.def("summary_csv", [](const std::vector<RegretSeries>& all) {
    std::ostringstream out;
    WriteSummaryCsv(out, all);
    return out.str();
  });

  m.def(
      "cli_main",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "srp");
        std::vector<const char*> argv;
        for (const std::string& a : args) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        const int code =
            CliMain(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (code, stdout, stderr).");
}
