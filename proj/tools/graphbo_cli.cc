// Copyright 2026 The graphbo Authors.
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

// Command-line front end: encoding verification, benchmark synthesis,
// kernel comparison, BO runs, and MIP emission and checking.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphbo/acq/external.h"
#include "graphbo/bo/benchmark.h"
#include "graphbo/bo/kernel_compare.h"
#include "graphbo/bo/run_bo.h"
#include "graphbo/bo/synth.h"
#include "graphbo/gp/gp.h"
#include "graphbo/graph/graph_space.h"
#include "graphbo/mip/acquisition.h"
#include "graphbo/mip/assignment.h"
#include "graphbo/mip/checker.h"
#include "graphbo/mip/encoding_verifier.h"
#include "graphbo/mip/graph_encoding.h"
#include "graphbo/mip/lp_reader.h"
#include "graphbo/mip/writer.h"
#include "graphbo/util/errors.h"
#include "graphbo/util/json_io.h"

namespace graphbo {
namespace {

// JSON config: one object per subcommand whose keys are the long flag
// names, e.g. {"run-bo": {"seed": 3, "kernel": "exp"}}.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool,
                        std::string) const override {
    return "{}";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    Json j;
    try {
      input >> j;
    } catch (const Json::parse_error& e) {
      throw CLI::ConversionError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config must be an object");
    std::vector<CLI::ConfigItem> items;
    Collect(j, {}, items);
    return items;
  }

 private:
  static std::string Scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw CLI::ConversionError("unsupported config value " + v.dump());
  }

  static void Collect(const Json& j, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        std::vector<std::string> p = parents;
        p.push_back(key);
        Collect(value, p, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const Json& v : value) item.inputs.push_back(Scalar(v));
      } else {
        item.inputs.push_back(Scalar(value));
      }
      items.push_back(std::move(item));
    }
  }
};

// verify-encoding

struct VerifyOptions {
  int n_max = 3;
  int exhaustive_max = 3;
};

int VerifyEncoding(const VerifyOptions& o) {
  bool ok = true;
  for (int n = 1; n <= o.n_max; ++n) {
    Json line;
    if (n <= o.exhaustive_max) {
      const mip::BijectionResult r = mip::VerifyBijection(n, n);
      line = {{"check", "bijection"}, {"n", n},
              {"graphs", r.graphs},   {"solutions", r.solutions},
              {"mismatches", r.mismatches}, {"duplicates", r.duplicates},
              {"seconds", r.seconds}, {"passed", r.passed}};
      if (!r.passed) line["failure"] = r.failure;
      ok = ok && r.passed;
    } else {
      const mip::FlipResult r = mip::VerifySingleFlips(n);
      line = {{"check", "single_flip"}, {"n", n},
              {"graphs", r.graphs},     {"infeasible_graphs", r.infeasible_graphs},
              {"flips", r.flips},       {"feasible_flips", r.feasible_flips},
              {"seconds", r.seconds},   {"passed", r.passed}};
      if (!r.passed) line["failure"] = r.failure;
      ok = ok && r.passed;
    }
    std::cout << line.dump() << std::endl;
  }
  return ok ? 0 : 1;
}

// synth-bench

struct SynthOptions {
  std::string space = "nasbench201";
  uint64_t seed = 0;
  double noise_sd = 0.0;
  std::string mode = "deterministic";
  std::string out = "bench.jsonl";
};

int SynthBench(const SynthOptions& o) {
  bo::BenchmarkTable table =
      bo::SynthBenchmark(graph::ResolveSpace(o.space), o.seed, o.noise_sd);
  table.set_mode(bo::ParseObjectiveMode(o.mode));
  bo::WriteBenchmarkFile(o.out, table);
  std::cout << Json{{"out", o.out},
                    {"records", table.size()},
                    {"best_val_error", table.metadata()["best_val_error"]},
                    {"optima", table.metadata()["best_keys"].size()}}
                   .dump()
            << std::endl;
  return 0;
}

// kernel-compare

struct CompareOptions {
  std::string bench;
  int reps = 20;
  int train = 50;
  int test = 400;
  uint64_t seed = 0;
  std::string out;
};

int KernelCompareCommand(const CompareOptions& o) {
  const bo::BenchmarkTable table = bo::ReadBenchmarkFile(o.bench);
  bo::KernelCompareConfig config;
  config.reps = o.reps;
  config.train = o.train;
  config.test = o.test;
  config.seed = o.seed;
  const bo::KernelCompareReport report = bo::KernelCompare(table, config);
  std::cout << report.FormatTable();
  for (const bo::KernelCompareRow& row : report.rows) {
    if (row.spearman_undefined > 0) {
      std::cout << row.name << ": Spearman undefined in "
                << row.spearman_undefined << " replications, counted as 0\n";
    }
  }
  if (!o.out.empty()) WriteTextFile(o.out, report.ToJson().dump(2) + "\n");
  return 0;
}

// run-bo

struct RunOptions {
  std::string bench;
  uint64_t seed = 0;
  int seeds = 1;
  int iters = bo::kDefaultIterations;
  int init = bo::kDefaultInit;
  int batch = bo::kDefaultBatch;
  double beta_sqrt = mip::kDefaultBetaSqrt;
  std::string kernel = "linear";
  std::string optimizer = "enum";
  std::string mode;
  std::string solver_cmd;
  double time_limit = acq::kDefaultTimeLimit;
  int breakpoints = mip::KernelEncodingOptions{}.breakpoints;
  bool random_search = false;
  std::string out_dir = "runs";
};

int RunBoCommand(const RunOptions& o) {
  bo::BenchmarkTable table = bo::ReadBenchmarkFile(o.bench);
  if (!o.mode.empty()) table.set_mode(bo::ParseObjectiveMode(o.mode));
  bo::BoConfig config;
  config.iterations = o.iters;
  config.init = o.init;
  config.batch = o.batch;
  config.beta_sqrt = o.beta_sqrt;
  config.fit.form = kernels::ParseKernelForm(o.kernel);
  config.optimizer = bo::ParseOptimizerKind(o.optimizer);
  config.external.command = o.solver_cmd;
  config.external.time_limit = o.time_limit;
  config.external.kernel.breakpoints = o.breakpoints;

  std::optional<acq::EnumeratedSpace> space;
  try {
    space.emplace(acq::EnumerateForScoring(table.space()));
  } catch (const CapExceededError&) {
  }
  const double optimum = table.metadata().contains("best_val_error")
                             ? table.metadata()["best_val_error"].get<double>()
                             : table.BestValError();
  std::filesystem::create_directories(o.out_dir);
  std::vector<bo::BoRun> runs, randoms;
  for (int s = 0; s < o.seeds; ++s) {
    config.seed = o.seed + s;
    const std::string tag = "seed" + std::to_string(config.seed);
    runs.push_back(bo::RunBo(table, config, space ? &*space : nullptr));
    bo::WriteRunLog(o.out_dir + "/nas-goat-" + tag + ".jsonl", runs.back(),
                    table);
    Json line = {{"seed", config.seed},
                 {"incumbent_val_error",
                  runs.back().records.back().incumbent_val_error},
                 {"incumbent_test_error",
                  runs.back().records.back().incumbent_test_error},
                 {"exhausted", runs.back().exhausted}};
    if (o.random_search) {
      randoms.push_back(
          bo::RunRandomSearch(table, config, space ? &*space : nullptr));
      bo::WriteRunLog(o.out_dir + "/random-" + tag + ".jsonl", randoms.back(),
                      table);
      line["random_val_error"] = randoms.back().records.back().incumbent_val_error;
    }
    std::cout << line.dump() << std::endl;
  }
  WriteTextFile(o.out_dir + "/nas-goat-regret.csv",
                bo::RegretCsv(bo::RegretCurve(runs, optimum)));
  if (o.random_search) {
    WriteTextFile(o.out_dir + "/random-regret.csv",
                  bo::RegretCsv(bo::RegretCurve(randoms, optimum)));
  }
  return 0;
}

// emit-mip

struct EmitOptions {
  std::string space = "nasbench201";
  std::string gp_state;
  std::string out = "model.lp";
  std::string format;
  double beta_sqrt = mip::kDefaultBetaSqrt;
  int breakpoints = mip::KernelEncodingOptions{}.breakpoints;
  bool exclude_inputs = true;
};

int EmitMip(const EmitOptions& o) {
  const graph::GraphSpaceSpec spec = graph::ResolveSpace(o.space);
  mip::MipModel model;
  if (o.gp_state.empty()) {
    model = mip::BuildSpaceModel(spec);
  } else {
    const gp::GpState gp = gp::GpState::FromJson(ReadJsonFile(o.gp_state));
    mip::KernelEncodingOptions options;
    options.breakpoints = o.breakpoints;
    model = mip::BuildAcquisitionModel(spec, gp, o.beta_sqrt, options);
    if (o.exclude_inputs) mip::AddNoGoodCuts(model, gp.inputs());
  }
  const mip::FileFormat format = o.format.empty()
                                     ? mip::FormatOfPath(o.out)
                                     : mip::ParseFileFormat(o.format);
  WriteTextFile(o.out, mip::WriteModel(model, format));
  Json census = Json::object();
  for (const auto& [tag, count] : model.Census()) census[tag] = count;
  std::cout << Json{{"out", o.out},
                    {"variables", model.num_variables()},
                    {"constraints", model.num_constraints()},
                    {"census", census}}
                   .dump()
            << std::endl;
  return 0;
}

// check-solution

struct CheckOptions {
  std::string model;
  std::string assignment;
  int index = 0;
};

int CheckSolution(const CheckOptions& o) {
  const mip::MipModel model = mip::ReadLp(ReadTextFile(o.model));
  const std::string text = ReadTextFile(o.assignment);
  mip::NamedAssignment named;
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    for (const auto& [name, value] : Json::parse(text).items()) {
      named[name] = value.get<double>();
    }
  } else {
    const std::vector<mip::NamedAssignment> pool = acq::ParseSolutionPool(text);
    if (o.index < 0 || o.index >= static_cast<int>(pool.size())) {
      throw InvalidArgumentError("solution index out of range");
    }
    named = pool[o.index];
  }
  const std::vector<mip::Violation> violations =
      mip::CheckAssignment(model, named);
  Json out;
  out["feasible"] = violations.empty();
  out["violations"] = Json::array();
  for (const mip::Violation& v : violations) {
    out["violations"].push_back(mip::ViolationToJson(v));
  }
  std::cout << out.dump(2) << std::endl;
  return violations.empty() ? 0 : 1;
}

int Main(int argc, char** argv) {
  CLI::App app{"Graph Bayesian optimization with mixed-integer acquisition"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file with per-subcommand flag values");
  app.require_subcommand(1);
  app.fallthrough();

  VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify-encoding", "Check the graph encoding");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest graph size")
      ->capture_default_str();
  verify_cmd
      ->add_option("--exhaustive-max", verify.exhaustive_max,
                   "Largest size checked by exhaustive search; larger sizes "
                   "get the single-flip check")
      ->capture_default_str();

  SynthOptions synth;
  CLI::App* synth_cmd =
      app.add_subcommand("synth-bench", "Write a synthetic benchmark table");
  synth_cmd->add_option("--space", synth.space, "Preset name or JSON file")
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed)->capture_default_str();
  synth_cmd->add_option("--noise-sd", synth.noise_sd)->capture_default_str();
  synth_cmd->add_option("--mode", synth.mode, "deterministic or noisy")
      ->capture_default_str();
  synth_cmd->add_option("--out", synth.out)->capture_default_str();

  CompareOptions compare;
  CLI::App* compare_cmd = app.add_subcommand(
      "kernel-compare", "Compare linear and exponential SP kernels");
  compare_cmd->add_option("--bench", compare.bench)->required();
  compare_cmd->add_option("--reps", compare.reps)->capture_default_str();
  compare_cmd->add_option("--train", compare.train)->capture_default_str();
  compare_cmd->add_option("--test", compare.test)->capture_default_str();
  compare_cmd->add_option("--seed", compare.seed)->capture_default_str();
  compare_cmd->add_option("--out", compare.out, "Report JSON path");

  RunOptions run;
  CLI::App* run_cmd = app.add_subcommand("run-bo", "Run Bayesian optimization");
  run_cmd->add_option("--bench", run.bench)->required();
  run_cmd->add_option("--seed", run.seed, "First seed")->capture_default_str();
  run_cmd->add_option("--seeds", run.seeds, "Number of consecutive seeds")
      ->capture_default_str();
  run_cmd->add_option("--iters", run.iters)->capture_default_str();
  run_cmd->add_option("--init", run.init)->capture_default_str();
  run_cmd->add_option("--batch", run.batch)->capture_default_str();
  run_cmd->add_option("--beta-sqrt", run.beta_sqrt)->capture_default_str();
  run_cmd->add_option("--kernel", run.kernel)
      ->check(CLI::IsMember({"linear", "exp"}))
      ->capture_default_str();
  run_cmd->add_option("--optimizer", run.optimizer)
      ->check(CLI::IsMember({"enum", "external"}))
      ->capture_default_str();
  run_cmd->add_option("--mode", run.mode,
                      "Override the table's objective mode");
  run_cmd
      ->add_option("--solver-cmd", run.solver_cmd,
                   "Solver command template with {model} {solution} "
                   "{timelimit} {poolsize}")
      ->envname(acq::kSolverCommandEnv);
  run_cmd->add_option("--time-limit", run.time_limit, "Seconds per solve")
      ->capture_default_str();
  run_cmd->add_option("--breakpoints", run.breakpoints)->capture_default_str();
  run_cmd->add_flag("--random-search", run.random_search,
                    "Also run paired random search");
  run_cmd->add_option("--out-dir", run.out_dir)->capture_default_str();

  EmitOptions emit;
  CLI::App* emit_cmd =
      app.add_subcommand("emit-mip", "Write the space or acquisition model");
  emit_cmd->add_option("--space", emit.space)->capture_default_str();
  emit_cmd->add_option("--gp-state", emit.gp_state, "GP state JSON");
  emit_cmd->add_option("--out", emit.out)->capture_default_str();
  emit_cmd->add_option("--format", emit.format, "lp or mps");
  emit_cmd->add_option("--beta-sqrt", emit.beta_sqrt)->capture_default_str();
  emit_cmd->add_option("--breakpoints", emit.breakpoints)
      ->capture_default_str();
  emit_cmd
      ->add_flag("--exclude-inputs,!--no-exclude-inputs", emit.exclude_inputs,
                 "No-good cuts for the GP inputs")
      ->capture_default_str();

  CheckOptions check;
  CLI::App* check_cmd = app.add_subcommand(
      "check-solution", "Check an assignment against an LP model");
  check_cmd->add_option("--model", check.model)->required();
  check_cmd->add_option("--assignment", check.assignment,
                        "JSON object or solution pool file")
      ->required();
  check_cmd->add_option("--index", check.index, "Pool entry")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*verify_cmd) return VerifyEncoding(verify);
    if (*synth_cmd) return SynthBench(synth);
    if (*compare_cmd) return KernelCompareCommand(compare);
    if (*run_cmd) return RunBoCommand(run);
    if (*emit_cmd) return EmitMip(emit);
    if (*check_cmd) return CheckSolution(check);
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n" << e.output() << std::endl;
    return 2;
  } catch (const LookupMissError& e) {
    std::cerr << "error: " << e.what() << " (key " << ToHex(e.key()) << ")"
              << std::endl;
    return 2;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << " (record " << e.record() << ")"
              << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}

}  // namespace
}  // namespace graphbo

int main(int argc, char** argv) { return graphbo::Main(argc, argv); }
