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

#ifndef GRAPHBO_BO_RUN_BO_H_
#define GRAPHBO_BO_RUN_BO_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphbo/acq/enumerative.h"
#include "graphbo/acq/external.h"
#include "graphbo/bo/benchmark.h"
#include "graphbo/gp/gp.h"
#include "graphbo/graph/labeled_graph.h"
#include "graphbo/kernels/kernels.h"
#include "graphbo/mip/acquisition.h"
#include "graphbo/util/json_io.h"

namespace graphbo::bo {

inline constexpr int kDefaultIterations = 30;
inline constexpr int kDefaultInit = 10;
inline constexpr int kDefaultBatch = 5;

enum class OptimizerKind { kEnumerative, kExternal };

// "enum" and "external".
std::string OptimizerKindName(OptimizerKind kind);
OptimizerKind ParseOptimizerKind(const std::string& name);

struct BoConfig {
  uint64_t seed = 0;
  int iterations = kDefaultIterations;
  int init = kDefaultInit;
  int batch = kDefaultBatch;
  double beta_sqrt = mip::kDefaultBetaSqrt;
  // Kernel form, parameter box and likelihood search. The search seed is
  // derived from `seed` per iteration.
  gp::FitConfig fit;
  OptimizerKind optimizer = OptimizerKind::kEnumerative;
  acq::ExternalSolverConfig external;
  double enumeration_cap = graph::kDefaultEnumerationCap;

  void Validate() const;
};

Json BoConfigToJson(const BoConfig& config);

struct EvaluatedPoint {
  graph::LabeledGraph graph;
  std::string key;
  // Acquisition values at proposal time; zero for the initial design and
  // for random search.
  double lcb = 0.0;
  double mean = 0.0;
  double stddev = 0.0;
  double val_error = 0.0;
  double test_error = 0.0;
  int seed_drawn = -1;
};

struct PhaseTimes {
  double fit_seconds = 0.0;
  double acquisition_seconds = 0.0;
  double evaluation_seconds = 0.0;
};

// Iteration 0 is the initial design.
struct BoRunRecord {
  int iteration = 0;
  std::vector<EvaluatedPoint> batch;
  double incumbent_val_error = 0.0;
  double incumbent_test_error = 0.0;
  std::string incumbent_key;
  std::optional<kernels::KernelParams> params;
  double noise_variance = 0.0;
  double log_marginal_likelihood = 0.0;
  std::string certificate;
  // Set on the record after which no unevaluated member remained.
  bool exhausted = false;
  PhaseTimes times;
};

// The record without wall-clock times, so that logs are reproducible.
Json RecordToJson(const BoRunRecord& record);
Json TimesToJson(const BoRunRecord& record);

struct BoRun {
  std::string method;  // "nas-goat" or "random"
  BoConfig config;
  std::vector<BoRunRecord> records;
  bool exhausted = false;
  // Incumbent validation error after `iteration`, or after the last record
  // when the run stopped earlier.
  double IncumbentAt(int iteration) const;
};

// Runs the loop. `space`, when given, must enumerate the benchmark space;
// otherwise it is enumerated when small enough, and the initial design is
// drawn from the table records when it is not. Lookup misses propagate as
// LookupMissError.
BoRun RunBo(const BenchmarkTable& bench, const BoConfig& config,
            const acq::EnumeratedSpace* space = nullptr);

// Same initial design and budget as RunBo, with batches drawn uniformly
// from the unevaluated members.
BoRun RunRandomSearch(const BenchmarkTable& bench, const BoConfig& config,
                      const acq::EnumeratedSpace* space = nullptr);

// Line 0 is {"method", "config", "benchmark"}, then one record per line.
std::string RunLogText(const BoRun& run, const BenchmarkTable& bench);
// {"iteration", "times"} per line.
std::string TimingLogText(const BoRun& run);
// Writes `path` and the timing sidecar `path`.timing.jsonl.
void WriteRunLog(const std::string& path, const BoRun& run,
                 const BenchmarkTable& bench);

struct RegretPoint {
  int iteration = 0;
  double median = 0.0;
  double sd = 0.0;
};

// Per iteration across runs: median and sample sd of the simple regret
// (incumbent validation error minus `optimum`).
std::vector<RegretPoint> RegretCurve(std::span<const BoRun> runs,
                                     double optimum);
std::string RegretCsv(std::span<const RegretPoint> curve);

double Median(std::vector<double> values);
// Sample standard deviation; 0 for fewer than two values.
double StdDev(std::span<const double> values);

}  // namespace graphbo::bo

#endif  // GRAPHBO_BO_RUN_BO_H_
