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

#ifndef GRAPHBO_BO_KERNEL_COMPARE_H_
#define GRAPHBO_BO_KERNEL_COMPARE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "graphbo/bo/benchmark.h"
#include "graphbo/gp/gp.h"
#include "graphbo/util/json_io.h"

namespace graphbo::bo {

struct KernelCompareConfig {
  int train = 50;
  int test = 400;
  int reps = 20;
  uint64_t seed = 0;
  // Search settings shared by both kernel forms; `form` is overridden.
  gp::FitConfig fit;
  void Validate() const;
};

struct MetricSummary {
  double mean = 0.0;
  double sd = 0.0;
};

struct KernelCompareRow {
  std::string name;  // "SP" (linear) or "ESP" (exponential)
  kernels::KernelForm form = kernels::KernelForm::kLinear;
  MetricSummary rmse;
  MetricSummary mnll;
  MetricSummary spearman;
  // Replications whose Spearman correlation was undefined and counted as 0.
  int spearman_undefined = 0;
};

struct KernelCompareReport {
  std::string benchmark;
  KernelCompareConfig config;
  std::vector<KernelCompareRow> rows;

  Json ToJson() const;
  // One line per row: name, then RMSE, MNLL and Spearman as "mean(sd)".
  std::string FormatTable() const;
};

// "0.1234(0.0056)".
std::string FormatMeanSd(const MetricSummary& m);

// Each replication draws disjoint train and test sets uniformly from the
// records, fits one GP per kernel form on validation error and scores it on
// the test set. Throws InvalidArgumentError when the table has fewer than
// train + test records.
KernelCompareReport KernelCompare(const BenchmarkTable& bench,
                                  const KernelCompareConfig& config);

}  // namespace graphbo::bo

#endif  // GRAPHBO_BO_KERNEL_COMPARE_H_
