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

#include "graphbo/bo/kernel_compare.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>

#include "graphbo/bo/run_bo.h"
#include "graphbo/gp/metrics.h"
#include "graphbo/util/errors.h"

namespace graphbo::bo {
namespace {

MetricSummary Summarize(const std::vector<double>& v) {
  MetricSummary m;
  m.mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  m.sd = StdDev(v);
  return m;
}

Json SummaryToJson(const MetricSummary& m) {
  return {{"mean", m.mean}, {"sd", m.sd}, {"formatted", FormatMeanSd(m)}};
}

}  // namespace

void KernelCompareConfig::Validate() const {
  if (train < 2) throw InvalidArgumentError("train must be >= 2");
  if (test < 1) throw InvalidArgumentError("test must be >= 1");
  if (reps < 1) throw InvalidArgumentError("reps must be >= 1");
  fit.Validate();
}

std::string FormatMeanSd(const MetricSummary& m) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f(%.4f)", m.mean, m.sd);
  return buf;
}

Json KernelCompareReport::ToJson() const {
  Json j;
  j["benchmark"] = benchmark;
  j["train"] = config.train;
  j["test"] = config.test;
  j["reps"] = config.reps;
  j["seed"] = config.seed;
  Json rows_json = Json::array();
  for (const KernelCompareRow& r : rows) {
    Json row;
    row["name"] = r.name;
    row["kernel"] = kernels::KernelFormName(r.form);
    row["rmse"] = SummaryToJson(r.rmse);
    row["mnll"] = SummaryToJson(r.mnll);
    row["spearman"] = SummaryToJson(r.spearman);
    row["spearman_undefined"] = r.spearman_undefined;
    rows_json.push_back(std::move(row));
  }
  j["rows"] = std::move(rows_json);
  return j;
}

std::string KernelCompareReport::FormatTable() const {
  std::string out = "kernel  RMSE              MNLL              Spearman\n";
  char buf[160];
  for (const KernelCompareRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%-6s  %-16s  %-16s  %s\n", r.name.c_str(),
                  FormatMeanSd(r.rmse).c_str(), FormatMeanSd(r.mnll).c_str(),
                  FormatMeanSd(r.spearman).c_str());
    out += buf;
  }
  return out;
}

KernelCompareReport KernelCompare(const BenchmarkTable& bench,
                                  const KernelCompareConfig& config) {
  config.Validate();
  const size_t needed = static_cast<size_t>(config.train) + config.test;
  if (bench.size() < needed) {
    throw InvalidArgumentError("benchmark has " + std::to_string(bench.size()) +
                               " records, need " + std::to_string(needed));
  }
  const kernels::LabelVocabulary vocab = kernels::VocabularyOf(bench.space());
  const kernels::KernelForm forms[] = {kernels::KernelForm::kLinear,
                                       kernels::KernelForm::kExponential};
  std::vector<double> rmse[2], mnll[2], rho[2];
  int undefined[2] = {0, 0};
  std::mt19937_64 rng(config.seed);
  std::vector<size_t> order(bench.size());
  for (int rep = 0; rep < config.reps; ++rep) {
    std::iota(order.begin(), order.end(), size_t{0});
    for (size_t i = 0; i < needed; ++i) {
      std::uniform_int_distribution<size_t> pick(i, order.size() - 1);
      std::swap(order[i], order[pick(rng)]);
    }
    std::vector<graph::LabeledGraph> train_x, test_x;
    std::vector<double> train_y, test_y;
    for (size_t i = 0; i < needed; ++i) {
      const BenchmarkRecord& r = bench.records()[order[i]];
      auto& xs = i < static_cast<size_t>(config.train) ? train_x : test_x;
      auto& ys = i < static_cast<size_t>(config.train) ? train_y : test_y;
      xs.push_back(r.graph);
      ys.push_back(1.0 - r.mean_val_acc());
    }
    for (int f = 0; f < 2; ++f) {
      gp::FitConfig fit = config.fit;
      fit.form = forms[f];
      fit.seed = rng();
      const gp::GpState gp = gp::GpState::Fit(train_x, train_y, vocab, fit);
      const gp::PredictionMetrics m = gp::EvaluateGp(gp, test_x, test_y);
      rmse[f].push_back(m.rmse);
      mnll[f].push_back(m.mnll);
      rho[f].push_back(m.spearman);
      undefined[f] += m.spearman_undefined;
    }
  }
  KernelCompareReport report;
  report.benchmark = bench.name();
  report.config = config;
  for (int f = 0; f < 2; ++f) {
    KernelCompareRow row;
    row.name = f == 0 ? "SP" : "ESP";
    row.form = forms[f];
    row.rmse = Summarize(rmse[f]);
    row.mnll = Summarize(mnll[f]);
    row.spearman = Summarize(rho[f]);
    row.spearman_undefined = undefined[f];
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace graphbo::bo
