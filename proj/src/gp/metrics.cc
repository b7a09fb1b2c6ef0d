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

#include "graphbo/gp/metrics.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "graphbo/util/errors.h"

namespace graphbo::gp {
namespace {

std::vector<double> AverageRanks(std::span<const double> x) {
  const size_t n = x.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n);
  for (size_t i = 0; i < n;) {
    size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double SpearmanCorrelation(std::span<const double> a, std::span<const double> b,
                           bool* undefined) {
  if (a.size() != b.size()) {
    throw InvalidArgumentError("rank correlation of unequal-length inputs");
  }
  if (undefined != nullptr) *undefined = false;
  const std::vector<double> ra = AverageRanks(a);
  const std::vector<double> rb = AverageRanks(b);
  const double n = static_cast<double>(a.size());
  const double mean = (n + 1.0) / 2.0;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    sab += (ra[i] - mean) * (rb[i] - mean);
    saa += (ra[i] - mean) * (ra[i] - mean);
    sbb += (rb[i] - mean) * (rb[i] - mean);
  }
  if (saa <= 0.0 || sbb <= 0.0) {
    if (undefined != nullptr) *undefined = true;
    return 0.0;
  }
  return sab / std::sqrt(saa * sbb);
}

PredictionMetrics EvaluatePredictions(std::span<const double> means,
                                      std::span<const double> variances,
                                      std::span<const double> targets) {
  if (targets.empty() || means.size() != targets.size() ||
      variances.size() != targets.size()) {
    throw InvalidArgumentError("metrics need equal-length nonempty inputs");
  }
  PredictionMetrics m;
  double sq = 0.0, nll = 0.0;
  for (size_t i = 0; i < targets.size(); ++i) {
    const double r = targets[i] - means[i];
    const double var = std::max(variances[i], kVarianceFloor);
    sq += r * r;
    nll += 0.5 * std::log(2.0 * std::numbers::pi * var) + r * r / (2.0 * var);
  }
  const double n = static_cast<double>(targets.size());
  m.rmse = std::sqrt(sq / n);
  m.mnll = nll / n;
  m.spearman = SpearmanCorrelation(means, targets, &m.spearman_undefined);
  return m;
}

PredictionMetrics EvaluateGp(const GpState& gp,
                             std::span<const graph::LabeledGraph> inputs,
                             std::span<const double> targets) {
  std::vector<kernels::GraphFeatures> features;
  features.reserve(inputs.size());
  for (const auto& g : inputs) {
    features.push_back(kernels::MakeFeatures(g, gp.vocabulary()));
  }
  const std::vector<Posterior> post = gp.PredictBatch(features);
  const double noise =
      gp.noise_variance() * gp.target_scale() * gp.target_scale();
  std::vector<double> means, variances;
  for (const Posterior& p : post) {
    means.push_back(p.mean);
    variances.push_back(p.variance + noise);
  }
  return EvaluatePredictions(means, variances, targets);
}

}  // namespace graphbo::gp
