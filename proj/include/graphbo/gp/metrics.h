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

#ifndef GRAPHBO_GP_METRICS_H_
#define GRAPHBO_GP_METRICS_H_

#include <span>
#include <vector>

#include "graphbo/gp/gp.h"
#include "graphbo/graph/labeled_graph.h"

namespace graphbo::gp {

inline constexpr double kVarianceFloor = 1e-12;

struct PredictionMetrics {
  double rmse = 0.0;
  double mnll = 0.0;
  double spearman = 0.0;
  // Set when either ranking is constant; spearman is then reported as 0.
  bool spearman_undefined = false;
};

// Rank correlation with ties given their average rank. Returns 0 and sets
// `undefined` when either input has zero rank variance.
double SpearmanCorrelation(std::span<const double> a, std::span<const double> b,
                           bool* undefined = nullptr);

// `variances` are predictive variances of the observations; each is floored
// at kVarianceFloor before entering the log likelihood.
PredictionMetrics EvaluatePredictions(std::span<const double> means,
                                      std::span<const double> variances,
                                      std::span<const double> targets);

// Scores the posterior of `gp` on a test set, using latent variance plus
// the noise variance in original units.
PredictionMetrics EvaluateGp(const GpState& gp,
                             std::span<const graph::LabeledGraph> inputs,
                             std::span<const double> targets);

}  // namespace graphbo::gp

#endif  // GRAPHBO_GP_METRICS_H_
