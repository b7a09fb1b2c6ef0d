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

#ifndef GRAPHBO_GP_GP_H_
#define GRAPHBO_GP_GP_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "graphbo/graph/labeled_graph.h"
#include "graphbo/kernels/kernels.h"
#include "graphbo/util/json_io.h"

namespace graphbo::gp {

enum class NoiseMode { kFixed, kTrainable };

inline constexpr double kInitialJitter = 1e-8;
inline constexpr double kMaxJitter = 1e-2;

struct FitConfig {
  kernels::KernelForm form = kernels::KernelForm::kLinear;
  // Box and starting point shared by alpha, beta, gamma and the variance.
  double param_lower = 0.01;
  double param_upper = 100.0;
  double param_initial = 1.0;
  // Derivative-free search: `starts` coordinate searches sharing `budget`
  // likelihood evaluations. The first start is the initial point.
  int starts = 3;
  int budget = 200;
  uint64_t seed = 0;
  // Observation noise on the standardized targets.
  NoiseMode noise_mode = NoiseMode::kFixed;
  double fixed_noise = 1e-6;
  double noise_lower = 1e-6;
  double noise_upper = 1.0;
  double noise_initial = 1e-2;

  void Validate() const;
};

struct Posterior {
  double mean = 0.0;
  double variance = 0.0;
  double stddev() const;
};

// Gaussian process over labeled graphs. Targets are standardized
// internally; every public value (posterior, targets) is in the original
// units. Immutable after construction.
class GpState {
 public:
  // Maximizes the log marginal likelihood over the parameter box.
  static GpState Fit(std::vector<graph::LabeledGraph> inputs,
                     std::vector<double> targets,
                     const kernels::LabelVocabulary& vocab,
                     const FitConfig& config);
  // Conditions on the data with the given parameters, no search.
  static GpState WithParams(std::vector<graph::LabeledGraph> inputs,
                            std::vector<double> targets,
                            const kernels::LabelVocabulary& vocab,
                            const kernels::KernelParams& params,
                            double noise_variance);

  Posterior Predict(const graph::LabeledGraph& x) const;
  Posterior Predict(const kernels::GraphFeatures& x) const;
  std::vector<Posterior> PredictBatch(
      std::span<const kernels::GraphFeatures> xs) const;

  // Prior covariance in original units.
  double PriorVariance(const kernels::GraphFeatures& x) const;
  double PriorVariance(const graph::LabeledGraph& x) const;
  // Kernel value on the standardized scale.
  double Kernel(const kernels::GraphFeatures& a,
                const kernels::GraphFeatures& b) const;

  size_t num_points() const { return inputs_.size(); }
  const std::vector<graph::LabeledGraph>& inputs() const { return inputs_; }
  const std::vector<kernels::GraphFeatures>& features() const {
    return features_;
  }
  const std::vector<double>& targets() const { return targets_; }
  const kernels::LabelVocabulary& vocabulary() const { return vocab_; }
  const kernels::KernelParams& params() const { return params_; }
  double noise_variance() const { return noise_; }
  double jitter() const { return jitter_; }
  double target_mean() const { return y_mean_; }
  double target_scale() const { return y_scale_; }
  double log_marginal_likelihood() const { return lml_; }
  int likelihood_evaluations() const { return evaluations_; }

  // (K_XX + noise I)^{-1} y_std and (K_XX + noise I)^{-1} on the
  // standardized scale.
  const Eigen::VectorXd& weights() const { return weights_; }
  Eigen::MatrixXd InverseGram() const;

  Json ToJson() const;
  static GpState FromJson(const Json& j);

 private:
  GpState() = default;
  void Condition();

  std::vector<graph::LabeledGraph> inputs_;
  std::vector<kernels::GraphFeatures> features_;
  std::vector<double> targets_;
  kernels::LabelVocabulary vocab_;
  kernels::KernelParams params_;
  double noise_ = 1e-6;
  double jitter_ = kInitialJitter;
  double y_mean_ = 0.0;
  double y_scale_ = 1.0;
  double lml_ = 0.0;
  int evaluations_ = 0;
  Eigen::MatrixXd factor_;  // lower Cholesky factor of K + (noise+jitter) I
  Eigen::VectorXd weights_;
};

}  // namespace graphbo::gp

#endif  // GRAPHBO_GP_GP_H_
