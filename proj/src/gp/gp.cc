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

#include "graphbo/gp/gp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "graphbo/graph/graph_json.h"
#include "graphbo/util/errors.h"

namespace graphbo::gp {
namespace {

using kernels::GraphFeatures;
using kernels::KernelForm;
using kernels::KernelParams;
using kernels::KernelTerms;
using kernels::LabelVocabulary;

struct TermMatrices {
  Eigen::MatrixXd structure, node, edge;
};

TermMatrices TrainingTerms(const std::vector<GraphFeatures>& f,
                           const LabelVocabulary& vocab) {
  const int t = static_cast<int>(f.size());
  TermMatrices m{Eigen::MatrixXd(t, t), Eigen::MatrixXd::Zero(t, t),
                 Eigen::MatrixXd::Zero(t, t)};
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j <= i; ++j) {
      const KernelTerms k = kernels::ComputeKernelTerms(f[i], f[j], vocab);
      m.structure(i, j) = m.structure(j, i) = k.structure;
      m.node(i, j) = m.node(j, i) = k.node;
      m.edge(i, j) = m.edge(j, i) = k.edge;
    }
  }
  return m;
}

Eigen::MatrixXd Combine(const TermMatrices& m, const KernelParams& p,
                        const LabelVocabulary& vocab) {
  Eigen::MatrixXd k = p.alpha * m.structure;
  if (vocab.num_node_labels > 0) k += p.beta * m.node;
  if (vocab.num_edge_labels > 0) k += p.gamma * m.edge;
  if (p.form == KernelForm::kExponential) {
    k = p.variance * k.array().exp().matrix();
  }
  return k;
}

struct Factorization {
  Eigen::MatrixXd lower;
  double jitter;
};

// Cholesky of k + (noise + jitter) I, doubling the jitter on failure.
std::optional<Factorization> Factor(const Eigen::MatrixXd& k, double noise) {
  const int t = static_cast<int>(k.rows());
  for (double jitter = kInitialJitter; jitter <= kMaxJitter; jitter *= 2.0) {
    Eigen::MatrixXd a = k;
    a.diagonal().array() += noise + jitter;
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() == Eigen::Success) {
      Eigen::MatrixXd lower = llt.matrixL();
      bool finite = lower.allFinite();
      for (int i = 0; finite && i < t; ++i) finite = lower(i, i) > 0.0;
      if (finite) return Factorization{std::move(lower), jitter};
    }
  }
  return std::nullopt;
}

double LogMarginal(const Factorization& f, const Eigen::VectorXd& y) {
  const auto lower = f.lower.triangularView<Eigen::Lower>();
  const Eigen::VectorXd v = lower.solve(y);
  const double t = static_cast<double>(y.size());
  return -0.5 * v.squaredNorm() -
         f.lower.diagonal().array().log().sum() -
         0.5 * t * std::log(2.0 * std::numbers::pi);
}

// Search coordinates, all in log10 space.
struct Layout {
  bool node, edge, variance, noise;
  int size() const { return 1 + node + edge + variance + noise; }
};

void Unpack(const Layout& layout, const std::vector<double>& theta,
            const FitConfig& cfg, KernelParams* p, double* noise) {
  int i = 0;
  p->form = cfg.form;
  p->alpha = std::pow(10.0, theta[i++]);
  p->beta = layout.node ? std::pow(10.0, theta[i++]) : cfg.param_initial;
  p->gamma = layout.edge ? std::pow(10.0, theta[i++]) : cfg.param_initial;
  p->variance =
      layout.variance ? std::pow(10.0, theta[i++]) : cfg.param_initial;
  *noise = layout.noise ? std::pow(10.0, theta[i++]) : cfg.fixed_noise;
}

}  // namespace

void FitConfig::Validate() const {
  if (!(param_lower > 0.0) || !(param_lower < param_upper)) {
    throw InvalidArgumentError("parameter bounds must satisfy 0 < lo < hi");
  }
  if (param_initial < param_lower || param_initial > param_upper) {
    throw InvalidArgumentError("initial parameter outside its bounds");
  }
  if (starts < 1 || budget < starts) {
    throw InvalidArgumentError("need starts >= 1 and budget >= starts");
  }
  if (fixed_noise < 0.0) throw InvalidArgumentError("negative noise");
  if (noise_mode == NoiseMode::kTrainable &&
      (!(noise_lower > 0.0) || !(noise_lower < noise_upper))) {
    throw InvalidArgumentError("noise bounds must satisfy 0 < lo < hi");
  }
}

double Posterior::stddev() const { return std::sqrt(std::max(variance, 0.0)); }

GpState GpState::Fit(std::vector<graph::LabeledGraph> inputs,
                     std::vector<double> targets,
                     const LabelVocabulary& vocab, const FitConfig& config) {
  config.Validate();
  if (inputs.size() < 2) {
    throw InvalidArgumentError("GP fit needs at least two observations");
  }
  GpState s;
  s.inputs_ = std::move(inputs);
  s.targets_ = std::move(targets);
  s.vocab_ = vocab;
  if (s.inputs_.size() != s.targets_.size()) {
    throw InvalidArgumentError("inputs and targets differ in length");
  }
  for (double y : s.targets_) {
    if (!std::isfinite(y)) throw InvalidArgumentError("non-finite target");
  }
  for (const auto& g : s.inputs_) {
    s.features_.push_back(kernels::MakeFeatures(g, vocab));
  }
  const int t = static_cast<int>(s.targets_.size());
  Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(s.targets_.data(), t);
  s.y_mean_ = y.mean();
  const double sd = std::sqrt((y.array() - s.y_mean_).square().mean());
  s.y_scale_ = sd > 1e-12 ? sd : 1.0;
  const Eigen::VectorXd y_std = (y.array() - s.y_mean_) / s.y_scale_;

  const TermMatrices terms = TrainingTerms(s.features_, vocab);
  const Layout layout{vocab.num_node_labels > 0, vocab.num_edge_labels > 0,
                      config.form == KernelForm::kExponential,
                      config.noise_mode == NoiseMode::kTrainable};
  const int dim = layout.size();
  std::vector<double> lo(dim, std::log10(config.param_lower));
  std::vector<double> hi(dim, std::log10(config.param_upper));
  std::vector<double> init(dim, std::log10(config.param_initial));
  if (layout.noise) {
    lo.back() = std::log10(config.noise_lower);
    hi.back() = std::log10(config.noise_upper);
    init.back() = std::clamp(std::log10(config.noise_initial), lo.back(),
                             hi.back());
  }

  int evaluations = 0;
  auto evaluate = [&](const std::vector<double>& theta) {
    ++evaluations;
    KernelParams p;
    double noise;
    Unpack(layout, theta, config, &p, &noise);
    const auto f = Factor(Combine(terms, p, vocab), noise);
    if (!f) return -std::numeric_limits<double>::infinity();
    return LogMarginal(*f, y_std);
  };

  std::mt19937_64 rng(config.seed);
  std::vector<double> best_theta = init;
  double best = -std::numeric_limits<double>::infinity();
  for (int start = 0; start < config.starts; ++start) {
    const int stop = config.budget * (start + 1) / config.starts;
    std::vector<double> theta = init;
    if (start > 0) {
      for (int i = 0; i < dim; ++i) {
        theta[i] = std::uniform_real_distribution<double>(lo[i], hi[i])(rng);
      }
    }
    double value = evaluate(theta);
    double step = 1.0;
    while (evaluations < stop && step > 1e-3) {
      bool improved = false;
      for (int i = 0; i < dim && evaluations < stop; ++i) {
        for (double dir : {1.0, -1.0}) {
          if (evaluations >= stop) break;
          std::vector<double> cand = theta;
          cand[i] = std::clamp(theta[i] + dir * step, lo[i], hi[i]);
          if (cand[i] == theta[i]) continue;
          const double v = evaluate(cand);
          if (v > value) {
            theta = std::move(cand);
            value = v;
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (value > best) {
      best = value;
      best_theta = theta;
    }
  }
  Unpack(layout, best_theta, config, &s.params_, &s.noise_);
  s.evaluations_ = evaluations;
  s.Condition();
  return s;
}

GpState GpState::WithParams(std::vector<graph::LabeledGraph> inputs,
                            std::vector<double> targets,
                            const LabelVocabulary& vocab,
                            const KernelParams& params,
                            double noise_variance) {
  if (inputs.empty() || inputs.size() != targets.size()) {
    throw InvalidArgumentError("need matching, nonempty inputs and targets");
  }
  GpState s;
  s.inputs_ = std::move(inputs);
  s.targets_ = std::move(targets);
  s.vocab_ = vocab;
  s.params_ = params;
  s.noise_ = noise_variance;
  for (const auto& g : s.inputs_) {
    s.features_.push_back(kernels::MakeFeatures(g, vocab));
  }
  const int t = static_cast<int>(s.targets_.size());
  Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(s.targets_.data(), t);
  s.y_mean_ = y.mean();
  const double sd = std::sqrt((y.array() - s.y_mean_).square().mean());
  s.y_scale_ = sd > 1e-12 ? sd : 1.0;
  s.Condition();
  return s;
}

void GpState::Condition() {
  const int t = static_cast<int>(targets_.size());
  Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(targets_.data(), t);
  const Eigen::VectorXd y_std = (y.array() - y_mean_) / y_scale_;
  const Eigen::MatrixXd k =
      Combine(TrainingTerms(features_, vocab_), params_, vocab_);
  auto f = Factor(k, noise_);
  if (!f) {
    throw NotPositiveDefiniteError(
        "Gram matrix not positive definite after jitter escalation to " +
        std::to_string(kMaxJitter));
  }
  jitter_ = f->jitter;
  lml_ = LogMarginal(*f, y_std);
  factor_ = std::move(f->lower);
  weights_ = factor_.triangularView<Eigen::Lower>().solve(y_std);
  factor_.transpose().triangularView<Eigen::Upper>().solveInPlace(weights_);
}

double GpState::Kernel(const GraphFeatures& a, const GraphFeatures& b) const {
  return kernels::CombineTerms(kernels::ComputeKernelTerms(a, b, vocab_),
                               params_, vocab_);
}

double GpState::PriorVariance(const GraphFeatures& x) const {
  return Kernel(x, x) * y_scale_ * y_scale_;
}

double GpState::PriorVariance(const graph::LabeledGraph& x) const {
  return PriorVariance(kernels::MakeFeatures(x, vocab_));
}

Posterior GpState::Predict(const graph::LabeledGraph& x) const {
  return Predict(kernels::MakeFeatures(x, vocab_));
}

Posterior GpState::Predict(const GraphFeatures& x) const {
  const int t = static_cast<int>(features_.size());
  Eigen::VectorXd k(t);
  for (int i = 0; i < t; ++i) k(i) = Kernel(x, features_[i]);
  const Eigen::VectorXd v =
      factor_.triangularView<Eigen::Lower>().solve(k);
  Posterior p;
  p.mean = y_mean_ + y_scale_ * k.dot(weights_);
  double var = Kernel(x, x) - v.squaredNorm();
  p.variance = std::max(var, 0.0) * y_scale_ * y_scale_;
  return p;
}

std::vector<Posterior> GpState::PredictBatch(
    std::span<const GraphFeatures> xs) const {
  constexpr int kChunk = 1024;
  const int t = static_cast<int>(features_.size());
  const int total = static_cast<int>(xs.size());
  std::vector<Posterior> out(total);
  for (int begin = 0; begin < total; begin += kChunk) {
    const int m = std::min(kChunk, total - begin);
    Eigen::MatrixXd cross(t, m);
    Eigen::VectorXd self(m);
    for (int j = 0; j < m; ++j) {
      const GraphFeatures& x = xs[begin + j];
      for (int i = 0; i < t; ++i) cross(i, j) = Kernel(features_[i], x);
      self(j) = Kernel(x, x);
    }
    const Eigen::VectorXd means = cross.transpose() * weights_;
    factor_.triangularView<Eigen::Lower>().solveInPlace(cross);
    const Eigen::VectorXd reduction = cross.colwise().squaredNorm();
    for (int j = 0; j < m; ++j) {
      out[begin + j].mean = y_mean_ + y_scale_ * means(j);
      out[begin + j].variance =
          std::max(self(j) - reduction(j), 0.0) * y_scale_ * y_scale_;
    }
  }
  return out;
}

Eigen::MatrixXd GpState::InverseGram() const {
  const int t = static_cast<int>(features_.size());
  Eigen::MatrixXd inv = Eigen::MatrixXd::Identity(t, t);
  factor_.triangularView<Eigen::Lower>().solveInPlace(inv);
  factor_.transpose().triangularView<Eigen::Upper>().solveInPlace(inv);
  return 0.5 * (inv + inv.transpose());
}

Json GpState::ToJson() const {
  Json j;
  j["kernel"] = {{"form", kernels::KernelFormName(params_.form)},
                 {"alpha", params_.alpha},
                 {"beta", params_.beta},
                 {"gamma", params_.gamma},
                 {"variance", params_.variance}};
  j["noise_variance"] = noise_;
  j["vocabulary"] = {{"num_node_labels", vocab_.num_node_labels},
                     {"num_edge_labels", vocab_.num_edge_labels}};
  Json graphs = Json::array();
  for (const auto& g : inputs_) graphs.push_back(graph::GraphToJson(g));
  j["inputs"] = std::move(graphs);
  j["targets"] = targets_;
  return j;
}

GpState GpState::FromJson(const Json& j) {
  try {
    KernelParams p;
    const Json& k = j.at("kernel");
    p.form = kernels::ParseKernelForm(k.at("form").get<std::string>());
    p.alpha = k.at("alpha").get<double>();
    p.beta = k.value("beta", 1.0);
    p.gamma = k.value("gamma", 1.0);
    p.variance = k.value("variance", 1.0);
    LabelVocabulary vocab;
    vocab.num_node_labels = j.at("vocabulary").value("num_node_labels", 0);
    vocab.num_edge_labels = j.at("vocabulary").value("num_edge_labels", 0);
    std::vector<graph::LabeledGraph> inputs;
    for (const Json& g : j.at("inputs")) {
      inputs.push_back(graph::GraphFromJson(g));
    }
    return WithParams(std::move(inputs),
                      j.at("targets").get<std::vector<double>>(), vocab, p,
                      j.at("noise_variance").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("bad GP state: ") + e.what(), -1);
  }
}

}  // namespace graphbo::gp
