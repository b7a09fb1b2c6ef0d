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

#include "graphbo/mip/acquisition.h"

#include <limits>
#include <string>
#include <vector>

#include "graphbo/mip/assignment.h"
#include "graphbo/mip/graph_encoding.h"
#include "graphbo/util/errors.h"

namespace graphbo::mip {

void AddAcquisition(MipModel& model, const gp::GpState& gp, double beta_sqrt) {
  if (!(beta_sqrt >= 0.0)) throw InvalidArgumentError("beta_sqrt must be >= 0");
  if (model.metadata().contains("acquisition")) {
    throw InvalidArgumentError("model already has an acquisition");
  }
  if (gp.num_points() == 0) throw InvalidArgumentError("GP has no data");
  const KernelEncoding k = KernelEncodingOf(model);
  const Json& data = model.metadata().at("kernel").at("data");
  if (data.size() != gp.num_points()) {
    throw InvalidArgumentError("kernel terms do not match the GP data");
  }
  for (size_t i = 0; i < gp.num_points(); ++i) {
    if (data[i].get<std::string>() !=
        ToHex(graph::CanonicalKey(gp.inputs()[i]))) {
      throw InvalidArgumentError("kernel terms do not match the GP data");
    }
  }
  const kernels::KernelParams& p = gp.params();
  if (k.params.form != p.form || k.params.alpha != p.alpha ||
      k.params.beta != p.beta || k.params.gamma != p.gamma ||
      k.params.variance != p.variance) {
    throw InvalidArgumentError("kernel terms use other kernel parameters");
  }
  const double inf = std::numeric_limits<double>::infinity();
  const int mu = model.AddContinuous(kMuVar, -inf, inf);
  const int sigma = model.AddContinuous(kSigmaVar, 0.0, inf);
  const int t = static_cast<int>(gp.num_points());
  const double ys = gp.target_scale();
  const Eigen::VectorXd& w = gp.weights();
  const Eigen::MatrixXd m = gp.InverseGram();

  std::vector<Term> mean{{mu, 1.0}};
  for (int i = 0; i < t; ++i) mean.push_back({k.data_vars[i], -ys * w(i)});
  model.AddConstraint(kTagPosterior, mean, Sense::kEqual, gp.target_mean());

  std::vector<QuadTerm> quad{{sigma, sigma, 1.0}};
  for (int i = 0; i < t; ++i) {
    for (int j = i; j < t; ++j) {
      const double c = (i == j ? 1.0 : 2.0) * ys * ys * m(i, j);
      quad.push_back({k.data_vars[i], k.data_vars[j], c});
    }
  }
  model.AddConstraint(kTagPosterior, {{k.self_var, -ys * ys}},
                      Sense::kLessEqual, 0.0, quad);
  model.SetObjective({{{mu, 1.0}, {sigma, -beta_sqrt}}, 0.0});

  Json weights = Json::array();
  for (int i = 0; i < t; ++i) weights.push_back(w(i));
  Json inverse = Json::array();
  for (int i = 0; i < t; ++i) {
    Json row = Json::array();
    for (int j = 0; j < t; ++j) row.push_back(m(i, j));
    inverse.push_back(std::move(row));
  }
  model.metadata()["acquisition"] = {{"beta_sqrt", beta_sqrt},
                                     {"y_mean", gp.target_mean()},
                                     {"y_scale", ys},
                                     {"noise_variance", gp.noise_variance()},
                                     {"weights", std::move(weights)},
                                     {"inverse_gram", std::move(inverse)}};
}

MipModel BuildAcquisitionModel(const graph::GraphSpaceSpec& spec,
                               const gp::GpState& gp, double beta_sqrt,
                               const KernelEncodingOptions& options) {
  MipModel model = BuildSpaceModel(spec);
  AddKernelTerms(model, gp.inputs(), gp.params(), options);
  AddAcquisition(model, gp, beta_sqrt);
  return model;
}

int AddNoGoodCuts(MipModel& model,
                  std::span<const graph::LabeledGraph> excluded) {
  const int n = ModelSize(model);
  int added = 0;
  for (const graph::LabeledGraph& g : excluded) {
    if (g.size() != n) continue;
    const std::vector<double> bits = StructureAssignment(model, g);
    std::vector<Term> cut;
    double ones = 0.0;
    for (int var : StructureBinaries(model)) {
      if (bits[var] > 0.5) {
        cut.push_back({var, -1.0});
        ones += 1.0;
      } else {
        cut.push_back({var, 1.0});
      }
    }
    model.AddConstraint(kTagNoGood, cut, Sense::kGreaterEqual, 1.0 - ones);
    ++added;
  }
  return added;
}

}  // namespace graphbo::mip
