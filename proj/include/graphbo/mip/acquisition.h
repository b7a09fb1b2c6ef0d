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

#ifndef GRAPHBO_MIP_ACQUISITION_H_
#define GRAPHBO_MIP_ACQUISITION_H_

#include <span>

#include "graphbo/gp/gp.h"
#include "graphbo/graph/graph_space.h"
#include "graphbo/graph/labeled_graph.h"
#include "graphbo/mip/kernel_encoding.h"
#include "graphbo/mip/model.h"

namespace graphbo::mip {

inline constexpr char kTagPosterior[] = "posterior";
inline constexpr char kTagNoGood[] = "nogood";
inline constexpr char kMuVar[] = "mu";
inline constexpr char kSigmaVar[] = "sigma";
inline constexpr double kDefaultBetaSqrt = 3.0;

// Adds mu, sigma >= 0, the posterior relations
//   mu = y_mean + y_scale * sum_i w_i kxX_i
//   sigma^2 <= y_scale^2 (kxx - sum_ij M_ij kxX_i kxX_j)
// with w and M from the GP, and the objective min mu - beta_sqrt * sigma.
// The model must carry kernel terms for exactly the GP's training inputs,
// with the GP's parameters.
void AddAcquisition(MipModel& model, const gp::GpState& gp, double beta_sqrt);

// Space model plus kernel terms and acquisition for `gp`.
MipModel BuildAcquisitionModel(const graph::GraphSpaceSpec& spec,
                               const gp::GpState& gp, double beta_sqrt,
                               const KernelEncodingOptions& options = {});

// One cut per graph excluding its exact A/F bit pattern. Graphs of another
// size than the model are skipped; returns the number of cuts added.
int AddNoGoodCuts(MipModel& model,
                  std::span<const graph::LabeledGraph> excluded);

}  // namespace graphbo::mip

#endif  // GRAPHBO_MIP_ACQUISITION_H_
