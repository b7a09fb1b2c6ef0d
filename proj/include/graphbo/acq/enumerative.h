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

#ifndef GRAPHBO_ACQ_ENUMERATIVE_H_
#define GRAPHBO_ACQ_ENUMERATIVE_H_

#include <string>
#include <vector>

#include "graphbo/acq/candidate_pool.h"
#include "graphbo/gp/gp.h"
#include "graphbo/graph/graph_space.h"
#include "graphbo/kernels/kernels.h"

namespace graphbo::acq {

// Members of a space with their keys and kernel features, for repeated
// scoring.
struct EnumeratedSpace {
  graph::GraphSpaceSpec spec;
  kernels::LabelVocabulary vocab;
  std::vector<graph::LabeledGraph> graphs;
  std::vector<std::string> keys;
  std::vector<kernels::GraphFeatures> features;
  size_t size() const { return graphs.size(); }
};

EnumeratedSpace EnumerateForScoring(
    const graph::GraphSpaceSpec& spec,
    double cap = graph::kDefaultEnumerationCap);

// LCB of every member, in enumeration order.
std::vector<double> ScoreAll(const EnumeratedSpace& space,
                             const gp::GpState& gp, double beta_sqrt);

// Best k members outside `exclude` by LCB; exhaustive certificate.
CandidatePool OptimizeEnumerative(const EnumeratedSpace& space,
                                  const gp::GpState& gp, double beta_sqrt,
                                  int k, const KeySet& exclude);

// Streams the space instead of holding it. Throws CapExceededError.
CandidatePool OptimizeEnumerative(const graph::GraphSpaceSpec& spec,
                                  const gp::GpState& gp, double beta_sqrt,
                                  int k, const KeySet& exclude,
                                  double cap = graph::kDefaultEnumerationCap);

}  // namespace graphbo::acq

#endif  // GRAPHBO_ACQ_ENUMERATIVE_H_
