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

#ifndef GRAPHBO_BO_SYNTH_H_
#define GRAPHBO_BO_SYNTH_H_

#include <array>
#include <cstdint>

#include "graphbo/bo/benchmark.h"
#include "graphbo/graph/graph_space.h"
#include "graphbo/graph/labeled_graph.h"

namespace graphbo::bo {

inline constexpr int kSynthSeeds = 20;

// Weights of the (distance, label, edge) components.
using SynthWeights = std::array<double, 3>;
inline constexpr SynthWeights kSynthValWeights = {0.5, 0.3, 0.2};
inline constexpr SynthWeights kSynthTestWeights = {0.2, 0.5, 0.3};

// Components in [0, 1]:
//   distance: d(first node, last node) / node count, 0 when the last
//             node is unreachable
//   label:    members carrying label 1 (edges when edge-labeled, otherwise
//             nodes) over the available slots; 0 when unlabeled
//   edge:     edge count over the maximum edge count of the space
SynthWeights SynthComponents(const graph::GraphSpaceSpec& spec,
                             const graph::LabeledGraph& g);

// Weighted component sum clamped to [0, 1].
double SynthAccuracy(const graph::GraphSpaceSpec& spec,
                     const graph::LabeledGraph& g,
                     const SynthWeights& weights = kSynthValWeights);

// One record per member of the space, each with kSynthSeeds draws of
// accuracy plus Gaussian noise of sd `noise_sd`, clamped to [0, 1]. The
// metadata stores the noise-free maximizers under "best_keys" (hex
// canonical keys), "best_val_acc" and "best_val_error". Throws
// CapExceededError for spaces too large to enumerate.
BenchmarkTable SynthBenchmark(const graph::GraphSpaceSpec& spec, uint64_t seed,
                              double noise_sd,
                              double cap = graph::kDefaultEnumerationCap);

}  // namespace graphbo::bo

#endif  // GRAPHBO_BO_SYNTH_H_
