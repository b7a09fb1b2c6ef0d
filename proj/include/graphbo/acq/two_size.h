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

#ifndef GRAPHBO_ACQ_TWO_SIZE_H_
#define GRAPHBO_ACQ_TWO_SIZE_H_

#include <functional>
#include <span>

#include "graphbo/acq/candidate_pool.h"
#include "graphbo/graph/graph_space.h"

namespace graphbo::acq {

using SizeOptimizer = std::function<CandidatePool(const graph::GraphSpaceSpec&)>;

// Optimizes each fixed-size space separately and merges the pools into the
// k best overall. Candidates are stored in the slot count of the largest
// space, so equal graphs from different sizes share a key. The certificate
// is the weakest among the parts.
CandidatePool OptimizeTwoSize(std::span<const graph::GraphSpaceSpec> spaces,
                              const SizeOptimizer& optimize, int k);

// Keys of the excluded graphs that fit in `size` slots, re-slotted to it.
KeySet ExclusionForSize(const KeySet& exclude, int size);

}  // namespace graphbo::acq

#endif  // GRAPHBO_ACQ_TWO_SIZE_H_
