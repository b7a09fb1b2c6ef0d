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

#include "graphbo/acq/two_size.h"

#include <algorithm>
#include <string>
#include <vector>

#include "graphbo/graph/labeled_graph.h"
#include "graphbo/util/errors.h"

namespace graphbo::acq {

CandidatePool OptimizeTwoSize(std::span<const graph::GraphSpaceSpec> spaces,
                              const SizeOptimizer& optimize, int k) {
  if (spaces.empty()) throw InvalidArgumentError("no spaces to optimize");
  int slots = 0;
  for (const graph::GraphSpaceSpec& spec : spaces) {
    slots = std::max(slots, spec.max_nodes);
  }
  std::vector<CandidatePool> pools;
  pools.reserve(spaces.size());
  for (const graph::GraphSpaceSpec& spec : spaces) {
    CandidatePool pool = optimize(spec);
    for (Candidate& c : pool.candidates) {
      if (c.graph.size() == slots) continue;
      c.graph = graph::WithSlots(c.graph, slots);
      c.key = graph::CanonicalKey(c.graph);
    }
    std::sort(pool.candidates.begin(), pool.candidates.end(), CandidateLess);
    pools.push_back(std::move(pool));
  }
  return MergePools(pools, k);
}

KeySet ExclusionForSize(const KeySet& exclude, int size) {
  KeySet out;
  for (const std::string& key : exclude) {
    const graph::LabeledGraph g = graph::GraphFromKey(key);
    bool fits = true;
    for (int v = size; v < g.size(); ++v) fits = fits && !g.node_exists(v);
    if (!fits) continue;
    out.insert(graph::CanonicalKey(graph::WithSlots(g, size)));
  }
  return out;
}

}  // namespace graphbo::acq
