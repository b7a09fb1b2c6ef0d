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

#ifndef GRAPHBO_GRAPH_GRAPH_METRICS_H_
#define GRAPHBO_GRAPH_GRAPH_METRICS_H_

#include <cstdint>
#include <vector>

#include "graphbo/graph/labeled_graph.h"

namespace graphbo::graph {

// Reachability, shortest distances and shortest-path membership of every
// slot pair. Distances use the slot count n as infinity. on_path(u, v, w)
// is 1 iff w lies on some shortest u->v path (endpoints included). Single
// slots keep reach = 1, dist = 0, on_path(v, v, v) = 1 even when the node
// does not exist; pairs touching a nonexistent node are unreachable with
// only the endpoints on the path.
class GraphMetrics {
 public:
  int size() const { return n_; }
  int infinity() const { return n_; }

  bool reach(int u, int v) const { return reach_[u * n_ + v] != 0; }
  int dist(int u, int v) const { return dist_[u * n_ + v]; }
  bool on_path(int u, int v, int w) const {
    return on_path_[(u * n_ + v) * n_ + w] != 0;
  }

 private:
  friend GraphMetrics ComputeMetrics(const LabeledGraph& g);

  int n_ = 0;
  std::vector<uint8_t> reach_;
  std::vector<int> dist_;
  std::vector<uint8_t> on_path_;
};

// All-pairs shortest paths by Floyd-Warshall over the existing nodes.
GraphMetrics ComputeMetrics(const LabeledGraph& g);

}  // namespace graphbo::graph

#endif  // GRAPHBO_GRAPH_GRAPH_METRICS_H_
