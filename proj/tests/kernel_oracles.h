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

// Direct-summation kernel values, written without the factored path
// counts used by the library.

#ifndef GRAPHBO_TESTS_KERNEL_ORACLES_H_
#define GRAPHBO_TESTS_KERNEL_ORACLES_H_

#include "graphbo/graph/labeled_graph.h"
#include "test_util.h"

namespace graphbo::testing {

inline int LabelOf(const graph::LabeledGraph& g, int v) {
  return g.has_node_labels() ? g.node_label(v) : 0;
}

// sum over (u1, v1, u2, v2) of existing nodes with matching endpoint
// labels and equal BFS distance (unreachable matches unreachable).
inline double QuadrupleSumSp(const graph::LabeledGraph& g1, const graph::LabeledGraph& g2) {
  const auto d1 = BfsDistances(g1);
  const auto d2 = BfsDistances(g2);
  double matches = 0.0;
  for (int u1 = 0; u1 < g1.size(); ++u1) {
    for (int v1 = 0; v1 < g1.size(); ++v1) {
      if (!g1.node_exists(u1) || !g1.node_exists(v1)) continue;
      for (int u2 = 0; u2 < g2.size(); ++u2) {
        for (int v2 = 0; v2 < g2.size(); ++v2) {
          if (!g2.node_exists(u2) || !g2.node_exists(v2)) continue;
          if (LabelOf(g1, u1) != LabelOf(g2, u2) ||
              LabelOf(g1, v1) != LabelOf(g2, v2)) {
            continue;
          }
          matches += d1[u1][v1] == d2[u2][v2];
        }
      }
    }
  }
  const double n1 = g1.num_nodes(), n2 = g2.num_nodes();
  return matches / (n1 * n1 * n2 * n2);
}

inline double PairwiseNodeKernel(const graph::LabeledGraph& g1, const graph::LabeledGraph& g2,
                          int num_labels) {
  double same = 0.0;
  for (int a = 0; a < g1.size(); ++a) {
    for (int b = 0; b < g2.size(); ++b) {
      if (g1.node_exists(a) && g2.node_exists(b)) {
        same += g1.node_label(a) == g2.node_label(b);
      }
    }
  }
  return same / (1.0 * g1.num_nodes() * g2.num_nodes() * num_labels);
}

inline double DirectEdgeKernel(const graph::LabeledGraph& g1, const graph::LabeledGraph& g2) {
  const int n = g1.size();
  int shared = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      shared += g1.has_edge(u, v) && g2.has_edge(u, v) &&
                g1.edge_label(u, v) == g2.edge_label(u, v);
    }
  }
  return shared / (n * (n - 1) / 2.0);
}

}  // namespace graphbo::testing

#endif  // GRAPHBO_TESTS_KERNEL_ORACLES_H_
