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

#include "graphbo/graph/graph_metrics.h"

namespace graphbo::graph {

GraphMetrics ComputeMetrics(const LabeledGraph& g) {
  const int n = g.size();
  GraphMetrics m;
  m.n_ = n;
  m.dist_.assign(n * n, n);
  m.reach_.assign(n * n, 0);
  m.on_path_.assign(n * n * n, 0);

  for (int u = 0; u < n; ++u) {
    m.dist_[u * n + u] = 0;
    for (int v = 0; v < n; ++v) {
      if (u != v && g.has_edge(u, v)) m.dist_[u * n + v] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    if (!g.node_exists(k)) continue;
    for (int u = 0; u < n; ++u) {
      const int duk = m.dist_[u * n + k];
      if (duk >= n) continue;
      for (int v = 0; v < n; ++v) {
        const int dkv = m.dist_[k * n + v];
        if (dkv < n && duk + dkv < m.dist_[u * n + v]) {
          m.dist_[u * n + v] = duk + dkv;
        }
      }
    }
  }

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int duv = m.dist_[u * n + v];
      m.reach_[u * n + v] = duv < n ? 1 : 0;
      uint8_t* path = &m.on_path_[(u * n + v) * n];
      if (u == v) {
        path[u] = 1;
        continue;
      }
      path[u] = 1;
      path[v] = 1;
      if (duv >= n) continue;
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (m.dist_[u * n + w] + m.dist_[w * n + v] == duv) path[w] = 1;
      }
    }
  }
  return m;
}

}  // namespace graphbo::graph
