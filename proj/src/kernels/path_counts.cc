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

#include "graphbo/kernels/path_counts.h"

#include <algorithm>
#include <string>

#include "graphbo/util/errors.h"

namespace graphbo::kernels {

PathCounts::PathCounts(int size, int num_labels)
    : n_(size), num_labels_(num_labels) {
  counts_.assign((n_ + 1) * num_labels_ * num_labels_, 0);
  label_counts_.assign(num_labels_, 0);
}

PathCounts ComputePathCounts(const graph::LabeledGraph& g,
                             const graph::GraphMetrics& m, int num_labels) {
  if (num_labels > 0 && !g.has_node_labels()) {
    throw LabelMismatchError("label vocabulary given for unlabeled graph");
  }
  if (num_labels == 0 && g.has_node_labels()) {
    throw LabelMismatchError("node-labeled graph needs a label vocabulary");
  }
  const int labels = std::max(num_labels, 1);
  const int n = g.size();
  PathCounts pc(n, labels);
  std::vector<int> label(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!g.node_exists(v)) continue;
    if (num_labels > 0) {
      label[v] = g.node_label(v);
      if (label[v] < 0 || label[v] >= labels) {
        throw LabelMismatchError("node label " + std::to_string(label[v]) +
                                 " outside vocabulary of " +
                                 std::to_string(labels));
      }
    }
    ++pc.label_counts_[label[v]];
    ++pc.num_nodes_;
  }
  for (int u = 0; u < n; ++u) {
    if (!g.node_exists(u)) continue;
    for (int v = 0; v < n; ++v) {
      if (!g.node_exists(v)) continue;
      ++pc.counts_[pc.Index(m.dist(u, v), label[u], label[v])];
    }
  }
  return pc;
}

double PathCountInnerProduct(const PathCounts& a, const PathCounts& b) {
  if (a.num_labels() != b.num_labels()) {
    throw LabelMismatchError("path counts over different label vocabularies");
  }
  const int block = a.num_labels() * a.num_labels();
  const auto ra = a.raw();
  const auto rb = b.raw();
  const int finite = std::min(a.size(), b.size());
  double total = 0.0;
  for (int i = 0; i < finite * block; ++i) {
    total += static_cast<double>(ra[i]) * rb[i];
  }
  const int ia = a.size() * block;
  const int ib = b.size() * block;
  for (int i = 0; i < block; ++i) {
    total += static_cast<double>(ra[ia + i]) * rb[ib + i];
  }
  return total;
}

}  // namespace graphbo::kernels
