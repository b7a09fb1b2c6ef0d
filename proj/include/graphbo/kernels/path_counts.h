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

#ifndef GRAPHBO_KERNELS_PATH_COUNTS_H_
#define GRAPHBO_KERNELS_PATH_COUNTS_H_

#include <span>
#include <vector>

#include "graphbo/graph/graph_metrics.h"
#include "graphbo/graph/labeled_graph.h"

namespace graphbo::kernels {

// Counts of ordered node pairs (u, v) of existing nodes by
// (distance, label of u, label of v), plus per-label node counts.
// Distance index size() stands for "unreachable". Unlabeled graphs use a
// single label 0 for every node.
class PathCounts {
 public:
  PathCounts(int size, int num_labels);

  int size() const { return n_; }
  int num_labels() const { return num_labels_; }
  int num_nodes() const { return num_nodes_; }

  int count(int distance, int l1, int l2) const {
    return counts_[Index(distance, l1, l2)];
  }
  int unreachable_count(int l1, int l2) const { return count(n_, l1, l2); }
  int label_count(int label) const { return label_counts_[label]; }

  // Flat layout [distance][l1][l2] with distance in [0, size()].
  std::span<const int> raw() const { return counts_; }
  std::span<const int> label_counts() const { return label_counts_; }

 private:
  friend PathCounts ComputePathCounts(const graph::LabeledGraph&,
                                      const graph::GraphMetrics&, int);
  int Index(int s, int l1, int l2) const {
    return (s * num_labels_ + l1) * num_labels_ + l2;
  }

  int n_;
  int num_labels_;
  int num_nodes_ = 0;
  std::vector<int> counts_;
  std::vector<int> label_counts_;
};

// `num_labels` is the node-label vocabulary size, or 0 for "treat all
// nodes alike" (which is required when `g` has no node labels).
PathCounts ComputePathCounts(const graph::LabeledGraph& g,
                             const graph::GraphMetrics& m, int num_labels);

// sum over matching buckets of c1 * c2. Finite distances match when equal;
// unreachable pairs match unreachable pairs regardless of graph size.
double PathCountInnerProduct(const PathCounts& a, const PathCounts& b);

}  // namespace graphbo::kernels

#endif  // GRAPHBO_KERNELS_PATH_COUNTS_H_
