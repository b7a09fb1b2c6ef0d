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

#ifndef GRAPHBO_KERNELS_KERNELS_H_
#define GRAPHBO_KERNELS_KERNELS_H_

#include <string>
#include <vector>

#include "graphbo/graph/graph_metrics.h"
#include "graphbo/graph/graph_space.h"
#include "graphbo/graph/labeled_graph.h"
#include "graphbo/kernels/path_counts.h"

namespace graphbo::kernels {

// Label vocabularies of the graphs a kernel compares; 0 means the label
// kind is absent.
struct LabelVocabulary {
  int num_node_labels = 0;
  int num_edge_labels = 0;
  bool operator==(const LabelVocabulary&) const = default;
};

LabelVocabulary VocabularyOf(const graph::GraphSpaceSpec& spec);

enum class KernelForm { kLinear, kExponential };

std::string KernelFormName(KernelForm form);
KernelForm ParseKernelForm(const std::string& name);

// k_lin = alpha * k_g + beta * k_n + gamma * k_e
// k_exp = variance * exp(k_lin)
struct KernelParams {
  KernelForm form = KernelForm::kLinear;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double variance = 1.0;
};

// Shortest-path kernel by direct summation over node pairs:
//   1/(n1^2 n2^2) * #{(u1,v1,u2,v2) : labels and distances match}.
// Unreachable pairs match unreachable pairs. Graphs without node labels are
// compared as if every node carried the same label. Throws
// LabelMismatchError if exactly one graph is node-labeled.
double SpKernel(const graph::LabeledGraph& g1, const graph::GraphMetrics& m1,
                const graph::LabeledGraph& g2, const graph::GraphMetrics& m2);

// Same value from precomputed counts.
double SpKernelFromCounts(const PathCounts& a, const PathCounts& b);

// 1/(n1 n2 L) * sum_l N_l(g1) N_l(g2).
double NodeKernel(const graph::LabeledGraph& g1, const graph::LabeledGraph& g2,
                  int num_labels);

// 2/(n(n-1)) * #{u<v : both graphs have u->v with the same label}.
// Both graphs must be edge-labeled, of equal size, with edges only from
// lower to higher index.
double EdgeKernel(const graph::LabeledGraph& g1, const graph::LabeledGraph& g2);

// Per-graph data from which every kernel term is computed cheaply.
struct GraphFeatures {
  int size = 0;
  PathCounts counts{1, 1};
  bool node_labeled = false;
  bool edge_labeled = false;
  // Label of u->v for u<v in row-major order, kNoLabel if absent.
  std::vector<int> upper_edge_labels;
};

GraphFeatures MakeFeatures(const graph::LabeledGraph& g,
                           const LabelVocabulary& vocab);

struct KernelTerms {
  double structure = 0.0;  // k_g
  double node = 0.0;       // k_n, 0 when node labels are absent
  double edge = 0.0;       // k_e, 0 when edge labels are absent
};

KernelTerms ComputeKernelTerms(const GraphFeatures& a, const GraphFeatures& b,
                               const LabelVocabulary& vocab);

double LinearCombination(const KernelTerms& terms, const KernelParams& p,
                         const LabelVocabulary& vocab);
double CombineTerms(const KernelTerms& terms, const KernelParams& p,
                    const LabelVocabulary& vocab);

double CombinedKernel(const graph::LabeledGraph& x1,
                      const graph::LabeledGraph& x2, const KernelParams& p,
                      const LabelVocabulary& vocab);

}  // namespace graphbo::kernels

#endif  // GRAPHBO_KERNELS_KERNELS_H_
