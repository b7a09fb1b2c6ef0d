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

#include "graphbo/kernels/kernels.h"

#include <cmath>

#include "graphbo/util/errors.h"

namespace graphbo::kernels {

using graph::GraphMetrics;
using graph::LabeledGraph;

LabelVocabulary VocabularyOf(const graph::GraphSpaceSpec& spec) {
  return {spec.num_node_labels(), spec.num_edge_labels()};
}

std::string KernelFormName(KernelForm form) {
  return form == KernelForm::kLinear ? "linear" : "exp";
}

KernelForm ParseKernelForm(const std::string& name) {
  if (name == "linear" || name == "lin" || name == "SP") {
    return KernelForm::kLinear;
  }
  if (name == "exp" || name == "exponential" || name == "ESP") {
    return KernelForm::kExponential;
  }
  throw InvalidArgumentError("unknown kernel form: " + name);
}

double SpKernel(const LabeledGraph& g1, const GraphMetrics& m1,
                const LabeledGraph& g2, const GraphMetrics& m2) {
  if (g1.has_node_labels() != g2.has_node_labels()) {
    throw LabelMismatchError("only one graph carries node labels");
  }
  const auto nodes = [](const LabeledGraph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.size(); ++v) {
      if (g.node_exists(v)) out.push_back(v);
    }
    return out;
  };
  const std::vector<int> v1 = nodes(g1);
  const std::vector<int> v2 = nodes(g2);
  const auto label = [](const LabeledGraph& g, int v) {
    return g.has_node_labels() ? g.node_label(v) : 0;
  };
  long matches = 0;
  for (int a1 : v1) {
    for (int b1 : v1) {
      const int d1 = m1.dist(a1, b1);
      const bool inf1 = d1 >= m1.infinity();
      for (int a2 : v2) {
        if (label(g1, a1) != label(g2, a2)) continue;
        for (int b2 : v2) {
          if (label(g1, b1) != label(g2, b2)) continue;
          const int d2 = m2.dist(a2, b2);
          const bool inf2 = d2 >= m2.infinity();
          if (inf1 ? inf2 : (!inf2 && d1 == d2)) ++matches;
        }
      }
    }
  }
  const double n1 = static_cast<double>(v1.size());
  const double n2 = static_cast<double>(v2.size());
  return static_cast<double>(matches) / (n1 * n1 * n2 * n2);
}

double SpKernelFromCounts(const PathCounts& a, const PathCounts& b) {
  const double n1 = a.num_nodes();
  const double n2 = b.num_nodes();
  return PathCountInnerProduct(a, b) / (n1 * n1 * n2 * n2);
}

double NodeKernel(const LabeledGraph& g1, const LabeledGraph& g2,
                  int num_labels) {
  if (!g1.has_node_labels() || !g2.has_node_labels()) {
    throw LabelMismatchError("node kernel needs node-labeled graphs");
  }
  std::vector<double> c1(num_labels, 0.0), c2(num_labels, 0.0);
  const auto tally = [num_labels](const LabeledGraph& g,
                                  std::vector<double>& c) {
    for (int v = 0; v < g.size(); ++v) {
      if (!g.node_exists(v)) continue;
      const int l = g.node_label(v);
      if (l < 0 || l >= num_labels) {
        throw LabelMismatchError("node label outside vocabulary");
      }
      c[l] += 1.0;
    }
  };
  tally(g1, c1);
  tally(g2, c2);
  double dot = 0.0;
  for (int l = 0; l < num_labels; ++l) dot += c1[l] * c2[l];
  return dot / (static_cast<double>(g1.num_nodes()) * g2.num_nodes() *
                num_labels);
}

double EdgeKernel(const LabeledGraph& g1, const LabeledGraph& g2) {
  if (g1.size() != g2.size()) {
    throw InvalidArgumentError("edge kernel needs graphs of equal size");
  }
  if (!g1.has_edge_labels() || !g2.has_edge_labels()) {
    throw LabelMismatchError("edge kernel needs edge-labeled graphs");
  }
  const int n = g1.size();
  if (n < 2) return 0.0;
  int shared = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (u > v && (g1.has_edge(u, v) || g2.has_edge(u, v))) {
        throw InvalidArgumentError("edge kernel expects edges u->v with u<v");
      }
      if (u < v && g1.has_edge(u, v) && g2.has_edge(u, v) &&
          g1.edge_label(u, v) == g2.edge_label(u, v)) {
        ++shared;
      }
    }
  }
  return 2.0 * shared / (static_cast<double>(n) * (n - 1));
}

GraphFeatures MakeFeatures(const LabeledGraph& g,
                           const LabelVocabulary& vocab) {
  if (g.has_node_labels() != (vocab.num_node_labels > 0)) {
    throw LabelMismatchError("node labels do not match the vocabulary");
  }
  if (g.has_edge_labels() != (vocab.num_edge_labels > 0)) {
    throw LabelMismatchError("edge labels do not match the vocabulary");
  }
  GraphFeatures f;
  f.size = g.size();
  f.counts = ComputePathCounts(g, graph::ComputeMetrics(g),
                               vocab.num_node_labels);
  f.node_labeled = g.has_node_labels();
  f.edge_labeled = g.has_edge_labels();
  if (f.edge_labeled) {
    const int n = g.size();
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u > v && g.has_edge(u, v)) {
          throw InvalidArgumentError(
              "edge-labeled graphs must only have edges u->v with u<v");
        }
        if (u < v) {
          const int l = g.edge_label(u, v);
          if (l >= vocab.num_edge_labels) {
            throw LabelMismatchError("edge label outside vocabulary");
          }
          f.upper_edge_labels.push_back(l);
        }
      }
    }
  }
  return f;
}

KernelTerms ComputeKernelTerms(const GraphFeatures& a, const GraphFeatures& b,
                               const LabelVocabulary& vocab) {
  KernelTerms t;
  t.structure = SpKernelFromCounts(a.counts, b.counts);
  if (vocab.num_node_labels > 0) {
    const auto ca = a.counts.label_counts();
    const auto cb = b.counts.label_counts();
    double dot = 0.0;
    for (int l = 0; l < vocab.num_node_labels; ++l) {
      dot += static_cast<double>(ca[l]) * cb[l];
    }
    t.node = dot / (static_cast<double>(a.counts.num_nodes()) *
                    b.counts.num_nodes() * vocab.num_node_labels);
  }
  if (vocab.num_edge_labels > 0) {
    if (a.size != b.size) {
      throw InvalidArgumentError("edge kernel needs graphs of equal size");
    }
    int shared = 0;
    for (size_t i = 0; i < a.upper_edge_labels.size(); ++i) {
      const int l = a.upper_edge_labels[i];
      shared += (l != graph::kNoLabel && l == b.upper_edge_labels[i]) ? 1 : 0;
    }
    const double slots = static_cast<double>(a.size) * (a.size - 1) / 2.0;
    t.edge = slots > 0 ? shared / slots : 0.0;
  }
  return t;
}

double LinearCombination(const KernelTerms& terms, const KernelParams& p,
                         const LabelVocabulary& vocab) {
  double k = p.alpha * terms.structure;
  if (vocab.num_node_labels > 0) k += p.beta * terms.node;
  if (vocab.num_edge_labels > 0) k += p.gamma * terms.edge;
  return k;
}

double CombineTerms(const KernelTerms& terms, const KernelParams& p,
                    const LabelVocabulary& vocab) {
  const double lin = LinearCombination(terms, p, vocab);
  return p.form == KernelForm::kLinear ? lin : p.variance * std::exp(lin);
}

double CombinedKernel(const LabeledGraph& x1, const LabeledGraph& x2,
                      const KernelParams& p, const LabelVocabulary& vocab) {
  return CombineTerms(
      ComputeKernelTerms(MakeFeatures(x1, vocab), MakeFeatures(x2, vocab),
                         vocab),
      p, vocab);
}

}  // namespace graphbo::kernels
