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

#include "graphbo/graph/labeled_graph.h"

#include <algorithm>
#include <string>

#include "graphbo/util/errors.h"

namespace graphbo::graph {

LabeledGraph::LabeledGraph(int size, int num_nodes) : n_(size) {
  if (size < 1 || size > 250) {
    throw InvalidArgumentError("graph size must be in [1, 250], got " +
                               std::to_string(size));
  }
  if (num_nodes < 0) num_nodes = size;
  if (num_nodes > size) {
    throw InvalidArgumentError("more nodes than slots");
  }
  exists_.assign(n_, 0);
  std::fill(exists_.begin(), exists_.begin() + num_nodes, 1);
  adjacency_.assign(n_ * n_, 0);
}

int LabeledGraph::num_nodes() const {
  return static_cast<int>(std::count(exists_.begin(), exists_.end(), 1));
}

int LabeledGraph::num_edges() const {
  return static_cast<int>(
      std::count(adjacency_.begin(), adjacency_.end(), 1));
}

int LabeledGraph::node_label(int v) const {
  if (node_labels_.empty()) return kNoLabel;
  return node_labels_[v];
}

int LabeledGraph::edge_label(int u, int v) const {
  if (edge_labels_.empty()) return kNoLabel;
  return edge_labels_[u * n_ + v];
}

void LabeledGraph::CheckSlot(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidArgumentError("node index " + std::to_string(v) +
                               " out of range");
  }
}

void LabeledGraph::CheckPair(int u, int v) const {
  CheckSlot(u);
  CheckSlot(v);
  if (u == v) throw InvalidArgumentError("self-loop edges are not allowed");
}

void LabeledGraph::set_node_exists(int v, bool exists) {
  CheckSlot(v);
  exists_[v] = exists ? 1 : 0;
  if (!exists) {
    for (int w = 0; w < n_; ++w) {
      if (w == v) continue;
      set_edge(v, w, false);
      set_edge(w, v, false);
    }
    if (!node_labels_.empty()) node_labels_[v] = kNoLabel;
  }
}

void LabeledGraph::set_edge(int u, int v, bool present) {
  CheckPair(u, v);
  if (present && (!exists_[u] || !exists_[v])) {
    throw InvalidArgumentError("edge " + std::to_string(u) + "->" +
                               std::to_string(v) +
                               " joins a nonexistent node");
  }
  adjacency_[u * n_ + v] = present ? 1 : 0;
  if (!present && !edge_labels_.empty()) edge_labels_[u * n_ + v] = kNoLabel;
}

void LabeledGraph::EnableNodeLabels() {
  if (node_labels_.empty()) node_labels_.assign(n_, kNoLabel);
}

void LabeledGraph::EnableEdgeLabels() {
  if (edge_labels_.empty()) edge_labels_.assign(n_ * n_, kNoLabel);
}

void LabeledGraph::set_node_label(int v, int label) {
  CheckSlot(v);
  if (label < 0) throw InvalidArgumentError("negative node label");
  if (!exists_[v]) {
    throw InvalidArgumentError("cannot label nonexistent node " +
                               std::to_string(v));
  }
  EnableNodeLabels();
  node_labels_[v] = label;
}

void LabeledGraph::set_edge_label(int u, int v, int label) {
  CheckPair(u, v);
  if (label < 0) throw InvalidArgumentError("negative edge label");
  if (!has_edge(u, v)) {
    throw InvalidArgumentError("cannot label missing edge " +
                               std::to_string(u) + "->" + std::to_string(v));
  }
  EnableEdgeLabels();
  edge_labels_[u * n_ + v] = label;
}

void LabeledGraph::AddEdge(int u, int v, int label) {
  set_edge(u, v, true);
  if (label != kNoLabel) set_edge_label(u, v, label);
}

void LabeledGraph::Validate() const {
  for (int u = 0; u < n_; ++u) {
    if (adjacency_[u * n_ + u]) throw InvalidArgumentError("diagonal edge");
    for (int v = 0; v < n_; ++v) {
      if (u != v && has_edge(u, v) && (!exists_[u] || !exists_[v])) {
        throw InvalidArgumentError("edge joins a nonexistent node");
      }
    }
  }
  if (!node_labels_.empty()) {
    for (int v = 0; v < n_; ++v) {
      const bool labeled = node_labels_[v] != kNoLabel;
      if (labeled != node_exists(v)) {
        throw InvalidArgumentError("node " + std::to_string(v) +
                                   (labeled ? " is nonexistent but labeled"
                                            : " exists but has no label"));
      }
    }
  }
  if (!edge_labels_.empty()) {
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) {
        if (u == v) continue;
        const bool labeled = edge_labels_[u * n_ + v] != kNoLabel;
        if (labeled != has_edge(u, v)) {
          throw InvalidArgumentError(
              "edge " + std::to_string(u) + "->" + std::to_string(v) +
              (labeled ? " is absent but labeled" : " has no label"));
        }
      }
    }
  }
}

LabeledGraph WithSlots(const LabeledGraph& g, int size) {
  for (int v = size; v < g.size(); ++v) {
    if (g.node_exists(v)) {
      throw InvalidArgumentError("node " + std::to_string(v) +
                                 " does not fit in " + std::to_string(size) +
                                 " slots");
    }
  }
  LabeledGraph out(size, 0);
  const int n = std::min(size, g.size());
  for (int v = 0; v < n; ++v) out.set_node_exists(v, g.node_exists(v));
  if (g.has_node_labels()) out.EnableNodeLabels();
  if (g.has_edge_labels()) out.EnableEdgeLabels();
  for (int u = 0; u < n; ++u) {
    if (g.node_label(u) != kNoLabel) out.set_node_label(u, g.node_label(u));
    for (int v = 0; v < n; ++v) {
      if (u != v && g.has_edge(u, v)) out.AddEdge(u, v, g.edge_label(u, v));
    }
  }
  return out;
}

std::string CanonicalKey(const LabeledGraph& g) {
  const int n = g.size();
  std::string key;
  key.reserve(2 + n + 2 * n * n);
  key.push_back(static_cast<char>(n));
  key.push_back(static_cast<char>((g.has_node_labels() ? 1 : 0) |
                                  (g.has_edge_labels() ? 2 : 0)));
  for (int v = 0; v < n; ++v) key.push_back(g.node_exists(v) ? 1 : 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) key.push_back(g.has_edge(u, v) ? 1 : 0);
    }
  }
  if (g.has_node_labels()) {
    for (int v = 0; v < n; ++v) {
      key.push_back(static_cast<char>(g.node_label(v) + 1));
    }
  }
  if (g.has_edge_labels()) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v) key.push_back(static_cast<char>(g.edge_label(u, v) + 1));
      }
    }
  }
  return key;
}

LabeledGraph GraphFromKey(std::string_view key) {
  auto byte = [&](size_t i) -> int {
    if (i >= key.size()) throw InvalidArgumentError("truncated graph key");
    return static_cast<unsigned char>(key[i]);
  };
  const int n = byte(0);
  const int flags = byte(1);
  LabeledGraph g(n, 0);
  size_t pos = 2;
  for (int v = 0; v < n; ++v) g.set_node_exists(v, byte(pos++) != 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && byte(pos++) != 0) g.set_edge(u, v, true);
    }
  }
  if (flags & 1) {
    g.EnableNodeLabels();
    for (int v = 0; v < n; ++v) {
      const int label = byte(pos++) - 1;
      if (label != kNoLabel) g.set_node_label(v, label);
    }
  }
  if (flags & 2) {
    g.EnableEdgeLabels();
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const int label = byte(pos++) - 1;
        if (label != kNoLabel) g.set_edge_label(u, v, label);
      }
    }
  }
  if (pos != key.size()) throw InvalidArgumentError("trailing bytes in key");
  g.Validate();
  return g;
}

}  // namespace graphbo::graph
