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

#ifndef GRAPHBO_GRAPH_LABELED_GRAPH_H_
#define GRAPHBO_GRAPH_LABELED_GRAPH_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace graphbo::graph {

inline constexpr int kNoLabel = -1;

// A directed graph over `size()` node slots. Slot v is a node iff
// node_exists(v); an edge u->v (u != v) may only join existing nodes.
// Node labels and edge labels are optional and independent. When present,
// every existing node (resp. edge) carries exactly one label and nothing
// else does.
class LabeledGraph {
 public:
  // `num_nodes` leading slots exist; no edges, no labels.
  explicit LabeledGraph(int size = 1, int num_nodes = -1);

  int size() const { return n_; }
  int num_nodes() const;
  int num_edges() const;

  bool node_exists(int v) const { return exists_[v] != 0; }
  bool has_edge(int u, int v) const { return adjacency_[u * n_ + v] != 0; }

  bool has_node_labels() const { return !node_labels_.empty(); }
  bool has_edge_labels() const { return !edge_labels_.empty(); }
  // kNoLabel when labels are disabled or the node/edge does not exist.
  int node_label(int v) const;
  int edge_label(int u, int v) const;

  // Mutators. Removing a node drops its incident edges and its label;
  // removing an edge drops its label.
  void set_node_exists(int v, bool exists);
  void set_edge(int u, int v, bool present);
  void EnableNodeLabels();
  void EnableEdgeLabels();
  void set_node_label(int v, int label);
  void set_edge_label(int u, int v, int label);
  // Shorthand for set_edge(u, v, true) plus an optional label.
  void AddEdge(int u, int v, int label = kNoLabel);

  // Throws InvalidArgumentError when an invariant is broken, e.g. an
  // existing node without a label while node labels are enabled.
  void Validate() const;

  bool operator==(const LabeledGraph& other) const = default;

 private:
  void CheckSlot(int v) const;
  void CheckPair(int u, int v) const;

  int n_;
  std::vector<uint8_t> exists_;
  std::vector<uint8_t> adjacency_;  // row-major n*n, diagonal always 0
  std::vector<int> node_labels_;
  std::vector<int> edge_labels_;    // row-major n*n
};

// Byte string identifying the index-ordered representation of `g` (no
// isomorphism folding). Layout: size, label flags, node existence,
// off-diagonal adjacency row-major, node labels + 1, edge labels + 1
// (0 = absent). Byte order matches the enumeration order of a fixed-size
// space, so sorting keys reproduces enumeration order.
std::string CanonicalKey(const LabeledGraph& g);

// Inverse of CanonicalKey. Throws InvalidArgumentError on malformed input.
LabeledGraph GraphFromKey(std::string_view key);

// The same graph stored in `size` slots. Throws InvalidArgumentError when
// an existing node does not fit.
LabeledGraph WithSlots(const LabeledGraph& g, int size);

}  // namespace graphbo::graph

#endif  // GRAPHBO_GRAPH_LABELED_GRAPH_H_
