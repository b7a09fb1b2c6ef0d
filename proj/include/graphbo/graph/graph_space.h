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

#ifndef GRAPHBO_GRAPH_GRAPH_SPACE_H_
#define GRAPHBO_GRAPH_GRAPH_SPACE_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graphbo/graph/labeled_graph.h"
#include "graphbo/util/json_io.h"

namespace graphbo::graph {

inline constexpr double kDefaultEnumerationCap = 1e7;

// Node-labeled cell DAGs: node 0 is the source with label 0, node n-1 the
// sink with label num_labels-1, every other node takes one of the remaining
// labels, all edges go from lower to higher index, every node is reachable
// from the source and reaches the sink, and there are at most max_edges
// edges.
struct NodeLabelSpec {
  int num_labels = 5;
  int max_edges = 9;
  bool operator==(const NodeLabelSpec&) const = default;
};

// Edge-labeled cell DAGs over upper-triangular edges. Without zero_op every
// node is reachable from node 0 and reaches node n-1, and edge labels are in
// [0, num_labels). With zero_op, label 0 stands for "no edge": existing
// edges carry labels in [1, num_labels) and no reachability is imposed, so
// the space has num_labels^(n(n-1)/2) members.
struct EdgeLabelSpec {
  int num_labels = 4;
  bool zero_op = false;
  bool operator==(const EdgeLabelSpec&) const = default;
};

struct GraphSpaceSpec {
  int min_nodes = 1;
  int max_nodes = 1;
  bool undirected = false;
  bool strongly_connected = false;
  bool dag = false;
  std::optional<NodeLabelSpec> node_labeled;
  std::optional<EdgeLabelSpec> edge_labeled;

  bool directed() const { return !undirected; }
  int num_node_labels() const {
    return node_labeled ? node_labeled->num_labels : 0;
  }
  int num_edge_labels() const {
    return edge_labeled ? edge_labeled->num_labels : 0;
  }
  // Upper bound on the number of edge slots of a member graph.
  int max_edge_count() const;

  // Throws InvalidArgumentError / ConflictingRestrictionsError.
  void Validate() const;

  bool operator==(const GraphSpaceSpec&) const = default;
};

// Presets for the two cell benchmarks and plain digraph spaces.
GraphSpaceSpec DigraphSpace(int min_nodes, int max_nodes);
GraphSpaceSpec NodeLabeledDagSpace(int n, int num_labels, int max_edges);
GraphSpaceSpec EdgeLabeledDagSpace(int n, int num_labels, bool zero_op);
// n = 7, 5 labels, at most 9 edges.
GraphSpaceSpec NasBench101Space(int n = 7);
// 4 nodes, 5 labels one of which is the zero op: 15,625 cells.
GraphSpaceSpec NasBench201Space();

// Upper bound on the member count, computed without enumerating.
double EstimateSpaceSize(const GraphSpaceSpec& spec);

// Returns true iff `g` belongs to the space. On failure `reason`, when
// given, names the first violated restriction.
bool InSpace(const GraphSpaceSpec& spec, const LabeledGraph& g,
             std::string* reason = nullptr);

// Visits every member exactly once in lexicographic order of the
// (existence, adjacency, labels) encoding; node existence follows the
// "leading slots exist" convention. Throws CapExceededError before visiting
// anything when EstimateSpaceSize exceeds `cap`.
void ForEachGraph(const GraphSpaceSpec& spec,
                  const std::function<void(const LabeledGraph&)>& visit,
                  double cap = kDefaultEnumerationCap);

std::vector<LabeledGraph> EnumerateSpace(const GraphSpaceSpec& spec,
                                         double cap = kDefaultEnumerationCap);

Json SpaceToJson(const GraphSpaceSpec& spec);
GraphSpaceSpec SpaceFromJson(const Json& j);
// Accepts a preset name ("nasbench201", "nasbench201-sparse",
// "nasbench101", "nasbench101-6", "digraph-N") or a path to a JSON file.
GraphSpaceSpec ResolveSpace(const std::string& name_or_path);

}  // namespace graphbo::graph

#endif  // GRAPHBO_GRAPH_GRAPH_SPACE_H_
