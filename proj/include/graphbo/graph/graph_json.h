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

#ifndef GRAPHBO_GRAPH_GRAPH_JSON_H_
#define GRAPHBO_GRAPH_GRAPH_JSON_H_

#include "graphbo/graph/labeled_graph.h"
#include "graphbo/util/json_io.h"

namespace graphbo::graph {

// {"n", "node_exists", "edges", "node_labels", "edge_labels"} in that order.
// node_labels holds -1 for nonexistent nodes; missing label kinds are null.
Json GraphToJson(const LabeledGraph& g);
// Throws SchemaError on malformed input or broken graph invariants.
LabeledGraph GraphFromJson(const Json& j);

}  // namespace graphbo::graph

#endif  // GRAPHBO_GRAPH_GRAPH_JSON_H_
