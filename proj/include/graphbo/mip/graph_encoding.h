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

#ifndef GRAPHBO_MIP_GRAPH_ENCODING_H_
#define GRAPHBO_MIP_GRAPH_ENCODING_H_

#include <string>

#include "graphbo/graph/graph_space.h"
#include "graphbo/mip/model.h"

namespace graphbo::mip {

// Constraint family tags of the graph encoding.
inline constexpr char kTagExistOrder[] = "exist_order";
inline constexpr char kTagAbsentNode[] = "absent_node";
inline constexpr char kTagSelfPair[] = "self_pair";
inline constexpr char kTagEdgeInit[] = "edge_init";
inline constexpr char kTagDistReach[] = "dist_reach";
inline constexpr char kTagPathReach[] = "path_reach";
inline constexpr char kTagPathBuild[] = "path_build";
inline constexpr char kTagTriangle[] = "triangle";
// Restriction tags.
inline constexpr char kTagUndirected[] = "undirected";
inline constexpr char kTagStrongConn[] = "strong_conn";
inline constexpr char kTagDag[] = "dag";
inline constexpr char kTagUpperTri[] = "upper_tri";
inline constexpr char kTagSource[] = "source";
inline constexpr char kTagSink[] = "sink";
inline constexpr char kTagNodeLabel[] = "node_label";
inline constexpr char kTagEdgeBudget[] = "edge_budget";
inline constexpr char kTagSourceSink[] = "source_sink";
inline constexpr char kTagEdgeLabel[] = "edge_label";

// Variable names. A_u_u is node existence, A_u_v (u != v) an edge,
// delta_u_v_w marks w on a shortest u->v path.
std::string AVar(int u, int v);
std::string RVar(int u, int v);
std::string DVar(int u, int v);
std::string DeltaVar(int u, int v, int w);
std::string NodeLabelVar(int v, int l);
std::string EdgeLabelVar(int u, int v, int l);

// Variables A, r, d, delta over n = max_nodes slots and the constraint
// families that pin them to the graph they describe, for graphs with
// at least min_nodes nodes.
MipModel BuildGraphSpace(int min_nodes, int max_nodes);

enum class Restriction { kUndirected, kStronglyConnected, kDag };

// Throws ConflictingRestrictionsError for undirected together with dag or
// labels, and InvalidArgumentError when a restriction is added twice.
void AddRestriction(MipModel& model, Restriction restriction);
// Adds F_v_l and the node-labeled cell constraints.
void AddNodeLabels(MipModel& model, const graph::NodeLabelSpec& spec);
// Adds F_u_v_l for u < v and the edge-labeled cell constraints.
void AddEdgeLabels(MipModel& model, const graph::EdgeLabelSpec& spec);

// The model whose feasible set corresponds one-to-one to the space.
MipModel BuildSpaceModel(const graph::GraphSpaceSpec& spec);

// Size n, node labels L_n and edge labels L_e recorded in the metadata.
int ModelSize(const MipModel& model);
int ModelNodeLabels(const MipModel& model);
int ModelEdgeLabels(const MipModel& model);
bool ModelZeroOp(const MipModel& model);

}  // namespace graphbo::mip

#endif  // GRAPHBO_MIP_GRAPH_ENCODING_H_
