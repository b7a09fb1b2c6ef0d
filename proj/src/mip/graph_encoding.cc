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

#include "graphbo/mip/graph_encoding.h"

#include <algorithm>
#include <vector>

#include "graphbo/util/errors.h"

namespace graphbo::mip {
namespace {

struct Ids {
  const MipModel& m;
  int A(int u, int v) const { return m.VariableIndex(AVar(u, v)); }
  int r(int u, int v) const { return m.VariableIndex(RVar(u, v)); }
  int d(int u, int v) const { return m.VariableIndex(DVar(u, v)); }
  int delta(int u, int v, int w) const {
    return m.VariableIndex(DeltaVar(u, v, w));
  }
};

bool HasRestriction(const MipModel& model, const std::string& name) {
  const Json& list = model.metadata()["restrictions"];
  return std::find(list.begin(), list.end(), name) != list.end();
}

void RecordRestriction(MipModel& model, const std::string& name) {
  if (HasRestriction(model, name)) {
    throw InvalidArgumentError("restriction added twice: " + name);
  }
  const auto conflict = [&](const char* a, const char* b) {
    if ((name == a && HasRestriction(model, b)) ||
        (name == b && HasRestriction(model, a))) {
      throw ConflictingRestrictionsError(std::string(a) + " conflicts with " +
                                         b);
    }
  };
  conflict("undirected", "dag");
  conflict("undirected", "node_labeled");
  conflict("undirected", "edge_labeled");
  conflict("node_labeled", "edge_labeled");
  model.metadata()["restrictions"].push_back(name);
}

// Upper-triangular structure shared by both cell encodings.
void AddUpperTriangular(MipModel& model) {
  const Ids id{model};
  const int n = ModelSize(model);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < u; ++v) {
      model.AddConstraint(kTagUpperTri, {{id.A(u, v), 1}}, Sense::kEqual, 0);
      model.AddConstraint(kTagUpperTri, {{id.r(u, v), 1}}, Sense::kEqual, 0);
      model.AddConstraint(kTagUpperTri, {{id.d(u, v), 1}}, Sense::kEqual, n);
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        model.AddConstraint(kTagUpperTri, {{id.delta(u, v, w), 1}},
                            Sense::kEqual, 0);
      }
    }
  }
}

}  // namespace

std::string AVar(int u, int v) { return VarName("A", {u, v}); }
std::string RVar(int u, int v) { return VarName("r", {u, v}); }
std::string DVar(int u, int v) { return VarName("d", {u, v}); }
std::string DeltaVar(int u, int v, int w) {
  return VarName("delta", {u, v, w});
}
std::string NodeLabelVar(int v, int l) { return VarName("F", {v, l}); }
std::string EdgeLabelVar(int u, int v, int l) {
  return VarName("F", {u, v, l});
}

int ModelSize(const MipModel& model) {
  return model.metadata().at("n").get<int>();
}

int ModelNodeLabels(const MipModel& model) {
  return model.metadata().value("num_node_labels", 0);
}

int ModelEdgeLabels(const MipModel& model) {
  return model.metadata().value("num_edge_labels", 0);
}

bool ModelZeroOp(const MipModel& model) {
  return model.metadata().value("zero_op", false);
}

MipModel BuildGraphSpace(int min_nodes, int max_nodes) {
  if (min_nodes < 1 || min_nodes > max_nodes) {
    throw InvalidArgumentError("need 1 <= n0 <= n");
  }
  const int n = max_nodes;
  MipModel model;
  model.metadata()["n0"] = min_nodes;
  model.metadata()["n"] = n;
  model.metadata()["restrictions"] = Json::array();

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) model.AddBinary(AVar(u, v));
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) model.AddBinary(RVar(u, v));
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) model.AddInteger(DVar(u, v), 0, n);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) model.AddBinary(DeltaVar(u, v, w));
    }
  }
  const Ids id{model};
  const auto E = Sense::kEqual;
  const auto L = Sense::kLessEqual;
  const auto G = Sense::kGreaterEqual;

  // At least n0 nodes exist, and they are the leading slots.
  {
    std::vector<Term> sum;
    for (int v = 0; v < n; ++v) sum.push_back({id.A(v, v), 1});
    model.AddConstraint(kTagExistOrder, sum, G, min_nodes);
    for (int v = 0; v + 1 < n; ++v) {
      model.AddConstraint(kTagExistOrder,
                          {{id.A(v, v), 1}, {id.A(v + 1, v + 1), -1}}, G, 0);
    }
  }
  // Pairs touching a nonexistent node.
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      model.AddConstraint(kTagAbsentNode,
                          {{id.A(u, v), 2}, {id.A(u, u), -1}, {id.A(v, v), -1}},
                          L, 0);
      model.AddConstraint(kTagAbsentNode,
                          {{id.r(u, v), 2}, {id.A(u, u), -1}, {id.A(v, v), -1}},
                          L, 0);
      model.AddConstraint(kTagAbsentNode, {{id.d(u, v), 1}, {id.A(u, u), 1.0 * n}},
                          G, n);
      model.AddConstraint(kTagAbsentNode, {{id.d(u, v), 1}, {id.A(v, v), 1.0 * n}},
                          G, n);
    }
  }
  // Single slots.
  for (int v = 0; v < n; ++v) {
    model.AddConstraint(kTagSelfPair, {{id.r(v, v), 1}}, E, 1);
    model.AddConstraint(kTagSelfPair, {{id.d(v, v), 1}}, E, 0);
    model.AddConstraint(kTagSelfPair, {{id.delta(v, v, v), 1}}, E, 1);
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      model.AddConstraint(kTagSelfPair, {{id.delta(v, v, w), 1}}, E, 0);
    }
  }
  // Edges have distance 1 and imply reachability.
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      model.AddConstraint(kTagEdgeInit, {{id.r(u, v), 1}, {id.A(u, v), -1}},
                          G, 0);
      model.AddConstraint(kTagEdgeInit, {{id.d(u, v), 1}, {id.A(u, v), 1}}, G,
                          2);
      model.AddConstraint(kTagEdgeInit,
                          {{id.d(u, v), 1}, {id.A(u, v), n - 1.0}}, L, n);
    }
  }
  // Finite distance iff reachable.
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      model.AddConstraint(kTagDistReach, {{id.d(u, v), 1}, {id.r(u, v), 1}},
                          L, n);
      model.AddConstraint(kTagDistReach,
                          {{id.d(u, v), 1}, {id.r(u, v), n - 1.0}}, G, n);
    }
  }
  // Path membership against reachability.
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        if (u == v || w == u || w == v) continue;
        model.AddConstraint(
            kTagPathReach,
            {{id.r(u, w), 1}, {id.r(w, v), 1}, {id.delta(u, v, w), -2}}, G, 0);
        model.AddConstraint(
            kTagPathReach,
            {{id.r(u, v), 1}, {id.r(u, w), -1}, {id.r(w, v), -1}}, G, -1);
      }
    }
  }
  // Shortest paths: endpoints count, and a non-edge reachable pair has an
  // intermediate node.
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      model.AddConstraint(kTagPathBuild, {{id.delta(u, v, u), 1}}, E, 1);
      model.AddConstraint(kTagPathBuild, {{id.delta(u, v, v), 1}}, E, 1);
      std::vector<Term> lower, upper;
      for (int w = 0; w < n; ++w) {
        lower.push_back({id.delta(u, v, w), 1});
        upper.push_back({id.delta(u, v, w), 1});
      }
      lower.push_back({id.r(u, v), -1});
      lower.push_back({id.A(u, v), 1});
      model.AddConstraint(kTagPathBuild, lower, G, 2);
      upper.push_back({id.r(u, v), -(n - 2.0)});
      upper.push_back({id.A(u, v), n - 2.0});
      model.AddConstraint(kTagPathBuild, upper, L, 2);
    }
  }
  // Triangle inequality, tight exactly on shortest-path members.
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        if (u == v || w == u || w == v) continue;
        model.AddConstraint(kTagTriangle,
                            {{id.d(u, v), 1},
                             {id.d(u, w), -1},
                             {id.d(w, v), -1},
                             {id.delta(u, v, w), -1},
                             {id.r(u, w), n + 1.0},
                             {id.r(w, v), n + 1.0}},
                            L, 2.0 * n + 1);
        model.AddConstraint(kTagTriangle,
                            {{id.d(u, v), 1},
                             {id.d(u, w), -1},
                             {id.d(w, v), -1},
                             {id.delta(u, v, w), -2.0 * n}},
                            G, -2.0 * n);
      }
    }
  }
  return model;
}

void AddRestriction(MipModel& model, Restriction restriction) {
  const Ids id{model};
  const int n = ModelSize(model);
  switch (restriction) {
    case Restriction::kUndirected:
      RecordRestriction(model, "undirected");
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          model.AddConstraint(kTagUndirected,
                              {{id.A(u, v), 1}, {id.A(v, u), -1}},
                              Sense::kEqual, 0);
          model.AddConstraint(kTagUndirected,
                              {{id.r(u, v), 1}, {id.r(v, u), -1}},
                              Sense::kEqual, 0);
          model.AddConstraint(kTagUndirected,
                              {{id.d(u, v), 1}, {id.d(v, u), -1}},
                              Sense::kEqual, 0);
          for (int w = 0; w < n; ++w) {
            model.AddConstraint(
                kTagUndirected,
                {{id.delta(u, v, w), 1}, {id.delta(v, u, w), -1}},
                Sense::kEqual, 0);
          }
        }
      }
      break;
    case Restriction::kStronglyConnected:
      RecordRestriction(model, "strongly_connected");
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (u == v) continue;
          model.AddConstraint(
              kTagStrongConn,
              {{id.r(u, v), 1}, {id.A(u, u), -1}, {id.A(v, v), -1}},
              Sense::kGreaterEqual, -1);
        }
      }
      break;
    case Restriction::kDag:
      RecordRestriction(model, "dag");
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          model.AddConstraint(kTagDag, {{id.r(u, v), 1}, {id.r(v, u), 1}},
                              Sense::kLessEqual, 1);
        }
      }
      break;
  }
}

void AddNodeLabels(MipModel& model, const graph::NodeLabelSpec& spec) {
  const int n = ModelSize(model);
  const int labels = spec.num_labels;
  if (labels < 2 || n < 2) {
    throw InvalidArgumentError("node labels need n >= 2 and >= 2 labels");
  }
  RecordRestriction(model, "node_labeled");
  model.metadata()["num_node_labels"] = labels;
  model.metadata()["max_edges"] = spec.max_edges;
  for (int v = 0; v < n; ++v) {
    for (int l = 0; l < labels; ++l) model.AddBinary(NodeLabelVar(v, l));
  }
  const Ids id{model};
  const auto F = [&](int v, int l) {
    return model.VariableIndex(NodeLabelVar(v, l));
  };
  AddUpperTriangular(model);
  for (int v = 0; v < n; ++v) {
    model.AddConstraint(kTagSource, {{id.r(0, v), 1}}, Sense::kEqual, 1);
  }
  model.AddConstraint(kTagSource, {{F(0, 0), 1}}, Sense::kEqual, 1);
  for (int v = 1; v < n; ++v) {
    model.AddConstraint(kTagSource, {{F(v, 0), 1}}, Sense::kEqual, 0);
  }
  for (int v = 0; v < n; ++v) {
    model.AddConstraint(kTagSink, {{id.r(v, n - 1), 1}}, Sense::kEqual, 1);
  }
  model.AddConstraint(kTagSink, {{F(n - 1, labels - 1), 1}}, Sense::kEqual, 1);
  for (int v = 0; v + 1 < n; ++v) {
    model.AddConstraint(kTagSink, {{F(v, labels - 1), 1}}, Sense::kEqual, 0);
  }
  for (int v = 0; v < n; ++v) {
    std::vector<Term> sum;
    for (int l = 0; l < labels; ++l) sum.push_back({F(v, l), 1});
    model.AddConstraint(kTagNodeLabel, sum, Sense::kEqual, 1);
  }
  std::vector<Term> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({id.A(u, v), 1});
  }
  model.AddConstraint(kTagEdgeBudget, edges, Sense::kLessEqual,
                      spec.max_edges);
}

void AddEdgeLabels(MipModel& model, const graph::EdgeLabelSpec& spec) {
  const int n = ModelSize(model);
  const int labels = spec.num_labels;
  if (labels < 1 || (spec.zero_op && labels < 2)) {
    throw InvalidArgumentError("too few edge labels");
  }
  RecordRestriction(model, "edge_labeled");
  model.metadata()["num_edge_labels"] = labels;
  model.metadata()["zero_op"] = spec.zero_op;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int l = 0; l < labels; ++l) model.AddBinary(EdgeLabelVar(u, v, l));
    }
  }
  const Ids id{model};
  AddUpperTriangular(model);
  if (!spec.zero_op) {
    for (int v = 0; v < n; ++v) {
      model.AddConstraint(kTagSourceSink, {{id.r(0, v), 1}}, Sense::kEqual, 1);
      model.AddConstraint(kTagSourceSink, {{id.r(v, n - 1), 1}},
                          Sense::kEqual, 1);
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::vector<Term> sum;
      for (int l = 0; l < labels; ++l) {
        sum.push_back({model.VariableIndex(EdgeLabelVar(u, v, l)), 1});
      }
      if (spec.zero_op) {
        // Exactly one label per slot; label 0 marks the absent edge.
        model.AddConstraint(kTagEdgeLabel, sum, Sense::kEqual, 1);
        model.AddConstraint(
            kTagEdgeLabel,
            {{id.A(u, v), 1}, {model.VariableIndex(EdgeLabelVar(u, v, 0)), 1}},
            Sense::kEqual, 1);
      } else {
        sum.push_back({id.A(u, v), -1});
        model.AddConstraint(kTagEdgeLabel, sum, Sense::kEqual, 0);
      }
    }
  }
}

MipModel BuildSpaceModel(const graph::GraphSpaceSpec& spec) {
  spec.Validate();
  MipModel model = BuildGraphSpace(spec.min_nodes, spec.max_nodes);
  model.metadata()["space"] = graph::SpaceToJson(spec);
  if (spec.undirected) AddRestriction(model, Restriction::kUndirected);
  if (spec.strongly_connected) {
    AddRestriction(model, Restriction::kStronglyConnected);
  }
  if (spec.dag) AddRestriction(model, Restriction::kDag);
  if (spec.node_labeled) AddNodeLabels(model, *spec.node_labeled);
  if (spec.edge_labeled) AddEdgeLabels(model, *spec.edge_labeled);
  return model;
}

}  // namespace graphbo::mip
