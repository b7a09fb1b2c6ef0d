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

#include "graphbo/graph/graph_space.h"

#include <cmath>
#include <filesystem>
#include <string>
#include <utility>

#include "graphbo/graph/graph_metrics.h"
#include "graphbo/util/errors.h"

namespace graphbo::graph {
namespace {

bool UpperTriangular(const GraphSpaceSpec& spec) {
  return spec.node_labeled.has_value() || spec.edge_labeled.has_value();
}

bool NeedsSourceSink(const GraphSpaceSpec& spec) {
  return spec.node_labeled.has_value() ||
         (spec.edge_labeled.has_value() && !spec.edge_labeled->zero_op);
}

// Free adjacency slots among the first k slots, most significant first.
std::vector<std::pair<int, int>> StructureSlots(const GraphSpaceSpec& spec,
                                                int k) {
  std::vector<std::pair<int, int>> slots;
  const bool upper = UpperTriangular(spec) || spec.undirected;
  for (int u = 0; u < k; ++u) {
    for (int v = 0; v < k; ++v) {
      if (u == v || (upper && u > v)) continue;
      slots.emplace_back(u, v);
    }
  }
  return slots;
}

bool Fail(std::string* reason, const char* what) {
  if (reason != nullptr) *reason = what;
  return false;
}

// Everything except the label-value checks.
bool StructureOk(const GraphSpaceSpec& spec, const LabeledGraph& g,
                 std::string* reason) {
  const int n = g.size();
  if (n != spec.max_nodes) return Fail(reason, "size");
  if (g.num_nodes() < spec.min_nodes) return Fail(reason, "node_count");
  for (int v = 0; v + 1 < n; ++v) {
    if (!g.node_exists(v) && g.node_exists(v + 1)) {
      return Fail(reason, "node_order");
    }
  }
  if (spec.undirected) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v) != g.has_edge(v, u)) {
          return Fail(reason, "undirected");
        }
      }
    }
  }
  if (UpperTriangular(spec)) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < u; ++v) {
        if (g.has_edge(u, v)) return Fail(reason, "upper_tri");
      }
    }
  }
  if (spec.node_labeled && g.num_edges() > spec.node_labeled->max_edges) {
    return Fail(reason, "edge_budget");
  }
  if (!spec.strongly_connected && !spec.dag && !NeedsSourceSink(spec)) {
    return true;
  }
  const GraphMetrics m = ComputeMetrics(g);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (spec.strongly_connected && g.node_exists(u) && g.node_exists(v) &&
          !m.reach(u, v)) {
        return Fail(reason, "strong_conn");
      }
      if (spec.dag && u < v && m.reach(u, v) && m.reach(v, u)) {
        return Fail(reason, "dag");
      }
    }
  }
  if (NeedsSourceSink(spec)) {
    for (int v = 0; v < n; ++v) {
      if (!m.reach(0, v)) return Fail(reason, "source");
      if (!m.reach(v, n - 1)) return Fail(reason, "sink");
    }
  }
  return true;
}

struct LabelPosition {
  bool node;
  int u, v;
  int lo, hi;
};

std::vector<LabelPosition> LabelPositions(const GraphSpaceSpec& spec,
                                          const LabeledGraph& g) {
  std::vector<LabelPosition> positions;
  const int n = g.size();
  if (spec.node_labeled) {
    const int last = spec.node_labeled->num_labels - 1;
    for (int v = 0; v < n; ++v) {
      if (!g.node_exists(v)) continue;
      if (v == 0) {
        positions.push_back({true, v, v, 0, 0});
      } else if (v == n - 1) {
        positions.push_back({true, v, v, last, last});
      } else {
        positions.push_back({true, v, v, 1, last - 1});
      }
    }
  }
  if (spec.edge_labeled) {
    const int lo = spec.edge_labeled->zero_op ? 1 : 0;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && g.has_edge(u, v)) {
          positions.push_back(
              {false, u, v, lo, spec.edge_labeled->num_labels - 1});
        }
      }
    }
  }
  return positions;
}

}  // namespace

int GraphSpaceSpec::max_edge_count() const {
  const int n = max_nodes;
  if (undirected || dag || node_labeled || edge_labeled) return n * (n - 1) / 2;
  return n * (n - 1);
}

void GraphSpaceSpec::Validate() const {
  if (min_nodes < 1 || min_nodes > max_nodes) {
    throw InvalidArgumentError("need 1 <= n0 <= n, got n0=" +
                               std::to_string(min_nodes) +
                               " n=" + std::to_string(max_nodes));
  }
  if (max_nodes > 64) throw InvalidArgumentError("n must be at most 64");
  if (undirected && dag) {
    throw ConflictingRestrictionsError("undirected and dag are incompatible");
  }
  if (node_labeled && edge_labeled) {
    throw ConflictingRestrictionsError(
        "node_labeled and edge_labeled are mutually exclusive");
  }
  if ((node_labeled || edge_labeled) && !dag) {
    throw ConflictingRestrictionsError("labeled cell spaces require dag");
  }
  if ((node_labeled || edge_labeled) && undirected) {
    throw ConflictingRestrictionsError("labeled cell spaces are directed");
  }
  if (node_labeled) {
    if (node_labeled->num_labels < 2) {
      throw InvalidArgumentError("node_labeled needs at least 2 labels");
    }
    if (max_nodes < 2) {
      throw InvalidArgumentError("node_labeled needs n >= 2");
    }
    if (node_labeled->max_edges < 0) {
      throw InvalidArgumentError("negative edge budget");
    }
  }
  if (edge_labeled) {
    const int min_labels = edge_labeled->zero_op ? 2 : 1;
    if (edge_labeled->num_labels < min_labels) {
      throw InvalidArgumentError("too few edge labels");
    }
  }
}

GraphSpaceSpec DigraphSpace(int min_nodes, int max_nodes) {
  GraphSpaceSpec spec;
  spec.min_nodes = min_nodes;
  spec.max_nodes = max_nodes;
  return spec;
}

GraphSpaceSpec NodeLabeledDagSpace(int n, int num_labels, int max_edges) {
  GraphSpaceSpec spec = DigraphSpace(n, n);
  spec.dag = true;
  spec.node_labeled = NodeLabelSpec{num_labels, max_edges};
  return spec;
}

GraphSpaceSpec EdgeLabeledDagSpace(int n, int num_labels, bool zero_op) {
  GraphSpaceSpec spec = DigraphSpace(n, n);
  spec.dag = true;
  spec.edge_labeled = EdgeLabelSpec{num_labels, zero_op};
  return spec;
}

GraphSpaceSpec NasBench101Space(int n) { return NodeLabeledDagSpace(n, 5, 9); }

GraphSpaceSpec NasBench201Space() { return EdgeLabeledDagSpace(4, 5, true); }

double EstimateSpaceSize(const GraphSpaceSpec& spec) {
  spec.Validate();
  double total = 0.0;
  for (int k = spec.min_nodes; k <= spec.max_nodes; ++k) {
    const double slots = static_cast<double>(StructureSlots(spec, k).size());
    double count = std::pow(2.0, slots);
    if (spec.edge_labeled) {
      const int per_slot = spec.edge_labeled->zero_op
                               ? spec.edge_labeled->num_labels
                               : spec.edge_labeled->num_labels + 1;
      count = std::pow(static_cast<double>(per_slot), slots);
    }
    if (spec.node_labeled) {
      if (k != spec.max_nodes) continue;
      count *= std::pow(std::max(spec.node_labeled->num_labels - 2, 0),
                        std::max(k - 2, 0));
    }
    total += count;
  }
  return total;
}

bool InSpace(const GraphSpaceSpec& spec, const LabeledGraph& g,
             std::string* reason) {
  try {
    g.Validate();
  } catch (const InvalidArgumentError&) {
    return Fail(reason, "invalid_graph");
  }
  if (g.has_node_labels() != spec.node_labeled.has_value()) {
    return Fail(reason, "node_label");
  }
  if (g.has_edge_labels() != spec.edge_labeled.has_value()) {
    return Fail(reason, "edge_label");
  }
  if (!StructureOk(spec, g, reason)) return false;
  for (const LabelPosition& p : LabelPositions(spec, g)) {
    const int label = p.node ? g.node_label(p.u) : g.edge_label(p.u, p.v);
    if (label < p.lo || label > p.hi) {
      return Fail(reason, p.node ? "node_label" : "edge_label");
    }
  }
  if (spec.node_labeled) {
    for (int v = 0; v < g.size(); ++v) {
      if (!g.node_exists(v)) return Fail(reason, "node_label");
    }
  }
  return true;
}

void ForEachGraph(const GraphSpaceSpec& spec,
                  const std::function<void(const LabeledGraph&)>& visit,
                  double cap) {
  const double estimate = EstimateSpaceSize(spec);
  if (estimate > cap) throw CapExceededError(estimate, cap);

  const int n = spec.max_nodes;
  for (int k = spec.min_nodes; k <= n; ++k) {
    if (spec.node_labeled && k != n) continue;
    const auto slots = StructureSlots(spec, k);
    const int m = static_cast<int>(slots.size());
    const uint64_t masks = uint64_t{1} << m;
    for (uint64_t mask = 0; mask < masks; ++mask) {
      LabeledGraph g(n, k);
      for (int i = 0; i < m; ++i) {
        if ((mask >> (m - 1 - i)) & 1) {
          const auto [u, v] = slots[i];
          g.set_edge(u, v, true);
          if (spec.undirected) g.set_edge(v, u, true);
        }
      }
      if (!StructureOk(spec, g, nullptr)) continue;
      if (spec.node_labeled) g.EnableNodeLabels();
      if (spec.edge_labeled) g.EnableEdgeLabels();
      const std::vector<LabelPosition> positions = LabelPositions(spec, g);
      bool empty_range = false;
      for (const LabelPosition& p : positions) empty_range |= p.lo > p.hi;
      if (empty_range) continue;
      std::vector<int> digits(positions.size());
      for (size_t i = 0; i < positions.size(); ++i) digits[i] = positions[i].lo;
      while (true) {
        for (size_t i = 0; i < positions.size(); ++i) {
          const LabelPosition& p = positions[i];
          if (p.node) {
            g.set_node_label(p.u, digits[i]);
          } else {
            g.set_edge_label(p.u, p.v, digits[i]);
          }
        }
        visit(g);
        int i = static_cast<int>(positions.size()) - 1;
        while (i >= 0 && digits[i] == positions[i].hi) {
          digits[i] = positions[i].lo;
          --i;
        }
        if (i < 0) break;
        ++digits[i];
      }
    }
  }
}

std::vector<LabeledGraph> EnumerateSpace(const GraphSpaceSpec& spec,
                                         double cap) {
  std::vector<LabeledGraph> out;
  ForEachGraph(spec, [&](const LabeledGraph& g) { out.push_back(g); }, cap);
  return out;
}

Json SpaceToJson(const GraphSpaceSpec& spec) {
  Json j;
  j["n0"] = spec.min_nodes;
  j["n"] = spec.max_nodes;
  j["undirected"] = spec.undirected;
  j["strongly_connected"] = spec.strongly_connected;
  j["dag"] = spec.dag;
  if (spec.node_labeled) {
    j["node_labeled"] = {{"num_labels", spec.node_labeled->num_labels},
                         {"max_edges", spec.node_labeled->max_edges}};
  } else {
    j["node_labeled"] = nullptr;
  }
  if (spec.edge_labeled) {
    j["edge_labeled"] = {{"num_labels", spec.edge_labeled->num_labels},
                         {"zero_op", spec.edge_labeled->zero_op}};
  } else {
    j["edge_labeled"] = nullptr;
  }
  return j;
}

GraphSpaceSpec SpaceFromJson(const Json& j) {
  GraphSpaceSpec spec;
  try {
    spec.max_nodes = j.at("n").get<int>();
    spec.min_nodes = j.value("n0", spec.max_nodes);
    spec.undirected = j.value("undirected", false);
    spec.strongly_connected = j.value("strongly_connected", false);
    spec.dag = j.value("dag", false);
    if (j.contains("node_labeled") && !j["node_labeled"].is_null()) {
      const Json& nl = j["node_labeled"];
      spec.node_labeled =
          NodeLabelSpec{nl.at("num_labels").get<int>(),
                        nl.value("max_edges", spec.max_edge_count())};
    }
    if (j.contains("edge_labeled") && !j["edge_labeled"].is_null()) {
      const Json& el = j["edge_labeled"];
      spec.edge_labeled = EdgeLabelSpec{el.at("num_labels").get<int>(),
                                        el.value("zero_op", false)};
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("bad space spec: ") + e.what(), -1);
  }
  spec.Validate();
  return spec;
}

GraphSpaceSpec ResolveSpace(const std::string& name_or_path) {
  if (name_or_path == "nasbench201") return NasBench201Space();
  if (name_or_path == "nasbench201-sparse") {
    return EdgeLabeledDagSpace(4, 4, false);
  }
  if (name_or_path == "nasbench101") return NasBench101Space(7);
  if (name_or_path == "nasbench101-6") return NasBench101Space(6);
  if (name_or_path.rfind("digraph-", 0) == 0) {
    const int n = std::stoi(name_or_path.substr(8));
    return DigraphSpace(n, n);
  }
  if (!std::filesystem::exists(name_or_path)) {
    throw InvalidArgumentError("unknown space preset or file: " +
                               name_or_path);
  }
  return SpaceFromJson(ReadJsonFile(name_or_path));
}

}  // namespace graphbo::graph
