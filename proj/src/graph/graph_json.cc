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

#include "graphbo/graph/graph_json.h"

#include <string>

#include "graphbo/util/errors.h"

namespace graphbo::graph {

Json GraphToJson(const LabeledGraph& g) {
  const int n = g.size();
  Json j;
  j["n"] = n;
  Json exists = Json::array();
  for (int v = 0; v < n; ++v) exists.push_back(g.node_exists(v));
  j["node_exists"] = std::move(exists);
  Json edges = Json::array();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  j["edges"] = std::move(edges);
  if (g.has_node_labels()) {
    Json labels = Json::array();
    for (int v = 0; v < n; ++v) labels.push_back(g.node_label(v));
    j["node_labels"] = std::move(labels);
  } else {
    j["node_labels"] = nullptr;
  }
  if (g.has_edge_labels()) {
    Json labels = Json::array();
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && g.has_edge(u, v)) {
          labels.push_back({u, v, g.edge_label(u, v)});
        }
      }
    }
    j["edge_labels"] = std::move(labels);
  } else {
    j["edge_labels"] = nullptr;
  }
  return j;
}

LabeledGraph GraphFromJson(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    LabeledGraph g(n, 0);
    const Json& exists = j.at("node_exists");
    if (!exists.is_array() || static_cast<int>(exists.size()) != n) {
      throw SchemaError("node_exists must have n entries", -1);
    }
    for (int v = 0; v < n; ++v) g.set_node_exists(v, exists[v].get<bool>());
    for (const Json& e : j.at("edges")) {
      g.set_edge(e.at(0).get<int>(), e.at(1).get<int>(), true);
    }
    if (j.contains("node_labels") && !j["node_labels"].is_null()) {
      const Json& labels = j["node_labels"];
      if (static_cast<int>(labels.size()) != n) {
        throw SchemaError("node_labels must have n entries", -1);
      }
      g.EnableNodeLabels();
      for (int v = 0; v < n; ++v) {
        const int label = labels[v].get<int>();
        if (label != kNoLabel) g.set_node_label(v, label);
      }
    }
    if (j.contains("edge_labels") && !j["edge_labels"].is_null()) {
      g.EnableEdgeLabels();
      for (const Json& e : j["edge_labels"]) {
        g.set_edge_label(e.at(0).get<int>(), e.at(1).get<int>(),
                         e.at(2).get<int>());
      }
    }
    g.Validate();
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("bad graph JSON: ") + e.what(), -1);
  } catch (const InvalidArgumentError& e) {
    throw SchemaError(std::string("invalid graph: ") + e.what(), -1);
  }
}

}  // namespace graphbo::graph
