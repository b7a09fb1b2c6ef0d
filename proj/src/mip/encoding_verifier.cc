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

#include "graphbo/mip/encoding_verifier.h"

#include <chrono>
#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphbo/graph/graph_space.h"
#include "graphbo/graph/labeled_graph.h"
#include "graphbo/mip/assignment.h"
#include "graphbo/mip/checker.h"
#include "graphbo/mip/feasibility_search.h"
#include "graphbo/mip/graph_encoding.h"
#include "graphbo/util/json_io.h"

namespace graphbo::mip {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

BijectionResult VerifyBijection(int n, int min_nodes) {
  const auto start = Clock::now();
  BijectionResult result;
  result.n = n;
  result.min_nodes = min_nodes;
  const MipModel model = BuildGraphSpace(min_nodes, n);

  std::unordered_map<std::string, int> hits;
  graph::ForEachGraph(graph::DigraphSpace(min_nodes, n),
                      [&](const graph::LabeledGraph& g) {
                        hits.emplace(graph::CanonicalKey(g), 0);
                      });
  result.graphs = static_cast<int64_t>(hits.size());

  const SearchStats stats =
      EnumerateFeasible(model, [&](const Assignment& values) {
        ++result.solutions;
        graph::LabeledGraph g(n, 0);
        try {
          g = DecodeGraph(model, values);
        } catch (const std::exception& e) {
          ++result.mismatches;
          if (result.failure.empty()) result.failure = e.what();
          return true;
        }
        if (AssignmentFromGraph(model, g) != values) {
          ++result.mismatches;
          if (result.failure.empty()) {
            result.failure = "solution differs from the graph's metrics";
          }
        }
        const auto it = hits.find(graph::CanonicalKey(g));
        if (it == hits.end()) {
          ++result.mismatches;
          if (result.failure.empty()) {
            result.failure = "solution decodes outside the space";
          }
        } else if (++it->second == 2) {
          ++result.duplicates;
        }
        return true;
      });
  result.search_nodes = stats.nodes;
  int64_t missed = 0;
  for (const auto& [key, count] : hits) missed += count == 0;
  if (missed > 0 && result.failure.empty()) {
    result.failure = std::to_string(missed) + " graphs have no solution";
  }
  if (result.duplicates > 0 && result.failure.empty()) {
    result.failure = std::to_string(result.duplicates) +
                     " graphs have more than one solution";
  }
  result.passed = result.mismatches == 0 && result.duplicates == 0 &&
                  missed == 0 && result.solutions == result.graphs;
  result.seconds = SecondsSince(start);
  return result;
}

FlipResult VerifySingleFlips(int n) {
  const auto start = Clock::now();
  FlipResult result;
  result.n = n;
  const MipModel model = BuildGraphSpace(n, n);
  const FastChecker checker(model);
  std::vector<int> flip_vars;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      flip_vars.push_back(model.VariableIndex(RVar(u, v)));
      flip_vars.push_back(model.VariableIndex(DVar(u, v)));
      for (int w = 0; w < n; ++w) {
        flip_vars.push_back(model.VariableIndex(DeltaVar(u, v, w)));
      }
    }
  }
  graph::ForEachGraph(graph::DigraphSpace(n, n), [&](const graph::LabeledGraph&
                                                         g) {
    ++result.graphs;
    Assignment values = AssignmentFromGraph(model, g);
    if (!checker.Feasible(values)) {
      ++result.infeasible_graphs;
      if (result.failure.empty()) {
        result.failure = "induced assignment infeasible for " +
                         ToHex(graph::CanonicalKey(g));
      }
      return;
    }
    for (int var : flip_vars) {
      const Variable& x = model.variable(var);
      const double original = values[var];
      for (double t = x.lower; t <= x.upper; t += 1.0) {
        if (t == original) continue;
        values[var] = t;
        ++result.flips;
        if (checker.FeasibleAround(values, var)) {
          ++result.feasible_flips;
          if (result.failure.empty()) {
            result.failure = "flip of " + x.name + " stays feasible for " +
                             ToHex(graph::CanonicalKey(g));
          }
        }
      }
      values[var] = original;
    }
  });
  result.passed = result.infeasible_graphs == 0 && result.feasible_flips == 0;
  result.seconds = SecondsSince(start);
  return result;
}

}  // namespace graphbo::mip
