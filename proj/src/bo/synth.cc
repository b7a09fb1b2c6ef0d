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

#include "graphbo/bo/synth.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "graphbo/graph/graph_metrics.h"
#include "graphbo/util/errors.h"

namespace graphbo::bo {
namespace {

double Clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

int EdgeCount(const graph::GraphSpaceSpec& spec, const graph::LabeledGraph& g) {
  if (!spec.undirected) return g.num_edges();
  int count = 0;
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) count += g.has_edge(u, v);
  }
  return count;
}

}  // namespace

SynthWeights SynthComponents(const graph::GraphSpaceSpec& spec,
                             const graph::LabeledGraph& g) {
  SynthWeights c = {0.0, 0.0, 0.0};
  const int m = g.num_nodes();
  if (m > 1) {
    const graph::GraphMetrics metrics = graph::ComputeMetrics(g);
    const int d = metrics.reach(0, m - 1) ? metrics.dist(0, m - 1) : 0;
    c[0] = static_cast<double>(d) / m;
  }
  if (spec.edge_labeled) {
    int ones = 0;
    for (int u = 0; u < g.size(); ++u) {
      for (int v = 0; v < g.size(); ++v) {
        ones += g.has_edge(u, v) && g.edge_label(u, v) == 1;
      }
    }
    const int slots = spec.max_edge_count();
    if (slots > 0) c[1] = static_cast<double>(ones) / slots;
  } else if (spec.node_labeled) {
    int ones = 0;
    for (int v = 0; v < g.size(); ++v) {
      ones += g.node_exists(v) && g.node_label(v) == 1;
    }
    c[1] = static_cast<double>(ones) / spec.max_nodes;
  }
  const int max_edges =
      spec.node_labeled ? spec.node_labeled->max_edges : spec.max_edge_count();
  if (max_edges > 0) c[2] = static_cast<double>(EdgeCount(spec, g)) / max_edges;
  return c;
}

double SynthAccuracy(const graph::GraphSpaceSpec& spec,
                     const graph::LabeledGraph& g,
                     const SynthWeights& weights) {
  const SynthWeights c = SynthComponents(spec, g);
  return Clamp01(weights[0] * c[0] + weights[1] * c[1] + weights[2] * c[2]);
}

BenchmarkTable SynthBenchmark(const graph::GraphSpaceSpec& spec, uint64_t seed,
                              double noise_sd, double cap) {
  if (!(noise_sd >= 0.0)) {
    throw InvalidArgumentError("noise_sd must be nonnegative");
  }
  const std::vector<graph::LabeledGraph> members =
      graph::EnumerateSpace(spec, cap);
  BenchmarkTable table("synthetic", spec);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  double best = -1.0;
  std::vector<std::string> best_keys;
  for (const graph::LabeledGraph& g : members) {
    const double val = SynthAccuracy(spec, g, kSynthValWeights);
    const double test = SynthAccuracy(spec, g, kSynthTestWeights);
    BenchmarkRecord r{g, {}, {}};
    for (int s = 0; s < kSynthSeeds; ++s) {
      r.val_acc.push_back(Clamp01(val + noise_sd * noise(rng)));
      r.test_acc.push_back(Clamp01(test + noise_sd * noise(rng)));
    }
    if (val > best) {
      best = val;
      best_keys.clear();
    }
    if (val == best) best_keys.push_back(ToHex(graph::CanonicalKey(g)));
    table.Add(std::move(r));
  }
  Json& meta = table.metadata();
  meta["generator"] = "synthetic";
  meta["seed"] = seed;
  meta["noise_sd"] = noise_sd;
  meta["seeds_per_record"] = kSynthSeeds;
  meta["val_weights"] = kSynthValWeights;
  meta["test_weights"] = kSynthTestWeights;
  meta["best_keys"] = best_keys;
  meta["best_val_acc"] = best;
  meta["best_val_error"] = 1.0 - best;
  return table;
}

}  // namespace graphbo::bo
