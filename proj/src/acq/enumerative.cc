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

#include "graphbo/acq/enumerative.h"

#include <span>

namespace graphbo::acq {
namespace {

constexpr size_t kChunk = 4096;

// Scores one chunk and offers the results to `top`.
void ScoreChunk(const gp::GpState& gp, double beta_sqrt,
                std::span<const graph::LabeledGraph> graphs,
                std::span<const std::string> keys,
                std::span<const kernels::GraphFeatures> features,
                TopK& top) {
  const std::vector<gp::Posterior> post = gp.PredictBatch(features);
  for (size_t i = 0; i < post.size(); ++i) {
    const double sd = post[i].stddev();
    const double lcb = post[i].mean - beta_sqrt * sd;
    if (lcb > top.threshold()) continue;
    top.Offer({graphs[i], keys[i], lcb, post[i].mean, sd});
  }
}

}  // namespace

EnumeratedSpace EnumerateForScoring(const graph::GraphSpaceSpec& spec,
                                    double cap) {
  EnumeratedSpace s;
  s.spec = spec;
  s.vocab = kernels::VocabularyOf(spec);
  graph::ForEachGraph(
      spec,
      [&](const graph::LabeledGraph& g) {
        s.graphs.push_back(g);
        s.keys.push_back(graph::CanonicalKey(g));
        s.features.push_back(kernels::MakeFeatures(g, s.vocab));
      },
      cap);
  return s;
}

std::vector<double> ScoreAll(const EnumeratedSpace& space,
                             const gp::GpState& gp, double beta_sqrt) {
  const std::vector<gp::Posterior> post = gp.PredictBatch(space.features);
  std::vector<double> lcb;
  lcb.reserve(post.size());
  for (const gp::Posterior& p : post) {
    lcb.push_back(p.mean - beta_sqrt * p.stddev());
  }
  return lcb;
}

CandidatePool OptimizeEnumerative(const EnumeratedSpace& space,
                                  const gp::GpState& gp, double beta_sqrt,
                                  int k, const KeySet& exclude) {
  TopK top(k);
  const std::vector<gp::Posterior> post = gp.PredictBatch(space.features);
  for (size_t i = 0; i < space.size(); ++i) {
    const double sd = post[i].stddev();
    const double lcb = post[i].mean - beta_sqrt * sd;
    if (lcb > top.threshold() || exclude.contains(space.keys[i])) continue;
    top.Offer({space.graphs[i], space.keys[i], lcb, post[i].mean, sd});
  }
  CandidatePool pool;
  pool.candidates = std::move(top).Take();
  pool.certificate = Certificate::kExhaustive;
  return pool;
}

CandidatePool OptimizeEnumerative(const graph::GraphSpaceSpec& spec,
                                  const gp::GpState& gp, double beta_sqrt,
                                  int k, const KeySet& exclude, double cap) {
  const kernels::LabelVocabulary vocab = kernels::VocabularyOf(spec);
  TopK top(k);
  std::vector<graph::LabeledGraph> graphs;
  std::vector<std::string> keys;
  std::vector<kernels::GraphFeatures> features;
  const auto flush = [&] {
    ScoreChunk(gp, beta_sqrt, graphs, keys, features, top);
    graphs.clear();
    keys.clear();
    features.clear();
  };
  graph::ForEachGraph(
      spec,
      [&](const graph::LabeledGraph& g) {
        std::string key = graph::CanonicalKey(g);
        if (exclude.contains(key)) return;
        graphs.push_back(g);
        keys.push_back(std::move(key));
        features.push_back(kernels::MakeFeatures(g, vocab));
        if (graphs.size() == kChunk) flush();
      },
      cap);
  flush();
  CandidatePool pool;
  pool.candidates = std::move(top).Take();
  pool.certificate = Certificate::kExhaustive;
  return pool;
}

}  // namespace graphbo::acq
