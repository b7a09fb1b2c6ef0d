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

#ifndef GRAPHBO_ACQ_CANDIDATE_POOL_H_
#define GRAPHBO_ACQ_CANDIDATE_POOL_H_

#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "graphbo/gp/gp.h"
#include "graphbo/graph/labeled_graph.h"

namespace graphbo::acq {

using KeySet = std::unordered_set<std::string>;

enum class Certificate { kExhaustive, kExternalSolver, kHeuristic };

// "exhaustive", "external-solver-claimed", "heuristic".
std::string CertificateName(Certificate c);

struct Candidate {
  graph::LabeledGraph graph;
  std::string key;  // CanonicalKey(graph)
  double lcb = 0.0;
  double mean = 0.0;
  double stddev = 0.0;
};

// Orders by LCB, then by key.
bool CandidateLess(const Candidate& a, const Candidate& b);

// Candidates sorted by CandidateLess, without duplicate keys.
struct CandidatePool {
  std::vector<Candidate> candidates;
  Certificate certificate = Certificate::kHeuristic;
  size_t size() const { return candidates.size(); }
  bool empty() const { return candidates.empty(); }
};

// mean - beta_sqrt * stddev of the GP posterior.
Candidate ScoreCandidate(const gp::GpState& gp, double beta_sqrt,
                         const graph::LabeledGraph& g);

// Keeps the best `k` candidates seen, ordered by CandidateLess.
class TopK {
 public:
  explicit TopK(int k);
  // Worst retained LCB, +inf while fewer than k are held.
  double threshold() const;
  // Returns true when the candidate was kept.
  bool Offer(Candidate c);
  std::vector<Candidate> Take() &&;

 private:
  size_t k_;
  std::vector<Candidate> items_;
};

// Union of the pools, deduplicated by key, best `k`. The certificate is
// the weakest of the inputs.
CandidatePool MergePools(std::span<const CandidatePool> pools, int k);

}  // namespace graphbo::acq

#endif  // GRAPHBO_ACQ_CANDIDATE_POOL_H_
