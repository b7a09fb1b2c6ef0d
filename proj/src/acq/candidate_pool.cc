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

#include "graphbo/acq/candidate_pool.h"

#include <algorithm>
#include <limits>
#include <map>

#include "graphbo/util/errors.h"

namespace graphbo::acq {

std::string CertificateName(Certificate c) {
  switch (c) {
    case Certificate::kExhaustive:
      return "exhaustive";
    case Certificate::kExternalSolver:
      return "external-solver-claimed";
    case Certificate::kHeuristic:
      return "heuristic";
  }
  return "unknown";
}

bool CandidateLess(const Candidate& a, const Candidate& b) {
  if (a.lcb != b.lcb) return a.lcb < b.lcb;
  return a.key < b.key;
}

Candidate ScoreCandidate(const gp::GpState& gp, double beta_sqrt,
                         const graph::LabeledGraph& g) {
  const gp::Posterior p = gp.Predict(g);
  Candidate c;
  c.graph = g;
  c.key = graph::CanonicalKey(g);
  c.mean = p.mean;
  c.stddev = p.stddev();
  c.lcb = p.mean - beta_sqrt * c.stddev;
  return c;
}

TopK::TopK(int k) : k_(static_cast<size_t>(std::max(k, 0))) {
  if (k < 1) throw InvalidArgumentError("pool size must be positive");
}

double TopK::threshold() const {
  return items_.size() < k_ ? std::numeric_limits<double>::infinity()
                            : items_.back().lcb;
}

bool TopK::Offer(Candidate c) {
  if (items_.size() == k_ && !CandidateLess(c, items_.back())) return false;
  const auto at =
      std::lower_bound(items_.begin(), items_.end(), c, CandidateLess);
  if (at != items_.end() && at->key == c.key) return false;
  items_.insert(at, std::move(c));
  if (items_.size() > k_) items_.pop_back();
  return true;
}

std::vector<Candidate> TopK::Take() && { return std::move(items_); }

CandidatePool MergePools(std::span<const CandidatePool> pools, int k) {
  std::map<std::string, Candidate> best;
  Certificate cert = Certificate::kExhaustive;
  for (const CandidatePool& p : pools) {
    if (static_cast<int>(p.certificate) > static_cast<int>(cert)) {
      cert = p.certificate;
    }
    for (const Candidate& c : p.candidates) {
      auto it = best.find(c.key);
      if (it == best.end() || CandidateLess(c, it->second)) best[c.key] = c;
    }
  }
  TopK top(k);
  for (auto& [key, c] : best) top.Offer(std::move(c));
  CandidatePool out;
  out.candidates = std::move(top).Take();
  out.certificate = pools.empty() ? Certificate::kHeuristic : cert;
  return out;
}

}  // namespace graphbo::acq
