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

#ifndef GRAPHBO_MIP_ENCODING_VERIFIER_H_
#define GRAPHBO_MIP_ENCODING_VERIFIER_H_

#include <cstdint>
#include <string>

namespace graphbo::mip {

struct BijectionResult {
  int n = 0;
  int min_nodes = 0;
  int64_t graphs = 0;     // members of the digraph space
  int64_t solutions = 0;  // feasible assignments found
  int64_t search_nodes = 0;
  // Solutions that differ from the assignment induced by their graph.
  int64_t mismatches = 0;
  // Graphs reached by more than one solution.
  int64_t duplicates = 0;
  double seconds = 0.0;
  bool passed = false;
  std::string failure;
};

// Enumerates every feasible assignment of BuildGraphSpace(min_nodes, n)
// and checks that each one is the assignment induced by its decoded graph
// and that every graph of the space is hit exactly once.
BijectionResult VerifyBijection(int n, int min_nodes);

struct FlipResult {
  int n = 0;
  int64_t graphs = 0;
  int64_t infeasible_graphs = 0;  // induced assignments that fail a row
  int64_t flips = 0;
  int64_t feasible_flips = 0;  // flips that should have been infeasible
  double seconds = 0.0;
  bool passed = false;
  std::string failure;
};

// For every digraph on n nodes, checks that the induced assignment is
// feasible and that changing any single r, d or delta variable to any
// other value in its domain makes it infeasible.
FlipResult VerifySingleFlips(int n);

}  // namespace graphbo::mip

#endif  // GRAPHBO_MIP_ENCODING_VERIFIER_H_
