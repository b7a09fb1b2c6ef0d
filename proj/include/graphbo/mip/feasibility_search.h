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

#ifndef GRAPHBO_MIP_FEASIBILITY_SEARCH_H_
#define GRAPHBO_MIP_FEASIBILITY_SEARCH_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "graphbo/mip/assignment.h"
#include "graphbo/mip/model.h"

namespace graphbo::mip {

struct SearchStats {
  int64_t solutions = 0;
  int64_t nodes = 0;
};

// Enumerates every integral assignment satisfying all constraints of a
// model whose variables are all binary or integer, by depth-first search
// with bound propagation. `visit` returns false to stop early. Throws
// InvalidArgumentError on continuous variables or quadratic constraints.
SearchStats EnumerateFeasible(
    const MipModel& model,
    const std::function<bool(const Assignment&)>& visit);

}  // namespace graphbo::mip

#endif  // GRAPHBO_MIP_FEASIBILITY_SEARCH_H_
