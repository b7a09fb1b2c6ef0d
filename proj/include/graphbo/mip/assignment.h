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

#ifndef GRAPHBO_MIP_ASSIGNMENT_H_
#define GRAPHBO_MIP_ASSIGNMENT_H_

#include <map>
#include <string>
#include <vector>

#include "graphbo/graph/labeled_graph.h"
#include "graphbo/mip/model.h"

namespace graphbo::mip {

// Values indexed by variable id.
using Assignment = std::vector<double>;
using NamedAssignment = std::map<std::string, double>;

// The A and F binaries, in declaration order. Together they determine the
// graph.
std::vector<int> StructureBinaries(const MipModel& model);

// Assignment with only the A and F values of `g` set.
Assignment StructureAssignment(const MipModel& model,
                               const graph::LabeledGraph& g);

// The assignment that `g` induces on every variable of the model: graph
// properties, kernel indicators and values, and posterior quantities.
// Throws InvalidArgumentError when `g` does not fit the model's size or
// label kinds.
Assignment AssignmentFromGraph(const MipModel& model,
                               const graph::LabeledGraph& g);

// Reads the graph off the A and F values.
graph::LabeledGraph DecodeGraph(const MipModel& model,
                                const Assignment& values);

NamedAssignment ToNamed(const MipModel& model, const Assignment& values);
// Variables absent from `named` are listed in `missing` and set to 0.
Assignment FromNamed(const MipModel& model, const NamedAssignment& named,
                     std::vector<std::string>* missing = nullptr);

}  // namespace graphbo::mip

#endif  // GRAPHBO_MIP_ASSIGNMENT_H_
