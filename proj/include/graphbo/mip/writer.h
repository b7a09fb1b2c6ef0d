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

#ifndef GRAPHBO_MIP_WRITER_H_
#define GRAPHBO_MIP_WRITER_H_

#include <string>

#include "graphbo/mip/model.h"

namespace graphbo::mip {

enum class FileFormat { kLp, kMps };

FileFormat ParseFileFormat(const std::string& name);
// Format from the extension of `path` (".lp" or ".mps").
FileFormat FormatOfPath(const std::string& path);

// CPLEX LP text. Every variable appears in the Bounds section in
// declaration order; quadratic constraint terms use the bracket syntax.
// Output is a pure function of the model.
std::string WriteLp(const MipModel& model);
// Free-format MPS with integer markers and QCMATRIX sections.
std::string WriteMps(const MipModel& model);
std::string WriteModel(const MipModel& model, FileFormat format);

}  // namespace graphbo::mip

#endif  // GRAPHBO_MIP_WRITER_H_
