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

#ifndef GRAPHBO_MIP_LP_READER_H_
#define GRAPHBO_MIP_LP_READER_H_

#include <string_view>

#include "graphbo/mip/model.h"

namespace graphbo::mip {

// Parses CPLEX LP text: a linear objective, linear and bracketed quadratic
// constraints, bounds, and integer/binary sections. Variables appear in
// the order of the Bounds section, then in order of first use. Constraint
// names of the form "<tag>_<int>" keep their tag; other rows get the tag
// "row". Throws SchemaError with the offending line number.
MipModel ReadLp(std::string_view text);

}  // namespace graphbo::mip

#endif  // GRAPHBO_MIP_LP_READER_H_
