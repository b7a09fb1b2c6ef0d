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

#ifndef GRAPHBO_MIP_CHECKER_H_
#define GRAPHBO_MIP_CHECKER_H_

#include <string>
#include <vector>

#include "graphbo/mip/assignment.h"
#include "graphbo/mip/model.h"
#include "graphbo/util/json_io.h"

namespace graphbo::mip {

inline constexpr double kContinuousTolerance = 1e-6;
inline constexpr char kTagDomain[] = "domain";
inline constexpr char kTagMissing[] = "missing";

// slack = rhs - lhs for <=, lhs - rhs for >=, -|lhs - rhs| for =; a
// violation has negative slack. Domain and missing-variable problems are
// reported under the tags "domain" and "missing" with the variable name.
struct Violation {
  std::string constraint_tag;
  std::string constraint_name;
  double lhs = 0.0;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
  double slack = 0.0;
};

// {constraint_tag, lhs, sense, rhs, slack}, plus the constraint name.
Json ViolationToJson(const Violation& v);

// True when every variable and coefficient of `c` is integral, in which
// case the constraint is checked exactly.
bool IsIntegralConstraint(const MipModel& model, const Constraint& c);

// Every violated constraint and domain. Constraints over integer data are
// checked exactly, the rest with absolute tolerance kContinuousTolerance.
std::vector<Violation> CheckAssignment(const MipModel& model,
                                       const Assignment& values);
std::vector<Violation> CheckAssignment(const MipModel& model,
                                       const NamedAssignment& named);

// Feasibility test over the linear constraints, with an index from
// variables to the constraints that use them. Quadratic constraints are
// evaluated too, without the index speedup.
class FastChecker {
 public:
  explicit FastChecker(const MipModel& model);
  bool Feasible(const Assignment& values) const;
  // Only the constraints that involve `var`.
  bool FeasibleAround(const Assignment& values, int var) const;
  // Tag of the first violated constraint involving `var`, or "".
  std::string FirstViolationAround(const Assignment& values, int var) const;

 private:
  bool RowOk(int row, const Assignment& values) const;

  const MipModel& model_;
  std::vector<int> row_start_;
  std::vector<int> row_var_;
  std::vector<double> row_coef_;
  std::vector<char> row_integral_;
  std::vector<std::vector<int>> rows_of_var_;
};

}  // namespace graphbo::mip

#endif  // GRAPHBO_MIP_CHECKER_H_
