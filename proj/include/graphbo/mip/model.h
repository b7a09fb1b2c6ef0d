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

#ifndef GRAPHBO_MIP_MODEL_H_
#define GRAPHBO_MIP_MODEL_H_

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphbo/util/json_io.h"

namespace graphbo::mip {

enum class VarType { kBinary, kInteger, kContinuous };
enum class Sense { kLessEqual, kEqual, kGreaterEqual };

// "<=", "=", ">=".
std::string SenseSymbol(Sense sense);
Sense ParseSense(std::string_view symbol);

struct Variable {
  std::string name;
  VarType type = VarType::kContinuous;
  double lower = 0.0;
  double upper = 0.0;
  bool integral() const { return type != VarType::kContinuous; }
};

struct Term {
  int var;
  double coef;
};

struct QuadTerm {
  int var1;
  int var2;
  double coef;
};

// sum(linear) + sum(quadratic) <sense> rhs. `tag` names the constraint
// family; `name` is "<tag>_<serial>".
struct Constraint {
  std::string name;
  std::string tag;
  std::vector<Term> linear;
  std::vector<QuadTerm> quadratic;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

struct LinearExpr {
  std::vector<Term> terms;
  double constant = 0.0;
};

// Joins a kind and indices with underscores: VarName("delta", {0, 1, 2})
// is "delta_0_1_2".
std::string VarName(std::string_view kind, std::initializer_list<int> index);

// A minimization model over named variables. Variables keep declaration
// order, which is also the order used by the file writers.
class MipModel {
 public:
  // Throws InvalidArgumentError on a duplicate name or empty domain.
  int AddVariable(std::string name, VarType type, double lower, double upper);
  int AddBinary(std::string name);
  int AddInteger(std::string name, int lower, int upper);
  int AddContinuous(std::string name, double lower, double upper);

  int num_variables() const { return static_cast<int>(vars_.size()); }
  const Variable& variable(int i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }
  // -1 when absent.
  int FindVariable(std::string_view name) const;
  // Throws InvalidArgumentError when absent.
  int VariableIndex(std::string_view name) const;

  // Duplicate variables are merged and zero coefficients dropped. Returns
  // the constraint index.
  int AddConstraint(const std::string& tag, std::vector<Term> linear,
                    Sense sense, double rhs,
                    std::vector<QuadTerm> quadratic = {});
  // Same with an explicit name, which must be of the form "<tag>_<int>".
  int AddNamedConstraint(const std::string& name, std::vector<Term> linear,
                         Sense sense, double rhs,
                         std::vector<QuadTerm> quadratic = {});
  int num_constraints() const { return static_cast<int>(cons_.size()); }
  const Constraint& constraint(int i) const { return cons_[i]; }
  const std::vector<Constraint>& constraints() const { return cons_; }
  // Constraint count per tag.
  std::map<std::string, int> Census() const;
  // Removes every constraint with the given tag.
  void RemoveConstraints(const std::string& tag);

  void SetObjective(LinearExpr objective);
  const LinearExpr& objective() const { return objective_; }

  Json& metadata() { return metadata_; }
  const Json& metadata() const { return metadata_; }

 private:
  void CheckTerms(const std::vector<Term>& linear,
                  const std::vector<QuadTerm>& quadratic) const;

  std::vector<Variable> vars_;
  std::unordered_map<std::string, int> index_;
  std::vector<Constraint> cons_;
  std::map<std::string, int> next_serial_;
  LinearExpr objective_;
  Json metadata_ = Json::object();
};

// Tag of a constraint name: everything before the last underscore.
std::string TagOfName(std::string_view name);

// Evaluates the linear and quadratic parts at `values`.
double Activity(const Constraint& c, const std::vector<double>& values);
double Evaluate(const LinearExpr& e, const std::vector<double>& values);

}  // namespace graphbo::mip

#endif  // GRAPHBO_MIP_MODEL_H_
