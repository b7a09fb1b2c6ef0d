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

#include "graphbo/mip/model.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "graphbo/util/errors.h"

namespace graphbo::mip {
namespace {

std::vector<Term> Merge(std::vector<Term> terms) {
  std::vector<Term> out;
  std::unordered_map<int, size_t> at;
  for (const Term& t : terms) {
    auto [it, fresh] = at.emplace(t.var, out.size());
    if (fresh) {
      out.push_back(t);
    } else {
      out[it->second].coef += t.coef;
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0.0; });
  return out;
}

std::vector<QuadTerm> Merge(std::vector<QuadTerm> terms) {
  std::vector<QuadTerm> out;
  std::map<std::pair<int, int>, size_t> at;
  for (QuadTerm t : terms) {
    if (t.var1 > t.var2) std::swap(t.var1, t.var2);
    auto [it, fresh] = at.emplace(std::make_pair(t.var1, t.var2), out.size());
    if (fresh) {
      out.push_back(t);
    } else {
      out[it->second].coef += t.coef;
    }
  }
  std::erase_if(out, [](const QuadTerm& t) { return t.coef == 0.0; });
  return out;
}

}  // namespace

std::string SenseSymbol(Sense sense) {
  switch (sense) {
    case Sense::kLessEqual:
      return "<=";
    case Sense::kEqual:
      return "=";
    case Sense::kGreaterEqual:
      return ">=";
  }
  return "?";
}

Sense ParseSense(std::string_view symbol) {
  if (symbol == "<=" || symbol == "=<" || symbol == "<") {
    return Sense::kLessEqual;
  }
  if (symbol == ">=" || symbol == "=>" || symbol == ">") {
    return Sense::kGreaterEqual;
  }
  if (symbol == "=" || symbol == "==") return Sense::kEqual;
  throw InvalidArgumentError("unknown constraint sense: " +
                             std::string(symbol));
}

std::string VarName(std::string_view kind, std::initializer_list<int> index) {
  std::string name(kind);
  for (int i : index) {
    name += '_';
    name += std::to_string(i);
  }
  return name;
}

std::string TagOfName(std::string_view name) {
  const size_t pos = name.rfind('_');
  return std::string(pos == std::string_view::npos ? name
                                                   : name.substr(0, pos));
}

int MipModel::AddVariable(std::string name, VarType type, double lower,
                          double upper) {
  if (name.empty()) throw InvalidArgumentError("empty variable name");
  if (!(lower <= upper)) {
    throw InvalidArgumentError("empty domain for variable " + name);
  }
  if (type == VarType::kBinary) {
    lower = std::max(lower, 0.0);
    upper = std::min(upper, 1.0);
  }
  const int id = num_variables();
  if (!index_.emplace(name, id).second) {
    throw InvalidArgumentError("duplicate variable " + name);
  }
  vars_.push_back({std::move(name), type, lower, upper});
  return id;
}

int MipModel::AddBinary(std::string name) {
  return AddVariable(std::move(name), VarType::kBinary, 0.0, 1.0);
}

int MipModel::AddInteger(std::string name, int lower, int upper) {
  return AddVariable(std::move(name), VarType::kInteger, lower, upper);
}

int MipModel::AddContinuous(std::string name, double lower, double upper) {
  return AddVariable(std::move(name), VarType::kContinuous, lower, upper);
}

int MipModel::FindVariable(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

int MipModel::VariableIndex(std::string_view name) const {
  const int id = FindVariable(name);
  if (id < 0) {
    throw InvalidArgumentError("unknown variable " + std::string(name));
  }
  return id;
}

void MipModel::CheckTerms(const std::vector<Term>& linear,
                          const std::vector<QuadTerm>& quadratic) const {
  const auto check = [this](int var, double coef) {
    if (var < 0 || var >= num_variables()) {
      throw InvalidArgumentError("constraint references undeclared variable");
    }
    if (!std::isfinite(coef)) {
      throw InvalidArgumentError("non-finite coefficient");
    }
  };
  for (const Term& t : linear) check(t.var, t.coef);
  for (const QuadTerm& q : quadratic) {
    check(q.var1, q.coef);
    check(q.var2, q.coef);
  }
}

int MipModel::AddConstraint(const std::string& tag, std::vector<Term> linear,
                            Sense sense, double rhs,
                            std::vector<QuadTerm> quadratic) {
  if (tag.empty()) throw InvalidArgumentError("constraint without a tag");
  const int serial = next_serial_[tag]++;
  return AddNamedConstraint(tag + "_" + std::to_string(serial),
                            std::move(linear), sense, rhs,
                            std::move(quadratic));
}

int MipModel::AddNamedConstraint(const std::string& name,
                                 std::vector<Term> linear, Sense sense,
                                 double rhs, std::vector<QuadTerm> quadratic) {
  CheckTerms(linear, quadratic);
  if (!std::isfinite(rhs)) throw InvalidArgumentError("non-finite rhs");
  Constraint c;
  c.name = name;
  c.tag = TagOfName(name);
  if (c.tag.empty() || c.tag == name) {
    throw InvalidArgumentError("constraint name lacks a tag: " + name);
  }
  const std::string serial = name.substr(c.tag.size() + 1);
  if (serial.empty() ||
      !std::all_of(serial.begin(), serial.end(), ::isdigit)) {
    throw InvalidArgumentError("constraint name lacks a serial: " + name);
  }
  int& next = next_serial_[c.tag];
  next = std::max(next, std::stoi(serial) + 1);
  c.linear = Merge(std::move(linear));
  c.quadratic = Merge(std::move(quadratic));
  c.sense = sense;
  c.rhs = rhs;
  cons_.push_back(std::move(c));
  return num_constraints() - 1;
}

std::map<std::string, int> MipModel::Census() const {
  std::map<std::string, int> census;
  for (const Constraint& c : cons_) ++census[c.tag];
  return census;
}

void MipModel::RemoveConstraints(const std::string& tag) {
  std::erase_if(cons_, [&](const Constraint& c) { return c.tag == tag; });
}

void MipModel::SetObjective(LinearExpr objective) {
  CheckTerms(objective.terms, {});
  objective.terms = Merge(std::move(objective.terms));
  objective_ = std::move(objective);
}

double Activity(const Constraint& c, const std::vector<double>& values) {
  double lhs = 0.0;
  for (const Term& t : c.linear) lhs += t.coef * values[t.var];
  for (const QuadTerm& q : c.quadratic) {
    lhs += q.coef * values[q.var1] * values[q.var2];
  }
  return lhs;
}

double Evaluate(const LinearExpr& e, const std::vector<double>& values) {
  double v = e.constant;
  for (const Term& t : e.terms) v += t.coef * values[t.var];
  return v;
}

}  // namespace graphbo::mip
