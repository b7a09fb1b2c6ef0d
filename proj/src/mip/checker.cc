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

#include "graphbo/mip/checker.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace graphbo::mip {
namespace {

bool Integral(double x) { return std::isfinite(x) && x == std::round(x); }

double Slack(Sense sense, double lhs, double rhs) {
  switch (sense) {
    case Sense::kLessEqual:
      return rhs - lhs;
    case Sense::kGreaterEqual:
      return lhs - rhs;
    case Sense::kEqual:
      return -std::abs(lhs - rhs);
  }
  return 0.0;
}

void CheckDomains(const MipModel& model, const Assignment& values,
                  std::vector<Violation>& out) {
  for (int i = 0; i < model.num_variables(); ++i) {
    const Variable& v = model.variable(i);
    const double x = values[i];
    const double tol = v.integral() ? 0.0 : kContinuousTolerance;
    Violation bad{kTagDomain, v.name, x, Sense::kEqual, x, 0.0};
    if (!std::isfinite(x)) {
      bad.slack = -std::numeric_limits<double>::infinity();
      out.push_back(bad);
    } else if (v.integral() && !Integral(x)) {
      bad.rhs = std::round(x);
      bad.slack = -std::abs(x - bad.rhs);
      out.push_back(bad);
    } else if (x < v.lower - tol) {
      bad.sense = Sense::kGreaterEqual;
      bad.rhs = v.lower;
      bad.slack = x - v.lower;
      out.push_back(bad);
    } else if (x > v.upper + tol) {
      bad.sense = Sense::kLessEqual;
      bad.rhs = v.upper;
      bad.slack = v.upper - x;
      out.push_back(bad);
    }
  }
}

}  // namespace

Json ViolationToJson(const Violation& v) {
  return {{"constraint_tag", v.constraint_tag},
          {"lhs", v.lhs},
          {"sense", SenseSymbol(v.sense)},
          {"rhs", v.rhs},
          {"slack", v.slack},
          {"constraint", v.constraint_name}};
}

bool IsIntegralConstraint(const MipModel& model, const Constraint& c) {
  if (!Integral(c.rhs)) return false;
  for (const Term& t : c.linear) {
    if (!model.variable(t.var).integral() || !Integral(t.coef)) return false;
  }
  for (const QuadTerm& q : c.quadratic) {
    if (!model.variable(q.var1).integral() ||
        !model.variable(q.var2).integral() || !Integral(q.coef)) {
      return false;
    }
  }
  return true;
}

std::vector<Violation> CheckAssignment(const MipModel& model,
                                       const Assignment& values) {
  std::vector<Violation> out;
  CheckDomains(model, values, out);
  for (const Constraint& c : model.constraints()) {
    const double lhs = Activity(c, values);
    const double slack = Slack(c.sense, lhs, c.rhs);
    const double tol =
        IsIntegralConstraint(model, c) ? 0.0 : kContinuousTolerance;
    if (!(slack >= -tol)) {
      out.push_back({c.tag, c.name, lhs, c.sense, c.rhs, slack});
    }
  }
  return out;
}

std::vector<Violation> CheckAssignment(const MipModel& model,
                                       const NamedAssignment& named) {
  std::vector<std::string> missing;
  const Assignment values = FromNamed(model, named, &missing);
  std::vector<Violation> out;
  for (const std::string& name : missing) {
    out.push_back({kTagMissing, name, 0.0, Sense::kEqual, 0.0, -1.0});
  }
  for (Violation& v : CheckAssignment(model, values)) {
    out.push_back(std::move(v));
  }
  return out;
}

FastChecker::FastChecker(const MipModel& model)
    : model_(model), rows_of_var_(model.num_variables()) {
  row_start_.push_back(0);
  for (int r = 0; r < model.num_constraints(); ++r) {
    const Constraint& c = model.constraint(r);
    for (const Term& t : c.linear) {
      row_var_.push_back(t.var);
      row_coef_.push_back(t.coef);
      rows_of_var_[t.var].push_back(r);
    }
    for (const QuadTerm& q : c.quadratic) {
      rows_of_var_[q.var1].push_back(r);
      if (q.var2 != q.var1) rows_of_var_[q.var2].push_back(r);
    }
    row_start_.push_back(static_cast<int>(row_var_.size()));
    row_integral_.push_back(IsIntegralConstraint(model, c) ? 1 : 0);
  }
  for (auto& rows : rows_of_var_) {
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  }
}

bool FastChecker::RowOk(int row, const Assignment& values) const {
  const Constraint& c = model_.constraint(row);
  double lhs = 0.0;
  for (int k = row_start_[row]; k < row_start_[row + 1]; ++k) {
    lhs += row_coef_[k] * values[row_var_[k]];
  }
  for (const QuadTerm& q : c.quadratic) {
    lhs += q.coef * values[q.var1] * values[q.var2];
  }
  const double tol = row_integral_[row] ? 0.0 : kContinuousTolerance;
  return Slack(c.sense, lhs, c.rhs) >= -tol;
}

bool FastChecker::Feasible(const Assignment& values) const {
  for (int i = 0; i < model_.num_variables(); ++i) {
    const Variable& v = model_.variable(i);
    const double x = values[i];
    if (v.integral() ? (!Integral(x) || x < v.lower || x > v.upper)
                     : (x < v.lower - kContinuousTolerance ||
                        x > v.upper + kContinuousTolerance)) {
      return false;
    }
  }
  for (int r = 0; r < model_.num_constraints(); ++r) {
    if (!RowOk(r, values)) return false;
  }
  return true;
}

bool FastChecker::FeasibleAround(const Assignment& values, int var) const {
  const Variable& v = model_.variable(var);
  const double x = values[var];
  if (v.integral() && (!Integral(x) || x < v.lower || x > v.upper)) {
    return false;
  }
  for (int r : rows_of_var_[var]) {
    if (!RowOk(r, values)) return false;
  }
  return true;
}

std::string FastChecker::FirstViolationAround(const Assignment& values,
                                              int var) const {
  const Variable& v = model_.variable(var);
  const double x = values[var];
  if (v.integral() && (!Integral(x) || x < v.lower || x > v.upper)) {
    return kTagDomain;
  }
  for (int r : rows_of_var_[var]) {
    if (!RowOk(r, values)) return model_.constraint(r).tag;
  }
  return "";
}

}  // namespace graphbo::mip
