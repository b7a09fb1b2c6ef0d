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

#include "graphbo/mip/feasibility_search.h"

#include <cmath>

#include "graphbo/util/errors.h"

namespace graphbo::mip {
namespace {

// sum_k coef_k x_k <= rhs.
struct Row {
  std::vector<int> vars;
  std::vector<int64_t> coefs;
  int64_t rhs;
};

struct Domain {
  int64_t lo, hi;
};

int64_t FloorDiv(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

class Search {
 public:
  Search(const MipModel& model,
         const std::function<bool(const Assignment&)>& visit)
      : visit_(visit), rows_of_var_(model.num_variables()) {
    for (const Variable& v : model.variables()) {
      if (!v.integral()) {
        throw InvalidArgumentError("exhaustive search needs integer variables");
      }
      domains_.push_back({static_cast<int64_t>(std::ceil(v.lower)),
                          static_cast<int64_t>(std::floor(v.upper))});
    }
    for (const Constraint& c : model.constraints()) {
      if (!c.quadratic.empty()) {
        throw InvalidArgumentError("exhaustive search needs linear models");
      }
      Row le;
      for (const Term& t : c.linear) {
        if (t.coef != std::round(t.coef)) {
          throw InvalidArgumentError("exhaustive search needs integer data");
        }
        le.vars.push_back(t.var);
        le.coefs.push_back(static_cast<int64_t>(t.coef));
      }
      if (c.rhs != std::round(c.rhs)) {
        throw InvalidArgumentError("exhaustive search needs integer data");
      }
      le.rhs = static_cast<int64_t>(c.rhs);
      Row ge = le;
      for (auto& a : ge.coefs) a = -a;
      ge.rhs = -le.rhs;
      if (c.sense != Sense::kGreaterEqual) AddRow(std::move(le));
      if (c.sense != Sense::kLessEqual) AddRow(std::move(ge));
    }
  }

  SearchStats Run() {
    std::vector<Domain> d = domains_;
    if (Propagate(d, -1)) Dfs(d);
    return stats_;
  }

 private:
  void AddRow(Row r) {
    const int id = static_cast<int>(rows_.size());
    for (int v : r.vars) rows_of_var_[v].push_back(id);
    rows_.push_back(std::move(r));
  }

  // Tightens domains to a fixpoint; false on an empty domain.
  // Starts from the rows of `seed`, or from every row when seed < 0.
  bool Propagate(std::vector<Domain>& d, int seed) const {
    std::vector<char> queued(rows_.size(), 0);
    std::vector<int> queue;
    if (seed < 0) {
      for (size_t i = 0; i < rows_.size(); ++i) {
        queue.push_back(static_cast<int>(i));
      }
    } else {
      queue = rows_of_var_[seed];
    }
    for (int r : queue) queued[r] = 1;
    while (!queue.empty()) {
      const int r = queue.back();
      queue.pop_back();
      queued[r] = 0;
      const Row& row = rows_[r];
      int64_t min_act = 0;
      for (size_t k = 0; k < row.vars.size(); ++k) {
        const Domain& x = d[row.vars[k]];
        min_act += row.coefs[k] > 0 ? row.coefs[k] * x.lo : row.coefs[k] * x.hi;
      }
      if (min_act > row.rhs) return false;
      const int64_t room = row.rhs - min_act;
      for (size_t k = 0; k < row.vars.size(); ++k) {
        const int var = row.vars[k];
        Domain& x = d[var];
        const int64_t a = row.coefs[k];
        bool changed = false;
        if (a > 0) {
          const int64_t hi = x.lo + FloorDiv(room, a);
          if (hi < x.hi) {
            x.hi = hi;
            changed = true;
          }
        } else {
          const int64_t lo = x.hi - FloorDiv(room, -a);
          if (lo > x.lo) {
            x.lo = lo;
            changed = true;
          }
        }
        if (x.lo > x.hi) return false;
        if (changed) {
          for (int other : rows_of_var_[var]) {
            if (!queued[other]) {
              queued[other] = 1;
              queue.push_back(other);
            }
          }
        }
      }
    }
    return true;
  }

  bool Dfs(const std::vector<Domain>& d) {
    ++stats_.nodes;
    int branch = -1;
    for (size_t i = 0; i < d.size(); ++i) {
      if (d[i].lo < d[i].hi) {
        branch = static_cast<int>(i);
        break;
      }
    }
    if (branch < 0) {
      Assignment values(d.size());
      for (size_t i = 0; i < d.size(); ++i) {
        values[i] = static_cast<double>(d[i].lo);
      }
      ++stats_.solutions;
      return visit_(values);
    }
    for (int64_t v = d[branch].lo; v <= d[branch].hi; ++v) {
      std::vector<Domain> child = d;
      child[branch] = {v, v};
      if (Propagate(child, branch) && !Dfs(child)) return false;
    }
    return true;
  }

  const std::function<bool(const Assignment&)>& visit_;
  std::vector<Domain> domains_;
  std::vector<Row> rows_;
  std::vector<std::vector<int>> rows_of_var_;
  SearchStats stats_;
};

}  // namespace

SearchStats EnumerateFeasible(
    const MipModel& model,
    const std::function<bool(const Assignment&)>& visit) {
  return Search(model, visit).Run();
}

}  // namespace graphbo::mip
