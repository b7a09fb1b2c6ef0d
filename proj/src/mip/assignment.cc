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

#include "graphbo/mip/assignment.h"

#include <algorithm>
#include <cmath>

#include "graphbo/graph/graph_metrics.h"
#include "graphbo/mip/acquisition.h"
#include "graphbo/mip/graph_encoding.h"
#include "graphbo/mip/kernel_encoding.h"
#include "graphbo/util/errors.h"

namespace graphbo::mip {
namespace {

void Set(const MipModel& model, Assignment& values, const std::string& name,
         double value) {
  values[model.VariableIndex(name)] = value;
}

void CheckFits(const MipModel& model, const graph::LabeledGraph& g) {
  if (g.size() != ModelSize(model)) {
    throw InvalidArgumentError("graph size differs from the model size");
  }
  if (g.has_node_labels() != (ModelNodeLabels(model) > 0)) {
    throw InvalidArgumentError("node labels do not fit the model");
  }
  if (g.has_edge_labels() != (ModelEdgeLabels(model) > 0)) {
    throw InvalidArgumentError("edge labels do not fit the model");
  }
}

double Eval(const LinearExpr& e, const Assignment& values) {
  return Evaluate(e, values);
}

// Writes lam/z of the piecewise-linear exp for linear value x and returns
// the approximated kernel value.
double FillPwl(const MipModel& model, Assignment& values, int index,
               const PwlInfo& p, double variance, double x) {
  const std::string suffix = index < 0 ? "xx" : std::to_string(index);
  const auto lam = [&](int j) {
    return model.VariableIndex("lam_" + suffix + "_" + std::to_string(j));
  };
  const auto z = [&](int j) {
    return model.VariableIndex("z_" + suffix + "_" + std::to_string(j));
  };
  if (p.breakpoints == 1) {
    values[lam(0)] = 1.0;
    return variance * std::exp(PwlBreakpoint(p, 0));
  }
  const int segments = p.breakpoints - 1;
  const double pos = std::clamp((x - p.lower) / (p.upper - p.lower), 0.0,
                                1.0) * segments;
  const int seg = std::min(static_cast<int>(std::floor(pos)), segments - 1);
  const double a = PwlBreakpoint(p, seg);
  const double b = PwlBreakpoint(p, seg + 1);
  const double theta = std::clamp((x - a) / (b - a), 0.0, 1.0);
  for (int j = 0; j < p.breakpoints; ++j) values[lam(j)] = 0.0;
  for (int j = 0; j < segments; ++j) values[z(j)] = j == seg ? 1.0 : 0.0;
  values[lam(seg)] = 1.0 - theta;
  values[lam(seg + 1)] = theta;
  return variance * ((1.0 - theta) * std::exp(a) + theta * std::exp(b));
}

void FillKernel(const MipModel& model, const graph::LabeledGraph& g,
                const graph::GraphMetrics& m, Assignment& values) {
  const int n = ModelSize(model);
  const int node_labels = ModelNodeLabels(model);
  const int labels = std::max(node_labels, 1);
  const auto indicator = [&](int v, int l) -> double {
    if (!g.node_exists(v)) return 0.0;
    return node_labels > 0 ? (g.node_label(v) == l ? 1.0 : 0.0) : 1.0;
  };
  std::vector<int> count((n + 1) * labels * labels, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int duv = m.dist(u, v);
      for (int s = 0; s <= n; ++s) {
        Set(model, values, DistIndicatorVar(u, v, s), duv == s ? 1.0 : 0.0);
        for (int l1 = 0; l1 < labels; ++l1) {
          for (int l2 = 0; l2 < labels; ++l2) {
            const bool on =
                duv == s && indicator(u, l1) > 0 && indicator(v, l2) > 0;
            Set(model, values, PathIndicatorVar(u, v, s, l1, l2), on ? 1 : 0);
            if (on) ++count[(s * labels + l1) * labels + l2];
          }
        }
      }
    }
  }
  for (int s = 0; s <= n; ++s) {
    for (int l1 = 0; l1 < labels; ++l1) {
      for (int l2 = 0; l2 < labels; ++l2) {
        const int c = count[(s * labels + l1) * labels + l2];
        Set(model, values, PathCountVar(s, l1, l2), c);
        for (int k = 0; k <= n * n; ++k) {
          Set(model, values, PathCountValueVar(s, l1, l2, k), k == c ? 1 : 0);
        }
      }
    }
  }
  if (node_labels > 0) {
    for (int l = 0; l < labels; ++l) {
      int c = 0;
      for (int v = 0; v < n; ++v) c += indicator(v, l) > 0 ? 1 : 0;
      Set(model, values, LabelCountVar(l), c);
      for (int k = 0; k <= n; ++k) {
        Set(model, values, LabelCountValueVar(l, k), k == c ? 1 : 0);
      }
    }
  }
  const KernelEncoding k = KernelEncodingOf(model);
  const bool exp_form = k.params.form == kernels::KernelForm::kExponential;
  const int t = static_cast<int>(k.data_vars.size());
  for (int i = -1; i < t; ++i) {
    const bool self = i < 0;
    double lin = k.params.alpha *
                 Eval(self ? k.terms.self_structure : k.terms.structure[i],
                      values);
    if (k.vocab.num_node_labels > 0) {
      lin += k.params.beta *
             Eval(self ? k.terms.self_node : k.terms.node[i], values);
    }
    if (k.vocab.num_edge_labels > 0) {
      lin += k.params.gamma *
             Eval(self ? k.terms.self_edge : k.terms.edge[i], values);
    }
    const int value_var = self ? k.self_var : k.data_vars[i];
    if (!exp_form) {
      values[value_var] = lin;
      continue;
    }
    Set(model, values, self ? kKernelLinearSelfVar : KernelLinearDataVar(i),
        lin);
    const PwlInfo& p = k.pwl[self ? t : i];
    values[value_var] = FillPwl(model, values, i, p, k.params.variance, lin);
  }
}

void FillAcquisition(const MipModel& model, Assignment& values) {
  const Json& a = model.metadata().at("acquisition");
  const KernelEncoding k = KernelEncodingOf(model);
  const int t = static_cast<int>(k.data_vars.size());
  const double ys = a.at("y_scale").get<double>();
  const Json& w = a.at("weights");
  const Json& inv = a.at("inverse_gram");
  double mean = a.at("y_mean").get<double>();
  double quad = 0.0;
  for (int i = 0; i < t; ++i) {
    const double ki = values[k.data_vars[i]];
    mean += ys * w[i].get<double>() * ki;
    for (int j = 0; j < t; ++j) {
      quad += inv[i][j].get<double>() * ki * values[k.data_vars[j]];
    }
  }
  const double var = ys * ys * (values[k.self_var] - quad);
  Set(model, values, kMuVar, mean);
  Set(model, values, kSigmaVar, std::sqrt(std::max(var, 0.0)));
}

}  // namespace

std::vector<int> StructureBinaries(const MipModel& model) {
  std::vector<int> out;
  const int n = ModelSize(model);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) out.push_back(model.VariableIndex(AVar(u, v)));
  }
  const int node_labels = ModelNodeLabels(model);
  for (int v = 0; v < n && node_labels > 0; ++v) {
    for (int l = 0; l < node_labels; ++l) {
      out.push_back(model.VariableIndex(NodeLabelVar(v, l)));
    }
  }
  const int edge_labels = ModelEdgeLabels(model);
  for (int u = 0; u < n && edge_labels > 0; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int l = 0; l < edge_labels; ++l) {
        out.push_back(model.VariableIndex(EdgeLabelVar(u, v, l)));
      }
    }
  }
  return out;
}

Assignment StructureAssignment(const MipModel& model,
                               const graph::LabeledGraph& g) {
  CheckFits(model, g);
  Assignment values(model.num_variables(), 0.0);
  const int n = g.size();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const bool on = u == v ? g.node_exists(u) : g.has_edge(u, v);
      Set(model, values, AVar(u, v), on ? 1.0 : 0.0);
    }
  }
  const int node_labels = ModelNodeLabels(model);
  for (int v = 0; v < n && node_labels > 0; ++v) {
    for (int l = 0; l < node_labels; ++l) {
      Set(model, values, NodeLabelVar(v, l), g.node_label(v) == l ? 1 : 0);
    }
  }
  const int edge_labels = ModelEdgeLabels(model);
  const bool zero_op = ModelZeroOp(model);
  for (int u = 0; u < n && edge_labels > 0; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int label =
          g.has_edge(u, v) ? g.edge_label(u, v) : (zero_op ? 0 : -1);
      for (int l = 0; l < edge_labels; ++l) {
        Set(model, values, EdgeLabelVar(u, v, l), label == l ? 1 : 0);
      }
    }
  }
  return values;
}

Assignment AssignmentFromGraph(const MipModel& model,
                               const graph::LabeledGraph& g) {
  Assignment values = StructureAssignment(model, g);
  const int n = g.size();
  const graph::GraphMetrics m = graph::ComputeMetrics(g);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      Set(model, values, RVar(u, v), m.reach(u, v) ? 1.0 : 0.0);
      Set(model, values, DVar(u, v), m.dist(u, v));
      for (int w = 0; w < n; ++w) {
        Set(model, values, DeltaVar(u, v, w), m.on_path(u, v, w) ? 1.0 : 0.0);
      }
    }
  }
  if (HasKernelTerms(model)) FillKernel(model, g, m, values);
  if (model.metadata().contains("acquisition")) FillAcquisition(model, values);
  return values;
}

graph::LabeledGraph DecodeGraph(const MipModel& model,
                                const Assignment& values) {
  const int n = ModelSize(model);
  const auto on = [&](const std::string& name) {
    return values[model.VariableIndex(name)] > 0.5;
  };
  graph::LabeledGraph g(n, 0);
  for (int v = 0; v < n; ++v) g.set_node_exists(v, on(AVar(v, v)));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && on(AVar(u, v))) {
        if (!g.node_exists(u) || !g.node_exists(v)) {
          throw InvalidArgumentError("assignment has an edge at a missing node");
        }
        g.set_edge(u, v, true);
      }
    }
  }
  const int node_labels = ModelNodeLabels(model);
  if (node_labels > 0) {
    g.EnableNodeLabels();
    for (int v = 0; v < n; ++v) {
      if (!g.node_exists(v)) continue;
      for (int l = 0; l < node_labels; ++l) {
        if (on(NodeLabelVar(v, l))) g.set_node_label(v, l);
      }
    }
  }
  const int edge_labels = ModelEdgeLabels(model);
  if (edge_labels > 0) {
    g.EnableEdgeLabels();
    const int first = ModelZeroOp(model) ? 1 : 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) continue;
        for (int l = first; l < edge_labels; ++l) {
          if (on(EdgeLabelVar(u, v, l))) g.set_edge_label(u, v, l);
        }
      }
    }
  }
  g.Validate();
  return g;
}

NamedAssignment ToNamed(const MipModel& model, const Assignment& values) {
  NamedAssignment named;
  for (int i = 0; i < model.num_variables(); ++i) {
    named[model.variable(i).name] = values[i];
  }
  return named;
}

Assignment FromNamed(const MipModel& model, const NamedAssignment& named,
                     std::vector<std::string>* missing) {
  Assignment values(model.num_variables(), 0.0);
  for (int i = 0; i < model.num_variables(); ++i) {
    const auto it = named.find(model.variable(i).name);
    if (it == named.end()) {
      if (missing != nullptr) missing->push_back(model.variable(i).name);
    } else {
      values[i] = it->second;
    }
  }
  return values;
}

}  // namespace graphbo::mip
