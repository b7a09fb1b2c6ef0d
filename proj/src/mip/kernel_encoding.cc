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

#include "graphbo/mip/kernel_encoding.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphbo/graph/graph_json.h"
#include "graphbo/mip/graph_encoding.h"
#include "graphbo/util/errors.h"

namespace graphbo::mip {
namespace {

using kernels::GraphFeatures;
using kernels::KernelForm;
using kernels::KernelParams;
using kernels::LabelVocabulary;

LabelVocabulary ModelVocabulary(const MipModel& model) {
  return {ModelNodeLabels(model), ModelEdgeLabels(model)};
}

// Variable standing for "node v carries label l"; node existence when the
// model has no node labels.
int NodeIndicator(const MipModel& model, int v, int l) {
  return ModelNodeLabels(model) > 0 ? model.VariableIndex(NodeLabelVar(v, l))
                                    : model.VariableIndex(AVar(v, v));
}

std::string PwlVar(const char* kind, int i, int j) {
  return std::string(kind) + "_" + (i < 0 ? "xx" : std::to_string(i)) + "_" +
         std::to_string(j);
}

KernelExpressions BuildExpressions(const MipModel& model,
                                   std::span<const GraphFeatures> data,
                                   const LabelVocabulary& vocab) {
  const int n = ModelSize(model);
  const int labels = std::max(vocab.num_node_labels, 1);
  const double nn = static_cast<double>(n);
  KernelExpressions e;
  for (const GraphFeatures& f : data) {
    const double ni = f.counts.num_nodes();
    LinearExpr kg;
    for (int s = 0; s <= n; ++s) {
      for (int l1 = 0; l1 < labels; ++l1) {
        for (int l2 = 0; l2 < labels; ++l2) {
          int c = 0;
          if (s == n) {
            c = f.counts.unreachable_count(l1, l2);
          } else if (s < f.counts.size()) {
            c = f.counts.count(s, l1, l2);
          }
          if (c == 0) continue;
          kg.terms.push_back({model.VariableIndex(PathCountVar(s, l1, l2)),
                              c / (nn * nn * ni * ni)});
        }
      }
    }
    e.structure.push_back(std::move(kg));
    LinearExpr kn;
    if (vocab.num_node_labels > 0) {
      for (int l = 0; l < labels; ++l) {
        const int c = f.counts.label_count(l);
        if (c == 0) continue;
        kn.terms.push_back({model.VariableIndex(LabelCountVar(l)),
                            c / (nn * ni * vocab.num_node_labels)});
      }
    }
    e.node.push_back(std::move(kn));
    LinearExpr ke;
    if (vocab.num_edge_labels > 0) {
      if (f.size != n) {
        throw InvalidArgumentError(
            "edge kernel needs data graphs of the model size");
      }
      const double scale = 2.0 / (nn * (nn - 1.0));
      int slot = 0;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++slot) {
          const int l = f.upper_edge_labels[slot];
          if (l == graph::kNoLabel) continue;
          ke.terms.push_back(
              {model.VariableIndex(EdgeLabelVar(u, v, l)), scale});
        }
      }
    }
    e.edge.push_back(std::move(ke));
  }
  for (int s = 0; s <= n; ++s) {
    for (int l1 = 0; l1 < labels; ++l1) {
      for (int l2 = 0; l2 < labels; ++l2) {
        for (int c = 1; c <= n * n; ++c) {
          e.self_structure.terms.push_back(
              {model.VariableIndex(PathCountValueVar(s, l1, l2, c)),
               static_cast<double>(c) * c / (nn * nn * nn * nn)});
        }
      }
    }
  }
  if (vocab.num_node_labels > 0) {
    for (int l = 0; l < labels; ++l) {
      for (int c = 1; c <= n; ++c) {
        e.self_node.terms.push_back(
            {model.VariableIndex(LabelCountValueVar(l, c)),
             static_cast<double>(c) * c / (nn * nn * vocab.num_node_labels)});
      }
    }
  }
  if (vocab.num_edge_labels > 0 && n >= 2) {
    const double scale = 2.0 / (nn * (nn - 1.0));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        e.self_edge.terms.push_back({model.VariableIndex(AVar(u, v)), scale});
      }
    }
  }
  return e;
}

// Largest value the expression can take given binaries in [0,1] and the
// pair-count total n^2 (resp. label total n).
double UpperBound(const LinearExpr& e, const MipModel& model) {
  double hi = 0.0;
  for (const Term& t : e.terms) {
    hi += std::max(t.coef, 0.0) * model.variable(t.var).upper;
  }
  return hi;
}

double StructureUpperBound(const GraphFeatures& f) {
  const auto raw = f.counts.raw();
  const int ni = f.counts.num_nodes();
  const int top = raw.empty() ? 0 : *std::max_element(raw.begin(), raw.end());
  return static_cast<double>(top) / (static_cast<double>(ni) * ni);
}

double NodeUpperBound(const GraphFeatures& f, int num_labels) {
  const auto counts = f.counts.label_counts();
  const int top = *std::max_element(counts.begin(), counts.end());
  return static_cast<double>(top) /
         (static_cast<double>(f.counts.num_nodes()) * num_labels);
}

PwlInfo MakePwl(double lower, double upper, int breakpoints, double variance) {
  PwlInfo p;
  p.lower = lower;
  p.upper = std::max(upper, lower);
  p.breakpoints = p.upper - p.lower < 1e-12 ? 1 : breakpoints;
  const double width =
      p.breakpoints > 1 ? (p.upper - p.lower) / (p.breakpoints - 1) : 0.0;
  p.max_rel_error = PwlRelativeError(width);
  p.max_abs_error = p.max_rel_error * variance * std::exp(p.upper);
  return p;
}

// value = variance * sum_j lam_j exp(x_j) with lam an SOS2 over the
// breakpoints x_j, selected by one binary per segment.
void AddPwl(MipModel& model, int index, int klin, int value,
            const PwlInfo& p, double variance) {
  std::vector<int> lam;
  for (int j = 0; j < p.breakpoints; ++j) {
    lam.push_back(model.AddContinuous(PwlVar("lam", index, j), 0.0, 1.0));
  }
  std::vector<int> z;
  for (int j = 0; j + 1 < p.breakpoints; ++j) {
    z.push_back(model.AddBinary(PwlVar("z", index, j)));
  }
  std::vector<Term> sum_lam, sum_z, arg, val;
  for (int j = 0; j < p.breakpoints; ++j) {
    sum_lam.push_back({lam[j], 1.0});
    arg.push_back({lam[j], PwlBreakpoint(p, j)});
    val.push_back({lam[j], variance * std::exp(PwlBreakpoint(p, j))});
  }
  model.AddConstraint(kTagPwl, sum_lam, Sense::kEqual, 1.0);
  if (!z.empty()) {
    for (int zj : z) sum_z.push_back({zj, 1.0});
    model.AddConstraint(kTagPwl, sum_z, Sense::kEqual, 1.0);
    for (int j = 0; j < p.breakpoints; ++j) {
      std::vector<Term> link{{lam[j], 1.0}};
      if (j > 0) link.push_back({z[j - 1], -1.0});
      if (j + 1 < p.breakpoints) link.push_back({z[j], -1.0});
      model.AddConstraint(kTagPwl, link, Sense::kLessEqual, 0.0);
    }
  }
  arg.push_back({klin, -1.0});
  model.AddConstraint(kTagPwl, arg, Sense::kEqual, 0.0);
  val.push_back({value, -1.0});
  model.AddConstraint(kTagPwl, val, Sense::kEqual, 0.0);
}

Json ParamsToJson(const KernelParams& p) {
  return {{"form", kernels::KernelFormName(p.form)},
          {"alpha", p.alpha},
          {"beta", p.beta},
          {"gamma", p.gamma},
          {"variance", p.variance}};
}

KernelParams ParamsFromJson(const Json& j) {
  KernelParams p;
  p.form = kernels::ParseKernelForm(j.at("form").get<std::string>());
  p.alpha = j.at("alpha").get<double>();
  p.beta = j.at("beta").get<double>();
  p.gamma = j.at("gamma").get<double>();
  p.variance = j.at("variance").get<double>();
  return p;
}

std::vector<Term> Scaled(const LinearExpr& e, double scale) {
  std::vector<Term> out;
  for (const Term& t : e.terms) out.push_back({t.var, t.coef * scale});
  return out;
}

std::vector<Term> LinearCombinationTerms(const KernelExpressions& e, int i,
                                         const KernelParams& p,
                                         const LabelVocabulary& vocab) {
  const bool self = i < 0;
  std::vector<Term> terms =
      Scaled(self ? e.self_structure : e.structure[i], p.alpha);
  if (vocab.num_node_labels > 0) {
    const auto node = Scaled(self ? e.self_node : e.node[i], p.beta);
    terms.insert(terms.end(), node.begin(), node.end());
  }
  if (vocab.num_edge_labels > 0) {
    const auto edge = Scaled(self ? e.self_edge : e.edge[i], p.gamma);
    terms.insert(terms.end(), edge.begin(), edge.end());
  }
  return terms;
}

void FinishErrors(KernelEncoding& k) {
  k.max_rel_error = 0.0;
  k.max_abs_error = 0.0;
  for (const PwlInfo& p : k.pwl) {
    k.max_rel_error = std::max(k.max_rel_error, p.max_rel_error);
    k.max_abs_error = std::max(k.max_abs_error, p.max_abs_error);
  }
}

}  // namespace

std::string DistIndicatorVar(int u, int v, int s) {
  return VarName("dind", {u, v, s});
}
std::string PathIndicatorVar(int u, int v, int s, int l1, int l2) {
  return VarName("p", {u, v, s, l1, l2});
}
std::string PathCountVar(int s, int l1, int l2) {
  return VarName("P", {s, l1, l2});
}
std::string PathCountValueVar(int s, int l1, int l2, int c) {
  return VarName("Pc", {s, l1, l2, c});
}
std::string LabelCountVar(int l) { return VarName("N", {l}); }
std::string LabelCountValueVar(int l, int c) { return VarName("Nc", {l, c}); }
std::string KernelDataVar(int i) { return VarName("kxX", {i}); }
std::string KernelLinearDataVar(int i) { return VarName("klin", {i}); }

double PwlRelativeError(double width) {
  if (width <= 0.0) return 0.0;
  // Error ratio at fraction t of a segment: (1-t) e^{-th} + t e^{(1-t)h} - 1,
  // unimodal in t; golden-section search for the maximum.
  const auto ratio = [width](double t) {
    return (1.0 - t) * std::exp(-t * width) +
           t * std::exp((1.0 - t) * width) - 1.0;
  };
  double a = 0.0, b = 1.0;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200; ++it) {
    const double c = b - g * (b - a);
    const double d = a + g * (b - a);
    if (ratio(c) > ratio(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  return ratio(0.5 * (a + b));
}

double PwlBreakpoint(const PwlInfo& p, int j) {
  if (p.breakpoints == 1) return p.lower;
  if (j == p.breakpoints - 1) return p.upper;
  return p.lower + (p.upper - p.lower) * j / (p.breakpoints - 1);
}

bool HasKernelTerms(const MipModel& model) {
  return model.metadata().contains("kernel");
}

KernelEncoding AddKernelTerms(MipModel& model,
                              std::span<const graph::LabeledGraph> data,
                              const KernelParams& params,
                              const KernelEncodingOptions& options) {
  if (HasKernelTerms(model)) {
    throw InvalidArgumentError("model already has kernel terms");
  }
  if (data.empty()) throw InvalidArgumentError("kernel terms need data");
  if (options.breakpoints < 2) {
    throw InvalidArgumentError("need at least 2 breakpoints");
  }
  const int n = ModelSize(model);
  if (model.metadata().at("n0").get<int>() != n) {
    throw InvalidArgumentError(
        "kernel terms need a fixed-size space (n0 = n)");
  }
  const LabelVocabulary vocab = ModelVocabulary(model);
  std::vector<GraphFeatures> features;
  for (const graph::LabeledGraph& g : data) {
    features.push_back(kernels::MakeFeatures(g, vocab));
  }
  const int labels = std::max(vocab.num_node_labels, 1);

  // Distance indicators.
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      std::vector<Term> one, value{{model.VariableIndex(DVar(u, v)), -1.0}};
      for (int s = 0; s <= n; ++s) {
        const int id = model.AddBinary(DistIndicatorVar(u, v, s));
        one.push_back({id, 1.0});
        value.push_back({id, static_cast<double>(s)});
      }
      model.AddConstraint(kTagKernel, one, Sense::kEqual, 1.0);
      model.AddConstraint(kTagKernel, value, Sense::kEqual, 0.0);
    }
  }
  // Path-type indicators and counts.
  std::vector<std::vector<Term>> count_terms((n + 1) * labels * labels);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      for (int s = 0; s <= n; ++s) {
        const int ds = model.VariableIndex(DistIndicatorVar(u, v, s));
        for (int l1 = 0; l1 < labels; ++l1) {
          for (int l2 = 0; l2 < labels; ++l2) {
            const int p = model.AddBinary(PathIndicatorVar(u, v, s, l1, l2));
            const int fu = NodeIndicator(model, u, l1);
            const int fv = NodeIndicator(model, v, l2);
            model.AddConstraint(kTagKernel,
                                {{p, 3.0}, {fu, -1.0}, {ds, -1.0}, {fv, -1.0}},
                                Sense::kLessEqual, 0.0);
            model.AddConstraint(kTagKernel,
                                {{p, 1.0}, {fu, -1.0}, {ds, -1.0}, {fv, -1.0}},
                                Sense::kGreaterEqual, -2.0);
            count_terms[(s * labels + l1) * labels + l2].push_back({p, 1.0});
          }
        }
      }
    }
  }
  for (int s = 0; s <= n; ++s) {
    for (int l1 = 0; l1 < labels; ++l1) {
      for (int l2 = 0; l2 < labels; ++l2) {
        const int P = model.AddInteger(PathCountVar(s, l1, l2), 0, n * n);
        std::vector<Term> sum = count_terms[(s * labels + l1) * labels + l2];
        sum.push_back({P, -1.0});
        model.AddConstraint(kTagKernel, sum, Sense::kEqual, 0.0);
        std::vector<Term> one, value{{P, -1.0}};
        for (int c = 0; c <= n * n; ++c) {
          const int id = model.AddBinary(PathCountValueVar(s, l1, l2, c));
          one.push_back({id, 1.0});
          value.push_back({id, static_cast<double>(c)});
        }
        model.AddConstraint(kTagKernel, one, Sense::kEqual, 1.0);
        model.AddConstraint(kTagKernel, value, Sense::kEqual, 0.0);
      }
    }
  }
  // Node-label counts.
  if (vocab.num_node_labels > 0) {
    for (int l = 0; l < labels; ++l) {
      const int N = model.AddInteger(LabelCountVar(l), 0, n);
      std::vector<Term> sum{{N, -1.0}};
      for (int v = 0; v < n; ++v) sum.push_back({NodeIndicator(model, v, l), 1});
      model.AddConstraint(kTagKernel, sum, Sense::kEqual, 0.0);
      std::vector<Term> one, value{{N, -1.0}};
      for (int c = 0; c <= n; ++c) {
        const int id = model.AddBinary(LabelCountValueVar(l, c));
        one.push_back({id, 1.0});
        value.push_back({id, static_cast<double>(c)});
      }
      model.AddConstraint(kTagKernel, one, Sense::kEqual, 1.0);
      model.AddConstraint(kTagKernel, value, Sense::kEqual, 0.0);
    }
  }

  KernelEncoding k;
  k.params = params;
  k.vocab = vocab;
  k.terms = BuildExpressions(model, features, vocab);
  const int t = static_cast<int>(features.size());
  const bool exp_form = params.form == KernelForm::kExponential;
  Json meta_pwl = Json::array();
  for (int i = -1; i < t; ++i) {
    // Range of the linear kernel value.
    double hi = 0.0;
    if (i >= 0) {
      hi = params.alpha * StructureUpperBound(features[i]);
      if (vocab.num_node_labels > 0) {
        hi += params.beta * NodeUpperBound(features[i], vocab.num_node_labels);
      }
      if (vocab.num_edge_labels > 0) {
        hi += params.gamma * UpperBound(k.terms.edge[i], model);
      }
    } else {
      hi = params.alpha;
      if (vocab.num_node_labels > 0) hi += params.beta / vocab.num_node_labels;
      if (vocab.num_edge_labels > 0) {
        hi += params.gamma * UpperBound(k.terms.self_edge, model);
      }
    }
    std::vector<Term> lin = LinearCombinationTerms(k.terms, i, params, vocab);
    const std::string value_name = i < 0 ? kKernelSelfVar : KernelDataVar(i);
    if (!exp_form) {
      const int value = model.AddContinuous(value_name, 0.0, hi);
      lin.push_back({value, -1.0});
      model.AddConstraint(kTagKernel, lin, Sense::kEqual, 0.0);
      (i < 0 ? k.self_var : k.data_vars.emplace_back()) = value;
      continue;
    }
    const PwlInfo p = MakePwl(0.0, hi, options.breakpoints, params.variance);
    const int klin = model.AddContinuous(
        i < 0 ? kKernelLinearSelfVar : KernelLinearDataVar(i), 0.0, hi);
    const int value = model.AddContinuous(value_name, params.variance,
                                          params.variance * std::exp(hi));
    lin.push_back({klin, -1.0});
    model.AddConstraint(kTagKernel, lin, Sense::kEqual, 0.0);
    AddPwl(model, i, klin, value, p, params.variance);
    (i < 0 ? k.self_var : k.data_vars.emplace_back()) = value;
    meta_pwl.push_back({{"lower", p.lower},
                        {"upper", p.upper},
                        {"breakpoints", p.breakpoints}});
    k.pwl.push_back(p);
  }
  // Stored data first, self term last.
  if (exp_form) {
    std::rotate(k.pwl.begin(), k.pwl.begin() + 1, k.pwl.end());
    std::rotate(meta_pwl.begin(), meta_pwl.begin() + 1, meta_pwl.end());
  }
  FinishErrors(k);

  Json data_keys = Json::array();
  for (const graph::LabeledGraph& g : data) {
    data_keys.push_back(ToHex(graph::CanonicalKey(g)));
  }
  model.metadata()["kernel"] = {{"params", ParamsToJson(params)},
                                {"breakpoints", options.breakpoints},
                                {"data", std::move(data_keys)},
                                {"pwl", std::move(meta_pwl)},
                                {"max_rel_error", k.max_rel_error},
                                {"max_abs_error", k.max_abs_error}};
  return k;
}

KernelEncoding KernelEncodingOf(const MipModel& model) {
  if (!HasKernelTerms(model)) {
    throw InvalidArgumentError("model has no kernel terms");
  }
  const Json& meta = model.metadata().at("kernel");
  KernelEncoding k;
  k.params = ParamsFromJson(meta.at("params"));
  k.vocab = ModelVocabulary(model);
  std::vector<GraphFeatures> features;
  for (const Json& key : meta.at("data")) {
    features.push_back(kernels::MakeFeatures(
        graph::GraphFromKey(FromHex(key.get<std::string>())), k.vocab));
  }
  k.terms = BuildExpressions(model, features, k.vocab);
  for (size_t i = 0; i < features.size(); ++i) {
    k.data_vars.push_back(model.VariableIndex(KernelDataVar(i)));
  }
  k.self_var = model.VariableIndex(kKernelSelfVar);
  for (const Json& p : meta.at("pwl")) {
    PwlInfo info = MakePwl(p.at("lower").get<double>(),
                           p.at("upper").get<double>(),
                           p.at("breakpoints").get<int>(), k.params.variance);
    info.breakpoints = p.at("breakpoints").get<int>();
    k.pwl.push_back(info);
  }
  FinishErrors(k);
  return k;
}

}  // namespace graphbo::mip
