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

#ifndef GRAPHBO_MIP_KERNEL_ENCODING_H_
#define GRAPHBO_MIP_KERNEL_ENCODING_H_

#include <span>
#include <vector>

#include "graphbo/graph/labeled_graph.h"
#include "graphbo/kernels/kernels.h"
#include "graphbo/mip/model.h"

namespace graphbo::mip {

inline constexpr char kTagKernel[] = "kernel";
inline constexpr char kTagPwl[] = "pwl";

struct KernelEncodingOptions {
  // Uniform breakpoints of the piecewise-linear exp, per kernel value.
  int breakpoints = 32;
};

// Affine expressions of the kernel terms between the model graph x and
// every data graph, and of x with itself.
struct KernelExpressions {
  std::vector<LinearExpr> structure, node, edge;
  LinearExpr self_structure, self_node, self_edge;
};

// Piecewise-linear exp over [lower, upper] of the linear kernel value.
struct PwlInfo {
  double lower = 0.0;
  double upper = 0.0;
  int breakpoints = 1;
  // Bounds on |pwl - exp| / exp and on |sigma_k^2 (pwl - exp)|.
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
};

struct KernelEncoding {
  kernels::KernelParams params;
  kernels::LabelVocabulary vocab;
  KernelExpressions terms;
  // Variables kxX_i and kxx holding the (approximated) kernel values.
  std::vector<int> data_vars;
  int self_var = -1;
  // Per data point, then the self term. Empty for the linear form.
  std::vector<PwlInfo> pwl;
  double max_rel_error = 0.0;
  double max_abs_error = 0.0;
};

// Adds distance indicators, path-type counts and their squares, label
// counts and the kernel values k(x, X^i), k(x, x) for a model of a
// fixed-size space (n0 = n). Throws LabelMismatchError when the data
// labels do not fit the model's vocabulary.
KernelEncoding AddKernelTerms(MipModel& model,
                              std::span<const graph::LabeledGraph> data,
                              const kernels::KernelParams& params,
                              const KernelEncodingOptions& options = {});

// Rebuilds the encoding description from a model's metadata.
KernelEncoding KernelEncodingOf(const MipModel& model);
bool HasKernelTerms(const MipModel& model);

// Breakpoint j of `p`, in [0, p.breakpoints).
double PwlBreakpoint(const PwlInfo& p, int j);

// Maximum relative error of linear interpolation of exp over an interval
// of the given width.
double PwlRelativeError(double width);

// Variable names of the kernel encoding.
std::string DistIndicatorVar(int u, int v, int s);
std::string PathIndicatorVar(int u, int v, int s, int l1, int l2);
std::string PathCountVar(int s, int l1, int l2);
std::string PathCountValueVar(int s, int l1, int l2, int c);
std::string LabelCountVar(int l);
std::string LabelCountValueVar(int l, int c);
std::string KernelDataVar(int i);
std::string KernelLinearDataVar(int i);
inline constexpr char kKernelSelfVar[] = "kxx";
inline constexpr char kKernelLinearSelfVar[] = "klinxx";

}  // namespace graphbo::mip

#endif  // GRAPHBO_MIP_KERNEL_ENCODING_H_
