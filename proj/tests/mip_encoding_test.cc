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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "graphbo/gp/gp.h"
#include "graphbo/graph/graph_metrics.h"
#include "graphbo/graph/graph_space.h"
#include "graphbo/graph/labeled_graph.h"
#include "graphbo/kernels/kernels.h"
#include "graphbo/mip/acquisition.h"
#include "graphbo/mip/assignment.h"
#include "graphbo/mip/checker.h"
#include "graphbo/mip/encoding_verifier.h"
#include "graphbo/mip/feasibility_search.h"
#include "graphbo/mip/graph_encoding.h"
#include "graphbo/mip/kernel_encoding.h"
#include "graphbo/mip/lp_reader.h"
#include "graphbo/mip/model.h"
#include "graphbo/mip/writer.h"
#include "graphbo/util/errors.h"
#include "test_util.h"

namespace graphbo::mip {
namespace {

using graph::GraphSpaceSpec;
using graph::LabeledGraph;

int64_t CountFeasible(const MipModel& model) {
  int64_t count = 0;
  EnumerateFeasible(model, [&](const Assignment&) {
    ++count;
    return true;
  });
  return count;
}

TEST(GraphEncodingTest, NamingRule) {
  EXPECT_EQ(DeltaVar(0, 1, 2), "delta_0_1_2");
  EXPECT_EQ(AVar(3, 1), "A_3_1");
  EXPECT_EQ(EdgeLabelVar(0, 2, 4), "F_0_2_4");
  EXPECT_EQ(TagOfName("path_reach_17"), "path_reach");
}

TEST(GraphEncodingTest, TwoNodeVariablesAndSolutions) {
  const MipModel model = BuildGraphSpace(2, 2);
  int a = 0, r = 0, d = 0, delta = 0;
  for (const Variable& v : model.variables()) {
    const std::string kind = v.name.substr(0, v.name.find('_'));
    a += kind == "A";
    r += kind == "r";
    d += kind == "d";
    delta += kind == "delta";
  }
  EXPECT_EQ(a, 4);
  EXPECT_EQ(r, 4);
  EXPECT_EQ(d, 4);
  EXPECT_EQ(delta, 8);
  EXPECT_EQ(model.num_variables(), 20);
  EXPECT_EQ(CountFeasible(model), 4);
}

TEST(GraphEncodingTest, SingleNodeHasOneSolution) {
  const MipModel model = BuildGraphSpace(1, 1);
  std::vector<Assignment> solutions;
  EnumerateFeasible(model, [&](const Assignment& a) {
    solutions.push_back(a);
    return true;
  });
  ASSERT_EQ(solutions.size(), 1u);
  const Assignment& s = solutions[0];
  EXPECT_EQ(s[model.VariableIndex("A_0_0")], 1);
  EXPECT_EQ(s[model.VariableIndex("r_0_0")], 1);
  EXPECT_EQ(s[model.VariableIndex("d_0_0")], 0);
  EXPECT_EQ(s[model.VariableIndex("delta_0_0_0")], 1);
}

TEST(GraphEncodingTest, CensusMatchesClosedForms) {
  for (int n = 1; n <= 6; ++n) {
    const std::map<std::string, int> census = BuildGraphSpace(n, n).Census();
    const auto count = [&](const char* tag) {
      const auto it = census.find(tag);
      return it == census.end() ? 0 : it->second;
    };
    const int pairs = n * (n - 1);
    EXPECT_EQ(count(kTagExistOrder), n) << n;
    EXPECT_EQ(count(kTagAbsentNode), 4 * pairs) << n;
    EXPECT_EQ(count(kTagSelfPair), 3 * n + pairs) << n;
    EXPECT_EQ(count(kTagEdgeInit), 3 * pairs) << n;
    EXPECT_EQ(count(kTagDistReach), 2 * pairs) << n;
    EXPECT_EQ(count(kTagPathReach), 2 * pairs * (n - 2)) << n;
    EXPECT_EQ(count(kTagPathBuild), 4 * pairs) << n;
    EXPECT_EQ(count(kTagTriangle), 2 * pairs * (n - 2)) << n;
    int total = 0;
    for (const auto& [tag, c] : census) total += c;
    EXPECT_EQ(total, n + 4 * pairs + 3 * n + pairs + 3 * pairs + 2 * pairs +
                         2 * pairs * (n - 2) + 4 * pairs +
                         2 * pairs * (n - 2))
        << n;
  }
}

TEST(GraphEncodingTest, BijectionUpToThreeNodes) {
  for (int n = 1; n <= 3; ++n) {
    for (int n0 = 1; n0 <= n; ++n0) {
      const BijectionResult r = VerifyBijection(n, n0);
      EXPECT_TRUE(r.passed) << n << " " << n0 << ": " << r.failure;
      EXPECT_EQ(r.solutions, r.graphs);
    }
  }
  EXPECT_EQ(VerifyBijection(3, 3).graphs, 64);
  EXPECT_EQ(VerifyBijection(2, 1).graphs, 5);
}

TEST(GraphEncodingTest, InducedAssignmentsMatchBfsAtThreeNodes) {
  const MipModel model = BuildGraphSpace(3, 3);
  graph::ForEachGraph(graph::DigraphSpace(3, 3), [&](const LabeledGraph& g) {
    const Assignment a = AssignmentFromGraph(model, g);
    EXPECT_TRUE(CheckAssignment(model, a).empty());
    const auto bfs = testing::BfsDistances(g);
    for (int u = 0; u < 3; ++u) {
      for (int v = 0; v < 3; ++v) {
        ASSERT_EQ(a[model.VariableIndex(DVar(u, v))],
                  bfs[u][v] < 0 ? 3 : bfs[u][v]);
        ASSERT_EQ(a[model.VariableIndex(RVar(u, v))], bfs[u][v] >= 0);
      }
    }
  });
}

TEST(GraphEncodingTest, SingleFlipsInfeasibleAtFourNodes) {
  const FlipResult r = VerifySingleFlips(4);
  EXPECT_TRUE(r.passed) << r.failure;
  EXPECT_EQ(r.graphs, 4096);
  EXPECT_GT(r.flips, 0);
}

TEST(GraphEncodingTest, DeltaFlipsReportViolations) {
  const MipModel model = BuildGraphSpace(3, 3);
  graph::ForEachGraph(graph::DigraphSpace(3, 3), [&](const LabeledGraph& g) {
    Assignment a = AssignmentFromGraph(model, g);
    for (int u = 0; u < 3; ++u) {
      for (int v = 0; v < 3; ++v) {
        for (int w = 0; w < 3; ++w) {
          const int x = model.VariableIndex(DeltaVar(u, v, w));
          a[x] = 1 - a[x];
          ASSERT_FALSE(CheckAssignment(model, a).empty());
          a[x] = 1 - a[x];
        }
      }
    }
  });
}

TEST(GraphEncodingTest, ZeroDistanceBetweenDistinctNodes) {
  const MipModel model = BuildGraphSpace(2, 2);
  LabeledGraph g(2);
  Assignment a = AssignmentFromGraph(model, g);
  a[model.VariableIndex(DVar(0, 1))] = 0;
  const std::vector<Violation> v = CheckAssignment(model, a);
  const bool edge_init = std::any_of(v.begin(), v.end(), [](const auto& x) {
    return x.constraint_tag == kTagEdgeInit;
  });
  EXPECT_TRUE(edge_init);
}

TEST(RestrictionTest, DagOnTwoNodes) {
  MipModel model = BuildGraphSpace(2, 2);
  AddRestriction(model, Restriction::kDag);
  EXPECT_EQ(CountFeasible(model), 3);
  EXPECT_THROW(AddRestriction(model, Restriction::kDag), InvalidArgumentError);
  EXPECT_THROW(AddRestriction(model, Restriction::kUndirected),
               ConflictingRestrictionsError);
}

TEST(RestrictionTest, LabelConflicts) {
  MipModel model = BuildGraphSpace(3, 3);
  AddRestriction(model, Restriction::kUndirected);
  EXPECT_THROW(AddEdgeLabels(model, graph::EdgeLabelSpec{}),
               ConflictingRestrictionsError);
  MipModel labeled = BuildGraphSpace(3, 3);
  AddNodeLabels(labeled, graph::NodeLabelSpec{3, 3});
  EXPECT_THROW(AddEdgeLabels(labeled, graph::EdgeLabelSpec{}),
               ConflictingRestrictionsError);
}

bool IsRestrictionTag(const std::string& tag) {
  static const std::set<std::string> tags = {
      kTagUndirected, kTagStrongConn, kTagDag,       kTagUpperTri,
      kTagSource,     kTagSink,       kTagNodeLabel, kTagEdgeBudget,
      kTagSourceSink, kTagEdgeLabel};
  return tags.contains(tag);
}

// All labelings of upper-triangular DAGs on n nodes, or all digraphs when
// the spec is unlabeled.
std::vector<LabeledGraph> Candidates(const GraphSpaceSpec& spec) {
  const int n = spec.max_nodes;
  if (!spec.node_labeled && !spec.edge_labeled) {
    return graph::EnumerateSpace(graph::DigraphSpace(n, n));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<LabeledGraph> out;
  for (int mask = 0; mask < (1 << pairs.size()); ++mask) {
    LabeledGraph base(n);
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) base.AddEdge(pairs[i].first, pairs[i].second);
    }
    if (spec.node_labeled) {
      const int labels = spec.num_node_labels();
      int total = 1;
      for (int v = 0; v < n; ++v) total *= labels;
      for (int code = 0; code < total; ++code) {
        LabeledGraph g = base;
        g.EnableNodeLabels();
        for (int v = 0, c = code; v < n; ++v, c /= labels) {
          g.set_node_label(v, c % labels);
        }
        out.push_back(g);
      }
    } else {
      const int labels = spec.num_edge_labels();
      const int choices = labels;
      const int edges = base.num_edges();
      int total = 1;
      for (int e = 0; e < edges; ++e) total *= choices;
      for (int code = 0; code < total; ++code) {
        LabeledGraph g = base;
        g.EnableEdgeLabels();
        int c = code;
        for (const auto& [u, v] : pairs) {
          if (!g.has_edge(u, v)) continue;
          g.set_edge_label(u, v, c % choices);
          c /= choices;
        }
        out.push_back(g);
      }
    }
  }
  return out;
}

class RestrictedSpaceTest : public ::testing::TestWithParam<GraphSpaceSpec> {};

TEST_P(RestrictedSpaceTest, FeasibleSetEqualsSpace) {
  const GraphSpaceSpec spec = GetParam();
  const MipModel model = BuildSpaceModel(spec);
  std::set<std::string> members;
  for (const LabeledGraph& g : graph::EnumerateSpace(spec)) {
    members.insert(graph::CanonicalKey(g));
  }
  std::set<std::string> solutions;
  EnumerateFeasible(model, [&](const Assignment& a) {
    const LabeledGraph g = DecodeGraph(model, a);
    EXPECT_EQ(AssignmentFromGraph(model, g), a);
    EXPECT_TRUE(solutions.insert(graph::CanonicalKey(g)).second);
    return true;
  });
  EXPECT_EQ(solutions, members);
}

TEST_P(RestrictedSpaceTest, RestrictionSoundness) {
  const GraphSpaceSpec spec = GetParam();
  const MipModel model = BuildSpaceModel(spec);
  int inside = 0, outside = 0;
  for (const LabeledGraph& g : Candidates(spec)) {
    const std::vector<Violation> v =
        CheckAssignment(model, AssignmentFromGraph(model, g));
    if (graph::InSpace(spec, g)) {
      ++inside;
      ASSERT_TRUE(v.empty()) << v[0].constraint_name;
    } else {
      ++outside;
      ASSERT_TRUE(std::any_of(v.begin(), v.end(), [](const Violation& x) {
        return IsRestrictionTag(x.constraint_tag);
      }));
    }
  }
  EXPECT_GT(inside, 0);
  EXPECT_GT(outside, 0);
}

GraphSpaceSpec Restricted(int n, bool undirected, bool strong, bool dag) {
  GraphSpaceSpec s = graph::DigraphSpace(n, n);
  s.undirected = undirected;
  s.strongly_connected = strong;
  s.dag = dag;
  return s;
}

INSTANTIATE_TEST_SUITE_P(
    Spaces, RestrictedSpaceTest,
    ::testing::Values(Restricted(3, false, false, true),
                      Restricted(3, true, false, false),
                      Restricted(3, false, true, false),
                      Restricted(3, true, true, false),
                      graph::EdgeLabeledDagSpace(3, 2, false),
                      graph::EdgeLabeledDagSpace(3, 3, true),
                      graph::EdgeLabeledDagSpace(4, 2, false),
                      graph::NodeLabeledDagSpace(4, 4, 4),
                      graph::NodeLabeledDagSpace(3, 3, 2)));

TEST(RestrictionTest, CellPresetsBuild) {
  const MipModel nb101 = BuildSpaceModel(graph::NasBench101Space());
  EXPECT_EQ(ModelSize(nb101), 7);
  EXPECT_EQ(ModelNodeLabels(nb101), 5);
  EXPECT_EQ(nb101.metadata()["max_edges"], 9);
  const MipModel nb201 = BuildSpaceModel(graph::EdgeLabeledDagSpace(4, 4, false));
  EXPECT_EQ(ModelEdgeLabels(nb201), 4);
  EXPECT_FALSE(ModelZeroOp(nb201));
}

// Kernel terms

std::vector<LabeledGraph> Sample(const GraphSpaceSpec& spec, int count,
                                 uint64_t seed) {
  const std::vector<LabeledGraph> all = graph::EnumerateSpace(spec);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  std::vector<LabeledGraph> out;
  for (int i = 0; i < count; ++i) out.push_back(all[pick(rng)]);
  return out;
}

void ExpectKernelFidelity(const GraphSpaceSpec& spec,
                          kernels::KernelForm form) {
  const std::vector<LabeledGraph> data = Sample(spec, 6, 1);
  kernels::KernelParams params;
  params.form = form;
  params.alpha = 0.8;
  params.beta = 1.3;
  params.gamma = 0.6;
  params.variance = 1.2;
  MipModel model = BuildSpaceModel(spec);
  const KernelEncoding enc = AddKernelTerms(model, data, params);
  EXPECT_EQ(KernelEncodingOf(model).data_vars, enc.data_vars);
  const kernels::LabelVocabulary vocab = kernels::VocabularyOf(spec);
  std::vector<kernels::GraphFeatures> data_features;
  for (const LabeledGraph& g : data) {
    data_features.push_back(kernels::MakeFeatures(g, vocab));
  }
  for (const LabeledGraph& x : Sample(spec, 50, 2)) {
    const Assignment a = AssignmentFromGraph(model, x);
    ASSERT_TRUE(CheckAssignment(model, a).empty());
    const kernels::GraphFeatures fx = kernels::MakeFeatures(x, vocab);
    for (size_t i = 0; i < data.size(); ++i) {
      const kernels::KernelTerms t =
          kernels::ComputeKernelTerms(fx, data_features[i], vocab);
      ASSERT_NEAR(Evaluate(enc.terms.structure[i], a), t.structure, 1e-9);
      ASSERT_NEAR(Evaluate(enc.terms.node[i], a), t.node, 1e-9);
      ASSERT_NEAR(Evaluate(enc.terms.edge[i], a), t.edge, 1e-9);
      const double k = kernels::CombineTerms(t, params, vocab);
      const double tol = form == kernels::KernelForm::kLinear
                             ? 1e-9
                             : enc.pwl[i].max_abs_error + 1e-12;
      ASSERT_NEAR(a[enc.data_vars[i]], k, tol);
    }
    const kernels::KernelTerms self = kernels::ComputeKernelTerms(fx, fx, vocab);
    ASSERT_NEAR(Evaluate(enc.terms.self_structure, a), self.structure, 1e-9);
    ASSERT_NEAR(Evaluate(enc.terms.self_node, a), self.node, 1e-9);
    ASSERT_NEAR(Evaluate(enc.terms.self_edge, a), self.edge, 1e-9);
    const double kxx = kernels::CombineTerms(self, params, vocab);
    const double tol = form == kernels::KernelForm::kLinear
                           ? 1e-9
                           : enc.pwl.back().max_abs_error + 1e-12;
    ASSERT_NEAR(a[enc.self_var], kxx, tol);
  }
}

TEST(KernelEncodingTest, LinearFidelityNodeLabeled) {
  ExpectKernelFidelity(graph::NodeLabeledDagSpace(5, 4, 6),
                       kernels::KernelForm::kLinear);
}

TEST(KernelEncodingTest, LinearFidelityEdgeLabeled) {
  ExpectKernelFidelity(graph::NasBench201Space(), kernels::KernelForm::kLinear);
  ExpectKernelFidelity(graph::EdgeLabeledDagSpace(4, 4, false),
                       kernels::KernelForm::kLinear);
}

TEST(KernelEncodingTest, LinearFidelityDigraphs) {
  ExpectKernelFidelity(graph::DigraphSpace(3, 3), kernels::KernelForm::kLinear);
}

TEST(KernelEncodingTest, ExponentialWithinReportedBound) {
  ExpectKernelFidelity(graph::NodeLabeledDagSpace(5, 4, 6),
                       kernels::KernelForm::kExponential);
  ExpectKernelFidelity(graph::NasBench201Space(),
                       kernels::KernelForm::kExponential);
}

TEST(KernelEncodingTest, DefaultPwlBoundBelowOnePermille) {
  for (const GraphSpaceSpec& spec :
       {graph::NasBench201Space(), graph::NodeLabeledDagSpace(5, 4, 6)}) {
    MipModel model = BuildSpaceModel(spec);
    kernels::KernelParams params;
    params.form = kernels::KernelForm::kExponential;
    const KernelEncoding enc =
        AddKernelTerms(model, Sample(spec, 4, 3), params);
    EXPECT_LE(enc.max_rel_error, 1e-3);
    ASSERT_EQ(enc.pwl.size(), 5u);
    for (const PwlInfo& p : enc.pwl) {
      EXPECT_EQ(p.breakpoints, 32);
      EXPECT_LE(p.max_rel_error, enc.max_rel_error);
    }
  }
}

TEST(KernelEncodingTest, PwlErrorMatchesSampledMaximum) {
  for (double width : {0.01, 0.1, 0.5, 2.0}) {
    double worst = 0.0;
    for (int i = 0; i <= 20000; ++i) {
      const double t = i / 20000.0;
      const double pwl = (1 - t) * 1.0 + t * std::exp(width);
      worst = std::max(worst, std::abs(pwl / std::exp(t * width) - 1.0));
    }
    EXPECT_NEAR(PwlRelativeError(width), worst, 1e-7 * (1 + worst));
  }
}

TEST(KernelEncodingTest, DenseSelfEdgeKernelIsOne) {
  const GraphSpaceSpec spec = graph::NasBench201Space();
  MipModel model = BuildSpaceModel(spec);
  LabeledGraph dense(4);
  dense.EnableEdgeLabels();
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) dense.AddEdge(u, v, 2);
  }
  const KernelEncoding enc = AddKernelTerms(model, std::vector{dense}, {});
  const Assignment a = AssignmentFromGraph(model, dense);
  EXPECT_DOUBLE_EQ(Evaluate(enc.terms.self_edge, a), 1.0);
}

TEST(KernelEncodingTest, SquaredCountChanneling) {
  const GraphSpaceSpec spec = graph::NodeLabeledDagSpace(4, 3, 4);
  MipModel model = BuildSpaceModel(spec);
  const std::vector<LabeledGraph> members = graph::EnumerateSpace(spec);
  AddKernelTerms(model, std::vector{members[0]}, {});
  const int n = 4, cmax = n * n;
  for (const LabeledGraph& g : members) {
    const Assignment a = AssignmentFromGraph(model, g);
    for (int s = 0; s <= n; ++s) {
      for (int l1 = 0; l1 < 3; ++l1) {
        for (int l2 = 0; l2 < 3; ++l2) {
          int active = 0;
          double value = 0.0;
          for (int c = 0; c <= cmax; ++c) {
            const double x =
                a[model.VariableIndex(PathCountValueVar(s, l1, l2, c))];
            active += x > 0.5;
            value += c * x;
          }
          ASSERT_EQ(active, 1);
          ASSERT_EQ(value, a[model.VariableIndex(PathCountVar(s, l1, l2))]);
        }
      }
    }
  }
}

TEST(KernelEncodingTest, RejectsMismatchedData) {
  MipModel model = BuildSpaceModel(graph::NasBench201Space());
  LabeledGraph unlabeled(4);
  EXPECT_THROW(AddKernelTerms(model, std::vector{unlabeled}, {}), LabelMismatchError);
  MipModel variable = BuildGraphSpace(1, 3);
  EXPECT_THROW(AddKernelTerms(variable, std::vector{LabeledGraph(3)}, {}),
               InvalidArgumentError);
}

// Acquisition

TEST(AcquisitionTest, ObjectiveEqualsPosteriorLcbOnTwoNodes) {
  const GraphSpaceSpec spec = graph::DigraphSpace(2, 2);
  const std::vector<LabeledGraph> all = graph::EnumerateSpace(spec);
  const kernels::LabelVocabulary vocab{0, 0};
  for (kernels::KernelForm form :
       {kernels::KernelForm::kLinear, kernels::KernelForm::kExponential}) {
    kernels::KernelParams params;
    params.form = form;
    params.alpha = 1.7;
    params.variance = 0.9;
    const gp::GpState gp = gp::GpState::WithParams(
        {all[0], all[3]}, {0.2, 0.9}, vocab, params, 1e-3);
    const MipModel model = BuildAcquisitionModel(spec, gp, kDefaultBetaSqrt);
    const KernelEncoding enc = KernelEncodingOf(model);
    for (const LabeledGraph& g : all) {
      const Assignment a = AssignmentFromGraph(model, g);
      EXPECT_TRUE(CheckAssignment(model, a).empty());
      const gp::Posterior p = gp.Predict(g);
      const double lcb = p.mean - kDefaultBetaSqrt * p.stddev();
      const double tol = form == kernels::KernelForm::kLinear
                             ? 1e-6
                             : 1e-6 + 50 * enc.max_abs_error;
      EXPECT_NEAR(Evaluate(model.objective(), a), lcb, tol);
    }
  }
}

TEST(AcquisitionTest, SinglePointInterpolation) {
  const GraphSpaceSpec spec = graph::NasBench201Space();
  const LabeledGraph x = Sample(spec, 1, 5)[0];
  const gp::GpState gp = gp::GpState::WithParams(
      {x}, {0.42}, kernels::VocabularyOf(spec), {}, 0.0);
  const MipModel model = BuildAcquisitionModel(spec, gp, kDefaultBetaSqrt);
  const Assignment a = AssignmentFromGraph(model, x);
  EXPECT_TRUE(CheckAssignment(model, a).empty());
  EXPECT_NEAR(a[model.VariableIndex(kMuVar)], 0.42, 1e-6);
  EXPECT_LE(a[model.VariableIndex(kSigmaVar)], 1e-3);
  EXPECT_EQ(model.metadata()["acquisition"]["beta_sqrt"], 3.0);
}

TEST(AcquisitionTest, SigmaAboveBoundIsInfeasible) {
  const GraphSpaceSpec spec = graph::NasBench201Space();
  const std::vector<LabeledGraph> data = Sample(spec, 3, 6);
  const gp::GpState gp = gp::GpState::WithParams(
      data, {0.1, 0.5, 0.3}, kernels::VocabularyOf(spec), {}, 1e-4);
  const MipModel model = BuildAcquisitionModel(spec, gp, kDefaultBetaSqrt);
  const LabeledGraph x = Sample(spec, 1, 7)[0];
  Assignment a = AssignmentFromGraph(model, x);
  a[model.VariableIndex(kSigmaVar)] += 1e-2;
  const std::vector<Violation> v = CheckAssignment(model, a);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].constraint_tag, kTagPosterior);
}

TEST(AcquisitionTest, NoGoodCutExcludesExactlyOneGraph) {
  const GraphSpaceSpec spec = graph::EdgeLabeledDagSpace(3, 3, true);
  const std::vector<LabeledGraph> all = graph::EnumerateSpace(spec);
  MipModel model = BuildSpaceModel(spec);
  EXPECT_EQ(AddNoGoodCuts(model, std::vector{all[4], LabeledGraph(2)}), 1);
  int excluded = 0;
  for (const LabeledGraph& g : all) {
    const bool ok = CheckAssignment(model, AssignmentFromGraph(model, g)).empty();
    if (!ok) {
      ++excluded;
      EXPECT_EQ(g, all[4]);
    }
  }
  EXPECT_EQ(excluded, 1);
  EXPECT_EQ(CountFeasible(model), static_cast<int64_t>(all.size()) - 1);
}

// Checker

TEST(CheckerTest, SlackConventionAndJson) {
  MipModel m;
  const int x = m.AddInteger("x", 0, 5);
  const int y = m.AddContinuous("y", 0, 1);
  m.AddConstraint("le", {{x, 1}}, Sense::kLessEqual, 2);
  m.AddConstraint("ge", {{x, 1}}, Sense::kGreaterEqual, 4);
  m.AddConstraint("eq", {{y, 1}}, Sense::kEqual, 0.5);
  const std::vector<Violation> v = CheckAssignment(m, Assignment{3, 0.5 + 1e-7});
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].constraint_tag, "le");
  EXPECT_EQ(v[0].slack, -1);
  EXPECT_EQ(v[1].constraint_tag, "ge");
  EXPECT_EQ(v[1].slack, -1);
  const Json j = ViolationToJson(v[0]);
  EXPECT_EQ(j["constraint_tag"], "le");
  EXPECT_EQ(j["sense"], "<=");
  EXPECT_EQ(j["lhs"], 3.0);
  EXPECT_EQ(j["rhs"], 2.0);
  EXPECT_EQ(j["constraint"], "le_0");
  // The equality is continuous and within tolerance; a larger miss is not.
  const std::vector<Violation> w = CheckAssignment(m, Assignment{3, 0.6});
  EXPECT_EQ(w.back().constraint_tag, "eq");
  EXPECT_NEAR(w.back().slack, -0.1, 1e-12);
}

TEST(CheckerTest, DomainAndMissing) {
  const MipModel model = BuildGraphSpace(1, 1);
  NamedAssignment named = {{"A_0_0", 1}, {"r_0_0", 1}, {"d_0_0", 0.5}};
  const std::vector<Violation> v = CheckAssignment(model, named);
  const auto has = [&](const char* tag, const char* name) {
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) {
      return x.constraint_tag == tag && x.constraint_name == name;
    });
  };
  EXPECT_TRUE(has(kTagDomain, "d_0_0"));
  EXPECT_TRUE(has(kTagMissing, "delta_0_0_0"));
}

// Writers

TEST(WriterTest, LpTextOfSmallModel) {
  MipModel m;
  const int x = m.AddBinary("x");
  const int y = m.AddInteger("y", 0, 3);
  const int z = m.AddContinuous("z", -1.5, 2.5);
  m.AddConstraint("c", {{x, 1}, {y, -2}}, Sense::kLessEqual, 1);
  m.AddConstraint("q", {{z, 1}}, Sense::kLessEqual, 0, {{x, x, 1}, {x, y, 3}});
  m.SetObjective({{{z, 1}, {x, -0.5}}, 0});
  EXPECT_EQ(WriteLp(m),
            "\\ graphbo model\n"
            "Minimize\n"
            "   obj: 1 z - 0.5 x\n"
            "Subject To\n"
            "   c_0: 1 x - 2 y <= 1\n"
            "   q_0: 1 z + [ 1 x ^2 + 3 x * y ] <= 0\n"
            "Bounds\n"
            "   0 <= x <= 1\n"
            "   0 <= y <= 3\n"
            "   -1.5 <= z <= 2.5\n"
            "Generals\n"
            "   y\n"
            "Binaries\n"
            "   x\n"
            "End\n");
  const std::string mps = WriteMps(m);
  EXPECT_NE(mps.find("'INTORG'"), std::string::npos);
  EXPECT_NE(mps.find("QCMATRIX q_0"), std::string::npos);
  EXPECT_NE(mps.find(" x y 1.5\n"), std::string::npos);
  EXPECT_NE(mps.find(" BV BND x\n"), std::string::npos);
}

void ExpectSameModel(const MipModel& a, const MipModel& b) {
  ASSERT_EQ(a.num_variables(), b.num_variables());
  for (int i = 0; i < a.num_variables(); ++i) {
    EXPECT_EQ(a.variable(i).name, b.variable(i).name);
    EXPECT_EQ(a.variable(i).type, b.variable(i).type);
    EXPECT_EQ(a.variable(i).lower, b.variable(i).lower);
    EXPECT_EQ(a.variable(i).upper, b.variable(i).upper);
  }
  ASSERT_EQ(a.num_constraints(), b.num_constraints());
  EXPECT_EQ(a.Census(), b.Census());
}

TEST(WriterTest, SingleNodeRoundTrip) {
  const MipModel model = BuildGraphSpace(1, 1);
  const MipModel back = ReadLp(WriteLp(model));
  ExpectSameModel(model, back);
  const Assignment a = AssignmentFromGraph(model, LabeledGraph(1));
  EXPECT_TRUE(CheckAssignment(back, a).empty());
  Assignment bad = a;
  bad[model.VariableIndex("d_0_0")] = 1;
  EXPECT_EQ(CheckAssignment(back, bad).size(), CheckAssignment(model, bad).size());
}

TEST(WriterTest, AcquisitionRoundTripIsStable) {
  const GraphSpaceSpec spec = graph::NasBench201Space();
  const std::vector<LabeledGraph> data = Sample(spec, 4, 8);
  kernels::KernelParams params;
  params.form = kernels::KernelForm::kExponential;
  const gp::GpState gp = gp::GpState::WithParams(
      data, {0.3, 0.1, 0.7, 0.2}, kernels::VocabularyOf(spec), params, 1e-3);
  MipModel model = BuildAcquisitionModel(spec, gp, kDefaultBetaSqrt);
  AddNoGoodCuts(model, data);
  const std::string text = WriteLp(model);
  EXPECT_EQ(text, WriteLp(model));
  const MipModel back = ReadLp(text);
  ExpectSameModel(model, back);
  EXPECT_EQ(WriteLp(back), text);
  for (const LabeledGraph& x : Sample(spec, 10, 9)) {
    const Assignment a = AssignmentFromGraph(model, x);
    for (int c = 0; c < model.num_constraints(); ++c) {
      EXPECT_NEAR(Activity(model.constraint(c), a),
                  Activity(back.constraint(c), a), 1e-9);
    }
    EXPECT_NEAR(Evaluate(model.objective(), a), Evaluate(back.objective(), a),
                1e-12);
  }
}

TEST(WriterTest, FormatSelection) {
  EXPECT_EQ(FormatOfPath("a/b.lp"), FileFormat::kLp);
  EXPECT_EQ(FormatOfPath("m.mps"), FileFormat::kMps);
  EXPECT_THROW(FormatOfPath("m.txt"), InvalidArgumentError);
  EXPECT_EQ(ParseFileFormat("mps"), FileFormat::kMps);
}

TEST(LpReaderTest, ReportsLineOfError) {
  try {
    ReadLp("Minimize\n obj: x\nSubject To\n c_0: x <=\nEnd\n");
    FAIL() << "no error";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.record(), 4);
  }
}

}  // namespace
}  // namespace graphbo::mip
