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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

#include "gtest/gtest.h"
#include "graphbo/acq/candidate_pool.h"
#include "graphbo/acq/enumerative.h"
#include "graphbo/acq/external.h"
#include "graphbo/acq/two_size.h"
#include "graphbo/gp/gp.h"
#include "graphbo/graph/graph_space.h"
#include "graphbo/graph/labeled_graph.h"
#include "graphbo/mip/acquisition.h"
#include "graphbo/mip/assignment.h"
#include "graphbo/util/errors.h"

namespace graphbo::acq {
namespace {

using graph::GraphSpaceSpec;
using graph::LabeledGraph;

gp::GpState RandomGp(const GraphSpaceSpec& spec, int points, uint64_t seed) {
  const std::vector<LabeledGraph> all = graph::EnumerateSpace(spec);
  std::mt19937_64 rng(seed);
  std::vector<LabeledGraph> x;
  std::vector<double> y;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<size_t> order(all.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 0; i < points && i < static_cast<int>(all.size()); ++i) {
    x.push_back(all[order[i]]);
    y.push_back(unit(rng));
  }
  kernels::KernelParams params;
  params.alpha = 1.3;
  params.beta = 0.7;
  return gp::GpState::WithParams(x, y, kernels::VocabularyOf(spec), params,
                                 1e-4);
}

// Direct scan: score every graph, sort, cut.
std::vector<Candidate> Rescan(const GraphSpaceSpec& spec,
                              const gp::GpState& gp, int k,
                              const KeySet& exclude) {
  std::vector<Candidate> all;
  for (const LabeledGraph& g : graph::EnumerateSpace(spec)) {
    Candidate c = ScoreCandidate(gp, 3.0, g);
    if (!exclude.contains(c.key)) all.push_back(std::move(c));
  }
  std::sort(all.begin(), all.end(), CandidateLess);
  if (all.size() > static_cast<size_t>(k)) all.resize(k);
  return all;
}

// Batched and single-graph scoring agree to rounding, so positions are
// compared by score and keys may only differ within a tie.
void ExpectSamePool(const std::vector<Candidate>& a,
                    const std::vector<Candidate>& b) {
  constexpr double kTol = 1e-9;
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(a[i].lcb, b[i].lcb, kTol) << i;
    if (a[i].key == b[i].key) continue;
    const bool tied = std::any_of(b.begin(), b.end(), [&](const Candidate& c) {
      return c.key == a[i].key;
    }) || std::abs(a[i].lcb - b.back().lcb) < kTol;
    EXPECT_TRUE(tied) << i;
  }
}

TEST(ScoreTest, LcbOfPosterior) {
  const GraphSpaceSpec spec = graph::NasBench201Space();
  const gp::GpState gp = RandomGp(spec, 8, 1);
  const LabeledGraph g = graph::EnumerateSpace(spec)[77];
  const Candidate c = ScoreCandidate(gp, 3.0, g);
  const gp::Posterior p = gp.Predict(g);
  EXPECT_DOUBLE_EQ(c.mean, p.mean);
  EXPECT_DOUBLE_EQ(c.stddev, p.stddev());
  EXPECT_DOUBLE_EQ(c.lcb, p.mean - 3.0 * p.stddev());
  EXPECT_EQ(c.key, graph::CanonicalKey(g));
}

TEST(TopKTest, KeepsBestInOrder) {
  TopK top(3);
  EXPECT_EQ(top.threshold(), std::numeric_limits<double>::infinity());
  const double lcbs[] = {0.5, 0.1, 0.9, 0.3, 0.1, 0.7};
  for (int i = 0; i < 6; ++i) {
    Candidate c;
    c.lcb = lcbs[i];
    c.key = std::string(1, static_cast<char>('a' + i));
    top.Offer(std::move(c));
  }
  EXPECT_DOUBLE_EQ(top.threshold(), 0.3);
  const std::vector<Candidate> out = std::move(top).Take();
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].key, "b");
  EXPECT_EQ(out[1].key, "e");
  EXPECT_EQ(out[2].key, "d");
}

TEST(MergeTest, EqualsSortedUnion) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> key(0, 30);
  std::vector<CandidatePool> pools(3);
  std::map<std::string, double> best;
  for (CandidatePool& pool : pools) {
    pool.certificate = Certificate::kExhaustive;
    std::set<int> used;
    while (used.size() < 10) used.insert(key(rng));
    for (int k : used) {
      Candidate c;
      c.key = "k" + std::to_string(k);
      // Same key, same score: scores depend only on the graph.
      c.lcb = std::sin(k);
      best[c.key] = c.lcb;
      pool.candidates.push_back(c);
    }
    std::sort(pool.candidates.begin(), pool.candidates.end(), CandidateLess);
  }
  pools[1].certificate = Certificate::kExternalSolver;
  std::vector<std::pair<double, std::string>> expected;
  for (const auto& [k, v] : best) expected.emplace_back(v, k);
  std::sort(expected.begin(), expected.end());
  const CandidatePool merged = MergePools(pools, 7);
  ASSERT_EQ(merged.size(), 7u);
  for (size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(merged.candidates[i].key, expected[i].second);
  }
  EXPECT_EQ(merged.certificate, Certificate::kExternalSolver);
}

TEST(CertificateTest, Names) {
  EXPECT_EQ(CertificateName(Certificate::kExhaustive), "exhaustive");
  EXPECT_EQ(CertificateName(Certificate::kExternalSolver),
            "external-solver-claimed");
  EXPECT_EQ(CertificateName(Certificate::kHeuristic), "heuristic");
}

TEST(EnumerativeTest, MatchesFullRescan) {
  for (const GraphSpaceSpec& spec :
       {graph::NasBench201Space(), graph::NodeLabeledDagSpace(5, 4, 6),
        graph::DigraphSpace(1, 3)}) {
    const gp::GpState gp = RandomGp(spec, 10, 2);
    const CandidatePool pool = OptimizeEnumerative(spec, gp, 3.0, 5, {});
    EXPECT_EQ(pool.certificate, Certificate::kExhaustive);
    ExpectSamePool(pool.candidates, Rescan(spec, gp, 5, {}));
  }
}

TEST(EnumerativeTest, ScoreAllMatchesScoreCandidate) {
  const GraphSpaceSpec spec = graph::NasBench201Space();
  const gp::GpState gp = RandomGp(spec, 6, 3);
  const EnumeratedSpace space = EnumerateForScoring(spec);
  const std::vector<double> scores = ScoreAll(space, gp, 3.0);
  ASSERT_EQ(scores.size(), 15625u);
  for (size_t i = 0; i < space.size(); i += 97) {
    EXPECT_NEAR(scores[i], ScoreCandidate(gp, 3.0, space.graphs[i]).lcb,
                1e-12);
  }
}

TEST(EnumerativeTest, ExclusionSkipsEvaluated) {
  const GraphSpaceSpec spec = graph::NasBench201Space();
  const gp::GpState gp = RandomGp(spec, 10, 5);
  const CandidatePool first = OptimizeEnumerative(spec, gp, 3.0, 3, {});
  KeySet exclude;
  for (const Candidate& c : first.candidates) exclude.insert(c.key);
  const CandidatePool next = OptimizeEnumerative(spec, gp, 3.0, 3, exclude);
  for (const Candidate& c : next.candidates) {
    EXPECT_FALSE(exclude.contains(c.key));
  }
  ExpectSamePool(next.candidates, Rescan(spec, gp, 3, exclude));
}

TEST(EnumerativeTest, TinySpaces) {
  const GraphSpaceSpec spec = graph::DigraphSpace(1, 1);
  const gp::GpState gp = gp::GpState::WithParams(
      {LabeledGraph(1)}, {0.5}, kernels::LabelVocabulary{0, 0}, {}, 1e-6);
  const CandidatePool pool = OptimizeEnumerative(spec, gp, 3.0, 5, {});
  ASSERT_EQ(pool.size(), 1u);
  const CandidatePool none =
      OptimizeEnumerative(spec, gp, 3.0, 5, {pool.candidates[0].key});
  EXPECT_TRUE(none.empty());
  EXPECT_THROW(OptimizeEnumerative(graph::NasBench201Space(), gp, 3.0, 5, {},
                                   100),
               CapExceededError);
}

TEST(TwoSizeTest, SplitEqualsWholeSpace) {
  const GraphSpaceSpec whole = graph::DigraphSpace(1, 3);
  const gp::GpState gp = RandomGp(whole, 8, 6);
  const std::vector<GraphSpaceSpec> parts = {graph::DigraphSpace(1, 1),
                                             graph::DigraphSpace(2, 2),
                                             graph::DigraphSpace(3, 3)};
  const CandidatePool merged = OptimizeTwoSize(
      parts,
      [&](const GraphSpaceSpec& s) {
        return OptimizeEnumerative(s, gp, 3.0, 4, {});
      },
      4);
  ExpectSamePool(merged.candidates, Rescan(whole, gp, 4, {}));
  const CandidatePool twice = OptimizeTwoSize(
      std::vector{parts[2], parts[2]},
      [&](const GraphSpaceSpec& s) {
        return OptimizeEnumerative(s, gp, 3.0, 4, {});
      },
      4);
  ExpectSamePool(twice.candidates, Rescan(parts[2], gp, 4, {}));
}

TEST(TwoSizeTest, ScoresIgnoreUnusedSlots) {
  const GraphSpaceSpec whole = graph::DigraphSpace(1, 3);
  const gp::GpState gp = RandomGp(whole, 8, 9);
  for (const LabeledGraph& g : graph::EnumerateSpace(graph::DigraphSpace(2, 2))) {
    EXPECT_NEAR(ScoreCandidate(gp, 3.0, g).lcb,
                ScoreCandidate(gp, 3.0, graph::WithSlots(g, 3)).lcb, 1e-12);
  }
}

TEST(TwoSizeTest, ExclusionForSize) {
  LabeledGraph two(3, 2);
  two.AddEdge(1, 0);
  const LabeledGraph three(3);
  const KeySet exclude = {graph::CanonicalKey(two), graph::CanonicalKey(three)};
  const KeySet for_two = ExclusionForSize(exclude, 2);
  ASSERT_EQ(for_two.size(), 1u);
  EXPECT_EQ(graph::GraphFromKey(*for_two.begin()).size(), 2);
  EXPECT_EQ(graph::WithSlots(graph::GraphFromKey(*for_two.begin()), 3), two);
  EXPECT_EQ(ExclusionForSize(exclude, 3), exclude);
  EXPECT_TRUE(ExclusionForSize(exclude, 1).empty());
}

// External solver plumbing

TEST(ExternalTest, ExpandCommand) {
  EXPECT_EQ(ExpandCommand("solve {model} -o {solution} -t {timelimit} -k "
                          "{poolsize}",
                          "/tmp/a b.lp", "/tmp/s.pool", kDefaultTimeLimit, 5),
            "solve '/tmp/a b.lp' -o '/tmp/s.pool' -t 1800 -k 5");
  EXPECT_THROW(ExpandCommand("solve {model}", "m", "s", 1, 1),
               InvalidArgumentError);
  EXPECT_EQ(std::string(kSolverCommandEnv), "GRAPHBO_SOLVER_CMD");
}

TEST(ExternalTest, PoolRoundTrip) {
  const std::vector<mip::NamedAssignment> pool = {
      {{"A_0_0", 1}, {"z", -0.125}}, {{"A_0_0", 0}}};
  const std::string text = FormatSolutionPool(pool);
  EXPECT_EQ(ParseSolutionPool(text), pool);
  const std::vector<mip::NamedAssignment> parsed =
      ParseSolutionPool("# status=optimal\nx=1 y=0  # best\n\n# gap\ny=2.5\n");
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0].at("y"), 0.0);
  EXPECT_EQ(parsed[1].at("y"), 2.5);
  try {
    ParseSolutionPool("x=1\nx=1 bogus\n");
    FAIL() << "no error";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.record(), 1);
  }
  EXPECT_THROW(ParseSolutionPool("x=abc\n"), SchemaError);
}

TEST(ExternalTest, RunCommandCapturesOutput) {
  const CommandResult ok = RunCommand("echo hi; echo err 1>&2");
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_NE(ok.output.find("hi"), std::string::npos);
  EXPECT_NE(ok.output.find("err"), std::string::npos);
  EXPECT_EQ(RunCommand("exit 3").exit_code, 3);
}

class FakeSolverTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("graphbo_fake_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
    spec_ = graph::NasBench201Space();
    gp_ = RandomGp(spec_, 6, 7);
    config_.work_dir = (dir_ / "work").string();
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  // A solver that copies a prepared pool of the given graphs.
  void PreparePool(const std::vector<LabeledGraph>& graphs,
                   int corrupt_index = -1) {
    const mip::MipModel model =
        mip::BuildAcquisitionModel(spec_, *gp_, 3.0, config_.kernel);
    std::vector<mip::NamedAssignment> pool;
    for (size_t i = 0; i < graphs.size(); ++i) {
      mip::Assignment a = mip::AssignmentFromGraph(model, graphs[i]);
      if (static_cast<int>(i) == corrupt_index) {
        const int d = model.VariableIndex("d_0_3");
        a[d] = a[d] == 1 ? 2 : 1;
      }
      pool.push_back(mip::ToNamed(model, a));
    }
    const std::string path = (dir_ / "prepared.pool").string();
    std::ofstream(path) << FormatSolutionPool(pool);
    config_.command = "cp '" + path + "' {solution} # {model}";
  }

  std::filesystem::path dir_;
  GraphSpaceSpec spec_;
  std::optional<gp::GpState> gp_;
  ExternalSolverConfig config_;
};

TEST_F(FakeSolverTest, DecodesAndRescores) {
  const std::vector<LabeledGraph> all = graph::EnumerateSpace(spec_);
  const std::vector<LabeledGraph> chosen = {all[10], all[2000], all[9000]};
  PreparePool(chosen);
  const KeySet exclude = {graph::CanonicalKey(all[2001])};
  const CandidatePool pool =
      OptimizeExternal(spec_, *gp_, 3.0, 2, exclude, config_);
  EXPECT_EQ(pool.certificate, Certificate::kExternalSolver);
  ASSERT_EQ(pool.size(), 2u);
  std::vector<Candidate> expected;
  for (const LabeledGraph& g : chosen) {
    expected.push_back(ScoreCandidate(*gp_, 3.0, g));
  }
  std::sort(expected.begin(), expected.end(), CandidateLess);
  expected.resize(2);
  ExpectSamePool(pool.candidates, expected);
  EXPECT_TRUE(std::filesystem::exists(dir_ / "work" / "acquisition.lp"));
}

TEST_F(FakeSolverTest, RejectsExcludedGraph) {
  const LabeledGraph g = graph::EnumerateSpace(spec_)[42];
  PreparePool({g});
  EXPECT_THROW(OptimizeExternal(spec_, *gp_, 3.0, 1,
                                {graph::CanonicalKey(g)}, config_),
               SolverError);
}

TEST_F(FakeSolverTest, RejectsInfeasibleSolution) {
  PreparePool({graph::EnumerateSpace(spec_)[5]}, 0);
  EXPECT_THROW(OptimizeExternal(spec_, *gp_, 3.0, 1, {}, config_), SolverError);
}

TEST_F(FakeSolverTest, ReportsSolverFailures) {
  config_.command = "echo broken; exit 1 # {model} {solution}";
  try {
    OptimizeExternal(spec_, *gp_, 3.0, 1, {}, config_);
    FAIL() << "no error";
  } catch (const SolverError& e) {
    EXPECT_NE(e.output().find("broken"), std::string::npos);
  }
  config_.command = "true {model} {solution}";
  EXPECT_THROW(OptimizeExternal(spec_, *gp_, 3.0, 1, {}, config_), SolverError);
  config_.command = "printf '# infeasible\\n' > {solution} # {model}";
  EXPECT_THROW(OptimizeExternal(spec_, *gp_, 3.0, 1, {}, config_), SolverError);
  config_.command.clear();
  EXPECT_THROW(OptimizeExternal(spec_, *gp_, 3.0, 1, {}, config_),
               InvalidArgumentError);
}

// Runs only where a solver command is configured.
TEST(RealSolverTest, MatchesEnumeration) {
  const std::optional<std::string> command = SolverCommandFromEnv();
  if (!command) GTEST_SKIP() << kSolverCommandEnv << " not set";
  for (const GraphSpaceSpec& spec :
       {graph::DigraphSpace(2, 2), graph::EdgeLabeledDagSpace(3, 3, true)}) {
    const gp::GpState gp = RandomGp(spec, 3, 8);
    ExternalSolverConfig config;
    config.command = *command;
    config.time_limit = 60;
    const CandidatePool external = OptimizeExternal(spec, gp, 3.0, 2, {}, config);
    const CandidatePool exact = OptimizeEnumerative(spec, gp, 3.0, 2, {});
    ASSERT_FALSE(external.empty());
    EXPECT_NEAR(external.candidates[0].lcb, exact.candidates[0].lcb, 1e-4);
  }
}

}  // namespace
}  // namespace graphbo::acq
