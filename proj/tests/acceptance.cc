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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "graphbo/acq/candidate_pool.h"
#include "graphbo/acq/enumerative.h"
#include "graphbo/acq/external.h"
#include "graphbo/bo/run_bo.h"
#include "graphbo/bo/synth.h"
#include "graphbo/gp/gp.h"
#include "graphbo/graph/graph_metrics.h"
#include "graphbo/graph/graph_space.h"
#include "graphbo/kernels/kernels.h"
#include "graphbo/mip/acquisition.h"
#include "graphbo/mip/assignment.h"
#include "graphbo/mip/checker.h"
#include "graphbo/mip/encoding_verifier.h"
#include "graphbo/mip/graph_encoding.h"
#include "graphbo/mip/kernel_encoding.h"
#include "graphbo/util/json_io.h"
#include "kernel_oracles.h"
#include "test_util.h"

namespace graphbo {
namespace {

using graph::GraphSpaceSpec;
using graph::LabeledGraph;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Members of a space by rejection sampling over label and edge choices.
LabeledGraph SampleMember(const GraphSpaceSpec& spec, std::mt19937_64& rng) {
  const int n = spec.max_nodes;
  for (;;) {
    LabeledGraph g = spec.node_labeled
                         ? testing::RandomNodeLabeled(
                               n, spec.node_labeled->num_labels, 0.4, rng)
                         : testing::RandomEdgeLabeled(
                               n, spec.edge_labeled->num_labels, 0.7, rng,
                               spec.edge_labeled->zero_op ? 1 : 0);
    if (spec.node_labeled) {
      g.set_node_label(0, 0);
      g.set_node_label(n - 1, spec.node_labeled->num_labels - 1);
      std::uniform_int_distribution<int> mid(
          1, spec.node_labeled->num_labels - 2);
      for (int v = 1; v + 1 < n; ++v) g.set_node_label(v, mid(rng));
    }
    if (graph::InSpace(spec, g)) return g;
  }
}

Outcome Bijection() {
  std::string detail;
  bool pass = true;
  for (int n = 1; n <= 3; ++n) {
    const mip::BijectionResult r = mip::VerifyBijection(n, n);
    const bool ok = r.passed && (n < 3 || r.seconds <= 600);
    pass = pass && ok;
    detail += Format("n=%d %lld graphs/%lld solutions %.1fs%s; ", n,
                     static_cast<long long>(r.graphs),
                     static_cast<long long>(r.solutions), r.seconds,
                     ok ? "" : (" " + r.failure).c_str());
  }
  for (int n = 4; n <= 5; ++n) {
    const mip::FlipResult r = mip::VerifySingleFlips(n);
    const bool ok = r.passed && r.seconds <= 1200;
    pass = pass && ok;
    detail += Format("n=%d %lld graphs, %lld flips all infeasible %.1fs%s; ",
                     n, static_cast<long long>(r.graphs),
                     static_cast<long long>(r.flips), r.seconds,
                     ok ? "" : (" " + r.failure).c_str());
  }
  return {pass, detail};
}

Outcome KernelFidelity() {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> size(1, 7);
  double worst_sp = 0.0;
  for (int t = 0; t < 100; ++t) {
    const LabeledGraph a = testing::RandomNodeLabeled(size(rng), 5, 0.4, rng);
    const LabeledGraph b = testing::RandomNodeLabeled(size(rng), 5, 0.4, rng);
    const double k = kernels::SpKernel(a, graph::ComputeMetrics(a), b,
                                       graph::ComputeMetrics(b));
    worst_sp = std::max(worst_sp, std::abs(k - testing::QuadrupleSumSp(a, b)));
  }
  int edge_mismatch = 0;
  for (int t = 0; t < 100; ++t) {
    const LabeledGraph a = testing::RandomEdgeLabeled(4, 4, 0.6, rng);
    const LabeledGraph b = testing::RandomEdgeLabeled(4, 4, 0.6, rng);
    edge_mismatch +=
        kernels::EdgeKernel(a, b) != testing::DirectEdgeKernel(a, b);
  }
  return {worst_sp <= 1e-12 && edge_mismatch == 0,
          Format("sp max |diff| %.2e over 100 pairs (n<=7); edge kernel "
                 "mismatches %d/100",
                 worst_sp, edge_mismatch)};
}

Outcome ExpressionFidelity() {
  bool pass = true;
  std::string detail;
  std::mt19937_64 rng(3);
  for (const GraphSpaceSpec& spec :
       {graph::NasBench201Space(), graph::NasBench101Space()}) {
    const kernels::LabelVocabulary vocab = kernels::VocabularyOf(spec);
    std::vector<LabeledGraph> data;
    for (int i = 0; i < 5; ++i) data.push_back(SampleMember(spec, rng));
    for (kernels::KernelForm form :
         {kernels::KernelForm::kLinear, kernels::KernelForm::kExponential}) {
      kernels::KernelParams params;
      params.form = form;
      mip::MipModel model = mip::BuildSpaceModel(spec);
      const mip::KernelEncoding enc = mip::AddKernelTerms(model, data, params);
      double term_err = 0.0, value_err = 0.0, bound = 0.0;
      int infeasible = 0;
      for (int t = 0; t < 50; ++t) {
        const LabeledGraph x = SampleMember(spec, rng);
        const mip::Assignment a = mip::AssignmentFromGraph(model, x);
        infeasible += !mip::CheckAssignment(model, a).empty();
        const kernels::GraphFeatures fx = kernels::MakeFeatures(x, vocab);
        for (size_t i = 0; i < data.size(); ++i) {
          const kernels::KernelTerms k = kernels::ComputeKernelTerms(
              fx, kernels::MakeFeatures(data[i], vocab), vocab);
          term_err = std::max(
              {term_err,
               std::abs(mip::Evaluate(enc.terms.structure[i], a) - k.structure),
               std::abs(mip::Evaluate(enc.terms.node[i], a) - k.node),
               std::abs(mip::Evaluate(enc.terms.edge[i], a) - k.edge)});
          const double exact = kernels::CombineTerms(k, params, vocab);
          const double diff = std::abs(a[enc.data_vars[i]] - exact);
          if (form == kernels::KernelForm::kLinear) {
            value_err = std::max(value_err, diff);
          } else {
            value_err = std::max(value_err, diff / exact);
            bound = enc.max_rel_error;
          }
        }
      }
      const bool ok =
          infeasible == 0 && term_err <= 1e-9 &&
          (form == kernels::KernelForm::kLinear
               ? value_err <= 1e-9
               : value_err <= bound + 1e-12 && bound <= 1e-3);
      pass = pass && ok;
      detail += Format("%s/%s: terms %.1e, value %.1e", spec.node_labeled
                                                            ? "node-labeled n=7"
                                                            : "edge-labeled n=4",
                       kernels::KernelFormName(form).c_str(), term_err,
                       value_err);
      if (form == kernels::KernelForm::kExponential) {
        detail += Format(" (relative, bound %.1e)", bound);
      }
      detail += "; ";
    }
  }
  return {pass, detail};
}

gp::GpState RandomGp(const GraphSpaceSpec& spec, int points, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<LabeledGraph> all = graph::EnumerateSpace(spec);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::set<size_t> chosen;
  while (chosen.size() < std::min<size_t>(points, all.size())) {
    chosen.insert(pick(rng));
  }
  std::vector<LabeledGraph> x;
  std::vector<double> y;
  for (size_t i : chosen) {
    x.push_back(all[i]);
    y.push_back(unit(rng));
  }
  kernels::KernelParams params;
  params.alpha = 1.5;
  params.beta = 0.5;
  return gp::GpState::WithParams(x, y, kernels::VocabularyOf(spec), params,
                                 1e-4);
}

Outcome AcquisitionOptimality() {
  bool pass = true;
  std::string detail;
  const double beta = mip::kDefaultBetaSqrt;
  const std::vector<std::pair<std::string, GraphSpaceSpec>> spaces = {
      {"digraph n<=3", graph::DigraphSpace(1, 3)},
      {"digraph n=4", graph::DigraphSpace(4, 4)},
      {"edge-labeled n=4 L=4", graph::EdgeLabeledDagSpace(4, 4, false)},
      {"node-labeled n=5", graph::NodeLabeledDagSpace(5, 4, 6)},
      {"zero-op n=3", graph::EdgeLabeledDagSpace(3, 3, true)}};
  int certified = 0;
  for (const auto& [name, spec] : spaces) {
    const gp::GpState gp = RandomGp(spec, 8, 4);
    const acq::CandidatePool pool =
        acq::OptimizeEnumerative(spec, gp, beta, 5, {});
    double best = INFINITY;
    for (const LabeledGraph& g : graph::EnumerateSpace(spec)) {
      best = std::min(best, acq::ScoreCandidate(gp, beta, g).lcb);
    }
    const bool ok = !pool.empty() &&
                    std::abs(pool.candidates[0].lcb - best) <= 1e-9 &&
                    pool.certificate == acq::Certificate::kExhaustive;
    certified += ok;
    pass = pass && ok;
  }
  detail += Format("enumerative optimum certified by re-scan on %d/%zu "
                   "spaces; ",
                   certified, spaces.size());
  const std::optional<std::string> command = acq::SolverCommandFromEnv();
  if (!command) {
    detail += std::string("external solver skipped (") +
              acq::kSolverCommandEnv + " not set)";
    return {pass, detail};
  }
  double worst = 0.0;
  int solved = 0;
  for (const GraphSpaceSpec& spec :
       {graph::DigraphSpace(2, 2), graph::DigraphSpace(3, 3),
        graph::EdgeLabeledDagSpace(3, 3, true)}) {
    const gp::GpState gp = RandomGp(spec, 4, 5);
    acq::ExternalSolverConfig config;
    config.command = *command;
    config.time_limit = 300;
    try {
      const acq::CandidatePool ext =
          acq::OptimizeExternal(spec, gp, beta, 1, {}, config);
      const acq::CandidatePool exact =
          acq::OptimizeEnumerative(spec, gp, beta, 1, {});
      worst = std::max(worst, std::abs(ext.candidates.at(0).lcb -
                                       exact.candidates.at(0).lcb));
      ++solved;
    } catch (const std::exception& e) {
      detail += std::string("external solver error: ") + e.what() + "; ";
      pass = false;
    }
  }
  pass = pass && worst <= 1e-4;
  detail += Format("external solver on %d spaces, max |LCB gap| %.1e", solved,
                   worst);
  return {pass, detail};
}

Outcome Cardinalities() {
  const size_t count = graph::EnumerateSpace(graph::NasBench201Space()).size();
  const GraphSpaceSpec nb101 = graph::NasBench101Space();
  std::mt19937_64 rng(6);
  std::vector<LabeledGraph> data;
  for (int i = 0; i < 10; ++i) data.push_back(SampleMember(nb101, rng));
  std::vector<double> y;
  for (int i = 0; i < 10; ++i) y.push_back(0.1 * i);
  const gp::GpState gp = gp::GpState::WithParams(
      data, y, kernels::VocabularyOf(nb101), {}, 1e-4);
  const auto start = std::chrono::steady_clock::now();
  const mip::MipModel model =
      mip::BuildAcquisitionModel(nb101, gp, mip::kDefaultBetaSqrt);
  const double seconds = SecondsSince(start);
  return {count == 15625 && seconds <= 60,
          Format("zero-op edge-labeled n=4 L=5: %zu graphs; node-labeled "
                 "n=7 E=9 L=5 acquisition model (10 data points, %d vars, "
                 "%d rows) built in %.2fs",
                 count, model.num_variables(), model.num_constraints(),
                 seconds)};
}

Outcome EndToEnd(bo::BoConfig* logged) {
  const auto start = std::chrono::steady_clock::now();
  const bo::BenchmarkTable bench =
      bo::SynthBenchmark(graph::NasBench201Space(), 0, 0.0);
  std::set<std::string> optimum;
  for (const Json& k : bench.metadata()["best_keys"]) {
    optimum.insert(FromHex(k.get<std::string>()));
  }
  const acq::EnumeratedSpace space = acq::EnumerateForScoring(bench.space());
  std::vector<double> bo_final, random_final;
  int hits = 0;
  std::string log_header;
  constexpr int kSeeds = 20;
  for (int seed = 0; seed < kSeeds; ++seed) {
    bo::BoConfig config;
    config.seed = seed;
    const bo::BoRun run = bo::RunBo(bench, config, &space);
    const bo::BoRun random = bo::RunRandomSearch(bench, config, &space);
    bo_final.push_back(run.IncumbentAt(30));
    random_final.push_back(random.IncumbentAt(30));
    hits += optimum.contains(run.records.back().incumbent_key);
    if (seed == 0) *logged = run.config;
  }
  const double bo_median = bo::Median(bo_final);
  const double random_median = bo::Median(random_final);
  const double seconds = SecondsSince(start);
  return {hits >= 0.8 * kSeeds && bo_median < random_median && seconds <= 1800,
          Format("optimum reached in %d/%d seeds; median incumbent error at "
                 "iteration 30: %.4f vs random %.4f; %.0fs",
                 hits, kSeeds, bo_median, random_median, seconds)};
}

Outcome GpSanity() {
  const GraphSpaceSpec spec = graph::NasBench201Space();
  const kernels::LabelVocabulary vocab = kernels::VocabularyOf(spec);
  std::mt19937_64 rng(7);
  bool pass = true;
  std::string detail;
  for (const auto& [form, points] :
       {std::pair{kernels::KernelForm::kLinear, 20},
        std::pair{kernels::KernelForm::kExponential, 30}}) {
    std::vector<LabeledGraph> x;
    std::set<std::string> keys;
    while (static_cast<int>(x.size()) < points) {
      LabeledGraph g = SampleMember(spec, rng);
      if (keys.insert(graph::CanonicalKey(g)).second) x.push_back(g);
    }
    std::vector<double> y;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (size_t i = 0; i < x.size(); ++i) y.push_back(unit(rng));
    kernels::KernelParams params;
    params.form = form;
    params.alpha = 2.0;
    params.beta = 0.5;
    params.variance = 1.3;
    const gp::GpState gp = gp::GpState::WithParams(x, y, vocab, params, 0.0);
    double interp = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
      interp = std::max(interp, std::abs(gp.Predict(x[i]).mean - y[i]));
    }
    int bad = 0;
    double min_var = INFINITY;
    const double scale2 = gp.target_scale() * gp.target_scale();
    for (int t = 0; t < 1000; ++t) {
      const LabeledGraph q = SampleMember(spec, rng);
      const double var = gp.Predict(q).variance;
      const double kxx = kernels::CombinedKernel(q, q, params, vocab) * scale2;
      min_var = std::min(min_var, var);
      bad += var < 0 || var > kxx * (1 + 1e-12);
    }
    pass = pass && interp <= 1e-6 && bad == 0;
    detail += Format("%s: max interpolation error %.1e on %d points (jitter "
                     "%.0e), variance in [0, K_xx] on %d/1000 queries (min "
                     "%.2e); ",
                     kernels::KernelFormName(form).c_str(), interp, points,
                     gp.jitter(), 1000 - bad, min_var);
  }
  return {pass, detail};
}

Outcome Constants(const bo::BoConfig& config) {
  const Json j = bo::BoConfigToJson(config);
  const bool ok = j["beta_sqrt"] == 3.0 && j["gp_fit"]["param_initial"] == 1.0 &&
                  j["gp_fit"]["param_lower"] == 0.01 &&
                  j["gp_fit"]["param_upper"] == 100.0 && j["batch"] == 5 &&
                  j["iterations"] == 30 && j["init"] == 10 &&
                  j["external"]["time_limit"] == 1800.0;
  return {ok, "logged config: " + j.dump()};
}

}  // namespace
}  // namespace graphbo

int main() {
  using graphbo::Outcome;
  graphbo::bo::BoConfig logged;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks =
      {{"bijection", graphbo::Bijection},
       {"kernel fidelity", graphbo::KernelFidelity},
       {"MIP expression fidelity", graphbo::ExpressionFidelity},
       {"acquisition optimality", graphbo::AcquisitionOptimality},
       {"space cardinalities", graphbo::Cardinalities},
       {"BO end to end", [&] { return graphbo::EndToEnd(&logged); }},
       {"GP posterior sanity", graphbo::GpSanity},
       {"protocol constants", [&] { return graphbo::Constants(logged); }}};
  int failures = 0;
  for (size_t i = 0; i < checks.size(); ++i) {
    Outcome o;
    try {
      o = checks[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                checks[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
