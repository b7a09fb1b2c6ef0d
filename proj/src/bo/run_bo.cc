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

#include "graphbo/bo/run_bo.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <utility>

#include "graphbo/acq/two_size.h"
#include "graphbo/graph/graph_json.h"
#include "graphbo/util/errors.h"

namespace graphbo::bo {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// SplitMix64 finalizer over (seed, stream).
uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// First k entries of a seeded partial Fisher-Yates shuffle of `items`.
std::vector<size_t> SampleWithoutReplacement(std::vector<size_t> items,
                                             size_t k, std::mt19937_64& rng) {
  k = std::min(k, items.size());
  for (size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<size_t> pick(i, items.size() - 1);
    std::swap(items[i], items[pick(rng)]);
  }
  items.resize(k);
  return items;
}

Json KernelParamsToJson(const kernels::KernelParams& p) {
  Json j;
  j["form"] = kernels::KernelFormName(p.form);
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["gamma"] = p.gamma;
  j["variance"] = p.variance;
  return j;
}

// Members the loop draws from: the enumerated space when available,
// otherwise the table records.
class Universe {
 public:
  Universe(const BenchmarkTable& bench, const BoConfig& config,
           const acq::EnumeratedSpace* space)
      : bench_(bench), space_(space) {
    if (space_ == nullptr) {
      try {
        owned_.emplace(
            acq::EnumerateForScoring(bench.space(), config.enumeration_cap));
        space_ = &*owned_;
      } catch (const CapExceededError&) {
      }
    }
    if (space_ != nullptr && !(space_->spec == bench.space())) {
      throw InvalidArgumentError("enumerated space differs from the benchmark");
    }
  }

  size_t size() const {
    return space_ != nullptr ? space_->size() : bench_.size();
  }
  const graph::LabeledGraph& graph(size_t i) const {
    return space_ != nullptr ? space_->graphs[i] : bench_.records()[i].graph;
  }
  const std::string& key(size_t i) {
    if (space_ != nullptr) return space_->keys[i];
    if (record_keys_.empty()) {
      for (const BenchmarkRecord& r : bench_.records()) {
        record_keys_.push_back(graph::CanonicalKey(r.graph));
      }
    }
    return record_keys_[i];
  }
  const acq::EnumeratedSpace* space() const { return space_; }

 private:
  const BenchmarkTable& bench_;
  const acq::EnumeratedSpace* space_;
  std::optional<acq::EnumeratedSpace> owned_;
  std::vector<std::string> record_keys_;
};

acq::CandidatePool ProposeExternal(const graph::GraphSpaceSpec& spec,
                                   const gp::GpState& gp,
                                   const BoConfig& config, int k,
                                   const acq::KeySet& exclude) {
  // Node-labeled spaces hold only full-size graphs.
  if (spec.min_nodes == spec.max_nodes || spec.node_labeled) {
    graph::GraphSpaceSpec fixed = spec;
    fixed.min_nodes = fixed.max_nodes;
    return acq::OptimizeExternal(fixed, gp, config.beta_sqrt, k, exclude,
                                 config.external);
  }
  std::vector<graph::GraphSpaceSpec> sizes;
  for (int n = spec.min_nodes; n <= spec.max_nodes; ++n) {
    graph::GraphSpaceSpec s = spec;
    s.min_nodes = s.max_nodes = n;
    sizes.push_back(s);
  }
  return acq::OptimizeTwoSize(
      sizes,
      [&](const graph::GraphSpaceSpec& s) {
        return acq::OptimizeExternal(
            s, gp, config.beta_sqrt, k,
            acq::ExclusionForSize(exclude, s.max_nodes), config.external);
      },
      k);
}

class Loop {
 public:
  Loop(const BenchmarkTable& bench, const BoConfig& config,
       const acq::EnumeratedSpace* space, bool random)
      : bench_(bench),
        config_(config),
        universe_(bench, config, space),
        random_(random),
        eval_rng_(DeriveSeed(config.seed, 2)),
        random_rng_(DeriveSeed(config.seed, 3)) {}

  BoRun Run() {
    BoRun run;
    run.method = random_ ? "random" : "nas-goat";
    run.config = config_;

    std::mt19937_64 init_rng(DeriveSeed(config_.seed, 1));
    std::vector<size_t> all(universe_.size());
    std::iota(all.begin(), all.end(), size_t{0});
    BoRunRecord first;
    const auto start = Clock::now();
    for (size_t i : SampleWithoutReplacement(std::move(all), config_.init,
                                             init_rng)) {
      first.batch.push_back(Evaluate(universe_.graph(i), universe_.key(i)));
    }
    first.times.evaluation_seconds = SecondsSince(start);
    Finish(first);
    run.records.push_back(std::move(first));

    for (int it = 1; it <= config_.iterations; ++it) {
      if (run.records.back().exhausted) break;
      BoRunRecord rec;
      rec.iteration = it;
      const int k = static_cast<int>(
          std::min<size_t>(config_.batch, universe_.size() - evaluated_.size()));
      std::vector<EvaluatedPoint> proposals =
          random_ ? ProposeRandom(k) : ProposeModel(k, rec);
      if (proposals.empty()) {
        run.records.back().exhausted = true;
        break;
      }
      const auto eval_start = Clock::now();
      for (EvaluatedPoint& p : proposals) {
        EvaluatedPoint e = Evaluate(p.graph, p.key);
        e.lcb = p.lcb;
        e.mean = p.mean;
        e.stddev = p.stddev;
        rec.batch.push_back(std::move(e));
      }
      rec.times.evaluation_seconds = SecondsSince(eval_start);
      Finish(rec);
      run.records.push_back(std::move(rec));
    }
    run.exhausted = run.records.back().exhausted;
    return run;
  }

 private:
  EvaluatedPoint Evaluate(const graph::LabeledGraph& g,
                          const std::string& key) {
    if (evaluated_.contains(key)) {
      throw Error("architecture proposed twice: " + ToHex(key));
    }
    const Evaluation e = bench_.Evaluate(g, eval_rng_);
    evaluated_.insert(key);
    xs_.push_back(g);
    ys_.push_back(e.val_error);
    if (e.val_error < best_val_) {
      best_val_ = e.val_error;
      best_test_ = e.test_error;
      best_key_ = key;
    }
    EvaluatedPoint p;
    p.graph = g;
    p.key = key;
    p.val_error = e.val_error;
    p.test_error = e.test_error;
    p.seed_drawn = e.seed_drawn;
    return p;
  }

  void Finish(BoRunRecord& rec) const {
    rec.incumbent_val_error = best_val_;
    rec.incumbent_test_error = best_test_;
    rec.incumbent_key = best_key_;
    rec.exhausted = evaluated_.size() >= universe_.size();
  }

  std::vector<EvaluatedPoint> ProposeRandom(int k) {
    std::vector<size_t> open;
    for (size_t i = 0; i < universe_.size(); ++i) {
      if (!evaluated_.contains(universe_.key(i))) open.push_back(i);
    }
    std::vector<EvaluatedPoint> out;
    for (size_t i : SampleWithoutReplacement(std::move(open), k, random_rng_)) {
      EvaluatedPoint p;
      p.graph = universe_.graph(i);
      p.key = universe_.key(i);
      out.push_back(std::move(p));
    }
    return out;
  }

  std::vector<EvaluatedPoint> ProposeModel(int k, BoRunRecord& rec) {
    const auto fit_start = Clock::now();
    gp::FitConfig fit = config_.fit;
    fit.seed = DeriveSeed(config_.seed, 1000 + rec.iteration);
    const gp::GpState gp = gp::GpState::Fit(
        xs_, ys_, kernels::VocabularyOf(bench_.space()), fit);
    rec.times.fit_seconds = SecondsSince(fit_start);
    rec.params = gp.params();
    rec.noise_variance = gp.noise_variance();
    rec.log_marginal_likelihood = gp.log_marginal_likelihood();

    const auto acq_start = Clock::now();
    acq::CandidatePool pool;
    if (config_.optimizer == OptimizerKind::kExternal) {
      pool = ProposeExternal(bench_.space(), gp, config_, k, evaluated_);
    } else if (universe_.space() != nullptr) {
      pool = acq::OptimizeEnumerative(*universe_.space(), gp,
                                      config_.beta_sqrt, k, evaluated_);
    } else {
      pool = acq::OptimizeEnumerative(bench_.space(), gp, config_.beta_sqrt, k,
                                      evaluated_, config_.enumeration_cap);
    }
    rec.times.acquisition_seconds = SecondsSince(acq_start);
    rec.certificate = acq::CertificateName(pool.certificate);

    std::vector<EvaluatedPoint> out;
    for (acq::Candidate& c : pool.candidates) {
      EvaluatedPoint p;
      p.graph = std::move(c.graph);
      p.key = std::move(c.key);
      p.lcb = c.lcb;
      p.mean = c.mean;
      p.stddev = c.stddev;
      out.push_back(std::move(p));
    }
    return out;
  }

  const BenchmarkTable& bench_;
  const BoConfig& config_;
  Universe universe_;
  bool random_;
  std::mt19937_64 eval_rng_;
  std::mt19937_64 random_rng_;
  acq::KeySet evaluated_;
  std::vector<graph::LabeledGraph> xs_;
  std::vector<double> ys_;
  double best_val_ = std::numeric_limits<double>::infinity();
  double best_test_ = std::numeric_limits<double>::infinity();
  std::string best_key_;
};

}  // namespace

std::string OptimizerKindName(OptimizerKind kind) {
  return kind == OptimizerKind::kExternal ? "external" : "enum";
}

OptimizerKind ParseOptimizerKind(const std::string& name) {
  if (name == "enum") return OptimizerKind::kEnumerative;
  if (name == "external") return OptimizerKind::kExternal;
  throw InvalidArgumentError("unknown optimizer '" + name + "'");
}

void BoConfig::Validate() const {
  if (iterations < 0) throw InvalidArgumentError("iterations must be >= 0");
  if (init < 1) throw InvalidArgumentError("init must be >= 1");
  if (batch < 1) throw InvalidArgumentError("batch must be >= 1");
  if (!(beta_sqrt >= 0.0)) {
    throw InvalidArgumentError("beta_sqrt must be nonnegative");
  }
  fit.Validate();
  if (optimizer == OptimizerKind::kExternal && external.command.empty()) {
    throw InvalidArgumentError("external optimizer without a solver command");
  }
}

Json BoConfigToJson(const BoConfig& c) {
  Json j;
  j["seed"] = c.seed;
  j["iterations"] = c.iterations;
  j["init"] = c.init;
  j["batch"] = c.batch;
  j["beta_sqrt"] = c.beta_sqrt;
  j["kernel"] = kernels::KernelFormName(c.fit.form);
  j["optimizer"] = OptimizerKindName(c.optimizer);
  Json fit;
  fit["param_lower"] = c.fit.param_lower;
  fit["param_upper"] = c.fit.param_upper;
  fit["param_initial"] = c.fit.param_initial;
  fit["starts"] = c.fit.starts;
  fit["budget"] = c.fit.budget;
  fit["noise_mode"] =
      c.fit.noise_mode == gp::NoiseMode::kTrainable ? "trainable" : "fixed";
  fit["fixed_noise"] = c.fit.fixed_noise;
  fit["noise_lower"] = c.fit.noise_lower;
  fit["noise_upper"] = c.fit.noise_upper;
  fit["noise_initial"] = c.fit.noise_initial;
  j["gp_fit"] = fit;
  Json ext;
  ext["time_limit"] = c.external.time_limit;
  ext["pool_size"] = c.external.pool_size;
  ext["breakpoints"] = c.external.kernel.breakpoints;
  j["external"] = ext;
  j["enumeration_cap"] = c.enumeration_cap;
  return j;
}

Json RecordToJson(const BoRunRecord& r) {
  Json j;
  j["iteration"] = r.iteration;
  Json batch = Json::array();
  for (const EvaluatedPoint& p : r.batch) {
    Json b;
    b["key"] = ToHex(p.key);
    b["graph"] = graph::GraphToJson(p.graph);
    b["lcb"] = p.lcb;
    b["mean"] = p.mean;
    b["stddev"] = p.stddev;
    b["val_error"] = p.val_error;
    b["test_error"] = p.test_error;
    b["seed_drawn"] = p.seed_drawn;
    batch.push_back(std::move(b));
  }
  j["batch"] = std::move(batch);
  j["incumbent"] = {{"key", ToHex(r.incumbent_key)},
                    {"val_error", r.incumbent_val_error},
                    {"test_error", r.incumbent_test_error}};
  if (r.params) {
    j["kernel"] = KernelParamsToJson(*r.params);
    j["noise_variance"] = r.noise_variance;
    j["log_marginal_likelihood"] = r.log_marginal_likelihood;
  } else {
    j["kernel"] = nullptr;
  }
  j["certificate"] = r.certificate;
  j["exhausted"] = r.exhausted;
  return j;
}

Json TimesToJson(const BoRunRecord& r) {
  Json j;
  j["iteration"] = r.iteration;
  j["times"] = {{"fit_seconds", r.times.fit_seconds},
                {"acquisition_seconds", r.times.acquisition_seconds},
                {"evaluation_seconds", r.times.evaluation_seconds}};
  return j;
}

double BoRun::IncumbentAt(int iteration) const {
  if (records.empty()) return std::numeric_limits<double>::infinity();
  const size_t i = std::min<size_t>(std::max(iteration, 0), records.size() - 1);
  return records[i].incumbent_val_error;
}

BoRun RunBo(const BenchmarkTable& bench, const BoConfig& config,
            const acq::EnumeratedSpace* space) {
  config.Validate();
  return Loop(bench, config, space, false).Run();
}

BoRun RunRandomSearch(const BenchmarkTable& bench, const BoConfig& config,
                      const acq::EnumeratedSpace* space) {
  config.Validate();
  return Loop(bench, config, space, true).Run();
}

std::string RunLogText(const BoRun& run, const BenchmarkTable& bench) {
  Json header;
  header["method"] = run.method;
  header["config"] = BoConfigToJson(run.config);
  header["benchmark"] = {{"name", bench.name()},
                         {"mode", ObjectiveModeName(bench.mode())},
                         {"records", bench.size()}};
  std::string out = header.dump() + '\n';
  for (const BoRunRecord& r : run.records) out += RecordToJson(r).dump() + '\n';
  return out;
}

std::string TimingLogText(const BoRun& run) {
  std::string out;
  for (const BoRunRecord& r : run.records) out += TimesToJson(r).dump() + '\n';
  return out;
}

void WriteRunLog(const std::string& path, const BoRun& run,
                 const BenchmarkTable& bench) {
  WriteTextFile(path, RunLogText(run, bench));
  WriteTextFile(path + ".timing.jsonl", TimingLogText(run));
}

double Median(std::vector<double> values) {
  if (values.empty()) throw InvalidArgumentError("median of nothing");
  std::sort(values.begin(), values.end());
  const size_t m = values.size() / 2;
  return values.size() % 2 == 1 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

double StdDev(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double mean =
      std::accumulate(values.begin(), values.end(), 0.0) / values.size();
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / (values.size() - 1));
}

std::vector<RegretPoint> RegretCurve(std::span<const BoRun> runs,
                                     double optimum) {
  int last = 0;
  for (const BoRun& r : runs) {
    if (!r.records.empty()) last = std::max(last, r.records.back().iteration);
  }
  std::vector<RegretPoint> curve;
  for (int it = 0; it <= last && !runs.empty(); ++it) {
    std::vector<double> regret;
    for (const BoRun& r : runs) regret.push_back(r.IncumbentAt(it) - optimum);
    curve.push_back({it, Median(regret), StdDev(regret)});
  }
  return curve;
}

std::string RegretCsv(std::span<const RegretPoint> curve) {
  std::string out = "iteration,median,sd\n";
  char buf[96];
  for (const RegretPoint& p : curve) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g\n", p.iteration, p.median,
                  p.sd);
    out += buf;
  }
  return out;
}

}  // namespace graphbo::bo
