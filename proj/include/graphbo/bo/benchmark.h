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

#ifndef GRAPHBO_BO_BENCHMARK_H_
#define GRAPHBO_BO_BENCHMARK_H_

#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphbo/graph/graph_space.h"
#include "graphbo/graph/labeled_graph.h"
#include "graphbo/util/json_io.h"

namespace graphbo::bo {

// Deterministic: the objective is the mean over training seeds. Noisy: one
// seed drawn uniformly per evaluation.
enum class ObjectiveMode { kDeterministic, kNoisy };

std::string ObjectiveModeName(ObjectiveMode mode);
ObjectiveMode ParseObjectiveMode(const std::string& name);

struct BenchmarkRecord {
  graph::LabeledGraph graph;
  std::vector<double> val_acc;   // one entry per training seed
  std::vector<double> test_acc;
  double mean_val_acc() const;
  double mean_test_acc() const;
  bool operator==(const BenchmarkRecord&) const = default;
};

struct Evaluation {
  double val_error = 0.0;
  double test_error = 0.0;
  // Index of the drawn seed in noisy mode, -1 otherwise.
  int seed_drawn = -1;
};

class BenchmarkTable {
 public:
  BenchmarkTable(std::string name, graph::GraphSpaceSpec space,
                 ObjectiveMode mode = ObjectiveMode::kDeterministic);

  const std::string& name() const { return name_; }
  const graph::GraphSpaceSpec& space() const { return space_; }
  ObjectiveMode mode() const { return mode_; }
  void set_mode(ObjectiveMode mode) { mode_ = mode; }
  Json& metadata() { return metadata_; }
  const Json& metadata() const { return metadata_; }

  // Throws InvalidArgumentError when the graph is outside the space, an
  // accuracy lies outside [0, 1], a seed list is empty, or the key is
  // already present.
  void Add(BenchmarkRecord record);

  size_t size() const { return records_.size(); }
  const std::vector<BenchmarkRecord>& records() const { return records_; }
  bool Contains(const std::string& key) const;
  // Throws LookupMissError.
  const BenchmarkRecord& Lookup(const std::string& key) const;

  // Validation and test error (1 - accuracy) of `g`. Noisy mode draws the
  // validation seed from `rng`; the test error is always the seed mean.
  Evaluation Evaluate(const graph::LabeledGraph& g, std::mt19937_64& rng) const;

  // Smallest seed-mean validation error over the table.
  double BestValError() const;

  bool operator==(const BenchmarkTable& other) const;

 private:
  std::string name_;
  graph::GraphSpaceSpec space_;
  ObjectiveMode mode_;
  Json metadata_ = Json::object();
  std::vector<BenchmarkRecord> records_;
  std::unordered_map<std::string, size_t> index_;
};

// Line-delimited JSON. Line 0 is a header {"format", "version", "name",
// "mode", "space", "metadata"}; every further line is one record
// {"graph", "val_acc", "test_acc"}.
std::string SerializeBenchmark(const BenchmarkTable& table);
// Throws SchemaError carrying the zero-based line index.
BenchmarkTable ParseBenchmark(std::string_view text);

void WriteBenchmarkFile(const std::string& path, const BenchmarkTable& table);
BenchmarkTable ReadBenchmarkFile(const std::string& path);

}  // namespace graphbo::bo

#endif  // GRAPHBO_BO_BENCHMARK_H_
