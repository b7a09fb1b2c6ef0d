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

#include "graphbo/bo/benchmark.h"

#include <algorithm>
#include <optional>
#include <limits>
#include <numeric>
#include <sstream>

#include "graphbo/graph/graph_json.h"
#include "graphbo/util/errors.h"

namespace graphbo::bo {
namespace {

constexpr char kFormat[] = "graphbo-benchmark";
constexpr int kVersion = 1;

double Mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

std::vector<double> ReadAccuracies(const Json& j, const char* field,
                                   int64_t line) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw SchemaError(std::string("record lacks array '") + field + "'", line);
  }
  std::vector<double> out;
  for (const Json& v : j[field]) {
    if (!v.is_number()) {
      throw SchemaError(std::string("non-numeric entry in '") + field + "'",
                        line);
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string ObjectiveModeName(ObjectiveMode mode) {
  return mode == ObjectiveMode::kNoisy ? "noisy" : "deterministic";
}

ObjectiveMode ParseObjectiveMode(const std::string& name) {
  if (name == "deterministic") return ObjectiveMode::kDeterministic;
  if (name == "noisy") return ObjectiveMode::kNoisy;
  throw InvalidArgumentError("unknown objective mode '" + name + "'");
}

double BenchmarkRecord::mean_val_acc() const { return Mean(val_acc); }
double BenchmarkRecord::mean_test_acc() const { return Mean(test_acc); }

BenchmarkTable::BenchmarkTable(std::string name, graph::GraphSpaceSpec space,
                               ObjectiveMode mode)
    : name_(std::move(name)), space_(std::move(space)), mode_(mode) {
  space_.Validate();
}

void BenchmarkTable::Add(BenchmarkRecord record) {
  std::string reason;
  if (!graph::InSpace(space_, record.graph, &reason)) {
    throw InvalidArgumentError("benchmark graph outside the space: " + reason);
  }
  if (record.val_acc.empty() || record.test_acc.empty()) {
    throw InvalidArgumentError("benchmark record without seeds");
  }
  for (const auto* list : {&record.val_acc, &record.test_acc}) {
    for (double a : *list) {
      if (!(a >= 0.0 && a <= 1.0)) {
        throw InvalidArgumentError("accuracy outside [0, 1]");
      }
    }
  }
  std::string key = graph::CanonicalKey(record.graph);
  if (index_.contains(key)) {
    throw InvalidArgumentError("duplicate benchmark record " + ToHex(key));
  }
  index_.emplace(std::move(key), records_.size());
  records_.push_back(std::move(record));
}

bool BenchmarkTable::Contains(const std::string& key) const {
  return index_.contains(key);
}

const BenchmarkRecord& BenchmarkTable::Lookup(const std::string& key) const {
  const auto it = index_.find(key);
  if (it == index_.end()) throw LookupMissError(key);
  return records_[it->second];
}

Evaluation BenchmarkTable::Evaluate(const graph::LabeledGraph& g,
                                    std::mt19937_64& rng) const {
  const BenchmarkRecord& r = Lookup(graph::CanonicalKey(g));
  Evaluation e;
  if (mode_ == ObjectiveMode::kNoisy) {
    std::uniform_int_distribution<int> pick(
        0, static_cast<int>(r.val_acc.size()) - 1);
    e.seed_drawn = pick(rng);
    e.val_error = 1.0 - r.val_acc[e.seed_drawn];
  } else {
    e.val_error = 1.0 - r.mean_val_acc();
  }
  e.test_error = 1.0 - r.mean_test_acc();
  return e;
}

double BenchmarkTable::BestValError() const {
  double best = std::numeric_limits<double>::infinity();
  for (const BenchmarkRecord& r : records_) {
    best = std::min(best, 1.0 - r.mean_val_acc());
  }
  return best;
}

bool BenchmarkTable::operator==(const BenchmarkTable& other) const {
  return name_ == other.name_ && space_ == other.space_ &&
         mode_ == other.mode_ && metadata_ == other.metadata_ &&
         records_ == other.records_;
}

std::string SerializeBenchmark(const BenchmarkTable& table) {
  Json header;
  header["format"] = kFormat;
  header["version"] = kVersion;
  header["name"] = table.name();
  header["mode"] = ObjectiveModeName(table.mode());
  header["space"] = graph::SpaceToJson(table.space());
  header["metadata"] = table.metadata();
  std::string out = header.dump() + '\n';
  for (const BenchmarkRecord& r : table.records()) {
    Json j;
    j["graph"] = graph::GraphToJson(r.graph);
    j["val_acc"] = r.val_acc;
    j["test_acc"] = r.test_acc;
    out += j.dump();
    out += '\n';
  }
  return out;
}

BenchmarkTable ParseBenchmark(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int64_t index = -1;
  std::optional<BenchmarkTable> table;
  while (std::getline(in, line)) {
    ++index;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw SchemaError(std::string("invalid JSON: ") + e.what(), index);
    }
    if (!table) {
      if (!j.is_object() || j.value("format", "") != kFormat) {
        throw SchemaError("missing benchmark header", index);
      }
      if (j.value("version", 0) != kVersion) {
        throw SchemaError("unsupported benchmark version", index);
      }
      try {
        table.emplace(j.at("name").get<std::string>(),
                      graph::SpaceFromJson(j.at("space")),
                      ParseObjectiveMode(j.at("mode").get<std::string>()));
      } catch (const SchemaError&) {
        throw;
      } catch (const std::exception& e) {
        throw SchemaError(std::string("bad header: ") + e.what(), index);
      }
      if (j.contains("metadata")) table->metadata() = j["metadata"];
      continue;
    }
    if (!j.is_object() || !j.contains("graph")) {
      throw SchemaError("record lacks 'graph'", index);
    }
    BenchmarkRecord r;
    try {
      r.graph = graph::GraphFromJson(j["graph"]);
    } catch (const SchemaError& e) {
      throw SchemaError(e.what(), index);
    }
    r.val_acc = ReadAccuracies(j, "val_acc", index);
    r.test_acc = ReadAccuracies(j, "test_acc", index);
    try {
      table->Add(std::move(r));
    } catch (const InvalidArgumentError& e) {
      throw SchemaError(e.what(), index);
    }
  }
  if (!table) throw SchemaError("empty benchmark file", 0);
  return std::move(*table);
}

void WriteBenchmarkFile(const std::string& path, const BenchmarkTable& table) {
  WriteTextFile(path, SerializeBenchmark(table));
}

BenchmarkTable ReadBenchmarkFile(const std::string& path) {
  return ParseBenchmark(ReadTextFile(path));
}

}  // namespace graphbo::bo
