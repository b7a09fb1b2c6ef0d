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

#include "graphbo/util/errors.h"

#include <sstream>
#include <utility>

namespace graphbo {
namespace {

std::string CapMessage(double estimated, double cap) {
  std::ostringstream out;
  out << "graph space too large to enumerate: estimated " << estimated
      << " graphs, cap " << cap;
  return out.str();
}

std::string HexKey(const std::string& key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * key.size());
  for (unsigned char c : key) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

}  // namespace

CapExceededError::CapExceededError(double estimated_count, double cap)
    : Error(CapMessage(estimated_count, cap)),
      estimated_count_(estimated_count),
      cap_(cap) {}

SolverError::SolverError(const std::string& what, std::string output)
    : Error(what), output_(std::move(output)) {}

SchemaError::SchemaError(const std::string& what, int64_t record)
    : Error(record >= 0 ? what + " (record " + std::to_string(record) + ")"
                        : what),
      record_(record) {}

LookupMissError::LookupMissError(std::string key)
    : Error("benchmark has no record for graph key " + HexKey(key)),
      key_(std::move(key)) {}

}  // namespace graphbo
