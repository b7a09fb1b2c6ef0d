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

#ifndef GRAPHBO_UTIL_ERRORS_H_
#define GRAPHBO_UTIL_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphbo {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Raised when a graph space is too large to enumerate.
class CapExceededError : public Error {
 public:
  CapExceededError(double estimated_count, double cap);
  double estimated_count() const { return estimated_count_; }
  double cap() const { return cap_; }

 private:
  double estimated_count_;
  double cap_;
};

class LabelMismatchError : public Error {
 public:
  using Error::Error;
};

class ConflictingRestrictionsError : public Error {
 public:
  using Error::Error;
};

// Gram matrix could not be factored even after jitter escalation.
class NotPositiveDefiniteError : public Error {
 public:
  using Error::Error;
};

// External solver failures. `output` holds whatever the process printed.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, std::string output);
  const std::string& output() const { return output_; }

 private:
  std::string output_;
};

// Malformed input file; `record` is the zero-based record (line) index or -1.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, int64_t record);
  int64_t record() const { return record_; }

 private:
  int64_t record_;
};

class LookupMissError : public Error {
 public:
  explicit LookupMissError(std::string key);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace graphbo

#endif  // GRAPHBO_UTIL_ERRORS_H_
