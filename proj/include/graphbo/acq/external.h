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

#ifndef GRAPHBO_ACQ_EXTERNAL_H_
#define GRAPHBO_ACQ_EXTERNAL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphbo/acq/candidate_pool.h"
#include "graphbo/gp/gp.h"
#include "graphbo/graph/graph_space.h"
#include "graphbo/mip/assignment.h"
#include "graphbo/mip/kernel_encoding.h"

namespace graphbo::acq {

inline constexpr char kSolverCommandEnv[] = "GRAPHBO_SOLVER_CMD";
inline constexpr double kDefaultTimeLimit = 1800.0;

// The command is a shell template with placeholders {model} (LP file to
// read), {solution} (pool file to write), {timelimit} (seconds) and
// {poolsize} (number of solutions requested).
struct ExternalSolverConfig {
  std::string command;
  double time_limit = kDefaultTimeLimit;
  // 0 means the requested pool size k.
  int pool_size = 0;
  // Directory for the model and solution files; a fresh temporary
  // directory when empty.
  std::string work_dir;
  mip::KernelEncodingOptions kernel;
};

// Value of GRAPHBO_SOLVER_CMD when set and nonempty.
std::optional<std::string> SolverCommandFromEnv();

// Substitutes the placeholders. Throws InvalidArgumentError when {model}
// or {solution} is missing from the template.
std::string ExpandCommand(const std::string& command_template,
                          const std::string& model_path,
                          const std::string& solution_path, double time_limit,
                          int pool_size);

// One solution per line as space-separated name=value pairs; '#' starts a
// comment; blank lines are ignored. Throws SchemaError with the line index.
std::vector<mip::NamedAssignment> ParseSolutionPool(std::string_view text);
std::string FormatSolutionPool(const std::vector<mip::NamedAssignment>& pool);

struct CommandResult {
  int exit_code = 0;
  std::string output;  // stdout and stderr
};
CommandResult RunCommand(const std::string& command);

// Builds the acquisition model with no-good cuts for `exclude`, runs the
// solver, decodes and validates every pooled solution, and re-scores the
// decoded graphs with the GP. Throws SolverError on a nonzero exit, an
// unreadable or empty pool, or a pooled solution violating the model.
CandidatePool OptimizeExternal(const graph::GraphSpaceSpec& spec,
                               const gp::GpState& gp, double beta_sqrt, int k,
                               const KeySet& exclude,
                               const ExternalSolverConfig& config);

}  // namespace graphbo::acq

#endif  // GRAPHBO_ACQ_EXTERNAL_H_
