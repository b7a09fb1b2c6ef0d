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

#include "graphbo/acq/external.h"

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "graphbo/mip/acquisition.h"
#include "graphbo/mip/assignment.h"
#include "graphbo/mip/checker.h"
#include "graphbo/mip/writer.h"
#include "graphbo/util/errors.h"
#include "graphbo/util/json_io.h"

namespace graphbo::acq {
namespace {

bool ReplaceAll(std::string& s, const std::string& from,
                const std::string& to) {
  bool found = false;
  for (size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
    found = true;
  }
  return found;
}

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::string MakeTempDir() {
  std::string path =
      (std::filesystem::temp_directory_path() / "graphbo-XXXXXX").string();
  if (mkdtemp(path.data()) == nullptr) {
    throw Error("cannot create a temporary directory");
  }
  return path;
}

}  // namespace

std::optional<std::string> SolverCommandFromEnv() {
  const char* v = std::getenv(kSolverCommandEnv);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

std::string ExpandCommand(const std::string& command_template,
                          const std::string& model_path,
                          const std::string& solution_path, double time_limit,
                          int pool_size) {
  std::string cmd = command_template;
  char limit[32];
  std::snprintf(limit, sizeof(limit), "%g", time_limit);
  if (!ReplaceAll(cmd, "{model}", ShellQuote(model_path))) {
    throw InvalidArgumentError("solver command lacks {model}");
  }
  if (!ReplaceAll(cmd, "{solution}", ShellQuote(solution_path))) {
    throw InvalidArgumentError("solver command lacks {solution}");
  }
  ReplaceAll(cmd, "{timelimit}", limit);
  ReplaceAll(cmd, "{poolsize}", std::to_string(pool_size));
  return cmd;
}

std::vector<mip::NamedAssignment> ParseSolutionPool(std::string_view text) {
  std::vector<mip::NamedAssignment> pool;
  std::istringstream in{std::string(text)};
  std::string line;
  int64_t index = -1;
  while (std::getline(in, line)) {
    ++index;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string pair;
    mip::NamedAssignment sol;
    while (fields >> pair) {
      const size_t eq = pair.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == pair.size()) {
        throw SchemaError("malformed pair '" + pair + "' in solution pool",
                          index);
      }
      const std::string value = pair.substr(eq + 1);
      char* end = nullptr;
      const double v = std::strtod(value.c_str(), &end);
      if (end != value.c_str() + value.size()) {
        throw SchemaError("malformed value '" + value + "' in solution pool",
                          index);
      }
      sol[pair.substr(0, eq)] = v;
    }
    if (!sol.empty()) pool.push_back(std::move(sol));
  }
  return pool;
}

std::string FormatSolutionPool(const std::vector<mip::NamedAssignment>& pool) {
  std::string out;
  for (const mip::NamedAssignment& sol : pool) {
    bool first = true;
    for (const auto& [name, value] : sol) {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", value);
      out += (first ? "" : " ") + name + "=" + buf;
      first = false;
    }
    out += '\n';
  }
  return out;
}

CommandResult RunCommand(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen(("(" + command + "\n) 2>&1").c_str(), "r");
  if (pipe == nullptr) throw SolverError("cannot start solver", "");
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : 128;
  return result;
}

CandidatePool OptimizeExternal(const graph::GraphSpaceSpec& spec,
                               const gp::GpState& gp, double beta_sqrt, int k,
                               const KeySet& exclude,
                               const ExternalSolverConfig& config) {
  if (config.command.empty()) {
    throw InvalidArgumentError("no external solver command configured");
  }
  mip::MipModel model =
      mip::BuildAcquisitionModel(spec, gp, beta_sqrt, config.kernel);
  std::vector<graph::LabeledGraph> excluded;
  for (const std::string& key : exclude) {
    excluded.push_back(graph::GraphFromKey(key));
  }
  mip::AddNoGoodCuts(model, excluded);

  const std::string dir =
      config.work_dir.empty() ? MakeTempDir() : config.work_dir;
  std::filesystem::create_directories(dir);
  const std::string model_path = dir + "/acquisition.lp";
  const std::string solution_path = dir + "/acquisition.pool";
  WriteTextFile(model_path, mip::WriteLp(model));
  std::filesystem::remove(solution_path);
  const int pool_size = config.pool_size > 0 ? config.pool_size : k;
  const CommandResult run =
      RunCommand(ExpandCommand(config.command, model_path, solution_path,
                               config.time_limit, pool_size));
  if (run.exit_code != 0) {
    throw SolverError(
        "solver exited with status " + std::to_string(run.exit_code),
        run.output);
  }
  if (!std::filesystem::exists(solution_path)) {
    throw SolverError("solver wrote no solution file", run.output);
  }
  std::vector<mip::NamedAssignment> pool;
  try {
    pool = ParseSolutionPool(ReadTextFile(solution_path));
  } catch (const SchemaError& e) {
    throw SolverError(std::string("unparsable solution: ") + e.what(),
                      run.output);
  }
  if (pool.empty()) {
    throw SolverError("solver reported no feasible solution", run.output);
  }

  TopK top(k);
  for (const mip::NamedAssignment& named : pool) {
    // Absent names read as zero.
    mip::Assignment values = mip::FromNamed(model, named, nullptr);
    for (int i = 0; i < model.num_variables(); ++i) {
      if (model.variable(i).integral()) values[i] = std::round(values[i]);
    }
    for (const mip::Violation& v : mip::CheckAssignment(model, values)) {
      const mip::Constraint* c = nullptr;
      for (const mip::Constraint& row : model.constraints()) {
        if (row.name == v.constraint_name) {
          c = &row;
          break;
        }
      }
      if (v.constraint_tag == mip::kTagDomain ||
          (c != nullptr && mip::IsIntegralConstraint(model, *c))) {
        throw SolverError("solver returned an infeasible solution (" +
                              v.constraint_name + ")",
                          run.output);
      }
    }
    graph::LabeledGraph g = mip::DecodeGraph(model, values);
    std::string reason;
    if (!graph::InSpace(spec, g, &reason)) {
      throw SolverError("decoded graph outside the space: " + reason,
                        run.output);
    }
    Candidate c = ScoreCandidate(gp, beta_sqrt, g);
    if (exclude.contains(c.key)) continue;
    top.Offer(std::move(c));
  }
  CandidatePool out;
  out.candidates = std::move(top).Take();
  out.certificate = Certificate::kExternalSolver;
  return out;
}

}  // namespace graphbo::acq
