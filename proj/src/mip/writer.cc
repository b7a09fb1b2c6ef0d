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

#include "graphbo/mip/writer.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

#include "graphbo/util/errors.h"

namespace graphbo::mip {
namespace {

constexpr size_t kLineWidth = 100;

std::string Num(double x) {
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Accumulates space-separated tokens into lines no wider than kLineWidth.
class LineWriter {
 public:
  explicit LineWriter(std::string* out) : out_(out) {}
  void Token(const std::string& token) {
    if (!line_.empty() && line_.size() + 1 + token.size() > kLineWidth) {
      Flush();
    }
    line_ += line_.empty() ? "   " : " ";
    line_ += token;
  }
  void Flush() {
    if (line_.empty()) return;
    *out_ += line_;
    *out_ += '\n';
    line_.clear();
  }

 private:
  std::string* out_;
  std::string line_;
};

void SignedTerm(LineWriter& w, double coef, const std::string& body,
                bool first) {
  if (coef < 0) {
    w.Token("-");
  } else if (!first) {
    w.Token("+");
  }
  w.Token(body.empty() ? Num(std::abs(coef))
                      : Num(std::abs(coef)) + " " + body);
}

}  // namespace

FileFormat ParseFileFormat(const std::string& name) {
  if (name == "lp" || name == "LP") return FileFormat::kLp;
  if (name == "mps" || name == "MPS") return FileFormat::kMps;
  throw InvalidArgumentError("unknown model format: " + name);
}

FileFormat FormatOfPath(const std::string& path) {
  const size_t dot = path.rfind('.');
  if (dot == std::string::npos) {
    throw InvalidArgumentError("cannot infer model format of " + path);
  }
  return ParseFileFormat(path.substr(dot + 1));
}

std::string WriteLp(const MipModel& model) {
  const auto& vars = model.variables();
  std::string out = "\\ graphbo model\nMinimize\n";
  {
    LineWriter w(&out);
    w.Token("obj:");
    bool first = true;
    for (const Term& t : model.objective().terms) {
      SignedTerm(w, t.coef, vars[t.var].name, first);
      first = false;
    }
    if (model.objective().constant != 0.0 || first) {
      SignedTerm(w, model.objective().constant, "", first);
    }
    w.Flush();
  }
  out += "Subject To\n";
  for (const Constraint& c : model.constraints()) {
    LineWriter w(&out);
    w.Token(c.name + ":");
    bool first = true;
    for (const Term& t : c.linear) {
      SignedTerm(w, t.coef, vars[t.var].name, first);
      first = false;
    }
    if (!c.quadratic.empty()) {
      w.Token(first ? "[" : "+ [");
      bool qfirst = true;
      for (const QuadTerm& q : c.quadratic) {
        const std::string body =
            q.var1 == q.var2 ? vars[q.var1].name + " ^2"
                             : vars[q.var1].name + " * " + vars[q.var2].name;
        SignedTerm(w, q.coef, body, qfirst);
        qfirst = false;
      }
      w.Token("]");
      first = false;
    }
    if (first) w.Token("0 " + vars.front().name);
    w.Token(SenseSymbol(c.sense));
    w.Token(Num(c.rhs));
    w.Flush();
  }
  out += "Bounds\n";
  for (const Variable& v : vars) {
    if (std::isinf(v.lower) && std::isinf(v.upper)) {
      out += "   " + v.name + " free\n";
    } else if (std::isinf(v.upper)) {
      out += "   " + v.name + " >= " + Num(v.lower) + "\n";
    } else {
      out += "   " + Num(v.lower) + " <= " + v.name + " <= " + Num(v.upper) +
             "\n";
    }
  }
  const auto section = [&](const char* title, VarType type) {
    bool any = false;
    LineWriter w(&out);
    for (const Variable& v : vars) {
      if (v.type != type) continue;
      if (!any) out += title;
      any = true;
      w.Token(v.name);
    }
    w.Flush();
  };
  section("Generals\n", VarType::kInteger);
  section("Binaries\n", VarType::kBinary);
  out += "End\n";
  return out;
}

std::string WriteMps(const MipModel& model) {
  const auto& vars = model.variables();
  const auto& cons = model.constraints();
  std::string out = "NAME graphbo\nROWS\n N obj\n";
  for (const Constraint& c : cons) {
    const char* type = c.sense == Sense::kLessEqual   ? "L"
                       : c.sense == Sense::kEqual     ? "E"
                                                      : "G";
    out += std::string(" ") + type + " " + c.name + "\n";
  }
  // Column-major coefficient lists.
  std::vector<std::vector<std::pair<int, double>>> columns(vars.size());
  for (const Term& t : model.objective().terms) {
    columns[t.var].push_back({-1, t.coef});
  }
  for (size_t r = 0; r < cons.size(); ++r) {
    for (const Term& t : cons[r].linear) {
      columns[t.var].push_back({static_cast<int>(r), t.coef});
    }
  }
  out += "COLUMNS\n";
  bool in_int = false;
  int marker = 0;
  for (size_t i = 0; i < vars.size(); ++i) {
    const bool integral = vars[i].integral();
    if (integral != in_int) {
      out += " MARKER" + std::to_string(marker++) + " 'MARKER' " +
             (integral ? "'INTORG'" : "'INTEND'") + "\n";
      in_int = integral;
    }
    if (columns[i].empty()) {
      out += " " + vars[i].name + " obj 0\n";
    }
    for (const auto& [row, coef] : columns[i]) {
      out += " " + vars[i].name + " " + (row < 0 ? "obj" : cons[row].name) +
             " " + Num(coef) + "\n";
    }
  }
  if (in_int) {
    out += " MARKER" + std::to_string(marker++) + " 'MARKER' 'INTEND'\n";
  }
  out += "RHS\n";
  if (model.objective().constant != 0.0) {
    out += " RHS obj " + Num(-model.objective().constant) + "\n";
  }
  for (const Constraint& c : cons) {
    if (c.rhs != 0.0) out += " RHS " + c.name + " " + Num(c.rhs) + "\n";
  }
  out += "BOUNDS\n";
  for (const Variable& v : vars) {
    if (v.type == VarType::kBinary) {
      out += " BV BND " + v.name + "\n";
      continue;
    }
    if (std::isinf(v.lower) && std::isinf(v.upper)) {
      out += " FR BND " + v.name + "\n";
      continue;
    }
    if (std::isinf(v.lower)) {
      out += " MI BND " + v.name + "\n";
    } else {
      out += " LO BND " + v.name + " " + Num(v.lower) + "\n";
    }
    if (!std::isinf(v.upper)) {
      out += " UP BND " + v.name + " " + Num(v.upper) + "\n";
    }
  }
  for (const Constraint& c : cons) {
    if (c.quadratic.empty()) continue;
    out += "QCMATRIX " + c.name + "\n";
    std::map<std::pair<int, int>, double> q;
    for (const QuadTerm& t : c.quadratic) {
      if (t.var1 == t.var2) {
        q[{t.var1, t.var1}] += t.coef;
      } else {
        q[{t.var1, t.var2}] += 0.5 * t.coef;
        q[{t.var2, t.var1}] += 0.5 * t.coef;
      }
    }
    for (const auto& [ij, coef] : q) {
      out += " " + vars[ij.first].name + " " + vars[ij.second].name + " " +
             Num(coef) + "\n";
    }
  }
  out += "ENDATA\n";
  return out;
}

std::string WriteModel(const MipModel& model, FileFormat format) {
  return format == FileFormat::kLp ? WriteLp(model) : WriteMps(model);
}

}  // namespace graphbo::mip
