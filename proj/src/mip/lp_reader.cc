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

#include "graphbo/mip/lp_reader.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphbo/util/errors.h"

namespace graphbo::mip {
namespace {

enum class Section { kNone, kObjective, kConstraints, kBounds, kGenerals,
                     kBinaries, kEnd };

struct Token {
  std::string text;
  int line;
};

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::optional<Section> Header(std::string_view line) {
  const std::string l = Lower(line);
  if (l == "minimize" || l == "minimise" || l == "min") {
    return Section::kObjective;
  }
  if (l == "maximize" || l == "maximise" || l == "max") {
    throw SchemaError("maximization models are not supported", -1);
  }
  if (l == "subject to" || l == "such that" || l == "st" || l == "s.t.") {
    return Section::kConstraints;
  }
  if (l == "bounds" || l == "bound") return Section::kBounds;
  if (l == "generals" || l == "general" || l == "gen") {
    return Section::kGenerals;
  }
  if (l == "binaries" || l == "binary" || l == "bin") {
    return Section::kBinaries;
  }
  if (l == "end") return Section::kEnd;
  return std::nullopt;
}

bool IsOperator(char c) {
  return c == '+' || c == '-' || c == '*' || c == '[' || c == ']' ||
         c == ':' || c == '^' || c == '/';
}

bool IsSenseChar(char c) { return c == '<' || c == '>' || c == '='; }

void Tokenize(std::string_view line, int number, std::vector<Token>& out) {
  size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (IsOperator(c)) {
      out.push_back({std::string(1, c), number});
      ++i;
    } else if (IsSenseChar(c)) {
      size_t j = i;
      while (j < line.size() && IsSenseChar(line[j])) ++j;
      out.push_back({std::string(line.substr(i, j - i)), number});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t j = i;
      while (j < line.size() &&
             (std::isdigit(static_cast<unsigned char>(line[j])) ||
              line[j] == '.')) {
        ++j;
      }
      if (j < line.size() && (line[j] == 'e' || line[j] == 'E')) {
        size_t k = j + 1;
        if (k < line.size() && (line[k] == '+' || line[k] == '-')) ++k;
        if (k < line.size() && std::isdigit(static_cast<unsigned char>(line[k]))) {
          while (k < line.size() &&
                 std::isdigit(static_cast<unsigned char>(line[k]))) {
            ++k;
          }
          j = k;
        }
      }
      out.push_back({std::string(line.substr(i, j - i)), number});
      i = j;
    } else {
      size_t j = i;
      while (j < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[j])) &&
             !IsOperator(line[j]) && !IsSenseChar(line[j])) {
        ++j;
      }
      out.push_back({std::string(line.substr(i, j - i)), number});
      i = j;
    }
  }
}

std::optional<double> AsNumber(const std::string& s) {
  const std::string l = Lower(s);
  if (l == "inf" || l == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  if (s.empty() || !(std::isdigit(static_cast<unsigned char>(s[0])) ||
                     s[0] == '.')) {
    return std::nullopt;
  }
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

bool IsSense(const std::string& s) {
  return !s.empty() && IsSenseChar(s[0]);
}

struct RawLinear {
  std::string var;
  double coef;
};

struct RawQuad {
  std::string var1, var2;
  double coef;
};

struct RawExpr {
  std::vector<RawLinear> linear;
  std::vector<RawQuad> quadratic;
  double constant = 0.0;
};

struct RawRow {
  std::string name;
  RawExpr expr;
  Sense sense;
  double rhs;
  int line;
};

class Parser {
 public:
  Parser(const std::vector<Token>& tokens) : t_(tokens) {}

  bool Done() const { return pos_ >= t_.size(); }
  const std::string& Peek(size_t ahead = 0) const {
    static const std::string kEmpty;
    return pos_ + ahead < t_.size() ? t_[pos_ + ahead].text : kEmpty;
  }
  int Line() const {
    return t_.empty() ? 0 : t_[std::min(pos_, t_.size() - 1)].line;
  }
  std::string Next() {
    if (Done()) Fail("unexpected end of section");
    return t_[pos_++].text;
  }
  [[noreturn]] void Fail(const std::string& what) const {
    throw SchemaError("LP parse error: " + what, Line());
  }

  // Optional "name:" prefix.
  std::string Label() {
    if (Peek(1) == ":" && !AsNumber(Peek()) && !IsSense(Peek())) {
      std::string name = Next();
      Next();
      return name;
    }
    return "";
  }

  double SignedNumber() {
    double sign = 1.0;
    while (Peek() == "+" || Peek() == "-") {
      if (Next() == "-") sign = -sign;
    }
    const auto v = AsNumber(Next());
    if (!v) Fail("expected a number");
    return sign * *v;
  }

  // Terms until a sense token or the end of the stream (or the next
  // labelled row when `stop_at_label`).
  RawExpr Expression(bool stop_at_label) {
    RawExpr e;
    while (!Done() && !IsSense(Peek())) {
      if (stop_at_label && Peek(1) == ":" && !e.linear.empty()) break;
      double sign = 1.0;
      while (Peek() == "+" || Peek() == "-") {
        if (Next() == "-") sign = -sign;
      }
      if (Peek() == "[") {
        Next();
        Quadratic(sign, e);
        continue;
      }
      double coef = 1.0;
      if (const auto v = AsNumber(Peek())) {
        coef = *v;
        Next();
        if (Done() || IsSense(Peek()) || Peek() == "+" || Peek() == "-" ||
            (stop_at_label && Peek(1) == ":")) {
          e.constant += sign * coef;
          continue;
        }
      }
      const std::string var = Next();
      if (AsNumber(var) || IsOperator(var[0])) Fail("expected a variable");
      e.linear.push_back({var, sign * coef});
    }
    return e;
  }

  void Quadratic(double outer, RawExpr& e) {
    std::vector<RawQuad> terms;
    while (Peek() != "]") {
      double sign = 1.0;
      while (Peek() == "+" || Peek() == "-") {
        if (Next() == "-") sign = -sign;
      }
      double coef = 1.0;
      if (const auto v = AsNumber(Peek())) {
        coef = *v;
        Next();
      }
      const std::string a = Next();
      if (Peek() == "^") {
        Next();
        if (Next() != "2") Fail("only squares are supported");
        terms.push_back({a, a, sign * coef});
      } else if (Peek() == "*") {
        Next();
        terms.push_back({a, Next(), sign * coef});
      } else {
        Fail("expected ^2 or * inside brackets");
      }
    }
    Next();
    double scale = outer;
    if (Peek() == "/") {
      Next();
      scale /= SignedNumber();
    }
    for (RawQuad& q : terms) {
      q.coef *= scale;
      e.quadratic.push_back(q);
    }
  }

 private:
  const std::vector<Token>& t_;
  size_t pos_ = 0;
};

bool ValidConstraintName(const std::string& name) {
  const size_t pos = name.rfind('_');
  if (pos == std::string::npos || pos == 0 || pos + 1 == name.size()) {
    return false;
  }
  return std::all_of(name.begin() + pos + 1, name.end(), ::isdigit);
}

}  // namespace

MipModel ReadLp(std::string_view text) {
  std::vector<Token> tokens[7];
  Section section = Section::kNone;
  int number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;
    const size_t comment = line.find('\\');
    if (comment != std::string_view::npos) line = line.substr(0, comment);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
      line.remove_suffix(1);
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
      line.remove_prefix(1);
    }
    if (line.empty()) continue;
    try {
      if (const auto h = Header(line)) {
        section = *h;
        continue;
      }
    } catch (const SchemaError& e) {
      throw SchemaError(e.what(), number);
    }
    if (section == Section::kNone || section == Section::kEnd) {
      throw SchemaError("LP text outside any section", number);
    }
    Tokenize(line, number, tokens[static_cast<int>(section)]);
  }

  // Objective.
  Parser obj(tokens[static_cast<int>(Section::kObjective)]);
  obj.Label();
  const RawExpr objective = obj.Expression(false);
  if (!obj.Done()) obj.Fail("unexpected token in objective");

  // Rows.
  std::vector<RawRow> rows;
  Parser rp(tokens[static_cast<int>(Section::kConstraints)]);
  while (!rp.Done()) {
    RawRow row;
    row.line = rp.Line();
    row.name = rp.Label();
    row.expr = rp.Expression(false);
    if (rp.Done()) rp.Fail("constraint without a sense");
    row.sense = ParseSense(rp.Next());
    row.rhs = rp.SignedNumber() - row.expr.constant;
    rows.push_back(std::move(row));
  }

  // Bounds.
  struct Bound {
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
  };
  std::vector<std::string> order;
  std::unordered_map<std::string, Bound> bounds;
  const auto touch = [&](const std::string& name) -> Bound& {
    auto [it, fresh] = bounds.emplace(name, Bound{});
    if (fresh) order.push_back(name);
    return it->second;
  };
  Parser bp(tokens[static_cast<int>(Section::kBounds)]);
  while (!bp.Done()) {
    const std::string& head = bp.Peek();
    if (head == "+" || head == "-" || AsNumber(head)) {
      const double lo = bp.SignedNumber();
      const Sense s1 = ParseSense(bp.Next());
      Bound& b = touch(bp.Next());
      if (s1 == Sense::kEqual) {
        b.lower = b.upper = lo;
        continue;
      }
      if (s1 == Sense::kLessEqual) b.lower = lo; else b.upper = lo;
      if (IsSense(bp.Peek())) {
        const Sense s2 = ParseSense(bp.Next());
        const double hi = bp.SignedNumber();
        if (s2 == Sense::kLessEqual) b.upper = hi; else b.lower = hi;
      }
    } else {
      Bound& b = touch(bp.Next());
      if (Lower(bp.Peek()) == "free") {
        bp.Next();
        b.lower = -std::numeric_limits<double>::infinity();
        b.upper = std::numeric_limits<double>::infinity();
        continue;
      }
      const Sense s = ParseSense(bp.Next());
      const double v = bp.SignedNumber();
      if (s == Sense::kLessEqual) {
        b.upper = v;
      } else if (s == Sense::kGreaterEqual) {
        b.lower = v;
      } else {
        b.lower = b.upper = v;
      }
    }
  }
  const auto names_of = [&](Section s) {
    std::vector<std::string> names;
    for (const Token& t : tokens[static_cast<int>(s)]) names.push_back(t.text);
    return names;
  };
  const std::vector<std::string> generals = names_of(Section::kGenerals);
  const std::vector<std::string> binaries = names_of(Section::kBinaries);
  for (const RawLinear& t : objective.linear) touch(t.var);
  for (const RawRow& r : rows) {
    for (const RawLinear& t : r.expr.linear) touch(t.var);
    for (const RawQuad& q : r.expr.quadratic) {
      touch(q.var1);
      touch(q.var2);
    }
  }
  for (const auto& n : generals) touch(n);
  for (const auto& n : binaries) {
    Bound& b = touch(n);
    b.lower = std::max(b.lower, 0.0);
    b.upper = std::min(b.upper, 1.0);
  }

  MipModel model;
  std::unordered_map<std::string, VarType> types;
  for (const auto& n : generals) types[n] = VarType::kInteger;
  for (const auto& n : binaries) types[n] = VarType::kBinary;
  for (const std::string& name : order) {
    const auto it = types.find(name);
    const VarType type = it == types.end() ? VarType::kContinuous : it->second;
    const Bound& b = bounds[name];
    try {
      model.AddVariable(name, type, b.lower, b.upper);
    } catch (const InvalidArgumentError& e) {
      throw SchemaError(e.what(), -1);
    }
  }
  LinearExpr obj_expr;
  obj_expr.constant = objective.constant;
  for (const RawLinear& t : objective.linear) {
    obj_expr.terms.push_back({model.VariableIndex(t.var), t.coef});
  }
  model.SetObjective(std::move(obj_expr));
  int unnamed = 0;
  for (const RawRow& r : rows) {
    std::vector<Term> linear;
    for (const RawLinear& t : r.expr.linear) {
      linear.push_back({model.VariableIndex(t.var), t.coef});
    }
    std::vector<QuadTerm> quad;
    for (const RawQuad& q : r.expr.quadratic) {
      quad.push_back(
          {model.VariableIndex(q.var1), model.VariableIndex(q.var2), q.coef});
    }
    const std::string name = ValidConstraintName(r.name)
                                 ? r.name
                                 : "row_" + std::to_string(unnamed++);
    try {
      model.AddNamedConstraint(name, std::move(linear), r.sense, r.rhs,
                               std::move(quad));
    } catch (const InvalidArgumentError& e) {
      throw SchemaError(e.what(), r.line);
    }
  }
  return model;
}

}  // namespace graphbo::mip
