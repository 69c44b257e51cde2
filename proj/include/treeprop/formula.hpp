// Copyright 2026 The treeprop Authors
//
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

// Formula templates phi(x; y0..y{n-1}): conjunctions of relational literals
// in the single free variable x over parameter slots.

#ifndef TREEPROP_FORMULA_HPP_
#define TREEPROP_FORMULA_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "treeprop/error.hpp"
#include "treeprop/structure.hpp"

namespace treeprop {

// Argument code for the free variable; slot k is coded as k.
inline constexpr int kVarX = -1;

struct Literal {
  std::string relation;
  bool positive = true;
  std::vector<int> args;

  friend bool operator==(const Literal&, const Literal&) = default;
};

class FormulaTemplate {
 public:
  FormulaTemplate() = default;
  FormulaTemplate(std::string name, std::size_t parameter_arity, std::vector<Literal> literals)
      : name_(std::move(name)), arity_(parameter_arity), literals_(std::move(literals)) {
    for (const Literal& l : literals_) {
      if (l.relation.empty()) throw Error("literal with empty relation name");
      if (l.relation == "=" && l.args.size() != 2) throw Error("= takes two arguments");
      for (int a : l.args)
        if (a < kVarX || a >= static_cast<int>(arity_))
          throw Error("template '" + name_ + "': slot y" + std::to_string(a) +
                      " outside parameter arity " + std::to_string(arity_));
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t parameter_arity() const noexcept { return arity_; }
  const std::vector<Literal>& literals() const noexcept { return literals_; }

  friend bool operator==(const FormulaTemplate&, const FormulaTemplate&) = default;

 private:
  std::string name_;
  std::size_t arity_ = 0;
  std::vector<Literal> literals_;
};

// nullopt arguments stand for x.
struct GroundLiteral {
  std::string relation;
  bool positive = true;
  std::vector<std::optional<ElementId>> args;

  bool mentions_x() const {
    for (const auto& a : args)
      if (!a) return true;
    return false;
  }

  friend bool operator==(const GroundLiteral&, const GroundLiteral&) = default;
};

struct InstantiatedFormula {
  std::shared_ptr<const FinStructure> structure;
  std::string template_name;
  ElementTuple parameters;
  bool positive = true;
  std::vector<GroundLiteral> literals;
};

inline InstantiatedFormula instantiate_template(const FormulaTemplate& t,
                                                std::shared_ptr<const FinStructure> structure,
                                                ElementTuple params, bool positive = true) {
  if (params.size() != t.parameter_arity())
    throw Error("template '" + t.name() + "' takes " + std::to_string(t.parameter_arity()) +
                " parameters, got " + std::to_string(params.size()));
  if (!structure) throw Error("instance without a structure");
  for (ElementId e : params)
    if (e >= structure->size()) throw Error("parameter outside the structure");
  InstantiatedFormula f;
  f.template_name = t.name();
  f.positive = positive;
  for (const Literal& l : t.literals()) {
    GroundLiteral g{l.relation, l.positive, {}};
    for (int a : l.args) {
      if (a == kVarX) g.args.emplace_back(std::nullopt);
      else g.args.emplace_back(params[static_cast<std::size_t>(a)]);
    }
    f.literals.push_back(std::move(g));
  }
  f.parameters = std::move(params);
  f.structure = std::move(structure);
  return f;
}

inline InstantiatedFormula negate(InstantiatedFormula f) {
  f.positive = !f.positive;
  return f;
}

inline std::string to_string(const GroundLiteral& l, const FinStructure& s) {
  auto arg = [&](const std::optional<ElementId>& a) { return a ? s.name(*a) : std::string("x"); };
  if (l.relation == "=")
    return arg(l.args[0]) + (l.positive ? "=" : "!=") + arg(l.args[1]);
  std::string out = l.positive ? "" : "!";
  out += l.relation + "(";
  for (std::size_t i = 0; i < l.args.size(); ++i) out += (i ? "," : "") + arg(l.args[i]);
  return out + ")";
}

inline std::string to_string(const InstantiatedFormula& f) {
  std::string out = f.positive ? "" : "!(";
  for (std::size_t i = 0; i < f.literals.size(); ++i)
    out += (i ? " & " : "") + to_string(f.literals[i], *f.structure);
  if (f.literals.empty()) out += "true";
  return f.positive ? out : out + ")";
}

// psi(x; y0..y{copies*n-1}) = phi(x; y0..y{n-1}) & phi(x; yn..y{2n-1}) & ...
inline FormulaTemplate conjunction_template(const FormulaTemplate& phi, std::size_t copies) {
  if (copies == 0) throw Error("conjunction of zero copies");
  std::vector<Literal> lits;
  const int n = static_cast<int>(phi.parameter_arity());
  for (std::size_t c = 0; c < copies; ++c) {
    for (Literal l : phi.literals()) {
      for (int& a : l.args)
        if (a != kVarX) a += static_cast<int>(c) * n;
      lits.push_back(std::move(l));
    }
  }
  return FormulaTemplate(phi.name() + "^" + std::to_string(copies),
                         phi.parameter_arity() * copies, std::move(lits));
}

// x R y0 & !(x R y1)
inline FormulaTemplate edge_difference_template() {
  return FormulaTemplate("edge-difference", 2,
                         {{"R", true, {kVarX, 0}}, {"R", false, {kVarX, 1}}});
}

inline FormulaTemplate edge_template() {
  return FormulaTemplate("edge", 1, {{"R", true, {kVarX, 0}}});
}

inline FormulaTemplate equality_template() {
  return FormulaTemplate("equality", 1, {{"=", true, {kVarX, 0}}});
}

inline FormulaTemplate membership_template() {
  return FormulaTemplate("membership", 1, {{"in", true, {kVarX, 0}}});
}

}  // namespace treeprop

#endif  // TREEPROP_FORMULA_HPP_
