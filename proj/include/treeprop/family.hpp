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

// Indexed parameter families and witnesses.
//
// Every index element carries a parameter tuple of one fixed length. The
// single exception is the root of a tree, which may be left unassigned:
// several witnesses only have parameters below the root, and an unassigned
// root contributes nothing to paths.

#ifndef TREEPROP_FAMILY_HPP_
#define TREEPROP_FAMILY_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "treeprop/error.hpp"
#include "treeprop/formula.hpp"
#include "treeprop/index.hpp"
#include "treeprop/qftype.hpp"
#include "treeprop/structure.hpp"

namespace treeprop {

struct IndexedFamily {
  IndexStructure index;
  std::shared_ptr<const FinStructure> structure;
  std::vector<std::optional<ElementTuple>> assignment;
  ElementTuple context;

  bool assigned(IndexId id) const { return id < assignment.size() && assignment[id].has_value(); }

  const ElementTuple& at(IndexId id) const {
    if (!assigned(id)) throw Error("index element " + index_label(index, id) + " is unassigned");
    return *assignment[id];
  }

  std::size_t tuple_length() const {
    for (const auto& a : assignment)
      if (a) return a->size();
    return 0;
  }

  // Assigned ids in increasing order.
  std::vector<IndexId> domain() const {
    std::vector<IndexId> out;
    for (IndexId id = 0; id < assignment.size(); ++id)
      if (assignment[id]) out.push_back(id);
    return out;
  }

  void validate() const {
    if (!structure) throw Error("family without a structure");
    const std::size_t n = index_size(index);
    if (assignment.size() != n)
      throw Error("assignment covers " + std::to_string(assignment.size()) + " of " +
                  std::to_string(n) + " index elements");
    const std::size_t len = tuple_length();
    for (IndexId id = 0; id < n; ++id) {
      if (!assignment[id]) {
        if (index_kind(index) == IndexKind::kTree && id == 0) continue;
        throw Error("index element " + index_label(index, id) + " is unassigned");
      }
      if (assignment[id]->size() != len)
        throw Error("index element " + index_label(index, id) + " has a tuple of length " +
                    std::to_string(assignment[id]->size()) + ", expected " + std::to_string(len));
      for (ElementId e : *assignment[id])
        if (e >= structure->size()) throw Error("assignment uses an element outside the structure");
    }
    for (ElementId e : context)
      if (e >= structure->size()) throw Error("context uses an element outside the structure");
  }
};

// Either k (every k-subset inconsistent) or q (every q-realizing tuple
// inconsistent).
struct InconsistencySpec {
  std::optional<std::size_t> k;
  std::optional<QfType> q;

  static InconsistencySpec of_k(std::size_t k) { return {k, std::nullopt}; }
  static InconsistencySpec of_q(QfType q) { return {std::nullopt, std::move(q)}; }

  std::string describe() const {
    if (k) return "k=" + std::to_string(*k);
    if (q) return "q=" + treeprop::describe(*q);
    return "none";
  }
};

struct WitnessFamily {
  IndexedFamily family;
  FormulaTemplate formula;
  InconsistencySpec spec;

  OracleKind oracle() const { return family.structure->kind(); }

  InstantiatedFormula instance(IndexId id, bool positive = true) const {
    return instantiate_template(formula, family.structure, family.at(id), positive);
  }

  std::vector<InstantiatedFormula> instances(const std::vector<IndexId>& ids) const {
    std::vector<InstantiatedFormula> out;
    out.reserve(ids.size());
    for (IndexId id : ids) out.push_back(instance(id));
    return out;
  }

  void validate() const {
    family.validate();
    if (!family.domain().empty() && family.tuple_length() != formula.parameter_arity())
      throw Error("template '" + formula.name() + "' takes " +
                  std::to_string(formula.parameter_arity()) + " parameters but the family has " +
                  std::to_string(family.tuple_length()) + "-tuples");
    if (spec.k && *spec.k == 0) throw Error("k must be at least 1");
  }
};

inline std::vector<std::string> labels(const IndexStructure& ix, const std::vector<IndexId>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (IndexId id : ids) out.push_back(index_label(ix, id));
  return out;
}

}  // namespace treeprop

#endif  // TREEPROP_FAMILY_HPP_
