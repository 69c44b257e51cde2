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

// Consistency of finite sets of instantiated formulas.
//
// A set is consistent when some x satisfies every member, where x is either
// an element of the structure or one new element added to it inside the
// structure's class. What the class allows for a new element:
//   random_graph      any adjacency to the old vertices, never to itself
//   equality          nothing beyond being distinct
//   set_intersection  a new point belongs to no set
//   generic           any truth value for every atom that mentions x
//
// brute_force_consistent searches these assignments literally and is the
// reference. The theory oracles decide the same question from the literal
// pattern: negated instances are disjunctions, so the driver branches on
// which literal each one falsifies and hands conjunctions to the oracle.

#ifndef TREEPROP_ORACLE_HPP_
#define TREEPROP_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treeprop/error.hpp"
#include "treeprop/formula.hpp"
#include "treeprop/structure.hpp"

namespace treeprop {

inline constexpr std::size_t kDefaultFreshBound = std::size_t{1} << 16;

namespace detail {

inline bool literal_true_at(const FinStructure& s, const GroundLiteral& l, ElementId x) {
  ElementTuple args;
  args.reserve(l.args.size());
  for (const auto& a : l.args) args.push_back(a ? *a : x);
  return s.holds(l.relation, args) == l.positive;
}

inline bool formula_true(const InstantiatedFormula& f, auto&& literal_value) {
  bool all = true;
  for (const GroundLiteral& l : f.literals) {
    if (!literal_value(l)) {
      all = false;
      break;
    }
  }
  return all == f.positive;
}

// Key of an atom about a new element x: relation plus arguments, x coded as
// nullopt. Random-graph edges are stored with x first.
using FreshAtom = std::pair<std::string, std::vector<std::optional<ElementId>>>;

// Truth of the atom of `l` (ignoring its sign) for a new element: a fixed
// value, or nullopt when the class leaves it free.
inline std::optional<bool> fresh_atom_value(OracleKind kind, const GroundLiteral& l) {
  const std::size_t xs = static_cast<std::size_t>(
      std::count(l.args.begin(), l.args.end(), std::nullopt));
  if (l.relation == "=") return xs == 2;
  if (kind == OracleKind::kRandomGraph && l.relation == "R") {
    if (xs == l.args.size()) return false;
    return std::nullopt;
  }
  if (kind == OracleKind::kSetIntersection && l.relation == "in") return false;
  if (kind == OracleKind::kEquality) return false;
  return std::nullopt;
}

inline FreshAtom fresh_atom_key(OracleKind kind, const GroundLiteral& l) {
  FreshAtom key{l.relation, l.args};
  if (kind == OracleKind::kRandomGraph && l.relation == "R" && key.second.size() == 2 &&
      key.second[1] == std::nullopt)
    std::swap(key.second[0], key.second[1]);
  return key;
}

}  // namespace detail

// Reference decision procedure. Gives up on new-element patterns beyond
// `fresh_bound` and then answers from the patterns it tried.
inline bool brute_force_consistent(const FinStructure& s,
                                   std::span<const InstantiatedFormula> formulas,
                                   std::size_t fresh_bound = kDefaultFreshBound) {
  for (ElementId e = 0; e < s.size(); ++e) {
    const bool ok = std::all_of(formulas.begin(), formulas.end(), [&](const auto& f) {
      return detail::formula_true(f, [&](const GroundLiteral& l) {
        return detail::literal_true_at(s, l, e);
      });
    });
    if (ok) return true;
  }
  const OracleKind kind = s.kind();
  std::map<detail::FreshAtom, std::size_t> free_atoms;
  for (const auto& f : formulas)
    for (const auto& l : f.literals)
      if (l.mentions_x() && !detail::fresh_atom_value(kind, l))
        free_atoms.emplace(detail::fresh_atom_key(kind, l), free_atoms.size());
  const std::size_t n = free_atoms.size();
  const std::uint64_t patterns = n >= 63 ? UINT64_MAX : (std::uint64_t{1} << n);
  for (std::uint64_t mask = 0; mask < patterns && mask < fresh_bound; ++mask) {
    auto value = [&](const GroundLiteral& l) {
      if (!l.mentions_x()) {
        ElementTuple args;
        for (const auto& a : l.args) args.push_back(*a);
        return s.holds(l.relation, args) == l.positive;
      }
      bool atom;
      if (auto fixed = detail::fresh_atom_value(kind, l)) {
        atom = *fixed;
      } else {
        const std::size_t bit = free_atoms.at(detail::fresh_atom_key(kind, l));
        atom = (mask >> bit) & 1U;
      }
      return atom == l.positive;
    };
    const bool ok = std::all_of(formulas.begin(), formulas.end(),
                                [&](const auto& f) { return detail::formula_true(f, value); });
    if (ok) return true;
  }
  return false;
}

// A decision procedure for conjunctions of ground literals in x.
class TheoryOracle {
 public:
  virtual ~TheoryOracle() = default;
  virtual OracleKind kind() const = 0;
  // Throws for relations the theory does not interpret.
  virtual void validate(const GroundLiteral& l) const = 0;
  virtual bool conjunction_consistent(const FinStructure& s,
                                      std::span<const GroundLiteral> lits) const = 0;

 protected:
  static void unsupported(const GroundLiteral& l, OracleKind k) {
    throw Error("relation '" + l.relation + "' is not supported by the " + to_string(k) +
                " oracle");
  }

  // Shared part of every decision: closed literals are evaluated, x=x is
  // true, and a positive equality pins x to an element. Returns a final
  // answer, or nullopt when x is not pinned and the theory must decide.
  static std::optional<bool> settle_common(const FinStructure& s,
                                           std::span<const GroundLiteral> lits) {
    std::optional<ElementId> pinned;
    for (const GroundLiteral& l : lits) {
      if (!l.mentions_x()) {
        ElementTuple args;
        for (const auto& a : l.args) args.push_back(*a);
        if (s.holds(l.relation, args) != l.positive) return false;
        continue;
      }
      if (l.relation != "=") continue;
      const auto other = l.args[0] ? l.args[0] : l.args[1];
      if (!other) {
        if (!l.positive) return false;
        continue;
      }
      if (l.positive) {
        if (pinned && *pinned != *other) return false;
        pinned = other;
      }
    }
    if (!pinned) return std::nullopt;
    return std::all_of(lits.begin(), lits.end(), [&](const GroundLiteral& l) {
      return detail::literal_true_at(s, l, *pinned);
    });
  }
};

class RandomGraphOracle final : public TheoryOracle {
 public:
  OracleKind kind() const override { return OracleKind::kRandomGraph; }

  void validate(const GroundLiteral& l) const override {
    if ((l.relation != "R" && l.relation != "=") || l.args.size() != 2) unsupported(l, kind());
  }

  bool conjunction_consistent(const FinStructure& s,
                              std::span<const GroundLiteral> lits) const override {
    if (auto r = settle_common(s, lits)) return *r;
    // A new vertex: only contradictory edge requirements and x R x fail.
    std::map<ElementId, bool> required;
    for (const GroundLiteral& l : lits) {
      if (l.relation != "R" || !l.mentions_x()) continue;
      const auto other = l.args[0] ? l.args[0] : l.args[1];
      if (!other) {
        if (l.positive) return false;
        continue;
      }
      auto [it, inserted] = required.emplace(*other, l.positive);
      if (!inserted && it->second != l.positive) return false;
    }
    return true;
  }
};

class EqualityOracle final : public TheoryOracle {
 public:
  OracleKind kind() const override { return OracleKind::kEquality; }

  void validate(const GroundLiteral& l) const override {
    if (l.relation != "=") unsupported(l, kind());
  }

  bool conjunction_consistent(const FinStructure& s,
                              std::span<const GroundLiteral> lits) const override {
    // Unpinned: a new element differs from everything named.
    return settle_common(s, lits).value_or(true);
  }
};

class SetIntersectionOracle final : public TheoryOracle {
 public:
  OracleKind kind() const override { return OracleKind::kSetIntersection; }

  void validate(const GroundLiteral& l) const override {
    if (l.relation == "=") return;
    if (l.relation != "in" || l.args.size() != 2) unsupported(l, kind());
    if (l.mentions_x() && (l.args[0] || !l.args[1]))
      throw Error("the set_intersection oracle only decides x in S");
  }

  bool conjunction_consistent(const FinStructure& s,
                              std::span<const GroundLiteral> lits) const override {
    if (auto r = settle_common(s, lits)) return *r;
    std::vector<ElementId> required, forbidden_sets, excluded;
    for (const GroundLiteral& l : lits) {
      if (!l.mentions_x()) continue;
      if (l.relation == "=") {
        if (!l.positive && (l.args[0] || l.args[1])) excluded.push_back(l.args[0] ? *l.args[0] : *l.args[1]);
        continue;
      }
      (l.positive ? required : forbidden_sets).push_back(*l.args[1]);
    }
    // A new point lies in no set.
    if (required.empty()) return true;
    std::vector<ElementId> candidates = s.members(required.front());
    std::sort(candidates.begin(), candidates.end());
    auto drop_if = [&](auto pred) {
      candidates.erase(std::remove_if(candidates.begin(), candidates.end(), pred),
                       candidates.end());
    };
    for (ElementId set : required) {
      const auto& m = s.members(set);
      drop_if([&](ElementId c) { return std::find(m.begin(), m.end(), c) == m.end(); });
    }
    for (ElementId set : forbidden_sets) {
      const auto& m = s.members(set);
      drop_if([&](ElementId c) { return std::find(m.begin(), m.end(), c) != m.end(); });
    }
    drop_if([&](ElementId c) {
      return std::find(excluded.begin(), excluded.end(), c) != excluded.end();
    });
    return !candidates.empty();
  }
};

inline const TheoryOracle* theory_oracle(OracleKind kind) {
  static const RandomGraphOracle rg;
  static const EqualityOracle eq;
  static const SetIntersectionOracle set;
  switch (kind) {
    case OracleKind::kRandomGraph: return &rg;
    case OracleKind::kEquality: return &eq;
    case OracleKind::kSetIntersection: return &set;
    default: return nullptr;
  }
}

namespace detail {

inline bool branch_negations(const TheoryOracle& oracle, const FinStructure& s,
                             const std::vector<const InstantiatedFormula*>& negated,
                             std::size_t next, std::vector<GroundLiteral>& conj) {
  if (!oracle.conjunction_consistent(s, conj)) return false;
  if (next == negated.size()) return true;
  for (const GroundLiteral& l : negated[next]->literals) {
    GroundLiteral flipped = l;
    flipped.positive = !l.positive;
    conj.push_back(std::move(flipped));
    const bool ok = branch_negations(oracle, s, negated, next + 1, conj);
    conj.pop_back();
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

// Decides consistency with a theory oracle. The structure is taken from
// the formulas, which must all share it.
inline bool consistent_with(const TheoryOracle& oracle,
                            std::span<const InstantiatedFormula> formulas) {
  if (formulas.empty()) return true;
  const FinStructure* s = formulas.front().structure.get();
  std::vector<GroundLiteral> conj;
  std::vector<const InstantiatedFormula*> negated;
  for (const auto& f : formulas) {
    if (f.structure.get() != s) throw Error("formulas over mixed structures");
    for (const auto& l : f.literals) oracle.validate(l);
    if (f.positive) conj.insert(conj.end(), f.literals.begin(), f.literals.end());
    else negated.push_back(&f);
  }
  return detail::branch_negations(oracle, *s, negated, 0, conj);
}

inline bool oracle_consistent(OracleKind kind, std::span<const InstantiatedFormula> formulas) {
  if (formulas.empty()) return true;
  const FinStructure& s = *formulas.front().structure;
  if (s.kind() != kind)
    throw Error("a " + to_string(s.kind()) + " structure handed to the " + to_string(kind) +
                " oracle");
  if (const TheoryOracle* o = theory_oracle(kind)) return consistent_with(*o, formulas);
  for (const auto& f : formulas)
    if (f.structure.get() != &s) throw Error("formulas over mixed structures");
  return brute_force_consistent(s, formulas);
}

inline bool oracle_consistent(std::span<const InstantiatedFormula> formulas) {
  if (formulas.empty()) return true;
  return oracle_consistent(formulas.front().structure->kind(), formulas);
}

struct KInconsistency {
  bool inconsistent = true;
  bool vacuous = false;
  // First consistent k-subset in lexicographic order, when one exists.
  std::vector<std::size_t> consistent_subset;
};

inline KInconsistency k_inconsistent(OracleKind kind,
                                     std::span<const InstantiatedFormula> formulas,
                                     std::size_t k) {
  if (k == 0) throw Error("k must be at least 1");
  KInconsistency out;
  if (k > formulas.size()) {
    out.vacuous = true;
    return out;
  }
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<InstantiatedFormula> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = formulas[idx[i]];
    if (oracle_consistent(kind, subset)) {
      out.inconsistent = false;
      out.consistent_subset = idx;
      return out;
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == formulas.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace treeprop

#endif  // TREEPROP_ORACLE_HPP_
