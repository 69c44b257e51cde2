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

// Bounded indiscernibility.
//
// Types of parameters are compared through a finite set delta of templates.
// The delta-type of index tuple (i1..in) lists the truth value of every
// delta formula under every assignment of its variables (x and the slots)
// to the entries of a_i1..a_in and of the context. Assignments that only
// touch the context are the same for every tuple and are skipped.

#ifndef TREEPROP_INDISCERNIBILITY_HPP_
#define TREEPROP_INDISCERNIBILITY_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treeprop/error.hpp"
#include "treeprop/family.hpp"
#include "treeprop/formula.hpp"
#include "treeprop/index.hpp"
#include "treeprop/report.hpp"
#include "treeprop/structure.hpp"

namespace treeprop {

using DeltaType = std::vector<bool>;

inline ElementTuple dedup(const ElementTuple& elems) {
  ElementTuple out;
  for (ElementId e : elems)
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  return out;
}

inline DeltaType delta_type(const FinStructure& s, const std::vector<const ElementTuple*>& tuples,
                            const ElementTuple& context, std::span<const FormulaTemplate> delta) {
  ElementTuple pool;
  for (const ElementTuple* t : tuples) pool.insert(pool.end(), t->begin(), t->end());
  const std::size_t own = pool.size();
  for (ElementId e : dedup(context)) pool.push_back(e);
  DeltaType out;
  if (pool.empty()) return out;
  for (const FormulaTemplate& t : delta) {
    // Variables the template actually uses; kVarX first if present.
    std::vector<int> vars;
    for (const Literal& l : t.literals())
      for (int a : l.args)
        if (std::find(vars.begin(), vars.end(), a) == vars.end()) vars.push_back(a);
    std::sort(vars.begin(), vars.end());
    std::vector<std::size_t> choice(vars.size(), 0);
    std::vector<ElementId> value(t.parameter_arity() + 1);  // slot k at k+1, x at 0
    while (true) {
      const bool touches_own =
          vars.empty() || std::any_of(choice.begin(), choice.end(),
                                      [&](std::size_t c) { return c < own; });
      if (touches_own) {
        for (std::size_t v = 0; v < vars.size(); ++v)
          value[static_cast<std::size_t>(vars[v] + 1)] = pool[choice[v]];
        bool holds = true;
        for (const Literal& l : t.literals()) {
          ElementTuple args;
          for (int a : l.args) args.push_back(value[static_cast<std::size_t>(a + 1)]);
          if (s.holds(l.relation, args) != l.positive) {
            holds = false;
            break;
          }
        }
        out.push_back(holds);
      }
      std::size_t v = 0;
      while (v < choice.size() && ++choice[v] == pool.size()) choice[v++] = 0;
      if (v == choice.size()) break;
    }
  }
  return out;
}

inline DeltaType family_delta_type(const IndexedFamily& fam, const IndexTuple& ids,
                                   std::span<const FormulaTemplate> delta,
                                   bool with_context = true) {
  std::vector<const ElementTuple*> tuples;
  for (IndexId id : ids) tuples.push_back(&fam.at(id));
  static const ElementTuple kEmpty;
  return delta_type(*fam.structure, tuples, with_context ? fam.context : kEmpty, delta);
}

namespace detail {

// Calls fn on every tuple over `domain` of length 1..arity, shortest first,
// each length in lexicographic order. Stops when fn returns false.
template <typename Fn>
void for_each_tuple(const std::vector<IndexId>& domain, std::size_t arity, Fn&& fn) {
  if (domain.empty()) return;
  for (std::size_t len = 1; len <= arity; ++len) {
    std::vector<std::size_t> pos(len, 0);
    IndexTuple t(len);
    while (true) {
      for (std::size_t i = 0; i < len; ++i) t[i] = domain[pos[i]];
      if (!fn(t)) return;
      std::size_t i = len;
      while (i > 0 && ++pos[i - 1] == domain.size()) pos[--i] = 0;
      if (i == 0) break;
    }
  }
}

}  // namespace detail

// Every pair of index tuples of length <= arity with equal quantifier-free
// type must have equal delta-types over the context.
inline Report check_indiscernible(const IndexedFamily& fam, std::size_t arity,
                                  std::span<const FormulaTemplate> delta) {
  if (arity == 0) throw Error("indiscernibility needs an arity bound of at least 1");
  fam.validate();
  Report r;
  r.check = "indiscernible";
  r.bound = arity;
  r.notes.push_back("bounded: index tuples of length <= " + std::to_string(arity) + ", " +
                    std::to_string(delta.size()) + " delta formulas");
  Clause& c = r.add("indiscernible");
  std::map<QfType, std::pair<IndexTuple, DeltaType>> seen;
  detail::for_each_tuple(fam.domain(), arity, [&](const IndexTuple& t) {
    ++c.checked;
    QfType q = qftp_index(fam.index, t);
    DeltaType d = family_delta_type(fam, t, delta);
    auto [it, inserted] = seen.try_emplace(std::move(q), t, d);
    if (!inserted && it->second.second != d) {
      c.pass = false;
      c.violating = {labels(fam.index, it->second.first), labels(fam.index, t)};
      c.detail = "equal index types " + describe(it->first) + " but different delta-types";
      return false;
    }
    return true;
  });
  if (c.checked == 0) c.vacuous = true;
  return r.finish();
}

// Strong indiscernibility of an array: each row over the other rows, and
// the sequence of rows.
inline Report check_strong_array(const IndexedFamily& fam, std::size_t arity,
                                 std::span<const FormulaTemplate> delta) {
  const auto* arr = std::get_if<ArrayIndex>(&fam.index);
  if (!arr) throw Error("strong indiscernibility needs an array-indexed family");
  fam.validate();
  Report r;
  r.check = "strong_array";
  r.bound = arity;
  Clause& mutual = r.add("mutual");
  const std::size_t cols = arr->cols();
  for (std::size_t row = 0; row < arr->rows() && mutual.pass; ++row) {
    IndexedFamily sub{arr->row_order(), fam.structure, {}, fam.context};
    for (std::size_t j = 0; j < cols; ++j) sub.assignment.push_back(fam.assignment[row * cols + j]);
    for (std::size_t other = 0; other < arr->rows(); ++other) {
      if (other == row) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        const auto& t = fam.at(other * cols + j);
        sub.context.insert(sub.context.end(), t.begin(), t.end());
      }
    }
    sub.context = dedup(sub.context);
    Report sr = check_indiscernible(sub, arity, delta);
    mutual.checked += sr.clauses[0].checked;
    if (!sr.pass) {
      mutual.pass = false;
      for (const auto& tuple : sr.clauses[0].violating) {
        std::vector<std::string> cells;
        for (const auto& pos : tuple) cells.push_back("(" + std::to_string(row) + "," + pos + ")");
        mutual.violating.push_back(std::move(cells));
      }
      mutual.detail = "row " + std::to_string(row) + " over the other rows: " + sr.clauses[0].detail;
    }
  }
  if (mutual.checked == 0) mutual.vacuous = true;

  Clause& rows = r.add("rows");
  IndexedFamily seq{ColoredOrder::uncolored(arr->rows()), fam.structure, {}, fam.context};
  for (std::size_t row = 0; row < arr->rows(); ++row) {
    ElementTuple flat;
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& t = fam.at(row * cols + j);
      flat.insert(flat.end(), t.begin(), t.end());
    }
    seq.assignment.emplace_back(std::move(flat));
  }
  Report sr = check_indiscernible(seq, arity, delta);
  rows.checked = sr.clauses[0].checked;
  rows.vacuous = sr.clauses[0].vacuous;
  if (!sr.pass) {
    rows.pass = false;
    rows.violating = sr.clauses[0].violating;
    rows.detail = "sequence of rows: " + sr.clauses[0].detail;
  }
  return r.finish();
}

// Every (type, delta-type) pattern of target tuples of length <= arity
// occurs among base tuples. Contexts are not consulted.
inline bool check_locally_based(const IndexedFamily& target, const IndexedFamily& base,
                                std::span<const FormulaTemplate> delta, std::size_t arity) {
  if (index_kind(target.index) != index_kind(base.index))
    throw Error("locally based: families use different index languages");
  std::set<std::pair<QfType, DeltaType>> patterns;
  detail::for_each_tuple(base.domain(), arity, [&](const IndexTuple& t) {
    patterns.emplace(qftp_index(base.index, t), family_delta_type(base, t, delta, false));
    return true;
  });
  bool ok = true;
  detail::for_each_tuple(target.domain(), arity, [&](const IndexTuple& t) {
    ok = patterns.count({qftp_index(target.index, t), family_delta_type(target, t, delta, false)}) > 0;
    return ok;
  });
  return ok;
}

}  // namespace treeprop

#endif  // TREEPROP_INDISCERNIBILITY_HPP_
