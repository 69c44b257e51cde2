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

// Checkers for the tree properties, IP, and dividing on finite witnesses.
//
// Paths of a finite tree are its root-to-leaf branches; an unassigned root
// is skipped. Paths of an array are total functions rows -> columns. In k
// mode a clause asks that every k-subset be inconsistent; in q mode, every
// tuple realizing q.

#ifndef TREEPROP_PROPERTIES_HPP_
#define TREEPROP_PROPERTIES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "treeprop/error.hpp"
#include "treeprop/family.hpp"
#include "treeprop/formula.hpp"
#include "treeprop/index.hpp"
#include "treeprop/indiscernibility.hpp"
#include "treeprop/oracle.hpp"
#include "treeprop/report.hpp"

namespace treeprop {

inline constexpr std::size_t kDefaultPathBudget = 10000;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

namespace detail {

inline void note_unrealized_colors(Report& r, const ColoredOrder& order, const QfType& q) {
  for (const auto& c : mentioned_colors(q))
    if (order.positions_of(c).empty())
      r.notes.push_back("color unrealized: " + c + " does not occur in the index");
}

inline bool consistent(const WitnessFamily& w, const std::vector<IndexId>& ids) {
  auto fs = w.instances(ids);
  return oracle_consistent(w.oracle(), fs);
}

// Checks that the instance set of `ids` is inconsistent; records the first
// failure in c. Returns false on failure.
inline bool expect_inconsistent(const WitnessFamily& w, Clause& c,
                                const std::vector<IndexId>& ids, const std::string& what) {
  ++c.checked;
  if (!consistent(w, ids)) return true;
  c.pass = false;
  c.violating = {labels(w.family.index, ids)};
  c.detail = what + " have a consistent instance set";
  return false;
}

// k-subsets of `group`, each checked for inconsistency.
inline bool expect_k_inconsistent(const WitnessFamily& w, Clause& c,
                                  const std::vector<IndexId>& group, std::size_t k,
                                  const std::string& what) {
  if (k > group.size()) return true;
  auto fs = w.instances(group);
  auto res = k_inconsistent(w.oracle(), fs, k);
  c.checked += 1;
  if (res.inconsistent) return true;
  std::vector<IndexId> ids;
  for (std::size_t i : res.consistent_subset) ids.push_back(group[i]);
  c.pass = false;
  c.violating = {labels(w.family.index, ids)};
  c.detail = what + " have a consistent instance set";
  return false;
}

inline std::vector<IndexId> tree_path(const IndexTree& tree, const IndexedFamily& fam,
                                      NodeId leaf) {
  std::vector<IndexId> out;
  for (NodeId id : tree.path_to(leaf))
    if (fam.assigned(id)) out.push_back(id);
  return out;
}

inline void check_tree_paths(const WitnessFamily& w, const IndexTree& tree, Clause& c) {
  if (tree.height() == 0) {
    c.vacuous = true;
    return;
  }
  for (NodeId leaf : tree.leaves()) {
    auto ids = tree_path(tree, w.family, leaf);
    ++c.checked;
    if (!consistent(w, ids)) {
      c.pass = false;
      c.violating = {labels(w.family.index, ids)};
      c.detail = "path to " + tree.label(leaf) + " is inconsistent";
      return;
    }
  }
}

inline const IndexTree& require_tree(const WitnessFamily& w, const char* check) {
  const auto* tree = std::get_if<IndexTree>(&w.family.index);
  if (!tree) throw Error(std::string(check) + " needs a tree-indexed witness");
  return *tree;
}

inline void require_spec(const WitnessFamily& w, const char* check) {
  if (!w.spec.k && !w.spec.q) throw Error(std::string(check) + " needs k or q");
}

}  // namespace detail

// Paths consistent; siblings q-inconsistent (or k-inconsistent).
inline Report check_generalized_tp(const WitnessFamily& w) {
  const IndexTree& tree = detail::require_tree(w, "check_generalized_tp");
  detail::require_spec(w, "check_generalized_tp");
  w.validate();
  Report r;
  r.check = "itp";
  r.exhaustive = true;
  r.notes.push_back("spec " + w.spec.describe());
  detail::check_tree_paths(w, tree, r.add("paths"));

  Clause& sib = r.add("siblings");
  std::vector<std::vector<Position>> q_tuples;
  if (w.spec.q) {
    q_tuples = realizations(tree.branching(), *w.spec.q);
    detail::note_unrealized_colors(r, tree.branching(), *w.spec.q);
  }
  for (NodeId id = 0; id < tree.size() && sib.pass; ++id) {
    auto children = tree.children(id);
    if (children.empty()) continue;
    if (w.spec.k) {
      detail::expect_k_inconsistent(w, sib, children, *w.spec.k,
                                    "siblings under " + tree.label(id));
      continue;
    }
    for (const auto& t : q_tuples) {
      std::vector<IndexId> ids;
      for (Position p : t) ids.push_back(children[p]);
      if (!detail::expect_inconsistent(w, sib, ids, "siblings under " + tree.label(id))) break;
    }
  }
  if (sib.checked == 0) sib.vacuous = true;
  return r.finish();
}

// The incomparable tuples of a tree whose (color, <_lex) colored-order type
// is q, listed in lexicographic order of preorder ids.
inline std::vector<IndexTuple> incomparable_realizations(const IndexTree& tree, const QfType& q) {
  // Non-root nodes in preorder form a colored order under <_lex.
  std::vector<ColorId> coloring;
  const ColoredOrder& b = tree.branching();
  for (NodeId id = 1; id < tree.size(); ++id)
    if (b.colored()) coloring.push_back(b.color(tree.node(id).back()));
  ColoredOrder lex = b.colored() ? ColoredOrder(b.palette(), coloring)
                                 : ColoredOrder::uncolored(tree.size() == 0 ? 0 : tree.size() - 1);
  std::vector<IndexTuple> out;
  for (const auto& t : realizations(lex, q)) {
    bool ok = true;
    for (std::size_t i = 0; i < t.size() && ok; ++i)
      for (std::size_t j = i + 1; j < t.size() && ok; ++j)
        ok = !comparable(tree.node(t[i] + 1), tree.node(t[j] + 1));
    if (!ok) continue;
    IndexTuple ids;
    for (Position p : t) ids.push_back(p + 1);
    out.push_back(std::move(ids));
  }
  return out;
}

// Sets of k pairwise incomparable non-root nodes, lexicographically.
inline std::vector<IndexTuple> incomparable_sets(const IndexTree& tree, std::size_t k) {
  std::vector<IndexTuple> out;
  IndexTuple cur;
  auto extend = [&](auto&& self, NodeId from) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (NodeId id = from; id < tree.size(); ++id) {
      bool ok = true;
      for (NodeId c : cur) ok = ok && !comparable(tree.node(c), tree.node(id));
      if (!ok) continue;
      cur.push_back(id);
      self(self, id + 1);
      cur.pop_back();
    }
  };
  if (k > 0) extend(extend, 1);
  return out;
}

// Paths consistent; incomparables q-inconsistent (or k-inconsistent).
inline Report check_c_tp1(const WitnessFamily& w) {
  const IndexTree& tree = detail::require_tree(w, "check_c_tp1");
  detail::require_spec(w, "check_c_tp1");
  w.validate();
  Report r;
  r.check = "ctp1";
  r.exhaustive = true;
  r.notes.push_back("spec " + w.spec.describe());
  detail::check_tree_paths(w, tree, r.add("paths"));

  Clause& inc = r.add("incomparables");
  std::vector<IndexTuple> tuples;
  if (w.spec.q) {
    r.notes.push_back("incomparable nodes are typed by color and lexicographic order");
    detail::note_unrealized_colors(r, tree.branching(), *w.spec.q);
    tuples = incomparable_realizations(tree, *w.spec.q);
  } else {
    tuples = incomparable_sets(tree, *w.spec.k);
  }
  for (const auto& t : tuples)
    if (!detail::expect_inconsistent(w, inc, t, "incomparable nodes")) break;
  if (inc.checked == 0) inc.vacuous = true;
  return r.finish();
}

// Instance ids of the array path f (f[i] = column in row i).
inline std::vector<IndexId> array_path(const ArrayIndex& arr, const std::vector<Position>& f) {
  std::vector<IndexId> ids;
  for (std::size_t i = 0; i < f.size(); ++i) ids.push_back(arr.id_of({i, f[i]}));
  return ids;
}

// Paths consistent; rows q-inconsistent (or k-inconsistent). Paths are
// enumerated when there are at most path_budget of them, otherwise
// path_budget of them are drawn with the seeded generator.
inline Report check_generalized_tp2(const WitnessFamily& w,
                                    std::size_t path_budget = kDefaultPathBudget,
                                    std::uint64_t seed = kDefaultSeed) {
  const auto* arr = std::get_if<ArrayIndex>(&w.family.index);
  if (!arr) throw Error("check_generalized_tp2 needs an array-indexed witness");
  detail::require_spec(w, "check_generalized_tp2");
  w.validate();
  Report r;
  r.check = "itp2";
  r.seed = seed;
  r.notes.push_back("spec " + w.spec.describe());
  const std::size_t rows = arr->rows(), cols = arr->cols();

  Clause& paths = r.add("paths");
  // cols^rows, saturating at path_budget + 1.
  std::size_t total = 1;
  for (std::size_t i = 0; i < rows && total <= path_budget; ++i) total *= cols;
  const bool exhaustive = total <= path_budget;
  r.exhaustive = exhaustive;
  if (rows == 0) {
    paths.vacuous = true;
  } else if (cols > 0) {
    std::vector<Position> f(rows, 0);
    std::mt19937_64 rng(seed);
    const std::size_t count = exhaustive ? total : path_budget;
    if (!exhaustive)
      r.notes.push_back("paths sampled: " + std::to_string(path_budget) + " of " +
                        std::to_string(cols) + "^" + std::to_string(rows));
    for (std::size_t n = 0; n < count; ++n) {
      if (exhaustive) {
        if (n > 0) {
          std::size_t i = rows;
          while (i > 0 && ++f[i - 1] == cols) f[--i] = 0;
        }
      } else {
        for (auto& v : f) v = static_cast<Position>(rng() % cols);
      }
      auto ids = array_path(*arr, f);
      ++paths.checked;
      if (!detail::consistent(w, ids)) {
        paths.pass = false;
        paths.violating = {labels(w.family.index, ids)};
        paths.detail = "path is inconsistent";
        break;
      }
    }
  }

  Clause& rowc = r.add("rows");
  std::vector<std::vector<Position>> q_tuples;
  if (w.spec.q) {
    q_tuples = realizations(arr->row_order(), *w.spec.q);
    detail::note_unrealized_colors(r, arr->row_order(), *w.spec.q);
  }
  for (std::size_t i = 0; i < rows && rowc.pass; ++i) {
    std::vector<IndexId> row;
    for (Position j = 0; j < cols; ++j) row.push_back(arr->id_of({i, j}));
    if (w.spec.k) {
      detail::expect_k_inconsistent(w, rowc, row, *w.spec.k, "row " + std::to_string(i));
      continue;
    }
    for (const auto& t : q_tuples) {
      std::vector<IndexId> ids;
      for (Position p : t) ids.push_back(row[p]);
      if (!detail::expect_inconsistent(w, rowc, ids, "row " + std::to_string(i) + " tuple")) break;
    }
  }
  if (rowc.checked == 0) rowc.vacuous = true;
  return r.finish();
}

// The alternating instance set: phi at odd positions, not-phi at even ones
// (positions counted from 0).
inline std::vector<InstantiatedFormula> alternating_instances(const IndexedFamily& seq,
                                                              const FormulaTemplate& phi) {
  std::vector<InstantiatedFormula> out;
  const auto dom = seq.domain();
  for (std::size_t i = 0; i < dom.size(); ++i)
    out.push_back(instantiate_template(phi, seq.structure, seq.at(dom[i]), i % 2 == 1));
  return out;
}

inline Report check_ip(const IndexedFamily& seq, const FormulaTemplate& phi,
                       std::span<const FormulaTemplate> delta, std::size_t arity) {
  if (index_kind(seq.index) != IndexKind::kOrder)
    throw Error("check_ip needs an order-indexed sequence");
  if (seq.domain().size() < 2) throw Error("check_ip needs a sequence of length at least 2");
  Report r;
  r.check = "ip";
  r.bound = arity;
  Report ind = check_indiscernible(seq, arity, delta);
  r.clauses.push_back(ind.clauses[0]);
  r.notes = ind.notes;
  Clause& alt = r.add("alternating");
  auto fs = alternating_instances(seq, phi);
  alt.checked = 1;
  if (!oracle_consistent(seq.structure->kind(), fs)) {
    alt.pass = false;
    alt.violating = {labels(seq.index, seq.domain())};
    alt.detail = "alternating instance set is inconsistent";
  }
  return r.finish();
}

// fam is delta-indiscernible over its context, and every tuple realizing q
// gives an inconsistent instance set.
inline Report check_generalized_dividing(const IndexedFamily& fam, const FormulaTemplate& phi,
                                         const QfType& q, std::optional<IndexId> pivot,
                                         std::span<const FormulaTemplate> delta,
                                         std::size_t arity) {
  Report r;
  r.check = "dividing";
  r.bound = arity;
  if (pivot) {
    const std::string label = index_label(fam.index, *pivot);
    if (!fam.assigned(*pivot)) throw Error("pivot " + label + " is unassigned");
    r.notes.push_back("pivot " + label + " carries the divided instance");
  } else {
    r.notes.push_back("no pivot given");
  }
  Report ind = check_indiscernible(fam, arity, delta);
  r.clauses.push_back(ind.clauses[0]);
  r.notes.insert(r.notes.end(), ind.notes.begin(), ind.notes.end());

  WitnessFamily w{fam, phi, InconsistencySpec::of_q(q)};
  w.validate();
  Clause& qc = r.add("q_inconsistent");
  detail::note_unrealized_colors(r, base_order(fam.index), q);
  for (const auto& t : realizations(fam.index, q)) {
    bool all_assigned = true;
    for (IndexId id : t) all_assigned = all_assigned && fam.assigned(id);
    if (!all_assigned) continue;
    if (!detail::expect_inconsistent(w, qc, t, "tuple realizing " + describe(q))) break;
  }
  if (qc.checked == 0) {
    // Dividing asks for an actual inconsistent tuple.
    qc.vacuous = true;
    qc.pass = false;
    qc.detail = "no tuple realizes " + describe(q);
  }
  return r.finish();
}

struct ChainStep {
  ElementTuple params;
  QfType q;
  std::optional<IndexId> pivot;
  IndexedFamily family;
};

struct DividingChain {
  std::shared_ptr<const FinStructure> structure;
  FormulaTemplate formula;
  std::vector<FormulaTemplate> delta;
  std::size_t arity = 1;
  std::vector<ChainStep> steps;
};

inline Report verify_dividing_chain(const DividingChain& chain) {
  if (chain.steps.empty()) throw Error("a dividing chain needs at least one step");
  Report r;
  r.check = "chain";
  r.bound = chain.arity;
  Clause& cons = r.add("consistent");
  std::vector<InstantiatedFormula> all;
  for (const auto& s : chain.steps)
    all.push_back(instantiate_template(chain.formula, chain.structure, s.params));
  cons.checked = 1;
  if (!oracle_consistent(chain.structure->kind(), all)) {
    cons.pass = false;
    cons.detail = "the chain's instances are inconsistent";
  }
  ElementTuple prefix;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const ChainStep& s = chain.steps[i];
    IndexedFamily fam = s.family;
    fam.context = dedup(prefix);
    std::optional<IndexId> pivot = s.pivot;
    if (pivot) {
      if (!fam.assigned(*pivot) || fam.at(*pivot) != s.params)
        throw Error("step " + std::to_string(i) + ": pivot does not carry the step's parameters");
    } else {
      for (IndexId id : fam.domain())
        if (fam.at(id) == s.params) {
          pivot = id;
          break;
        }
      if (!pivot) throw Error("step " + std::to_string(i) + ": family does not contain b_i");
    }
    Report sr = check_generalized_dividing(fam, chain.formula, s.q, pivot, chain.delta, chain.arity);
    Clause& c = r.add("step_" + std::to_string(i));
    c.checked = 1;
    if (!sr.pass) {
      const Clause* f = sr.first_failure();
      c.pass = false;
      c.vacuous = f->vacuous;
      c.violating = f->violating;
      c.detail = f->name + ": " + f->detail;
    }
    prefix.insert(prefix.end(), s.params.begin(), s.params.end());
  }
  return r.finish();
}

}  // namespace treeprop

#endif  // TREEPROP_PROPERTIES_HPP_
