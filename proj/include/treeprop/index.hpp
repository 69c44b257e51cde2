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

// A uniform view of the three index structures. Elements are addressed by
// dense ids: positions for orders, preorder ids for trees, row-major cell
// ids for arrays.

#ifndef TREEPROP_INDEX_HPP_
#define TREEPROP_INDEX_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "treeprop/array_index.hpp"
#include "treeprop/colored_order.hpp"
#include "treeprop/index_tree.hpp"
#include "treeprop/qftype.hpp"

namespace treeprop {

using IndexStructure = std::variant<ColoredOrder, IndexTree, ArrayIndex>;
using IndexId = std::size_t;
using IndexTuple = std::vector<IndexId>;

enum class IndexKind { kOrder, kTree, kArray };

inline IndexKind index_kind(const IndexStructure& ix) {
  return static_cast<IndexKind>(ix.index());
}

inline std::string to_string(IndexKind k) {
  switch (k) {
    case IndexKind::kOrder: return "order";
    case IndexKind::kTree: return "tree";
    default: return "array";
  }
}

inline std::size_t index_size(const IndexStructure& ix) {
  return std::visit([](const auto& s) { return s.size(); }, ix);
}

inline std::string index_label(const IndexStructure& ix, IndexId id) {
  if (auto* o = std::get_if<ColoredOrder>(&ix)) {
    o->check(static_cast<Position>(id));
    return std::to_string(id);
  }
  if (auto* t = std::get_if<IndexTree>(&ix)) return t->label(id);
  const auto& a = std::get<ArrayIndex>(ix);
  return cell_label(a.cell(id));
}

// The order whose colors the elements carry: the order itself, a tree's
// branching order, an array's row order.
inline const ColoredOrder& base_order(const IndexStructure& ix) {
  if (auto* o = std::get_if<ColoredOrder>(&ix)) return *o;
  if (auto* t = std::get_if<IndexTree>(&ix)) return t->branching();
  return std::get<ArrayIndex>(ix).row_order();
}

inline std::optional<std::string> index_color(const IndexStructure& ix, IndexId id) {
  if (auto* t = std::get_if<IndexTree>(&ix)) return t->color_name(t->node(id));
  const ColoredOrder& o = base_order(ix);
  if (!o.colored()) return std::nullopt;
  if (auto* a = std::get_if<ArrayIndex>(&ix)) return o.color_name(a->cell(id).col);
  return o.color_name(static_cast<Position>(id));
}

inline QfType qftp_index(const IndexStructure& ix, std::span<const IndexId> ids) {
  if (auto* o = std::get_if<ColoredOrder>(&ix)) {
    std::vector<Position> pos(ids.begin(), ids.end());
    for (IndexId id : ids) o->check(static_cast<Position>(id));
    return qftp_order(*o, pos);
  }
  if (auto* t = std::get_if<IndexTree>(&ix)) return qftp_tree(*t, ids);
  const auto& a = std::get<ArrayIndex>(ix);
  std::vector<Cell> cells;
  for (IndexId id : ids) cells.push_back(a.cell(id));
  return qftp_array(a, cells);
}

// Keeps the atoms that mention only x1..xk.
inline QfType restrict_type(const QfType& q, std::size_t k) {
  std::vector<std::string> kept;
  for (const std::string& atom : q.atoms()) {
    bool ok = true;
    for (std::size_t pos = 0; pos < atom.size() && ok;) {
      // A variable starts with 'x' not preceded by a letter or digit.
      const bool boundary =
          pos == 0 || !(std::isalnum(static_cast<unsigned char>(atom[pos - 1])));
      if (atom[pos] == 'x' && boundary) {
        std::size_t p = pos;
        if (auto v = detail::parse_var(atom, p)) {
          ok = *v < k;
          pos = p;
          continue;
        }
      }
      ++pos;
    }
    if (ok) kept.push_back(atom);
  }
  return QfType(std::min(k, q.arity()), std::move(kept));
}

namespace detail {

inline void extend_index_realization(const IndexStructure& ix, const std::vector<QfType>& prefix,
                                     IndexTuple& cur, std::size_t limit,
                                     std::vector<IndexTuple>& out) {
  const std::size_t v = cur.size();
  if (v == prefix.size()) {
    out.push_back(cur);
    return;
  }
  const std::size_t n = index_size(ix);
  for (IndexId id = 0; id < n && out.size() < limit; ++id) {
    cur.push_back(id);
    if (qftp_index(ix, cur) == prefix[v]) extend_index_realization(ix, prefix, cur, limit, out);
    cur.pop_back();
  }
}

}  // namespace detail

// Tuples of element ids realizing q, in lexicographic order of ids.
inline std::vector<IndexTuple> realizations(const IndexStructure& ix, const QfType& q,
                                            std::size_t limit = kUnlimited) {
  if (auto* o = std::get_if<ColoredOrder>(&ix)) {
    std::vector<IndexTuple> out;
    for (const auto& t : realizations(*o, q, limit)) out.emplace_back(t.begin(), t.end());
    return out;
  }
  std::vector<IndexTuple> out;
  if (q.arity() == 0) return out;
  std::vector<QfType> prefix;
  for (std::size_t k = 1; k <= q.arity(); ++k) prefix.push_back(restrict_type(q, k));
  IndexTuple cur;
  detail::extend_index_realization(ix, prefix, cur, limit, out);
  return out;
}

}  // namespace treeprop

#endif  // TREEPROP_INDEX_HPP_
