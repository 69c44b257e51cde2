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

// Canonical quantifier-free types.
//
// A QfType is the sorted, duplicate-free list of positive atomic facts that
// hold of a tuple x1..xn (and, for trees, of the meet terms xi^xj). Because
// the list is complete over a fixed, tuple-determined set of terms, two
// tuples have equal QfType exactly when the variable-wise map between them
// is a partial isomorphism.
//
// Atom vocabulary:
//   x1<x2   x1=x2          order / equality (orders and arrays)
//   R(x1)                  color predicate
//   x1~x2                  same row (arrays)
//   x1<|x2  x1_|_x2        strict tree prefix / incomparable (trees)
//   x1<lex x2  x1<sib x2   lexicographic order / sibling order (trees)
//   lvl(x1)=2              level predicate (LsI trees)
//   uncolored(x1^x2)       a term that evaluates to the root

#ifndef TREEPROP_QFTYPE_HPP_
#define TREEPROP_QFTYPE_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "treeprop/error.hpp"

namespace treeprop {

class QfType {
 public:
  QfType() = default;
  QfType(std::size_t arity, std::vector<std::string> atoms)
      : arity_(arity), atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  }

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }

  bool contains(std::string_view atom) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), atom,
                              std::less<>{});
  }

  friend bool operator==(const QfType&, const QfType&) = default;
  friend auto operator<=>(const QfType&, const QfType&) = default;

 private:
  std::size_t arity_ = 0;
  std::vector<std::string> atoms_;
};

// 0-based index -> "x1", "x2", ...
inline std::string var_name(std::size_t i) { return "x" + std::to_string(i + 1); }

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

// Color names are identifiers; two are reserved by the atom vocabulary.
inline bool is_color_name(std::string_view s) {
  return is_identifier(s) && s != "uncolored" && s != "lvl";
}

// What an order-language type says: a color per variable (absent for an
// uncolored order) and the sign of every pairwise comparison.
struct OrderPattern {
  std::vector<std::optional<std::string>> colors;
  // cmp[i][j] is -1 when xi<xj, 0 when xi=xj, +1 when xi>xj.
  std::vector<std::vector<int>> cmp;

  std::size_t arity() const noexcept { return colors.size(); }
};

inline QfType order_type(const OrderPattern& p) {
  const std::size_t n = p.arity();
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.colors[i]) atoms.push_back(*p.colors[i] + "(" + var_name(i) + ")");
    for (std::size_t j = i + 1; j < n; ++j) {
      switch (p.cmp[i][j]) {
        case -1: atoms.push_back(var_name(i) + "<" + var_name(j)); break;
        case 0: atoms.push_back(var_name(i) + "=" + var_name(j)); break;
        default: atoms.push_back(var_name(j) + "<" + var_name(i)); break;
      }
    }
  }
  return QfType(n, std::move(atoms));
}

namespace detail {

// Parses "x<digits>" starting at `pos`; returns the 0-based index.
inline std::optional<std::size_t> parse_var(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != 'x') return std::nullopt;
  std::size_t p = pos + 1, value = 0;
  if (p >= s.size() || s[p] < '1' || s[p] > '9') return std::nullopt;
  while (p < s.size() && s[p] >= '0' && s[p] <= '9') {
    value = value * 10 + static_cast<std::size_t>(s[p] - '0');
    ++p;
  }
  pos = p;
  return value - 1;
}

}  // namespace detail

// Recovers the order pattern of an order-language type. Returns nullopt for
// types that carry non-order atoms (trees, arrays) or are incomplete.
inline std::optional<OrderPattern> as_order_pattern(const QfType& q) {
  const std::size_t n = q.arity();
  OrderPattern p;
  p.colors.assign(n, std::nullopt);
  p.cmp.assign(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) p.cmp[i][i] = 0;
  std::size_t colored = 0;
  for (const std::string& atom : q.atoms()) {
    std::string_view s = atom;
    std::size_t pos = 0;
    if (auto a = detail::parse_var(s, pos)) {
      if (pos >= s.size() || (s[pos] != '<' && s[pos] != '=')) return std::nullopt;
      const char rel = s[pos++];
      auto b = detail::parse_var(s, pos);
      if (!b || pos != s.size() || *a >= n || *b >= n || *a == *b) return std::nullopt;
      const int v = rel == '=' ? 0 : -1;
      p.cmp[*a][*b] = v;
      p.cmp[*b][*a] = -v;
      continue;
    }
    const auto open = s.find('(');
    if (open == std::string_view::npos || s.back() != ')') return std::nullopt;
    std::string_view name = s.substr(0, open);
    if (!is_color_name(name)) return std::nullopt;
    pos = open + 1;
    auto v = detail::parse_var(s, pos);
    if (!v || pos != s.size() - 1 || *v >= n || p.colors[*v]) return std::nullopt;
    p.colors[*v] = std::string(name);
    ++colored;
  }
  if (colored != 0 && colored != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.cmp[i][j] == 2) return std::nullopt;
  if (order_type(p) != q) return std::nullopt;
  return p;
}

// Parses the chain notation used on the command line: "R<G", "R<R<G",
// "R=R<G", or "*<*" for an uncolored order. Variable i is the i-th color.
inline QfType parse_chain(std::string_view text) {
  std::vector<std::string> colors;
  std::vector<char> rels;
  std::string cur;
  for (char c : text) {
    if (c == ' ') continue;
    if (c == '<' || c == '=') {
      colors.push_back(cur);
      rels.push_back(c);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  colors.push_back(cur);
  const bool uncolored = colors.front() == "*";
  for (const auto& c : colors) {
    if ((c == "*") != uncolored || (!uncolored && !is_color_name(c)))
      throw Error("invalid chain type '" + std::string(text) + "'");
  }
  const std::size_t n = colors.size();
  OrderPattern p;
  p.cmp.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (!uncolored) p.colors.emplace_back(colors[i]);
    else p.colors.emplace_back(std::nullopt);
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool strict = std::any_of(rels.begin() + static_cast<std::ptrdiff_t>(i),
                                      rels.begin() + static_cast<std::ptrdiff_t>(j),
                                      [](char r) { return r == '<'; });
      p.cmp[i][j] = strict ? -1 : 0;
      p.cmp[j][i] = strict ? 1 : 0;
      if (!strict && colors[i] != colors[j])
        throw Error("chain '" + std::string(text) + "' equates different colors");
    }
  }
  return order_type(p);
}

// Chain notation for order types whose variables are listed in
// non-decreasing order; nullopt otherwise.
inline std::optional<std::string> chain_notation(const QfType& q) {
  auto p = as_order_pattern(q);
  if (!p || p->arity() == 0) return std::nullopt;
  for (std::size_t i = 0; i < p->arity(); ++i)
    for (std::size_t j = i + 1; j < p->arity(); ++j)
      if (p->cmp[i][j] > 0) return std::nullopt;
  std::string out;
  for (std::size_t i = 0; i < p->arity(); ++i) {
    if (i > 0) out.push_back(p->cmp[i - 1][i] < 0 ? '<' : '=');
    out += p->colors[i] ? *p->colors[i] : "*";
  }
  return out;
}

inline std::string describe(const QfType& q) {
  if (auto chain = chain_notation(q)) return *chain;
  std::string out = "{";
  for (std::size_t i = 0; i < q.atoms().size(); ++i) {
    if (i > 0) out += ", ";
    out += q.atoms()[i];
  }
  return out + "}";
}

// Color names mentioned by color atoms of an order-language type.
inline std::set<std::string> mentioned_colors(const QfType& q) {
  std::set<std::string> out;
  if (auto p = as_order_pattern(q))
    for (const auto& c : p->colors)
      if (c) out.insert(*c);
  return out;
}

}  // namespace treeprop

#endif  // TREEPROP_QFTYPE_HPP_
