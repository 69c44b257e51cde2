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

// Finite colored linear orders: positions 0..size-1 in their natural order,
// each carrying exactly one color from a palette. An empty palette denotes
// the plain (uncolored) order.

#ifndef TREEPROP_COLORED_ORDER_HPP_
#define TREEPROP_COLORED_ORDER_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeprop/error.hpp"
#include "treeprop/qftype.hpp"

namespace treeprop {

using Position = std::uint32_t;
using ColorId = std::uint32_t;

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

class ColoredOrder {
 public:
  ColoredOrder() = default;

  ColoredOrder(std::vector<std::string> palette, std::vector<ColorId> coloring)
      : palette_(std::move(palette)), coloring_(std::move(coloring)),
        size_(coloring_.size()) {
    if (palette_.empty() && !coloring_.empty())
      throw Error("coloring given for an empty palette");
    for (std::size_t i = 0; i < palette_.size(); ++i) {
      if (!is_color_name(palette_[i]))
        throw Error("invalid color name '" + palette_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (palette_[j] == palette_[i])
          throw Error("duplicate color '" + palette_[i] + "' in palette");
    }
    for (ColorId c : coloring_)
      if (c >= palette_.size()) throw Error("coloring uses a color outside the palette");
  }

  static ColoredOrder uncolored(std::size_t n) {
    ColoredOrder o;
    o.size_ = n;
    return o;
  }

  std::size_t size() const noexcept { return size_; }
  bool colored() const noexcept { return !palette_.empty(); }
  const std::vector<std::string>& palette() const noexcept { return palette_; }
  const std::vector<ColorId>& coloring() const noexcept { return coloring_; }

  ColorId color(Position p) const {
    check(p);
    if (!colored()) throw Error("uncolored order has no colors");
    return coloring_[p];
  }
  const std::string& color_name(Position p) const { return palette_[color(p)]; }

  std::optional<ColorId> color_id(std::string_view name) const {
    for (std::size_t i = 0; i < palette_.size(); ++i)
      if (palette_[i] == name) return static_cast<ColorId>(i);
    return std::nullopt;
  }

  std::vector<Position> positions_of(std::string_view name) const {
    std::vector<Position> out;
    if (auto id = color_id(name))
      for (Position p = 0; p < size_; ++p)
        if (coloring_[p] == *id) out.push_back(p);
    return out;
  }

  void check(Position p) const {
    if (p >= size_)
      throw Error("position " + std::to_string(p) + " out of range for order of size " +
                  std::to_string(size_));
  }

  friend bool operator==(const ColoredOrder&, const ColoredOrder&) = default;

 private:
  std::vector<std::string> palette_;
  std::vector<ColorId> coloring_;
  std::size_t size_ = 0;
};

// Alternating scheme: position i gets palette[i mod |palette|]. An empty
// palette yields the uncolored order of size n.
inline ColoredOrder standard_c(std::size_t n, std::vector<std::string> palette) {
  if (palette.empty()) return ColoredOrder::uncolored(n);
  std::vector<ColorId> coloring(n);
  for (std::size_t i = 0; i < n; ++i) coloring[i] = static_cast<ColorId>(i % palette.size());
  return ColoredOrder(std::move(palette), std::move(coloring));
}

// Explicit scheme: coloring[i] names the color of position i.
inline ColoredOrder standard_c(std::size_t n, std::vector<std::string> palette,
                               const std::vector<std::string>& coloring) {
  if (coloring.size() != n)
    throw Error("explicit coloring is not total: " + std::to_string(coloring.size()) +
                " colors for " + std::to_string(n) + " positions");
  std::vector<ColorId> ids;
  ids.reserve(n);
  for (const auto& name : coloring) {
    ColorId id = 0;
    while (id < palette.size() && palette[id] != name) ++id;
    if (id == palette.size()) throw Error("color '" + name + "' is not in the palette");
    ids.push_back(id);
  }
  return ColoredOrder(std::move(palette), std::move(ids));
}

// "RGRG" (one character per color), "R,G,R,G", or "****" for an uncolored
// order. The palette lists colors in order of first appearance.
inline ColoredOrder parse_order_string(std::string_view text) {
  std::vector<std::string> names;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      names.emplace_back(text.substr(start, end - start));
      start = end + 1;
    }
  } else {
    for (char c : text) names.emplace_back(1, c);
  }
  if (!names.empty() && std::all_of(names.begin(), names.end(),
                                    [](const std::string& s) { return s == "*"; }))
    return ColoredOrder::uncolored(names.size());
  std::vector<std::string> palette;
  for (const auto& n : names)
    if (std::find(palette.begin(), palette.end(), n) == palette.end()) palette.push_back(n);
  return standard_c(names.size(), std::move(palette), names);
}

inline std::string order_string(const ColoredOrder& o) {
  std::string out;
  bool single = true;
  for (const auto& c : o.palette()) single = single && c.size() == 1;
  for (Position p = 0; p < o.size(); ++p) {
    if (!o.colored()) {
      out += '*';
    } else {
      if (!single && p > 0) out += ',';
      out += o.color_name(p);
    }
  }
  return out;
}

inline QfType qftp_order(const ColoredOrder& order, std::span<const Position> tuple) {
  OrderPattern p;
  const std::size_t n = tuple.size();
  p.cmp.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    order.check(tuple[i]);
    if (order.colored()) p.colors.emplace_back(order.color_name(tuple[i]));
    else p.colors.emplace_back(std::nullopt);
    for (std::size_t j = 0; j < n; ++j)
      p.cmp[i][j] = tuple[i] < tuple[j] ? -1 : (tuple[i] == tuple[j] ? 0 : 1);
  }
  return order_type(p);
}

namespace detail {

inline void extend_realization(const ColoredOrder& order, const OrderPattern& pat,
                               std::vector<Position>& cur, std::size_t limit,
                               std::vector<std::vector<Position>>& out) {
  const std::size_t v = cur.size();
  if (v == pat.arity()) {
    out.push_back(cur);
    return;
  }
  for (Position pos = 0; pos < order.size() && out.size() < limit; ++pos) {
    if (pat.colors[v] && order.color_name(pos) != *pat.colors[v]) continue;
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u) {
      const int s = cur[u] < pos ? -1 : (cur[u] == pos ? 0 : 1);
      ok = s == pat.cmp[u][v];
    }
    if (!ok) continue;
    cur.push_back(pos);
    extend_realization(order, pat, cur, limit, out);
    cur.pop_back();
  }
}

}  // namespace detail

// All tuples of `order` whose type is `q`, in lexicographic order, up to
// `limit`. Types that cannot live in this order (foreign colors, a colored
// type in an uncolored order, non-order atoms) have no realizations.
inline std::vector<std::vector<Position>> realizations(const ColoredOrder& order,
                                                       const QfType& q,
                                                       std::size_t limit = kUnlimited) {
  std::vector<std::vector<Position>> out;
  auto pat = as_order_pattern(q);
  if (!pat || pat->arity() == 0) return out;
  for (const auto& c : pat->colors) {
    if (c.has_value() != order.colored()) return out;
    if (c && !order.color_id(*c)) return out;
  }
  std::vector<Position> cur;
  detail::extend_realization(order, *pat, cur, limit, out);
  return out;
}

}  // namespace treeprop

#endif  // TREEPROP_COLORED_ORDER_HPP_
