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

// Arrays rows x row_order. Cells are ordered by (row, column); cells in the
// same row are equivalent, so the equivalence classes are convex.

#ifndef TREEPROP_ARRAY_INDEX_HPP_
#define TREEPROP_ARRAY_INDEX_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "treeprop/colored_order.hpp"
#include "treeprop/error.hpp"
#include "treeprop/qftype.hpp"

namespace treeprop {

struct Cell {
  std::size_t row = 0;
  Position col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string cell_label(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

class ArrayIndex {
 public:
  ArrayIndex() = default;
  ArrayIndex(std::size_t rows, ColoredOrder row_order)
      : rows_(rows), row_order_(std::move(row_order)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return row_order_.size(); }
  const ColoredOrder& row_order() const noexcept { return row_order_; }
  std::size_t size() const noexcept { return rows_ * cols(); }

  bool contains(const Cell& c) const { return c.row < rows_ && c.col < cols(); }

  std::size_t id_of(const Cell& c) const {
    if (!contains(c)) throw Error("foreign cell " + cell_label(c));
    return c.row * cols() + c.col;
  }

  Cell cell(std::size_t id) const {
    if (id >= size()) throw Error("cell id out of range");
    return {id / cols(), static_cast<Position>(id % cols())};
  }

 private:
  std::size_t rows_ = 0;
  ColoredOrder row_order_;
};

inline QfType qftp_array(const ArrayIndex& arr, std::span<const Cell> tuple) {
  std::vector<std::string> atoms;
  const std::size_t n = tuple.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!arr.contains(tuple[i])) throw Error("foreign cell " + cell_label(tuple[i]));
    if (arr.row_order().colored())
      atoms.push_back(arr.row_order().color_name(tuple[i].col) + "(" + var_name(i) + ")");
    for (std::size_t j = i + 1; j < n; ++j) {
      const Cell& a = tuple[i];
      const Cell& b = tuple[j];
      if (a == b) atoms.push_back(var_name(i) + "=" + var_name(j));
      else if (a < b) atoms.push_back(var_name(i) + "<" + var_name(j));
      else atoms.push_back(var_name(j) + "<" + var_name(i));
      if (a.row == b.row) atoms.push_back(var_name(i) + "~" + var_name(j));
    }
  }
  return QfType(n, std::move(atoms));
}

}  // namespace treeprop

#endif  // TREEPROP_ARRAY_INDEX_HPP_
