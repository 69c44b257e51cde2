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


#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace treeprop {
namespace {

TEST(ArrayIndex, CellIdsAreRowMajor) {
  ArrayIndex a(3, standard_c(4, {"R", "G"}));
  EXPECT_EQ(a.size(), 12u);
  EXPECT_EQ(a.id_of({1, 2}), 6u);
  EXPECT_EQ(a.cell(7), (Cell{1, 3}));
  EXPECT_EQ(cell_label({2, 0}), "(2,0)");
  EXPECT_THROW(a.id_of({3, 0}), Error);
  EXPECT_THROW(a.cell(12), Error);
}

TEST(QftpArray, SameRowAndColor) {
  ArrayIndex a(3, standard_c(4, {"R", "G"}));
  std::vector<Cell> same_row{{1, 0}, {1, 1}};
  QfType q = qftp_array(a, same_row);
  EXPECT_EQ(q, QfType(2, {"R(x1)", "G(x2)", "x1<x2", "x1~x2"}));
  std::vector<Cell> other_row{{0, 0}, {1, 1}};
  EXPECT_FALSE(qftp_array(a, other_row).contains("x1~x2"));
}

TEST(QftpArray, RowsAreOrderedBeforeColumns) {
  ArrayIndex a(2, standard_c(4, {"R", "G"}));
  std::vector<Cell> t{{0, 3}, {1, 0}};
  EXPECT_TRUE(qftp_array(a, t).contains("x1<x2"));
}

// Oracle: a partial map between cell tuples preserves equality, the
// row-major order, the row equivalence and colors.
bool array_partial_iso(const ArrayIndex& a, const std::vector<Cell>& s, const std::vector<Cell>& t) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (a.row_order().color(s[i].col) != a.row_order().color(t[i].col)) return false;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if ((s[i] == s[j]) != (t[i] == t[j])) return false;
      if ((s[i] < s[j]) != (t[i] < t[j])) return false;
      if ((s[i].row == s[j].row) != (t[i].row == t[j].row)) return false;
    }
  }
  return true;
}

TEST(QftpArrayProperty, EqualTypesIffPartialIsomorphism) {
  std::mt19937 rng(41);
  ArrayIndex a(3, parse_order_string("RGGR"));
  std::uniform_int_distribution<std::size_t> id(0, a.size() - 1);
  for (int iter = 0; iter < 20000; ++iter) {
    const std::size_t k = 1 + rng() % 3;
    std::vector<Cell> s, t;
    for (std::size_t i = 0; i < k; ++i) {
      s.push_back(a.cell(id(rng)));
      t.push_back(a.cell(id(rng)));
    }
    EXPECT_EQ(qftp_array(a, s) == qftp_array(a, t), array_partial_iso(a, s, t));
  }
}

TEST(ArrayRealizations, WithinRowPairs) {
  ArrayIndex a(2, standard_c(4, {"R", "G"}));
  QfType q(2, {"R(x1)", "G(x2)", "x1<x2", "x1~x2"});
  auto rs = realizations(IndexStructure(a), q);
  // Three R<G pairs per row.
  ASSERT_EQ(rs.size(), 6u);
  for (const auto& r : rs) EXPECT_EQ(qftp_index(IndexStructure(a), r), q);
}

TEST(Index, UniformAccessors) {
  IndexStructure tree = IndexTree(1, standard_c(2, {"R", "G"}));
  IndexStructure arr = ArrayIndex(2, standard_c(2, {"R", "G"}));
  IndexStructure order = standard_c(3, {"R", "G"});
  EXPECT_EQ(index_size(tree), 3u);
  EXPECT_EQ(index_size(arr), 4u);
  EXPECT_EQ(index_size(order), 3u);
  EXPECT_EQ(index_label(tree, 2), "(1)");
  EXPECT_EQ(index_label(arr, 3), "(1,1)");
  EXPECT_EQ(index_label(order, 2), "2");
  EXPECT_FALSE(index_color(tree, 0));
  EXPECT_EQ(index_color(arr, 3), "G");
  EXPECT_EQ(index_color(order, 2), "R");
  EXPECT_EQ(to_string(index_kind(arr)), "array");
}

}  // namespace
}  // namespace treeprop
