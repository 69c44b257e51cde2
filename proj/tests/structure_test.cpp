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

#include "treeprop/formula.hpp"
#include "treeprop/structure.hpp"

namespace treeprop {
namespace {

TEST(StructureBuilder, NamesAndIds) {
  StructureBuilder sb(OracleKind::kEquality);
  const ElementId a = sb.fresh("a");
  EXPECT_EQ(sb.element("a"), a);
  EXPECT_THROW(sb.fresh("a"), Error);
  auto s = sb.build();
  EXPECT_EQ(s->id("a"), a);
  EXPECT_FALSE(s->find("b"));
  EXPECT_THROW(s->id("b"), Error);
}

TEST(StructureBuilder, RandomGraphEdgesAreSymmetric) {
  StructureBuilder sb(OracleKind::kRandomGraph);
  const ElementId a = sb.fresh("a"), b = sb.fresh("b");
  sb.edge(a, b);
  auto s = sb.build();
  EXPECT_TRUE(s->adjacent(a, b));
  EXPECT_TRUE(s->adjacent(b, a));
  EXPECT_FALSE(s->adjacent(a, a));
}

TEST(StructureBuilder, RandomGraphRejectsLoopsAndOtherRelations) {
  StructureBuilder sb(OracleKind::kRandomGraph);
  const ElementId a = sb.fresh("a"), b = sb.fresh("b");
  EXPECT_THROW(sb.edge(a, a), Error);
  EXPECT_THROW(sb.relate("E", {a, b}), Error);
  EXPECT_THROW(sb.relate("R", {a}), Error);
}

TEST(StructureBuilder, KindRestrictions) {
  StructureBuilder eq(OracleKind::kEquality);
  const ElementId a = eq.fresh("a");
  EXPECT_THROW(eq.relate("P", {a}), Error);
  StructureBuilder set(OracleKind::kSetIntersection);
  const ElementId p = set.fresh("p"), s = set.fresh("S");
  set.member(p, s);
  EXPECT_THROW(set.relate("R", {p, s}), Error);
  EXPECT_EQ(set.build()->members(s), (std::vector<ElementId>{p}));
  StructureBuilder any(OracleKind::kGeneric);
  const ElementId u = any.fresh("u");
  any.relate("P", {u});
  EXPECT_THROW(any.relate("P", {u, u}), Error);
  EXPECT_THROW(any.relate("=", {u, u}), Error);
  EXPECT_THROW(any.relate("P", {7}), Error);
}

TEST(FinStructure, EqualityIsBuiltIn) {
  StructureBuilder sb(OracleKind::kEquality);
  const ElementId a = sb.fresh("a"), b = sb.fresh("b");
  auto s = sb.build();
  EXPECT_TRUE(s->holds("=", {a, a}));
  EXPECT_FALSE(s->holds("=", {a, b}));
}

TEST(OracleKind, NamesRoundTrip) {
  for (OracleKind k : {OracleKind::kRandomGraph, OracleKind::kEquality, OracleKind::kSetIntersection,
                       OracleKind::kGeneric})
    EXPECT_EQ(parse_oracle_kind(to_string(k)), k);
  EXPECT_FALSE(parse_oracle_kind("dlo"));
}

std::shared_ptr<const FinStructure> cd_graph() {
  StructureBuilder sb(OracleKind::kRandomGraph);
  sb.fresh("c0");
  sb.fresh("d0");
  return sb.build();
}

TEST(Instantiate, EdgeDifference) {
  auto s = cd_graph();
  InstantiatedFormula f = instantiate_template(edge_difference_template(), s, {s->id("c0"), s->id("d0")});
  ASSERT_EQ(f.literals.size(), 2u);
  EXPECT_EQ(to_string(f.literals[0], *s), "R(x,c0)");
  EXPECT_EQ(to_string(f.literals[1], *s), "!R(x,d0)");
  EXPECT_EQ(to_string(f), "R(x,c0) & !R(x,d0)");
  EXPECT_EQ(to_string(negate(f)), "!(R(x,c0) & !R(x,d0))");
}

TEST(Instantiate, Equality) {
  StructureBuilder sb(OracleKind::kEquality);
  const ElementId a = sb.fresh("a");
  auto s = sb.build();
  InstantiatedFormula f = instantiate_template(equality_template(), s, {a});
  EXPECT_EQ(to_string(f), "x=a");
  EXPECT_EQ(to_string(negate(f)), "!(x=a)");
}

TEST(Instantiate, ArityMismatch) {
  auto s = cd_graph();
  EXPECT_THROW(instantiate_template(edge_difference_template(), s, {s->id("c0")}), Error);
  EXPECT_THROW(instantiate_template(edge_template(), s, {9}), Error);
  EXPECT_THROW(instantiate_template(edge_template(), nullptr, {0}), Error);
}

TEST(FormulaTemplate, SlotsMustFitTheArity) {
  EXPECT_THROW(FormulaTemplate("bad", 1, {{"R", true, {kVarX, 1}}}), Error);
  EXPECT_THROW(FormulaTemplate("bad", 1, {{"=", true, {kVarX}}}), Error);
  EXPECT_THROW(FormulaTemplate("bad", 1, {{"", true, {kVarX, 0}}}), Error);
}

TEST(ConjunctionTemplate, ShiftsSlots) {
  FormulaTemplate psi = conjunction_template(membership_template(), 3);
  EXPECT_EQ(psi.name(), "membership^3");
  EXPECT_EQ(psi.parameter_arity(), 3u);
  ASSERT_EQ(psi.literals().size(), 3u);
  EXPECT_EQ(psi.literals()[2].args, (std::vector<int>{kVarX, 2}));
  EXPECT_THROW(conjunction_template(membership_template(), 0), Error);
}

}  // namespace
}  // namespace treeprop
