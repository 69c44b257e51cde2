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
#include <set>

#include "test_util.hpp"

namespace treeprop {
namespace {

std::vector<std::string> names(const WitnessFamily& w, IndexId id) {
  std::vector<std::string> out;
  for (ElementId e : w.family.at(id)) out.push_back(w.family.structure->name(e));
  return out;
}

WitnessFamily rg_tree(std::size_t height, const char* order = "RGRG") {
  return gen_random_graph_witness(WitnessMode::kTree, height, parse_order_string(order));
}

TEST(RandomGraphWitness, Values) {
  WitnessFamily w = rg_tree(2);
  const auto& tree = std::get<IndexTree>(w.family.index);
  EXPECT_FALSE(w.family.assigned(0));
  EXPECT_EQ(names(w, tree.id_of({0})), (std::vector<std::string>{"c0", "d0"}));
  EXPECT_EQ(names(w, tree.id_of({1})), (std::vector<std::string>{"d0", "c0"}));
  EXPECT_EQ(names(w, tree.id_of({3, 2})), (std::vector<std::string>{"c1", "d1"}));
  EXPECT_EQ(w.spec.describe(), "q=R<G");
}

TEST(RandomGraphWitness, PassesForManyOrders) {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 40; ++iter) {
    ColoredOrder order = testing::random_order(rng, 2 + rng() % 5, {"R", "G"});
    if (order.positions_of("R").empty() || order.positions_of("G").empty()) continue;
    for (std::size_t h = 1; h <= 2; ++h)
      EXPECT_TRUE(check_generalized_tp(gen_random_graph_witness(WitnessMode::kTree, h, order)).pass)
          << order_string(order);
    EXPECT_TRUE(check_generalized_tp2(gen_random_graph_witness(WitnessMode::kArray, 3, order)).pass)
        << order_string(order);
  }
}

// Elements at different levels never coincide; within a level only c_i
// and d_i appear.
TEST(RandomGraphWitness, Freshness) {
  WitnessFamily w = rg_tree(3, "RGGR");
  const auto& tree = std::get<IndexTree>(w.family.index);
  std::vector<std::set<ElementId>> by_level(4);
  for (NodeId id = 1; id < tree.size(); ++id)
    for (ElementId e : w.family.at(id)) by_level[tree.node(id).size()].insert(e);
  for (std::size_t i = 1; i <= 3; ++i) {
    EXPECT_EQ(by_level[i].size(), 2u);
    for (std::size_t j = 1; j < i; ++j)
      for (ElementId e : by_level[i]) EXPECT_FALSE(by_level[j].count(e));
  }
  std::set<std::string> distinct(w.family.structure->names().begin(), w.family.structure->names().end());
  EXPECT_EQ(distinct.size(), w.family.structure->size());
}

TEST(DuplicateColors, SamePaletteIsIdentity) {
  WitnessFamily w = rg_tree(2);
  Duplication d = duplicate_colors(w, {"R", "G"});
  EXPECT_EQ(to_json(d.witness).dump(), to_json(w).dump());
  EXPECT_EQ(d.origin, (std::vector<Position>{0, 1, 2, 3}));
}

TEST(DuplicateColors, CopiesFollowTheirOriginal) {
  WitnessFamily w = rg_tree(2);
  Duplication d = duplicate_colors(w, {"R", "G", "B"});
  const auto& tree = std::get<IndexTree>(d.witness.family.index);
  const auto& old_tree = std::get<IndexTree>(w.family.index);
  EXPECT_EQ(order_string(tree.branching()), "RBGBRBGB");
  EXPECT_EQ(d.origin, (std::vector<Position>{0, 0, 1, 1, 2, 2, 3, 3}));
  for (NodeId id = 1; id < tree.size(); ++id) {
    Node n = tree.node(id);
    for (auto& p : n) p = d.origin[p];
    EXPECT_EQ(d.witness.family.at(id), w.family.at(old_tree.id_of(n)));
  }
  EXPECT_TRUE(check_generalized_tp(d.witness).pass);
  // Restricted to the old colors, paths and siblings are the old ones.
  WitnessFamily bq = d.witness;
  bq.spec = InconsistencySpec::of_q(parse_chain("R<B"));
  EXPECT_FALSE(check_generalized_tp(bq).pass);
}

TEST(DuplicateColors, Arrays) {
  WitnessFamily w = gen_random_graph_witness(WitnessMode::kArray, 3, parse_order_string("RG"));
  Duplication d = duplicate_colors(w, {"R", "G", "B", "Y"});
  const auto& arr = std::get<ArrayIndex>(d.witness.family.index);
  EXPECT_EQ(order_string(arr.row_order()), "RBYGBY");
  EXPECT_EQ(d.witness.family.at(arr.id_of({2, 5})), w.family.at(std::get<ArrayIndex>(w.family.index).id_of({2, 1})));
  EXPECT_TRUE(check_generalized_tp2(d.witness).pass);
}

TEST(DuplicateColors, Preconditions) {
  EXPECT_THROW(duplicate_colors(rg_tree(1), {"G", "B"}), Error);
  EXPECT_THROW(duplicate_colors(gen_equality_tp_witness(3), {"R"}), Error);
}

TEST(TrivialColoring, EqualityWitness) {
  WitnessFamily w = gen_equality_tp_witness(4);
  ASSERT_TRUE(check_generalized_tp(w).pass);
  WitnessFamily c = trivial_coloring(w, {"R", "G"});
  EXPECT_EQ(order_string(std::get<IndexTree>(c.family.index).branching()), "RGRG");
  EXPECT_EQ(chain_notation(*c.spec.q).value_or(""), "R<G");
  EXPECT_TRUE(check_generalized_tp(c).pass);
  WitnessFamily c3 = trivial_coloring(w, {"R", "G", "B"});
  EXPECT_EQ(chain_notation(*c3.spec.q).value_or(""), "R<G");
  EXPECT_TRUE(check_generalized_tp(c3).pass);
  EXPECT_THROW(trivial_coloring(rg_tree(1), {"R"}), Error);
}

TEST(SetCTp1Witness, PassesAndFailsAsExpected) {
  for (std::size_t h = 1; h <= 3; ++h)
    for (const char* order : {"RG", "GR", "RGRG", "RRG"}) {
      WitnessFamily w = gen_set_ctp1_witness(h, parse_order_string(order));
      EXPECT_TRUE(check_c_tp1(w).pass) << h << order;
      w.spec = InconsistencySpec::of_q(parse_chain("R<R"));
      if (std::string(order).size() > 2) {
        EXPECT_FALSE(check_c_tp1(w).pass) << h << order;
      }
    }
  EXPECT_THROW(gen_set_ctp1_witness(0, parse_order_string("RG")), Error);
}

TEST(CTp1ToTp1, RootAndChildren) {
  WitnessFamily w = gen_set_ctp1_witness(2, parse_order_string("RGRG"));
  TupleTree t = transform_ctp1_to_tp1(w, parse_chain("R<G"), 1, 2);
  const auto& out = std::get<IndexTree>(t.witness.family.index);
  EXPECT_EQ(names(t.witness, 0), (std::vector<std::string>{"S", "S"}));
  // Child t takes the t-th red position, then the first green one.
  EXPECT_EQ(t.sources[out.child(0, 0)], (std::vector<Node>{{0}, {0, 1}}));
  EXPECT_EQ(t.sources[out.child(0, 1)], (std::vector<Node>{{2}, {2, 1}}));
  EXPECT_EQ(names(t.witness, out.child(0, 1)), (std::vector<std::string>{"S.2", "S.2.1"}));
  EXPECT_EQ(t.witness.spec.describe(), "k=2");
  EXPECT_EQ(t.witness.formula.parameter_arity(), 2u);
  EXPECT_TRUE(check_generalized_tp(t.witness).pass);
}

TEST(CTp1ToTp1, DeeperOutput) {
  WitnessFamily w = gen_set_ctp1_witness(4, parse_order_string("RGRGRG"));
  TupleTree t = transform_ctp1_to_tp1(w, parse_chain("R<G"), 2, 3);
  const auto& out = std::get<IndexTree>(t.witness.family.index);
  EXPECT_EQ(out.height(), 2u);
  EXPECT_EQ(out.branching().size(), 3u);
  EXPECT_EQ(t.sources[out.id_of({2, 1})], (std::vector<Node>{{4, 1, 2}, {4, 1, 2, 1}}));
  Report r = check_generalized_tp(t.witness);
  EXPECT_TRUE(r.pass) << r.summary();
}

TEST(CTp1ToTp1, Preconditions) {
  WitnessFamily w = gen_set_ctp1_witness(3, parse_order_string("RGRG"));
  EXPECT_THROW(transform_ctp1_to_tp1(w, parse_chain("R<G"), 2, 2), Error);
  EXPECT_THROW(transform_ctp1_to_tp1(w, parse_chain("R<G"), 1, 3), Error);
  EXPECT_THROW(transform_ctp1_to_tp1(w, parse_chain("R<B"), 1, 2), Error);
  EXPECT_THROW(transform_ctp1_to_tp1(rg_tree(2), parse_chain("R<G"), 1, 2), Error);
}

WitnessFamily rg_array(std::size_t rows, const char* order = "RGRG") {
  return gen_random_graph_witness(WitnessMode::kArray, rows, parse_order_string(order));
}

TEST(BlockParams, SmallestAnchors) {
  BlockParams bp = block_params(parse_order_string("GRBRGB"), parse_chain("R<G<B"));
  EXPECT_EQ(bp.m, 2u);
  EXPECT_EQ(bp.anchors, (std::vector<Position>{1, 4, 5}));
  EXPECT_EQ(bp.f(0), 1u);
  EXPECT_EQ(bp.h(0), 4u);
  EXPECT_EQ(bp.h(1), 5u);
  EXPECT_THROW(block_params(parse_order_string("GRBRGB"), parse_chain("R<B<B")), Error);
  EXPECT_THROW(block_params(parse_order_string("BGR"), parse_chain("R<G")), Error);
}

TEST(Case1, RandomGraphColumnAlternates) {
  WitnessFamily w = rg_array(6);
  BlockParams bp = block_params(std::get<ArrayIndex>(w.family.index).row_order(), *w.spec.q);
  IpCandidate ip = extract_ip_case1(w, bp);
  EXPECT_TRUE(ip.verified);
  EXPECT_EQ(ip.column, 1u);
  ASSERT_EQ(ip.forcing.size(), 3u);
  for (const auto& [row, forced] : ip.forcing) EXPECT_TRUE(forced) << row;
  Report r = check_ip(ip.sequence, ip.formula, std::vector<FormulaTemplate>{edge_template()}, 3);
  EXPECT_TRUE(r.pass) << r.summary();
}

TEST(Case1, SingleRowIsDegenerate) {
  WitnessFamily w = rg_array(1);
  IpCandidate ip = extract_ip_case1(w, block_params(parse_order_string("RGRG"), *w.spec.q));
  EXPECT_TRUE(ip.verified);
  ASSERT_EQ(ip.alternating.size(), 1u);
  EXPECT_FALSE(ip.alternating[0].positive);
}

TEST(Case1, RejectsInconsistentAnchors) {
  WitnessFamily w = gen_set_ctp2_array(4, parse_order_string("RGB"));
  BlockParams bp = block_params(std::get<ArrayIndex>(w.family.index).row_order(), *w.spec.q);
  EXPECT_THROW(extract_ip_case1(w, bp), Error);
}

TEST(SetCTp2Array, IsMinimalAndPasses) {
  WitnessFamily w = gen_set_ctp2_array(3, parse_order_string("RGB"));
  EXPECT_FALSE(minimality_violation(w));
  EXPECT_TRUE(check_generalized_tp2(w).pass);
  EXPECT_THROW(gen_set_ctp2_array(2, parse_order_string("RR")), Error);
}

TEST(Case2, BlockValues) {
  WitnessFamily w = gen_set_ctp2_array(4, parse_order_string("RGB"));
  BlockParams bp = block_params(std::get<ArrayIndex>(w.family.index).row_order(), *w.spec.q);
  WitnessFamily out = block_transform_case2(w, bp);
  const auto& arr = std::get<ArrayIndex>(out.family.index);
  EXPECT_EQ(arr.rows(), 2u);
  EXPECT_EQ(order_string(arr.row_order()), "e0,e1,e0,e1");
  EXPECT_EQ(chain_notation(*out.spec.q).value_or(""), "e0<e1");
  EXPECT_EQ(out.formula.parameter_arity(), 2u);
  // Constant block: column j_0 on both rows of the block.
  EXPECT_EQ(names(out, arr.id_of({1, 0})), (std::vector<std::string>{"S.2.0", "S.3.0"}));
  // Alternating block: j_m on the even row, j_{m-1} on the odd row.
  EXPECT_EQ(names(out, arr.id_of({1, 3})), (std::vector<std::string>{"S.2.2", "S.3.1"}));
  EXPECT_EQ(out.family.at(arr.id_of({0, 1})), out.family.at(arr.id_of({0, 3})));
}

TEST(Case2, EveryOutputPathCorresponds) {
  WitnessFamily w = gen_set_ctp2_array(4, parse_order_string("RGB"));
  BlockParams bp = block_params(std::get<ArrayIndex>(w.family.index).row_order(), *w.spec.q);
  WitnessFamily out = block_transform_case2(w, bp);
  const auto& arr = std::get<ArrayIndex>(out.family.index);
  for (std::size_t n = 0; n < 16; ++n) {
    std::vector<Position> d{static_cast<Position>(n % 4), static_cast<Position>(n / 4)};
    EXPECT_TRUE(verify_case2_correspondence(w, out, bp, d));
    // The preimage path is consistent, so the output path is too.
    auto pre = case2_path_preimage(bp, arr.row_order(), d, 4);
    std::vector<IndexId> ids;
    for (std::size_t i = 0; i < 4; ++i) ids.push_back(std::get<ArrayIndex>(w.family.index).id_of({i, pre[i]}));
    EXPECT_TRUE(oracle_consistent(w.oracle(), w.instances(ids)));
  }
  Report r = check_generalized_tp2(out);
  EXPECT_TRUE(r.pass) << r.summary();
}

TEST(Case2, Preconditions) {
  WitnessFamily w = gen_set_ctp2_array(4, parse_order_string("RGB"));
  BlockParams bp = block_params(std::get<ArrayIndex>(w.family.index).row_order(), *w.spec.q);
  bp.K = 3;
  EXPECT_THROW(block_transform_case2(w, bp), Error);
  bp.K = 2;
  EXPECT_THROW(block_transform_case2(w, bp, 3), Error);
  WitnessFamily rg = rg_array(4);
  EXPECT_THROW(block_transform_case2(rg, block_params(parse_order_string("RGRG"), *rg.spec.q)), Error);
}

TEST(Ctp2ToIp, SetArrayReducesInTwoSteps) {
  Reduction red = ctp2_to_ip(gen_set_ctp2_array(4, parse_order_string("RGB")));
  ASSERT_EQ(red.trace.size(), 2u);
  EXPECT_EQ(red.trace[0].action, "case2");
  EXPECT_EQ(red.trace[0].K, 2u);
  EXPECT_EQ(red.trace[1].action, "case1");
  ASSERT_TRUE(red.ip);
  EXPECT_TRUE(red.ip->verified);
  EXPECT_FALSE(red.classical_tp2);
}

TEST(Ctp2ToIp, OneColorIsClassical) {
  WitnessFamily w = rg_array(2);
  w.spec = InconsistencySpec::of_q(parse_chain("R<R"));
  Reduction red = ctp2_to_ip(w);
  EXPECT_TRUE(red.classical_tp2);
  EXPECT_EQ(red.trace.back().action, "classical");
}

TEST(TrivialityChain, EveryStepDivides) {
  DividingChain chain = gen_triviality_chain(4);
  std::vector<ElementId> context;
  for (const auto& step : chain.steps) {
    IndexedFamily f = step.family;
    f.context = context;
    EXPECT_TRUE(check_generalized_dividing(f, chain.formula, step.q, step.pivot, chain.delta, chain.arity).pass);
    context.insert(context.end(), step.params.begin(), step.params.end());
  }
  std::vector<InstantiatedFormula> first{
      instantiate_template(chain.formula, chain.structure, ElementTuple{chain.steps[0].params})};
  EXPECT_TRUE(oracle_consistent(OracleKind::kEquality, first));
  EXPECT_THROW(gen_triviality_chain(0), Error);
}

TEST(ArrayAsTree, SiblingsAreRows) {
  WitnessFamily w = rg_array(2);
  WitnessFamily t = array_as_tree(w);
  const auto& tree = std::get<IndexTree>(t.family.index);
  const auto& arr = std::get<ArrayIndex>(w.family.index);
  EXPECT_EQ(t.family.at(tree.id_of({3, 2})), w.family.at(arr.id_of({1, 2})));
  EXPECT_EQ(t.family.at(tree.id_of({1})), w.family.at(arr.id_of({0, 1})));
}

}  // namespace
}  // namespace treeprop
