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

#include "test_util.hpp"
#include "treeprop/json_io.hpp"

namespace treeprop {
namespace {

std::vector<WitnessFamily> samples() {
  return {
      gen_random_graph_witness(WitnessMode::kTree, 2, parse_order_string("RGRG")),
      gen_random_graph_witness(WitnessMode::kArray, 3, parse_order_string("GRG")),
      gen_set_ctp1_witness(2, parse_order_string("RGG")),
      gen_set_ctp2_array(2, parse_order_string("RGB")),
      gen_equality_tp_witness(3),
      transform_ctp1_to_tp1(gen_set_ctp1_witness(2, parse_order_string("RGRG")), parse_chain("R<G"), 1, 2).witness,
  };
}

TEST(JsonRoundTrip, Witnesses) {
  for (const WitnessFamily& w : samples()) {
    const Json j = to_json(w);
    const WitnessFamily back = witness_from_json(parse_json(j.dump())).witness();
    EXPECT_EQ(to_json(back).dump(), j.dump());
    EXPECT_EQ(back.family.assignment, w.family.assignment);
    EXPECT_EQ(back.family.structure->names(), w.family.structure->names());
    EXPECT_EQ(back.family.structure->relations(), w.family.structure->relations());
  }
}

TEST(JsonRoundTrip, ChecksAgreeAfterRoundTrip) {
  WitnessFamily w = gen_random_graph_witness(WitnessMode::kTree, 2, parse_order_string("RGRG"));
  WitnessFamily back = witness_from_json(to_json(w)).witness();
  EXPECT_EQ(to_json(check_generalized_tp(back)).dump(), to_json(check_generalized_tp(w)).dump());
  EXPECT_EQ(to_json(check_c_tp1(back)).dump(), to_json(check_c_tp1(w)).dump());
}

TEST(JsonRoundTrip, RandomGraphEdgesBothWays) {
  StructureBuilder sb(OracleKind::kRandomGraph);
  const ElementId a = sb.fresh("a"), b = sb.fresh("b"), c = sb.fresh("c");
  sb.edge(a, b).edge(c, b);
  auto s = sb.build();
  auto back = structure_from_json(to_json(*s), "$.oracle");
  EXPECT_TRUE(back->adjacent(b, a));
  EXPECT_TRUE(back->adjacent(b, c));
  EXPECT_FALSE(back->adjacent(a, c));
}

TEST(JsonRoundTrip, Chains) {
  DividingChain chain = gen_triviality_chain(3);
  const Json j = to_json(chain);
  DividingChain back = chain_from_json(parse_json(j.dump()));
  EXPECT_EQ(to_json(back).dump(), j.dump());
  EXPECT_EQ(to_json(verify_dividing_chain(back)).dump(), to_json(verify_dividing_chain(chain)).dump());
}

TEST(JsonRoundTrip, QfTypeForms) {
  const QfType q = parse_chain("R<G<B");
  EXPECT_EQ(spec_q_json(q), Json("R<G<B"));
  EXPECT_EQ(qftype_from_json(Json("R<G<B"), "$"), q);
  EXPECT_EQ(qftype_from_json(to_json(q), "$"), q);
  const std::vector<Node> nodes{{0}, {1, 0}};
  const QfType tree_q = qftp_tree(IndexTree(2, parse_order_string("RG")), nodes);
  EXPECT_EQ(qftype_from_json(spec_q_json(tree_q), "$"), tree_q);
}

TEST(JsonRoundTrip, Delta) {
  std::vector<FormulaTemplate> delta{equality_template(), edge_template()};
  auto back = delta_from_json(to_json(delta));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(to_json(back).dump(), to_json(delta).dump());
  EXPECT_EQ(delta_from_json(Json{{"delta", to_json(delta)}}).size(), 2u);
}

TEST(JsonReport, AllKeysPresent) {
  Report r = check_generalized_tp(gen_random_graph_witness(WitnessMode::kTree, 2, parse_order_string("RGRG")));
  const Json j = to_json(r);
  for (const char* key : {"check", "pass", "clause", "violating_tuples", "clauses", "bound", "exhaustive", "seed", "notes"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["clause"].is_null());
  EXPECT_TRUE(j["seed"].is_null());
  WitnessFamily w = gen_random_graph_witness(WitnessMode::kTree, 2, parse_order_string("RGRG"));
  w.spec = InconsistencySpec::of_q(parse_chain("R<R"));
  const Json f = to_json(check_generalized_tp(w));
  EXPECT_EQ(f["clause"], "siblings");
  EXPECT_EQ(f["violating_tuples"], Json::parse(R"j([["(0)","(2)"]])j"));
}

// Expects witness_from_json to reject `text` with a schema error at `path`.
void expect_schema_error(const std::string& text, const std::string& path) {
  try {
    witness_from_json(parse_json(text)).witness();
    ADD_FAILURE() << "accepted: " << text;
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), path) << e.what();
  }
}

std::string mutate(const std::function<void(Json&)>& fn) {
  Json j = to_json(gen_random_graph_witness(WitnessMode::kTree, 1, parse_order_string("RG")));
  fn(j);
  return j.dump();
}

TEST(JsonSchema, ErrorPaths) {
  expect_schema_error(mutate([](Json& j) { j.erase("v"); }), "$.v");
  expect_schema_error(mutate([](Json& j) { j["v"] = 2; }), "$.v");
  expect_schema_error(mutate([](Json& j) { j["index"].erase("height"); }), "$.index.height");
  expect_schema_error(mutate([](Json& j) { j["index"]["height"] = -1; }), "$.index.height");
  expect_schema_error(mutate([](Json& j) { j["index"]["type"] = "forest"; }), "$.index.type");
  expect_schema_error(mutate([](Json& j) { j.erase("oracle"); }), "$.oracle");
  expect_schema_error(mutate([](Json& j) { j["oracle"]["kind"] = "field"; }), "$.oracle.kind");
  expect_schema_error(mutate([](Json& j) { j["assignment"]["(1)"] = {"c0", "zz"}; }), "$.assignment.(1)[1]");
  expect_schema_error(mutate([](Json& j) { j["assignment"].erase("(1)"); }), "$.assignment.(1)");
  expect_schema_error(mutate([](Json& j) { j["template"]["arity"] = 3; }), "$.template.arity");
  expect_schema_error(mutate([](Json& j) { j.erase("template"); }), "$.template");
  expect_schema_error(mutate([](Json& j) { j["spec"] = {{"k", 0}}; }), "$.spec.k");
  expect_schema_error(mutate([](Json& j) { j["spec"] = {{"k", 2}, {"q", "R<G"}}; }), "$.spec");
  expect_schema_error("[1, 2]", "$");
  expect_schema_error(to_json(gen_triviality_chain(1)).dump(), "$.kind");
}

TEST(JsonSchema, VersionIsCheckedFirst) {
  expect_schema_error(R"({"v": 7})", "$.v");
}

TEST(JsonParse, ErrorPosition) {
  try {
    parse_json(R"({"v": 1, ])");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 10u);
    EXPECT_NE(std::string(e.what()).find("byte 10"), std::string::npos);
  }
  EXPECT_THROW(parse_json(""), ParseError);
}

}  // namespace
}  // namespace treeprop
