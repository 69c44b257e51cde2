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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "treeprop/cli.hpp"

namespace treeprop {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, LogLevel level = LogLevel::kInfo) {
  args.insert(args.begin(), "treeprop");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, level);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("treeprop_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  // Runs a generator and stores its output.
  std::string generate(const std::string& name, std::vector<std::string> args) {
    Result r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return write(name, r.out);
  }

  fs::path dir_;
};

TEST_F(CliTest, GeneratorMatchesLibrary) {
  Result r = run({"gen", "rg-ctp", "--height", "2", "--order", "RGRG"});
  ASSERT_EQ(r.code, 0) << r.err;
  WitnessFamily w = gen_random_graph_witness(WitnessMode::kTree, 2, parse_order_string("RGRG"));
  EXPECT_EQ(r.out, to_json(w).dump(2) + "\n");
  EXPECT_EQ(run({"gen", "rg-ctp"}).out, r.out);
}

TEST_F(CliTest, GoldenWitness) {
  std::ifstream in(std::string(TREEPROP_TEST_DATA) + "/rg_tree_h1_rg.json");
  ASSERT_TRUE(in);
  const std::string golden{std::istreambuf_iterator<char>(in), {}};
  EXPECT_EQ(run({"gen", "rg-ctp", "--height", "1", "--order", "RG"}).out, golden);
}

TEST_F(CliTest, CheckItp) {
  const std::string w = generate("w.json", {"gen", "rg-ctp", "--height", "2", "--order", "RGRG"});
  Result pass = run({"check", "itp", "-w", w, "--q", "R<G"});
  EXPECT_EQ(pass.code, 0);
  EXPECT_EQ(Json::parse(pass.out)["pass"], true);
  EXPECT_EQ(pass.err, "itp: pass\n");

  Result fail = run({"check", "itp", "-w", w, "--q", "R<R"});
  EXPECT_EQ(fail.code, 1);
  EXPECT_EQ(Json::parse(fail.out)["clause"], "siblings");
  EXPECT_EQ(fail.err.rfind("itp: FAIL (clause siblings", 0), 0u) << fail.err;
}

TEST_F(CliTest, OutputFile) {
  const std::string w = generate("w.json", {"gen", "set-ctp1", "--height", "3", "--order", "RGRG"});
  const std::string out = (dir_ / "report.json").string();
  Result r = run({"check", "ctp1", "-w", w, "-o", out});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  const Json j = Json::parse(in);
  EXPECT_EQ(j["check"], "ctp1");
  EXPECT_EQ(j["pass"], true);
}

TEST_F(CliTest, Qftp) {
  Result r = run({"qftp", "--order", "RGRG", "--tuple", "0,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "R<G\n");
  EXPECT_EQ(run({"qftp", "--order", "RGRG", "--tuple", "3,0"}).out, "{G(x1), R(x2), x2<x1}\n");
  EXPECT_EQ(run({"qftp", "--order", "RGRG", "--tuple", "0,x"}).code, 2);
}

TEST_F(CliTest, Itp2SeedIsReported) {
  const std::string w = generate("a.json", {"gen", "rg-ctp2", "--rows", "6", "--order", "RGRG"});
  Result a = run({"check", "itp2", "-w", w, "--path-budget", "50", "--seed", "11"});
  Result b = run({"check", "itp2", "-w", w, "--path-budget", "50", "--seed", "11"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["seed"], 11);
  EXPECT_EQ(j["exhaustive"], false);
  EXPECT_NE(a.err.find("seed 11"), std::string::npos);
  EXPECT_EQ(Json::parse(run({"check", "itp2", "-w", w}).out)["seed"], kDefaultSeed);
}

TEST_F(CliTest, TransformPipeline) {
  const std::string w = generate("a.json", {"gen", "set-ctp2", "--rows", "4", "--order", "RGB"});
  const std::string b = generate("b.json", {"transform", "ctp2-case2", "-w", w, "--K", "2"});
  EXPECT_EQ(run({"check", "itp2", "-w", b}).code, 0);
  Result red = run({"transform", "ctp2-to-ip", "-w", w});
  EXPECT_EQ(red.code, 0) << red.err;
  const Json j = Json::parse(red.out);
  EXPECT_EQ(j["trace"][0]["action"], "case2");
  EXPECT_EQ(j["trace"][1]["action"], "case1");
  EXPECT_EQ(j["ip"]["ip"]["verified"], true);

  const std::string t = generate("t.json", {"gen", "set-ctp1", "--height", "2", "--order", "RGRG"});
  const std::string tp1 = generate("tp1.json", {"transform", "ctp1-to-tp1", "-w", t, "--height", "1", "--width", "2"});
  EXPECT_EQ(run({"check", "itp", "-w", tp1}).code, 0);
}

TEST_F(CliTest, Dividing) {
  const std::string c = generate("c.json", {"gen", "triviality-chain", "--n", "4"});
  EXPECT_EQ(run({"check", "chain", "-w", c}).code, 0);
  // The first step as a plain family.
  Json chain = Json::parse(std::ifstream(c));
  const Json& step = chain["steps"][0];
  Json fam{{"v", 1}, {"index", step["index"]}, {"oracle", chain["oracle"]}, {"template", chain["template"]},
           {"assignment", step["assignment"]}};
  const std::string f = write("f.json", fam.dump());
  EXPECT_EQ(run({"check", "dividing", "-w", f, "--q", "R<G", "--pivot", "0"}).code, 0);
  EXPECT_EQ(run({"check", "dividing", "-w", f, "--q", "R<R"}).code, 1);
  EXPECT_EQ(run({"check", "dividing", "-w", f, "--q", "R<G", "--pivot", "9"}).code, 2);
  EXPECT_EQ(run({"check", "indisc", "-w", f}).code, 0);
}

TEST_F(CliTest, ExportDot) {
  const std::string w = generate("w.json", {"gen", "rg-ctp", "--height", "1", "--order", "RG"});
  Result r = run({"export", "dot", "-w", w});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph \"witness\" {", 0), 0u);
  EXPECT_NE(r.out.find("n0 -> n1;"), std::string::npos);
  EXPECT_NE(r.out.find("label=\"(1)\\nd0,c0\""), std::string::npos);
  EXPECT_EQ(run({"export", "dot", "-w", w}).out, r.out);

  const std::string a = generate("a.json", {"gen", "rg-ctp2", "--rows", "2", "--order", "RG"});
  Result ra = run({"export", "dot", "-w", a});
  EXPECT_NE(ra.out.find("subgraph row1"), std::string::npos);
  EXPECT_NE(ra.out.find("rank=same"), std::string::npos);
}

TEST_F(CliTest, Errors) {
  Result missing = run({"check", "itp", "-w", (dir_ / "nope.json").string()});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("cannot read"), std::string::npos);

  const std::string bad = write("bad.json", R"({"v": 1, ])");
  Result parse = run({"check", "itp", "-w", bad});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("byte 10"), std::string::npos);

  Json j = Json::parse(run({"gen", "rg-ctp", "--height", "1", "--order", "RG"}).out);
  j["index"].erase("height");
  Result schema = run({"check", "itp", "-w", write("s.json", j.dump())});
  EXPECT_EQ(schema.code, 2);
  EXPECT_NE(schema.err.find("schema error at $.index.height"), std::string::npos) << schema.err;

  j["v"] = 2;
  EXPECT_EQ(run({"check", "itp", "-w", write("v.json", j.dump())}).code, 2);

  const std::string c = generate("c.json", {"gen", "triviality-chain", "--n", "1"});
  EXPECT_EQ(run({"export", "dot", "-w", c}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check", "itp"}).code, 2);
  EXPECT_EQ(run({"gen", "rg-ctp", "--order", "RR"}).code, 2);
}

TEST_F(CliTest, HelpAndLogging) {
  Result h = run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("transform"), std::string::npos);
  const std::string w = generate("w.json", {"gen", "rg-ctp", "--height", "1", "--order", "RG"});
  EXPECT_TRUE(run({"check", "itp", "-w", w}, LogLevel::kQuiet).err.empty());
  Result d = run({"check", "itp", "-w", w}, LogLevel::kDebug);
  EXPECT_NE(d.err.find("  siblings: pass"), std::string::npos) << d.err;
  EXPECT_NE(d.err.find("note:"), std::string::npos);
}

}  // namespace
}  // namespace treeprop
