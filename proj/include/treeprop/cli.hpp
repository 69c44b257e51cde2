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

// Command-line front end. run_cli is the whole program; tools/treeprop.cpp
// only forwards argv and the standard streams.
//
// Exit status: 0 when a check passes or a construction succeeds, 1 when a
// check fails, 2 for usage and input errors. JSON goes to standard output
// (or -o), a one-line summary to standard error. TREEPROP_LOG=quiet drops
// the summary, TREEPROP_LOG=debug adds clause details and notes.

#ifndef TREEPROP_CLI_HPP_
#define TREEPROP_CLI_HPP_

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif

#include "treeprop/constructions.hpp"
#include "treeprop/dot.hpp"
#include "treeprop/indiscernibility.hpp"
#include "treeprop/json_io.hpp"
#include "treeprop/properties.hpp"

namespace treeprop {

enum class LogLevel { kQuiet, kInfo, kDebug };

inline LogLevel log_level_from_env() {
  const char* v = std::getenv("TREEPROP_LOG");
  if (!v) return LogLevel::kInfo;
  const std::string s = v;
  if (s == "quiet" || s == "0" || s == "off") return LogLevel::kQuiet;
  if (s == "debug" || s == "2") return LogLevel::kDebug;
  return LogLevel::kInfo;
}

namespace cli {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Options {
  std::string witness;
  std::string output;
  std::optional<std::string> q;
  std::optional<std::size_t> k;
  std::optional<std::size_t> height;
  std::optional<std::size_t> rows;
  std::optional<std::size_t> width;
  std::string order;
  std::string mode = "tree";
  std::string delta;
  std::size_t arity = 2;
  std::size_t path_budget = kDefaultPathBudget;
  std::uint64_t seed = kDefaultSeed;
  std::string palette;
  std::string pivot;
  std::string tuple;
  std::size_t n = 3;
  std::size_t K = 2;
  bool strong = false;
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err, LogLevel level) : out_(out), err_(err), level_(level) {}

  const Options& options() const { return opt_; }
  Options& options() { return opt_; }

  void info(const std::string& line) const {
    if (level_ != LogLevel::kQuiet) err_ << line << "\n";
  }

  void debug(const std::string& line) const {
    if (level_ == LogLevel::kDebug) err_ << line << "\n";
  }

  std::string read(const std::string& path) const {
    if (path.empty()) throw Error("no input file given (use -w)");
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  void emit(const std::string& text) const {
    if (opt_.output.empty() || opt_.output == "-") {
      out_ << text;
      return;
    }
    std::ofstream os(opt_.output, std::ios::binary);
    if (!os) throw Error("cannot write " + opt_.output);
    os << text;
  }

  void emit(const Json& j) const { emit(j.dump(2) + "\n"); }

  WitnessDocument witness_doc() const { return witness_from_json(parse_json(read(opt_.witness))); }

  // The witness with --q or --k replacing its own specification.
  WitnessFamily witness() const {
    WitnessFamily w = witness_doc().witness();
    if (opt_.q && opt_.k) throw Error("give either --q or --k, not both");
    if (opt_.q) w.spec = InconsistencySpec::of_q(parse_chain(*opt_.q));
    if (opt_.k) {
      if (*opt_.k == 0) throw Error("--k must be at least 1");
      w.spec = InconsistencySpec::of_k(*opt_.k);
    }
    return w;
  }

  std::vector<FormulaTemplate> delta(const std::optional<FormulaTemplate>& fallback) const {
    if (!opt_.delta.empty()) return delta_from_json(parse_json(read(opt_.delta)));
    if (fallback) return {*fallback};
    throw Error("no delta given (use --delta) and the witness has no template");
  }

  QfType q_or(const std::optional<QfType>& fallback) const {
    if (opt_.q) return parse_chain(*opt_.q);
    if (fallback) return *fallback;
    throw Error("no q given (use --q) and the witness has none");
  }

  int report(const Report& r) const {
    emit(to_json(r));
    info(r.summary());
    if (r.seed) info("seed " + std::to_string(*r.seed));
    for (const auto& c : r.clauses) {
      std::string line = "  " + c.name + ": " + (c.pass ? "pass" : "FAIL") + ", " +
                         std::to_string(c.checked) + " checked";
      if (c.vacuous) line += ", vacuous";
      if (!c.detail.empty()) line += ", " + c.detail;
      debug(line);
    }
    for (const auto& note : r.notes) debug("  note: " + note);
    return r.pass ? kOk : kFailed;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  LogLevel level_;
  Options opt_;
};

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline ColoredOrder order_flag(const std::string& s, const char* fallback) {
  return parse_order_string(s.empty() ? fallback : s);
}

// ---- gen ----

inline int gen_rg_ctp(const Session& s, bool array) {
  const Options& o = s.options();
  const bool as_array = array || o.mode == "array";
  if (!array && o.mode != "tree" && o.mode != "array") throw Error("--mode must be tree or array");
  const std::size_t n = as_array ? o.rows.value_or(3) : o.height.value_or(2);
  WitnessFamily w = gen_random_graph_witness(as_array ? WitnessMode::kArray : WitnessMode::kTree, n,
                                             order_flag(o.order, "RGRG"));
  s.emit(to_json(w));
  s.info(std::string("generated random-graph ") + (as_array ? "array" : "tree") + " witness, " +
         std::to_string(index_size(w.family.index)) + " index elements, spec " + w.spec.describe());
  return kOk;
}

inline int gen_set_ctp1(const Session& s) {
  const Options& o = s.options();
  WitnessFamily w = gen_set_ctp1_witness(o.height.value_or(2), order_flag(o.order, "RGRG"));
  s.emit(to_json(w));
  s.info("generated set c-TP1 witness, " + std::to_string(index_size(w.family.index)) + " nodes");
  return kOk;
}

inline int gen_set_ctp2(const Session& s) {
  const Options& o = s.options();
  WitnessFamily w = gen_set_ctp2_array(o.rows.value_or(4), order_flag(o.order, "RGB"));
  s.emit(to_json(w));
  s.info("generated set c-TP2 array, spec " + w.spec.describe());
  return kOk;
}

inline int gen_triviality(const Session& s) {
  DividingChain c = gen_triviality_chain(s.options().n);
  s.emit(to_json(c));
  s.info("generated triviality chain of length " + std::to_string(c.steps.size()));
  return kOk;
}

// ---- check ----

inline int check_indisc(const Session& s) {
  const Options& o = s.options();
  WitnessDocument doc = s.witness_doc();
  auto delta = s.delta(doc.formula);
  if (o.strong) return s.report(check_strong_array(doc.family, o.arity, delta));
  return s.report(check_indiscernible(doc.family, o.arity, delta));
}

inline int check_ip_cmd(const Session& s) {
  const Options& o = s.options();
  WitnessDocument doc = s.witness_doc();
  if (!doc.formula) throw SchemaError("$.template", "missing required field");
  return s.report(check_ip(doc.family, *doc.formula, s.delta(doc.formula), o.arity));
}

inline int check_dividing_cmd(const Session& s) {
  const Options& o = s.options();
  WitnessDocument doc = s.witness_doc();
  if (!doc.formula) throw SchemaError("$.template", "missing required field");
  const QfType q = s.q_or(doc.spec.q);
  std::optional<IndexId> pivot;
  if (!o.pivot.empty()) {
    for (IndexId id = 0; id < index_size(doc.family.index); ++id)
      if (index_label(doc.family.index, id) == o.pivot) pivot = id;
    if (!pivot) throw Error("--pivot " + o.pivot + " is not an element of the index");
  }
  return s.report(check_generalized_dividing(doc.family, *doc.formula, q, pivot, s.delta(doc.formula),
                                             o.arity));
}

inline int check_chain_cmd(const Session& s) {
  return s.report(verify_dividing_chain(chain_from_json(parse_json(s.read(s.options().witness)))));
}

// ---- transform ----

inline int transform_dup(const Session& s) {
  auto palette = split_list(s.options().palette);
  if (palette.empty()) throw Error("--palette is required, e.g. R,G,B,Y");
  Duplication d = duplicate_colors(s.witness(), palette);
  s.emit(to_json(d.witness));
  s.info("duplicated colors: " + std::to_string(base_order(d.witness.family.index).size()) +
         " positions per level");
  return kOk;
}

inline int transform_color_tp(const Session& s) {
  auto palette = split_list(s.options().palette);
  if (palette.empty()) palette = {"R", "G"};
  WitnessFamily w = trivial_coloring(s.witness(), palette);
  s.emit(to_json(w));
  s.info("colored witness, spec " + w.spec.describe());
  return kOk;
}

inline int transform_ctp1(const Session& s) {
  const Options& o = s.options();
  WitnessFamily w = s.witness();
  if (!w.spec.q) throw Error("ctp1-to-tp1 needs q (use --q)");
  TupleTree t = transform_ctp1_to_tp1(w, *w.spec.q, o.height.value_or(1), o.width.value_or(2));
  s.emit(to_json(t.witness));
  s.info("tuple tree of height " + std::to_string(std::get<IndexTree>(t.witness.family.index).height()) +
         ", formula " + t.witness.formula.name());
  return kOk;
}

inline int transform_case1(const Session& s) {
  WitnessFamily w = s.witness();
  if (!w.spec.q) throw Error("ctp2-case1 needs q (use --q)");
  const auto* arr = std::get_if<ArrayIndex>(&w.family.index);
  if (!arr) throw Error("ctp2-case1 needs an array-indexed witness");
  IpCandidate ip = extract_ip_case1(w, block_params(arr->row_order(), *w.spec.q));
  s.emit(to_json(ip));
  s.info(std::string("case 1 column ") + std::to_string(ip.column) + ": " +
         (ip.verified ? "alternating set consistent" : "NOT verified"));
  return ip.verified ? kOk : kFailed;
}

inline int transform_case2(const Session& s) {
  const Options& o = s.options();
  WitnessFamily w = s.witness();
  if (!w.spec.q) throw Error("ctp2-case2 needs q (use --q)");
  const auto* arr = std::get_if<ArrayIndex>(&w.family.index);
  if (!arr) throw Error("ctp2-case2 needs an array-indexed witness");
  WitnessFamily out = block_transform_case2(w, block_params(arr->row_order(), *w.spec.q, o.K), o.rows.value_or(0));
  s.emit(to_json(out));
  s.info("block transform, K=" + std::to_string(o.K) + ", spec " + out.spec.describe());
  return kOk;
}

inline int transform_reduce(const Session& s) {
  Reduction red = ctp2_to_ip(s.witness());
  Json trace = Json::array();
  for (const auto& step : red.trace) trace.push_back(to_json(step));
  Json out{{"trace", std::move(trace)},
           {"classical_tp2", red.classical_tp2},
           {"ip", red.ip ? to_json(*red.ip) : Json(nullptr)}};
  s.emit(out);
  for (const auto& step : red.trace) s.info(step.action + " on " + describe(step.q) + ": " + step.detail);
  return red.classical_tp2 || (red.ip && red.ip->verified) ? kOk : kFailed;
}

// ---- qftp, export ----

inline int qftp_cmd(const Session& s, std::ostream& out) {
  const Options& o = s.options();
  if (o.order.empty()) throw Error("--order is required");
  ColoredOrder order = parse_order_string(o.order);
  std::vector<Position> tuple;
  for (const auto& item : split_list(o.tuple)) {
    std::size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error("--tuple expects comma-separated positions, got " + item);
    tuple.push_back(static_cast<Position>(p));
  }
  if (tuple.empty()) throw Error("--tuple is required");
  QfType q = qftp_order(order, tuple);
  out << chain_notation(q).value_or(describe(q)) << "\n";
  return kOk;
}

inline int export_dot(const Session& s) {
  WitnessDocument doc = s.witness_doc();
  s.emit(to_dot(doc.family));
  return kOk;
}

}  // namespace cli

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   LogLevel level = log_level_from_env()) {
  using namespace cli;
  Session session(out, err, level);
  Options& o = session.options();

  CLI::App app{"Finite witnesses for generalized tree properties", "treeprop"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, std::function<int()> fn) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->callback([&action, fn] { action = fn; });
    sub->add_option("-o,--output", o.output, "write the result here instead of standard output");
    return sub;
  };
  auto with_witness = [&](CLI::App* sub) {
    sub->add_option("-w,--witness", o.witness, "witness JSON file ('-' for standard input)")->required();
    return sub;
  };
  auto with_spec = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "quantifier-free type as a chain, e.g. R<G");
    sub->add_option("--k", o.k, "k for k-inconsistency");
    return sub;
  };
  auto with_delta = [&](CLI::App* sub) {
    sub->add_option("--delta", o.delta, "JSON file with the formula templates of delta");
    sub->add_option("--arity", o.arity, "bound on the number of index elements compared")->capture_default_str();
    return sub;
  };

  CLI::App* gen = app.add_subcommand("gen", "generate witnesses")->require_subcommand(1);
  {
    auto* rg = leaf(gen, "rg-ctp", "random-graph c-TP witness", [&] { return gen_rg_ctp(session, false); });
    rg->add_option("--mode", o.mode, "tree or array")->capture_default_str();
    rg->add_option("--height", o.height, "tree height");
    rg->add_option("--rows", o.rows, "array rows");
    rg->add_option("--order", o.order, "branching order as a color string, e.g. RGRG");
    auto* rg2 = leaf(gen, "rg-ctp2", "random-graph c-TP2 array", [&] { return gen_rg_ctp(session, true); });
    rg2->add_option("--rows", o.rows, "array rows");
    rg2->add_option("--order", o.order, "row order as a color string");
    auto* s1 = leaf(gen, "set-ctp1", "set-system c-TP1 witness", [&] { return gen_set_ctp1(session); });
    s1->add_option("--height", o.height, "tree height");
    s1->add_option("--order", o.order, "branching order as a color string");
    auto* s2 = leaf(gen, "set-ctp2", "set-system c-TP2 array", [&] { return gen_set_ctp2(session); });
    s2->add_option("--rows", o.rows, "array rows");
    s2->add_option("--order", o.order, "row order as a color string, e.g. RGB");
    auto* tc = leaf(gen, "triviality-chain", "dividing chain in the equality structure",
                    [&] { return gen_triviality(session); });
    tc->add_option("--n", o.n, "number of steps")->capture_default_str();
  }

  CLI::App* check = app.add_subcommand("check", "check a property of a witness")->require_subcommand(1);
  {
    auto* ind = with_delta(with_witness(leaf(check, "indisc", "generalized indiscernibility",
                                             [&] { return check_indisc(session); })));
    ind->add_flag("--strong", o.strong, "strong indiscernibility of an array");
    with_spec(with_witness(leaf(check, "itp", "I-TP", [&] { return session.report(check_generalized_tp(session.witness())); })));
    with_spec(with_witness(leaf(check, "ctp1", "c-TP1", [&] { return session.report(check_c_tp1(session.witness())); })));
    auto* tp2 = with_spec(with_witness(leaf(check, "itp2", "I-TP2", [&] {
      return session.report(check_generalized_tp2(session.witness(), o.path_budget, o.seed));
    })));
    tp2->add_option("--path-budget", o.path_budget, "sample paths when there are more than this")
        ->capture_default_str();
    tp2->add_option("--seed", o.seed, "seed for path sampling")->capture_default_str();
    with_delta(with_witness(leaf(check, "ip", "independence property of a sequence",
                                 [&] { return check_ip_cmd(session); })));
    auto* div = with_delta(with_witness(leaf(check, "dividing", "generalized dividing",
                                             [&] { return check_dividing_cmd(session); })));
    div->add_option("--q", o.q, "quantifier-free type as a chain, e.g. R<G");
    div->add_option("--pivot", o.pivot, "index label whose tuple is the formula's parameter");
    with_witness(leaf(check, "chain", "dividing chain", [&] { return check_chain_cmd(session); }));
  }

  CLI::App* transform = app.add_subcommand("transform", "transform a witness")->require_subcommand(1);
  {
    auto* dup = with_spec(with_witness(leaf(transform, "dup-colors", "add colors by duplicating positions",
                                            [&] { return transform_dup(session); })));
    dup->add_option("--palette", o.palette, "new palette, e.g. R,G,B,Y");
    auto* ctp = with_spec(with_witness(leaf(transform, "color-tp", "color a one-color TP witness",
                                            [&] { return transform_color_tp(session); })));
    ctp->add_option("--palette", o.palette, "palette to cycle through")->capture_default_str();
    auto* t1 = with_spec(with_witness(leaf(transform, "ctp1-to-tp1", "tuple tree for phi^k",
                                           [&] { return transform_ctp1(session); })));
    t1->add_option("--height", o.height, "output height");
    t1->add_option("--width", o.width, "output width");
    with_spec(with_witness(leaf(transform, "ctp2-case1", "extract an IP sequence",
                                [&] { return transform_case1(session); })));
    auto* c2 = with_spec(with_witness(leaf(transform, "ctp2-case2", "block transform",
                                           [&] { return transform_case2(session); })));
    c2->add_option("--K", o.K, "block size (even)")->capture_default_str();
    c2->add_option("--rows", o.rows, "output rows");
    with_spec(with_witness(leaf(transform, "ctp2-to-ip", "alternate both cases until IP appears",
                                [&] { return transform_reduce(session); })));
  }

  CLI::App* qftp = app.add_subcommand("qftp", "quantifier-free type of a tuple in a colored order");
  qftp->add_option("--order", o.order, "colored order as a color string")->required();
  qftp->add_option("--tuple", o.tuple, "comma-separated positions")->required();
  qftp->callback([&] { action = [&] { return qftp_cmd(session, out); }; });

  CLI::App* exp = app.add_subcommand("export", "export a witness")->require_subcommand(1);
  with_witness(leaf(exp, "dot", "Graphviz DOT", [&] { return export_dot(session); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "treeprop: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const ParseError& e) {
    err << "treeprop: " << e.what() << "\n";
  } catch (const SchemaError& e) {
    err << "treeprop: schema error at " << e.what() << "\n";
  } catch (const Error& e) {
    err << "treeprop: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "treeprop: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace treeprop

#endif  // TREEPROP_CLI_HPP_
