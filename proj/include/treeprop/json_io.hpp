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

// JSON documents: witnesses, dividing chains, delta files, and reports.
//
// Witness (schema version 1):
//   {"v": 1,
//    "index": {"type": "tree", "height": 2, "branching": ORDER, "language_mode": "LsI"}
//           | {"type": "array", "rows": 3, "row_order": ORDER}
//           | {"type": "order", "order": ORDER},
//    "oracle": {"kind": "random_graph", "universe": ["c0", ...],
//               "relations": {"R": [["c0", "d1"], ...]}},
//    "template": {"name": ..., "arity": 2,
//                 "literals": [{"rel": "R", "positive": true, "args": ["x", "y0"]}]},
//    "assignment": {"(0)": ["c0", "d0"], ...},
//    "context": ["a"],
//    "spec": {"q": "R<G"} | {"q": {"arity": 2, "atoms": [...]}} | {"k": 2}}
// where ORDER = {"size": 4, "palette": ["R", "G"], "coloring": ["R", "G", "R", "G"]}.
// "template", "context" and "spec" are optional; unknown keys are ignored.
//
// Readers throw ParseError for text that is not JSON and SchemaError, with
// the offending field path, for JSON of the wrong shape.

#ifndef TREEPROP_JSON_IO_HPP_
#define TREEPROP_JSON_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#if __has_include("json.hpp")
#include "json.hpp"
#else
#include <nlohmann/json.hpp>
#endif

#include "treeprop/constructions.hpp"
#include "treeprop/error.hpp"
#include "treeprop/family.hpp"
#include "treeprop/formula.hpp"
#include "treeprop/index.hpp"
#include "treeprop/properties.hpp"
#include "treeprop/qftype.hpp"
#include "treeprop/report.hpp"
#include "treeprop/structure.hpp"

namespace treeprop {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
}

namespace detail {

inline const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing required field");
  return *it;
}

inline const Json* optional_field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

inline std::size_t as_count(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw SchemaError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

inline bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
  return j.get<bool>();
}

inline const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

inline std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// Rethrows library errors raised while building a value as schema errors.
template <typename Fn>
auto at_path(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

}  // namespace detail

// ---- index structures ----

inline Json to_json(const ColoredOrder& o) {
  Json coloring = Json::array();
  if (o.colored())
    for (Position p = 0; p < o.size(); ++p) coloring.push_back(o.color_name(p));
  return Json{{"size", o.size()}, {"palette", o.palette()}, {"coloring", std::move(coloring)}};
}

inline ColoredOrder colored_order_from_json(const Json& j, const std::string& path) {
  using namespace detail;
  const std::size_t size = as_count(field(j, "size", path), path + ".size");
  std::vector<std::string> palette;
  const Json& pj = as_array(field(j, "palette", path), path + ".palette");
  for (std::size_t i = 0; i < pj.size(); ++i) palette.push_back(as_string(pj[i], at(path + ".palette", i)));
  std::vector<std::string> coloring;
  if (const Json* cj = optional_field(j, "coloring", path)) {
    as_array(*cj, path + ".coloring");
    for (std::size_t i = 0; i < cj->size(); ++i)
      coloring.push_back(as_string((*cj)[i], at(path + ".coloring", i)));
  }
  return at_path(path, [&] {
    if (palette.empty()) {
      if (!coloring.empty()) throw Error("coloring given for an empty palette");
      return ColoredOrder::uncolored(size);
    }
    if (coloring.empty()) return standard_c(size, palette);
    return standard_c(size, palette, coloring);
  });
}

inline Json to_json(const IndexStructure& ix) {
  if (auto* o = std::get_if<ColoredOrder>(&ix)) return Json{{"type", "order"}, {"order", to_json(*o)}};
  if (auto* t = std::get_if<IndexTree>(&ix))
    return Json{{"type", "tree"},
                {"height", t->height()},
                {"branching", to_json(t->branching())},
                {"language_mode", to_string(t->language())}};
  const auto& a = std::get<ArrayIndex>(ix);
  return Json{{"type", "array"}, {"rows", a.rows()}, {"row_order", to_json(a.row_order())}};
}

inline IndexStructure index_from_json(const Json& j, const std::string& path) {
  using namespace detail;
  const std::string type = as_string(field(j, "type", path), path + ".type");
  if (type == "order") return colored_order_from_json(field(j, "order", path), path + ".order");
  if (type == "tree") {
    const std::size_t h = as_count(field(j, "height", path), path + ".height");
    ColoredOrder b = colored_order_from_json(field(j, "branching", path), path + ".branching");
    TreeLanguage lang = TreeLanguage::kLsI;
    if (const Json* lj = optional_field(j, "language_mode", path)) {
      const std::string l = as_string(*lj, path + ".language_mode");
      if (l == "L0I") lang = TreeLanguage::kL0I;
      else if (l != "LsI") throw SchemaError(path + ".language_mode", "expected \"L0I\" or \"LsI\"");
    }
    return at_path(path, [&] { return IndexStructure(IndexTree(h, std::move(b), lang)); });
  }
  if (type == "array") {
    const std::size_t rows = as_count(field(j, "rows", path), path + ".rows");
    return ArrayIndex(rows, colored_order_from_json(field(j, "row_order", path), path + ".row_order"));
  }
  throw SchemaError(path + ".type", "expected \"order\", \"tree\" or \"array\"");
}

inline Json to_json(const QfType& q) { return Json{{"arity", q.arity()}, {"atoms", q.atoms()}}; }

inline Json spec_q_json(const QfType& q) {
  if (auto chain = chain_notation(q)) return *chain;
  return to_json(q);
}

inline QfType qftype_from_json(const Json& j, const std::string& path) {
  using namespace detail;
  if (j.is_string()) return at_path(path, [&] { return parse_chain(j.get<std::string>()); });
  const std::size_t arity = as_count(field(j, "arity", path), path + ".arity");
  const Json& aj = as_array(field(j, "atoms", path), path + ".atoms");
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < aj.size(); ++i) atoms.push_back(as_string(aj[i], at(path + ".atoms", i)));
  return QfType(arity, std::move(atoms));
}

// ---- logic ----

inline Json to_json(const FinStructure& s) {
  Json rels = Json::object();
  for (const auto& [name, tuples] : s.relations()) {
    Json list = Json::array();
    for (const auto& t : tuples) {
      // R is stored symmetrically; one orientation suffices.
      if (s.kind() == OracleKind::kRandomGraph && t[0] > t[1]) continue;
      Json row = Json::array();
      for (ElementId e : t) row.push_back(s.name(e));
      list.push_back(std::move(row));
    }
    rels[name] = std::move(list);
  }
  return Json{{"kind", to_string(s.kind())}, {"universe", s.names()}, {"relations", std::move(rels)}};
}

inline std::shared_ptr<const FinStructure> structure_from_json(const Json& j, const std::string& path) {
  using namespace detail;
  const std::string kind_name = as_string(field(j, "kind", path), path + ".kind");
  auto kind = parse_oracle_kind(kind_name);
  if (!kind)
    throw SchemaError(path + ".kind",
                      "expected random_graph, equality, set_intersection or generic");
  StructureBuilder sb(*kind);
  const Json& uj = as_array(field(j, "universe", path), path + ".universe");
  for (std::size_t i = 0; i < uj.size(); ++i) {
    const std::string p = at(path + ".universe", i);
    const std::string name = as_string(uj[i], p);
    at_path(p, [&] { return sb.fresh(name); });
  }
  if (const Json* rj = optional_field(j, "relations", path)) {
    if (!rj->is_object()) throw SchemaError(path + ".relations", "expected an object");
    for (auto it = rj->begin(); it != rj->end(); ++it) {
      const std::string rp = path + ".relations." + it.key();
      as_array(it.value(), rp);
      for (std::size_t i = 0; i < it.value().size(); ++i) {
        const std::string tp = at(rp, i);
        const Json& tj = as_array(it.value()[i], tp);
        ElementTuple t;
        for (std::size_t k = 0; k < tj.size(); ++k) {
          const std::string name = as_string(tj[k], at(tp, k));
          t.push_back(at_path(at(tp, k), [&] {
            auto e = sb.build()->find(name);
            if (!e) throw Error("unknown element '" + name + "'");
            return *e;
          }));
        }
        at_path(tp, [&] { return &sb.relate(it.key(), t); });
      }
    }
  }
  return sb.build();
}

inline Json to_json(const FormulaTemplate& t) {
  Json lits = Json::array();
  for (const Literal& l : t.literals()) {
    Json args = Json::array();
    for (int a : l.args) args.push_back(a == kVarX ? std::string("x") : "y" + std::to_string(a));
    lits.push_back(Json{{"rel", l.relation}, {"positive", l.positive}, {"args", std::move(args)}});
  }
  return Json{{"name", t.name()}, {"arity", t.parameter_arity()}, {"literals", std::move(lits)}};
}

inline FormulaTemplate template_from_json(const Json& j, const std::string& path) {
  using namespace detail;
  const std::string name = as_string(field(j, "name", path), path + ".name");
  const std::size_t arity = as_count(field(j, "arity", path), path + ".arity");
  const Json& lj = as_array(field(j, "literals", path), path + ".literals");
  std::vector<Literal> lits;
  for (std::size_t i = 0; i < lj.size(); ++i) {
    const std::string lp = at(path + ".literals", i);
    Literal l;
    l.relation = as_string(field(lj[i], "rel", lp), lp + ".rel");
    if (const Json* pj = optional_field(lj[i], "positive", lp)) l.positive = as_bool(*pj, lp + ".positive");
    const Json& aj = as_array(field(lj[i], "args", lp), lp + ".args");
    for (std::size_t k = 0; k < aj.size(); ++k) {
      const std::string ap = at(lp + ".args", k);
      const std::string a = as_string(aj[k], ap);
      if (a == "x") {
        l.args.push_back(kVarX);
      } else if (a.size() > 1 && a[0] == 'y' &&
                 a.find_first_not_of("0123456789", 1) == std::string::npos && a.size() < 8) {
        l.args.push_back(std::stoi(a.substr(1)));
      } else {
        throw SchemaError(ap, "expected \"x\" or a slot \"y<k>\"");
      }
    }
    lits.push_back(std::move(l));
  }
  return at_path(path, [&] { return FormulaTemplate(name, arity, std::move(lits)); });
}

inline std::vector<FormulaTemplate> delta_from_json(const Json& j, const std::string& path = "$") {
  const Json* list = &j;
  std::string lp = path;
  if (j.is_object()) {
    list = &detail::field(j, "delta", path);
    lp = path + ".delta";
  }
  detail::as_array(*list, lp);
  std::vector<FormulaTemplate> out;
  for (std::size_t i = 0; i < list->size(); ++i) out.push_back(template_from_json((*list)[i], detail::at(lp, i)));
  return out;
}

inline Json to_json(const std::vector<FormulaTemplate>& delta) {
  Json out = Json::array();
  for (const auto& t : delta) out.push_back(to_json(t));
  return out;
}

// ---- families and witnesses ----

namespace detail {

inline Json names_json(const FinStructure& s, const ElementTuple& t) {
  Json out = Json::array();
  for (ElementId e : t) out.push_back(s.name(e));
  return out;
}

inline ElementTuple names_from_json(const FinStructure& s, const Json& j, const std::string& path) {
  as_array(j, path);
  ElementTuple out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string name = as_string(j[i], at(path, i));
    auto e = s.find(name);
    if (!e) throw SchemaError(at(path, i), "unknown element '" + name + "'");
    out.push_back(*e);
  }
  return out;
}

inline Json assignment_json(const IndexedFamily& fam) {
  Json out = Json::object();
  for (IndexId id = 0; id < fam.assignment.size(); ++id)
    if (fam.assignment[id]) out[index_label(fam.index, id)] = names_json(*fam.structure, *fam.assignment[id]);
  return out;
}

inline std::vector<std::optional<ElementTuple>> assignment_from_json(const IndexStructure& ix,
                                                                     const FinStructure& s,
                                                                     const Json& j,
                                                                     const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object keyed by index labels");
  const std::size_t n = index_size(ix);
  std::unordered_map<std::string, IndexId> ids;
  for (IndexId id = 0; id < n; ++id) ids.emplace(index_label(ix, id), id);
  std::vector<std::optional<ElementTuple>> out(n);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto id = ids.find(it.key());
    if (id == ids.end()) throw SchemaError(path + "." + it.key(), "not an element of the index");
    out[id->second] = names_from_json(s, it.value(), path + "." + it.key());
  }
  for (IndexId id = 0; id < n; ++id) {
    if (out[id]) continue;
    if (index_kind(ix) == IndexKind::kTree && id == 0) continue;
    throw SchemaError(path + "." + index_label(ix, id), "missing assignment");
  }
  return out;
}

inline void check_version(const Json& j) {
  const Json& v = field(j, "v", "$");
  if (!v.is_number_integer() || v.get<std::int64_t>() != kSchemaVersion)
    throw SchemaError("$.v", "unsupported schema version " + v.dump() + " (expected 1)");
}

}  // namespace detail

inline Json to_json(const InconsistencySpec& spec) {
  if (spec.k) return Json{{"k", *spec.k}};
  if (spec.q) return Json{{"q", spec_q_json(*spec.q)}};
  return nullptr;
}

inline Json family_json(const IndexedFamily& fam) {
  Json out{{"v", kSchemaVersion},
           {"index", to_json(fam.index)},
           {"oracle", to_json(*fam.structure)},
           {"assignment", detail::assignment_json(fam)}};
  if (!fam.context.empty()) out["context"] = detail::names_json(*fam.structure, fam.context);
  return out;
}

inline Json to_json(const WitnessFamily& w) {
  Json out{{"v", kSchemaVersion},
           {"index", to_json(w.family.index)},
           {"oracle", to_json(*w.family.structure)},
           {"template", to_json(w.formula)},
           {"assignment", detail::assignment_json(w.family)}};
  if (!w.family.context.empty()) out["context"] = detail::names_json(*w.family.structure, w.family.context);
  if (w.spec.k || w.spec.q) out["spec"] = to_json(w.spec);
  return out;
}

struct WitnessDocument {
  IndexedFamily family;
  std::optional<FormulaTemplate> formula;
  InconsistencySpec spec;

  WitnessFamily witness() const {
    if (!formula) throw SchemaError("$.template", "missing required field");
    return {family, *formula, spec};
  }
};

inline WitnessDocument witness_from_json(const Json& j) {
  using namespace detail;
  if (!j.is_object()) throw SchemaError("$", "expected an object");
  if (j.contains("kind") && j["kind"] == "dividing_chain")
    throw SchemaError("$.kind", "a dividing chain is not a witness");
  check_version(j);
  WitnessDocument doc;
  doc.family.index = index_from_json(field(j, "index", "$"), "$.index");
  doc.family.structure = structure_from_json(field(j, "oracle", "$"), "$.oracle");
  doc.family.assignment =
      assignment_from_json(doc.family.index, *doc.family.structure, field(j, "assignment", "$"), "$.assignment");
  if (const Json* cj = optional_field(j, "context", "$"))
    doc.family.context = names_from_json(*doc.family.structure, *cj, "$.context");
  at_path("$.assignment", [&] {
    doc.family.validate();
    return 0;
  });
  if (const Json* tj = optional_field(j, "template", "$")) {
    doc.formula = template_from_json(*tj, "$.template");
    if (!doc.family.domain().empty() && doc.family.tuple_length() != doc.formula->parameter_arity())
      throw SchemaError("$.template.arity", "does not match the assigned tuple length " +
                                                std::to_string(doc.family.tuple_length()));
  }
  if (const Json* sj = optional_field(j, "spec", "$")) {
    const Json* k = optional_field(*sj, "k", "$.spec");
    const Json* q = optional_field(*sj, "q", "$.spec");
    if (k && q) throw SchemaError("$.spec", "give either k or q, not both");
    if (k) {
      doc.spec.k = as_count(*k, "$.spec.k");
      if (*doc.spec.k == 0) throw SchemaError("$.spec.k", "must be at least 1");
    }
    if (q) doc.spec.q = qftype_from_json(*q, "$.spec.q");
  }
  return doc;
}

// ---- dividing chains ----

inline Json to_json(const DividingChain& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json step{{"params", detail::names_json(*c.structure, s.params)},
              {"q", spec_q_json(s.q)},
              {"pivot", s.pivot ? Json(index_label(s.family.index, *s.pivot)) : Json(nullptr)},
              {"index", to_json(s.family.index)},
              {"assignment", detail::assignment_json(s.family)}};
    steps.push_back(std::move(step));
  }
  return Json{{"v", kSchemaVersion},
              {"kind", "dividing_chain"},
              {"oracle", to_json(*c.structure)},
              {"template", to_json(c.formula)},
              {"delta", to_json(c.delta)},
              {"arity", c.arity},
              {"steps", std::move(steps)}};
}

inline DividingChain chain_from_json(const Json& j) {
  using namespace detail;
  if (!j.is_object()) throw SchemaError("$", "expected an object");
  check_version(j);
  if (as_string(field(j, "kind", "$"), "$.kind") != "dividing_chain")
    throw SchemaError("$.kind", "expected \"dividing_chain\"");
  DividingChain c;
  c.structure = structure_from_json(field(j, "oracle", "$"), "$.oracle");
  c.formula = template_from_json(field(j, "template", "$"), "$.template");
  c.delta = delta_from_json(field(j, "delta", "$"), "$.delta");
  c.arity = as_count(field(j, "arity", "$"), "$.arity");
  if (c.arity == 0) throw SchemaError("$.arity", "must be at least 1");
  const Json& sj = as_array(field(j, "steps", "$"), "$.steps");
  if (sj.empty()) throw SchemaError("$.steps", "a dividing chain needs at least one step");
  for (std::size_t i = 0; i < sj.size(); ++i) {
    const std::string p = at("$.steps", i);
    ChainStep s;
    s.params = names_from_json(*c.structure, field(sj[i], "params", p), p + ".params");
    if (s.params.size() != c.formula.parameter_arity())
      throw SchemaError(p + ".params", "expected " + std::to_string(c.formula.parameter_arity()) +
                                           " parameters");
    s.q = qftype_from_json(field(sj[i], "q", p), p + ".q");
    s.family.index = index_from_json(field(sj[i], "index", p), p + ".index");
    s.family.structure = c.structure;
    s.family.assignment =
        assignment_from_json(s.family.index, *c.structure, field(sj[i], "assignment", p), p + ".assignment");
    at_path(p + ".assignment", [&] {
      s.family.validate();
      return 0;
    });
    if (const Json* pj = optional_field(sj[i], "pivot", p)) {
      const std::string label = as_string(*pj, p + ".pivot");
      for (IndexId id = 0; id < index_size(s.family.index); ++id)
        if (index_label(s.family.index, id) == label) s.pivot = id;
      if (!s.pivot) throw SchemaError(p + ".pivot", "not an element of the index");
    }
    c.steps.push_back(std::move(s));
  }
  return c;
}

// ---- reports and transform results ----

inline Json to_json(const Clause& c) {
  return Json{{"name", c.name},
              {"pass", c.pass},
              {"vacuous", c.vacuous},
              {"checked", c.checked},
              {"violating_tuples", c.violating},
              {"detail", c.detail}};
}

inline Json to_json(const Report& r) {
  const Clause* f = r.first_failure();
  Json clauses = Json::array();
  for (const auto& c : r.clauses) clauses.push_back(to_json(c));
  return Json{{"check", r.check},
              {"pass", r.pass},
              {"clause", f ? Json(f->name) : Json(nullptr)},
              {"violating_tuples", f ? Json(f->violating) : Json::array()},
              {"clauses", std::move(clauses)},
              {"bound", r.bound ? Json(*r.bound) : Json(nullptr)},
              {"exhaustive", r.exhaustive ? Json(*r.exhaustive) : Json(nullptr)},
              {"seed", r.seed ? Json(*r.seed) : Json(nullptr)},
              {"notes", r.notes}};
}

inline Json to_json(const IpCandidate& ip) {
  WitnessFamily seq{ip.sequence, ip.formula, {}};
  Json out = to_json(seq);
  Json alt = Json::array();
  for (const auto& f : ip.alternating) alt.push_back(to_string(f));
  Json forcing = Json::array();
  for (const auto& [row, ok] : ip.forcing) forcing.push_back(Json{{"row", row}, {"inconsistent", ok}});
  out["ip"] = Json{{"column", ip.column},
                   {"alternating", std::move(alt)},
                   {"justification_size", ip.justification.size()},
                   {"forcing", std::move(forcing)},
                   {"verified", ip.verified}};
  return out;
}

inline Json to_json(const ReductionStep& s) {
  return Json{{"action", s.action},
              {"q", spec_q_json(s.q)},
              {"K", s.K},
              {"minimal", s.minimal},
              {"detail", s.detail}};
}

}  // namespace treeprop

#endif  // TREEPROP_JSON_IO_HPP_
