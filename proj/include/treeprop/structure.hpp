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

// Finite relational parameter structures.
//
// The kind selects the structure class that consistency is decided in:
//   random_graph      graphs; R is symmetric and irreflexive
//   equality          pure sets; only = is meaningful
//   set_intersection  points and sets; in(p, S) is membership
//   generic           arbitrary relations, decided by brute force

#ifndef TREEPROP_STRUCTURE_HPP_
#define TREEPROP_STRUCTURE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "treeprop/error.hpp"

namespace treeprop {

using ElementId = std::uint32_t;
using ElementTuple = std::vector<ElementId>;

enum class OracleKind { kRandomGraph, kEquality, kSetIntersection, kGeneric };

inline std::string to_string(OracleKind k) {
  switch (k) {
    case OracleKind::kRandomGraph: return "random_graph";
    case OracleKind::kEquality: return "equality";
    case OracleKind::kSetIntersection: return "set_intersection";
    default: return "generic";
  }
}

inline std::optional<OracleKind> parse_oracle_kind(std::string_view s) {
  if (s == "random_graph") return OracleKind::kRandomGraph;
  if (s == "equality") return OracleKind::kEquality;
  if (s == "set_intersection") return OracleKind::kSetIntersection;
  if (s == "generic") return OracleKind::kGeneric;
  return std::nullopt;
}

class FinStructure {
 public:
  OracleKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(ElementId e) const { return names_.at(e); }

  std::optional<ElementId> find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  ElementId id(std::string_view name) const {
    if (auto e = find(name)) return *e;
    throw Error("unknown element '" + std::string(name) + "'");
  }

  const std::map<std::string, std::set<ElementTuple>>& relations() const noexcept {
    return relations_;
  }

  bool holds(const std::string& rel, const ElementTuple& args) const {
    if (rel == "=") return args.size() == 2 && args[0] == args[1];
    auto it = relations_.find(rel);
    return it != relations_.end() && it->second.count(args) > 0;
  }

  bool adjacent(ElementId a, ElementId b) const { return holds("R", {a, b}); }

  // Points of the set S (set_intersection structures).
  const std::vector<ElementId>& members(ElementId set) const {
    static const std::vector<ElementId> kNone;
    auto it = members_.find(set);
    return it == members_.end() ? kNone : it->second;
  }

 private:
  friend class StructureBuilder;

  OracleKind kind_ = OracleKind::kGeneric;
  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> ids_;
  std::map<std::string, std::set<ElementTuple>> relations_;
  std::map<ElementId, std::vector<ElementId>> members_;
};

class StructureBuilder {
 public:
  explicit StructureBuilder(OracleKind kind) { s_.kind_ = kind; }

  ElementId element(const std::string& name) {
    if (auto e = s_.find(name)) return *e;
    if (name.empty()) throw Error("empty element name");
    const auto id = static_cast<ElementId>(s_.names_.size());
    s_.names_.push_back(name);
    s_.ids_.emplace(name, id);
    return id;
  }

  // Adds a fresh element; throws if the name is taken.
  ElementId fresh(const std::string& name) {
    if (s_.find(name)) throw Error("duplicate element '" + name + "'");
    return element(name);
  }

  StructureBuilder& relate(const std::string& rel, ElementTuple args) {
    if (rel.empty() || rel == "=") throw Error("relation name '" + rel + "' is reserved");
    for (ElementId e : args)
      if (e >= s_.names_.size()) throw Error("relation '" + rel + "' references an unknown element");
    if (s_.kind_ == OracleKind::kRandomGraph) {
      if (rel != "R" || args.size() != 2)
        throw Error("random_graph structures carry only the binary relation R");
      if (args[0] == args[1]) throw Error("R must be irreflexive");
      s_.relations_[rel].insert({args[1], args[0]});
    }
    if (s_.kind_ == OracleKind::kSetIntersection && (rel != "in" || args.size() != 2))
      throw Error("set_intersection structures carry only the binary relation in");
    if (s_.kind_ == OracleKind::kEquality)
      throw Error("equality structures carry no relations");
    auto& tuples = s_.relations_[rel];
    if (!tuples.empty() && tuples.begin()->size() != args.size())
      throw Error("relation '" + rel + "' used with two arities");
    tuples.insert(std::move(args));
    return *this;
  }

  StructureBuilder& edge(ElementId a, ElementId b) { return relate("R", {a, b}); }
  StructureBuilder& member(ElementId point, ElementId set) { return relate("in", {point, set}); }

  std::shared_ptr<const FinStructure> build() {
    s_.members_.clear();
    if (auto it = s_.relations_.find("in"); it != s_.relations_.end())
      for (const auto& t : it->second) s_.members_[t[1]].push_back(t[0]);
    return std::make_shared<const FinStructure>(s_);
  }

 private:
  FinStructure s_;
};

}  // namespace treeprop

#endif  // TREEPROP_STRUCTURE_HPP_
