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

// Graphviz rendering of tree and array families. Output depends only on the
// family, so it can be diffed.

#ifndef TREEPROP_DOT_HPP_
#define TREEPROP_DOT_HPP_

#include <array>
#include <sstream>
#include <string>

#include "treeprop/error.hpp"
#include "treeprop/family.hpp"

namespace treeprop {

namespace detail {

inline constexpr std::array<const char*, 8> kFills = {
    "#f4cccc", "#d9ead3", "#cfe2f3", "#fff2cc", "#d9d2e9", "#fce5cd", "#d0e0e3", "#ead1dc"};

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string dot_node(const IndexedFamily& fam, IndexId id) {
  const ColoredOrder& base = base_order(fam.index);
  std::string label = index_label(fam.index, id);
  if (fam.assigned(id)) {
    label += "\\n";
    const ElementTuple& t = fam.at(id);
    for (std::size_t i = 0; i < t.size(); ++i) label += (i ? "," : "") + dot_escape(fam.structure->name(t[i]));
  }
  std::string out = "  n" + std::to_string(id) + " [label=\"" + label + "\"";
  if (auto c = index_color(fam.index, id)) {
    auto cid = base.color_id(*c);
    out += ", style=filled, fillcolor=\"" + std::string(kFills[*cid % kFills.size()]) + "\"";
  }
  return out + "];\n";
}

}  // namespace detail

// Throws for order-indexed families, which have no useful picture.
inline std::string to_dot(const IndexedFamily& fam, const std::string& name = "witness") {
  std::ostringstream os;
  if (const auto* tree = std::get_if<IndexTree>(&fam.index)) {
    os << "digraph \"" << detail::dot_escape(name) << "\" {\n  node [shape=box];\n";
    for (NodeId id = 0; id < tree->size(); ++id) os << detail::dot_node(fam, id);
    for (NodeId id = 0; id < tree->size(); ++id)
      for (NodeId c : tree->children(id)) os << "  n" << id << " -> n" << c << ";\n";
    os << "}\n";
    return os.str();
  }
  if (const auto* arr = std::get_if<ArrayIndex>(&fam.index)) {
    os << "digraph \"" << detail::dot_escape(name) << "\" {\n  node [shape=box];\n";
    for (std::size_t r = 0; r < arr->rows(); ++r) {
      os << "  subgraph row" << r << " {\n    rank=same;\n";
      for (Position c = 0; c < arr->cols(); ++c) os << "  " << detail::dot_node(fam, arr->id_of({r, c}));
      for (Position c = 0; c + 1 < arr->cols(); ++c)
        os << "    n" << arr->id_of({r, c}) << " -> n" << arr->id_of({r, c + 1}) << " [style=invis];\n";
      os << "  }\n";
    }
    os << "}\n";
    return os.str();
  }
  throw Error("DOT export needs a tree or array indexed family");
}

}  // namespace treeprop

#endif  // TREEPROP_DOT_HPP_
