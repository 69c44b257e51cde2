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

// Finite generalized trees: every sequence of length <= height over the
// positions of a shared branching order. The immediate successors of each
// node form a copy of the branching order; a node's color is the color of
// its last entry and the root is uncolored.
//
// Nodes are numbered in preorder, which coincides with <_lex.

#ifndef TREEPROP_INDEX_TREE_HPP_
#define TREEPROP_INDEX_TREE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treeprop/colored_order.hpp"
#include "treeprop/error.hpp"
#include "treeprop/qftype.hpp"

namespace treeprop {

using Node = std::vector<Position>;
using NodeId = std::size_t;

enum class TreeLanguage { kL0I, kLsI };

inline std::string to_string(TreeLanguage l) { return l == TreeLanguage::kL0I ? "L0I" : "LsI"; }

inline std::string node_label(const Node& n) {
  std::string out = "(";
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(n[i]);
  }
  return out + ")";
}

inline bool is_prefix(const Node& a, const Node& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

inline bool lex_less(const Node& a, const Node& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool comparable(const Node& a, const Node& b) { return is_prefix(a, b) || is_prefix(b, a); }

class IndexTree {
 public:
  static constexpr std::size_t kMaxNodes = 4'000'000;

  IndexTree() : IndexTree(0, ColoredOrder::uncolored(0)) {}

  IndexTree(std::size_t height, ColoredOrder branching, TreeLanguage language = TreeLanguage::kLsI)
      : height_(height), branching_(std::move(branching)), language_(language) {
    const std::size_t b = branching_.size();
    // subtree_[d]: nodes in a subtree rooted at depth d.
    subtree_.assign(height_ + 1, 1);
    for (std::size_t d = height_; d-- > 0;) {
      subtree_[d] = 1 + b * subtree_[d + 1];
      if (subtree_[d] > kMaxNodes) throw Error("tree too large");
    }
    nodes_.reserve(subtree_[0]);
    Node cur;
    build(cur);
  }

  std::size_t height() const noexcept { return height_; }
  const ColoredOrder& branching() const noexcept { return branching_; }
  TreeLanguage language() const noexcept { return language_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  const Node& node(NodeId id) const {
    if (id >= nodes_.size()) throw Error("node id out of range");
    return nodes_[id];
  }

  bool contains(const Node& n) const {
    if (n.size() > height_) return false;
    return std::all_of(n.begin(), n.end(), [&](Position p) { return p < branching_.size(); });
  }

  NodeId id_of(const Node& n) const {
    if (!contains(n)) throw Error("foreign node " + node_label(n));
    NodeId id = 0;
    for (std::size_t t = 0; t < n.size(); ++t) id += 1 + n[t] * subtree_[t + 1];
    return id;
  }

  std::size_t level(NodeId id) const { return node(id).size(); }

  std::vector<NodeId> children(NodeId id) const {
    const std::size_t d = level(id);
    std::vector<NodeId> out;
    if (d >= height_) return out;
    for (std::size_t j = 0; j < branching_.size(); ++j) out.push_back(id + 1 + j * subtree_[d + 1]);
    return out;
  }

  NodeId child(NodeId id, Position p) const {
    const std::size_t d = level(id);
    if (d >= height_ || p >= branching_.size()) throw Error("no such child");
    return id + 1 + p * subtree_[d + 1];
  }

  std::vector<NodeId> leaves() const {
    std::vector<NodeId> out;
    for (NodeId id = 0; id < nodes_.size(); ++id)
      if (nodes_[id].size() == height_) out.push_back(id);
    return out;
  }

  // Root-to-node chain of ids.
  std::vector<NodeId> path_to(NodeId id) const {
    const Node& n = node(id);
    std::vector<NodeId> out{0};
    NodeId cur = 0;
    for (std::size_t t = 0; t < n.size(); ++t) {
      cur = cur + 1 + n[t] * subtree_[t + 1];
      out.push_back(cur);
    }
    return out;
  }

  // nullopt for the root or an uncolored branching order.
  std::optional<std::string> color_name(const Node& n) const {
    if (n.empty() || !branching_.colored()) return std::nullopt;
    return branching_.color_name(n.back());
  }

  std::string label(NodeId id) const { return node_label(node(id)); }

 private:
  void build(Node& cur) {
    nodes_.push_back(cur);
    if (cur.size() == height_) return;
    for (Position p = 0; p < branching_.size(); ++p) {
      cur.push_back(p);
      build(cur);
      cur.pop_back();
    }
  }

  std::size_t height_ = 0;
  ColoredOrder branching_;
  TreeLanguage language_ = TreeLanguage::kLsI;
  std::vector<std::size_t> subtree_;
  std::vector<Node> nodes_;
};

// Longest common prefix.
inline Node meet(const IndexTree& tree, const Node& a, const Node& b) {
  if (!tree.contains(a)) throw Error("foreign node " + node_label(a));
  if (!tree.contains(b)) throw Error("foreign node " + node_label(b));
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return Node(a.begin(), ia);
}

// Type of a node tuple, computed on its meet closure. The closure is named
// by the terms xi^xj (i<=j); atoms are recorded for every term and every
// pair of terms, so equal types mean the term-wise correspondence is a
// well-defined partial isomorphism.
inline QfType qftp_tree(const IndexTree& tree, std::span<const Node> tuple) {
  struct Term {
    std::string name;
    Node node;
  };
  std::vector<Term> terms;
  const std::size_t n = tuple.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!tree.contains(tuple[i])) throw Error("foreign node " + node_label(tuple[i]));
    for (std::size_t j = i; j < n; ++j) {
      std::string name = i == j ? var_name(i) : var_name(i) + "^" + var_name(j);
      terms.push_back({std::move(name), meet(tree, tuple[i], tuple[j])});
    }
  }
  std::vector<std::string> atoms;
  const bool colored = tree.branching().colored();
  for (const Term& t : terms) {
    if (colored) {
      auto c = tree.color_name(t.node);
      atoms.push_back((c ? *c : std::string("uncolored")) + "(" + t.name + ")");
    }
    if (tree.language() == TreeLanguage::kLsI)
      atoms.push_back("lvl(" + t.name + ")=" + std::to_string(t.node.size()));
  }
  for (std::size_t a = 0; a < terms.size(); ++a) {
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      const Node& u = terms[a].node;
      const Node& v = terms[b].node;
      const std::string& un = terms[a].name;
      const std::string& vn = terms[b].name;
      if (u == v) {
        atoms.push_back(un + "=" + vn);
        continue;
      }
      if (is_prefix(u, v)) atoms.push_back(un + "<|" + vn);
      else if (is_prefix(v, u)) atoms.push_back(vn + "<|" + un);
      else atoms.push_back(un + "_|_" + vn);
      const bool uv = lex_less(u, v);
      atoms.push_back(uv ? un + "<lex " + vn : vn + "<lex " + un);
      const bool siblings = !u.empty() && u.size() == v.size() &&
                            std::equal(u.begin(), u.end() - 1, v.begin());
      if (siblings) atoms.push_back(uv ? un + "<sib " + vn : vn + "<sib " + un);
    }
  }
  return QfType(n, std::move(atoms));
}

inline QfType qftp_tree(const IndexTree& tree, std::span<const NodeId> ids) {
  std::vector<Node> nodes;
  nodes.reserve(ids.size());
  for (NodeId id : ids) nodes.push_back(tree.node(id));
  return qftp_tree(tree, std::span<const Node>(nodes));
}

}  // namespace treeprop

#endif  // TREEPROP_INDEX_TREE_HPP_
