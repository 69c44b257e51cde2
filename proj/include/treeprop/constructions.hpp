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

// Witness generators and witness transformations.

#ifndef TREEPROP_CONSTRUCTIONS_HPP_
#define TREEPROP_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "treeprop/colored_order.hpp"
#include "treeprop/error.hpp"
#include "treeprop/family.hpp"
#include "treeprop/formula.hpp"
#include "treeprop/index.hpp"
#include "treeprop/oracle.hpp"
#include "treeprop/properties.hpp"
#include "treeprop/qftype.hpp"
#include "treeprop/structure.hpp"

namespace treeprop {

enum class WitnessMode { kTree, kArray };

namespace detail {

inline void require_rg_palette(const ColoredOrder& order) {
  std::set<std::string> p(order.palette().begin(), order.palette().end());
  if (p != std::set<std::string>{"R", "G"})
    throw Error("the order must use the palette {R,G}; add colors with duplicate_colors");
}

inline std::vector<std::optional<ElementTuple>> unassigned(const IndexStructure& ix) {
  return std::vector<std::optional<ElementTuple>>(index_size(ix));
}

inline std::string dotted(const Node& n) {
  std::string out;
  for (Position p : n) out += "." + std::to_string(p);
  return out;
}

inline IndexStructure with_base_order(const IndexStructure& ix, ColoredOrder order) {
  if (auto* t = std::get_if<IndexTree>(&ix)) return IndexTree(t->height(), std::move(order), t->language());
  if (auto* a = std::get_if<ArrayIndex>(&ix)) return ArrayIndex(a->rows(), std::move(order));
  return order;
}

}  // namespace detail

// Fresh vertices c_i, d_i for level (or row) i; red nodes get (c_i, d_i),
// green nodes (d_i, c_i); phi(x; y, z) = x R y & !(x R z); q = R<G.
inline WitnessFamily gen_random_graph_witness(WitnessMode mode, std::size_t n,
                                              const ColoredOrder& branching) {
  detail::require_rg_palette(branching);
  StructureBuilder sb(OracleKind::kRandomGraph);
  std::vector<ElementId> c, d;
  for (std::size_t i = 0; i < n; ++i) {
    c.push_back(sb.fresh("c" + std::to_string(i)));
    d.push_back(sb.fresh("d" + std::to_string(i)));
  }
  auto s = sb.build();
  auto pair_for = [&](std::size_t level, Position p) {
    return branching.color_name(p) == "R" ? ElementTuple{c[level], d[level]}
                                          : ElementTuple{d[level], c[level]};
  };
  IndexStructure ix = mode == WitnessMode::kTree
                          ? IndexStructure(IndexTree(n, branching))
                          : IndexStructure(ArrayIndex(n, branching));
  auto assignment = detail::unassigned(ix);
  if (auto* t = std::get_if<IndexTree>(&ix)) {
    for (NodeId id = 1; id < t->size(); ++id) {
      const Node& node = t->node(id);
      assignment[id] = pair_for(node.size() - 1, node.back());
    }
  } else {
    const auto& a = std::get<ArrayIndex>(ix);
    for (std::size_t id = 0; id < a.size(); ++id) {
      Cell cell = a.cell(id);
      assignment[id] = pair_for(cell.row, cell.col);
    }
  }
  return {{std::move(ix), s, std::move(assignment), {}},
          edge_difference_template(),
          InconsistencySpec::of_q(parse_chain("R<G"))};
}

struct Duplication {
  WitnessFamily witness;
  // Position of the new order -> position of the old order it copies.
  std::vector<Position> origin;
};

// Every position of the base order is followed by one copy per new color;
// copies carry the tuples of their original.
inline Duplication duplicate_colors(const WitnessFamily& w,
                                    const std::vector<std::string>& new_palette) {
  const ColoredOrder& old = base_order(w.family.index);
  if (!old.colored()) throw Error("duplicate_colors needs a colored witness");
  std::set<std::string> q_colors;
  if (w.spec.q) q_colors = mentioned_colors(*w.spec.q);
  for (const auto& c : old.palette()) {
    if (std::find(new_palette.begin(), new_palette.end(), c) != new_palette.end()) continue;
    if (q_colors.count(c)) throw Error("new palette omits color " + c + " used by q");
    throw Error("new palette omits color " + c + " of the witness");
  }
  std::vector<std::string> extra;
  for (const auto& c : new_palette)
    if (!old.color_id(c)) extra.push_back(c);
  Duplication out{w, {}};
  for (Position p = 0; p < old.size(); ++p) out.origin.push_back(p);
  if (extra.empty()) return out;

  std::vector<std::string> coloring;
  out.origin.clear();
  for (Position p = 0; p < old.size(); ++p) {
    coloring.push_back(old.color_name(p));
    out.origin.push_back(p);
    for (const auto& e : extra) {
      coloring.push_back(e);
      out.origin.push_back(p);
    }
  }
  ColoredOrder order = standard_c(coloring.size(), new_palette, coloring);
  IndexStructure ix = detail::with_base_order(w.family.index, order);
  auto assignment = detail::unassigned(ix);
  if (auto* t = std::get_if<IndexTree>(&ix)) {
    const auto& old_tree = std::get<IndexTree>(w.family.index);
    for (NodeId id = 0; id < t->size(); ++id) {
      Node n = t->node(id);
      for (auto& p : n) p = out.origin[p];
      assignment[id] = w.family.assignment[old_tree.id_of(n)];
    }
  } else if (auto* a = std::get_if<ArrayIndex>(&ix)) {
    const auto& old_arr = std::get<ArrayIndex>(w.family.index);
    for (std::size_t id = 0; id < a->size(); ++id) {
      Cell cell = a->cell(id);
      assignment[id] = w.family.assignment[old_arr.id_of({cell.row, out.origin[cell.col]})];
    }
  } else {
    for (std::size_t id = 0; id < order.size(); ++id)
      assignment[id] = w.family.assignment[out.origin[id]];
  }
  out.witness.family.index = std::move(ix);
  out.witness.family.assignment = std::move(assignment);
  return out;
}

// Colors the siblings of a one-color k witness by cycling through the
// palette; q becomes the type of k consecutive siblings.
inline WitnessFamily trivial_coloring(const WitnessFamily& w, const std::vector<std::string>& palette) {
  if (!w.spec.k) throw Error("trivial_coloring needs a witness with a k specification");
  const ColoredOrder& old = base_order(w.family.index);
  if (old.colored() && old.palette().size() > 1)
    throw Error("trivial_coloring needs a one-color witness");
  if (palette.empty()) return w;
  WitnessFamily out = w;
  out.family.index = detail::with_base_order(w.family.index, standard_c(old.size(), palette));
  OrderPattern p;
  const std::size_t k = *w.spec.k;
  p.cmp.assign(k, std::vector<int>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    p.colors.emplace_back(palette[i % palette.size()]);
    for (std::size_t j = 0; j < k; ++j) p.cmp[i][j] = i < j ? -1 : (i == j ? 0 : 1);
  }
  out.spec = InconsistencySpec::of_q(order_type(p));
  return out;
}

// Height-1 tree whose children carry pairwise distinct points a_i under
// x = y: siblings are 2-inconsistent, every path is a single instance.
inline WitnessFamily gen_equality_tp_witness(std::size_t width) {
  StructureBuilder sb(OracleKind::kEquality);
  std::vector<ElementId> a;
  for (std::size_t i = 0; i < width; ++i) a.push_back(sb.fresh("a" + std::to_string(i)));
  IndexTree tree(1, ColoredOrder::uncolored(width));
  std::vector<std::optional<ElementTuple>> assignment(tree.size());
  for (std::size_t i = 0; i < width; ++i) assignment[tree.child(0, static_cast<Position>(i))] = ElementTuple{a[i]};
  return {{std::move(tree), sb.build(), std::move(assignment), {}},
          equality_template(),
          InconsistencySpec::of_k(2)};
}

// Set-system witness for x in y. S_eta holds the path point of every leaf
// above eta, plus r* for red eta and g* for green eta.
inline WitnessFamily gen_set_ctp1_witness(std::size_t height, const ColoredOrder& branching) {
  if (height == 0) throw Error("gen_set_ctp1_witness needs height at least 1");
  detail::require_rg_palette(branching);
  IndexTree tree(height, branching);
  StructureBuilder sb(OracleKind::kSetIntersection);
  std::vector<ElementId> set_of(tree.size());
  for (NodeId id = 0; id < tree.size(); ++id) set_of[id] = sb.fresh("S" + detail::dotted(tree.node(id)));
  const ElementId red = sb.fresh("r*"), green = sb.fresh("g*");
  for (NodeId leaf : tree.leaves()) {
    const ElementId pt = sb.fresh("p" + detail::dotted(tree.node(leaf)));
    for (NodeId id : tree.path_to(leaf)) sb.member(pt, set_of[id]);
  }
  for (NodeId id = 1; id < tree.size(); ++id)
    sb.member(*tree.color_name(tree.node(id)) == "R" ? red : green, set_of[id]);
  std::vector<std::optional<ElementTuple>> assignment(tree.size());
  for (NodeId id = 0; id < tree.size(); ++id) assignment[id] = ElementTuple{set_of[id]};
  return {{std::move(tree), sb.build(), std::move(assignment), {}},
          membership_template(),
          InconsistencySpec::of_q(parse_chain("R<G"))};
}

struct TupleTree {
  WitnessFamily witness;
  // Per output node: the deepest input node its tuple uses.
  std::vector<Node> anchors;
  // Per output node: the input nodes of its tuple, in order.
  std::vector<std::vector<Node>> sources;
};

// Tuple tree for psi = phi^k. b_root = (a_root, ..., a_root); the t-th
// child of eta gets a_xi0, ..., a_xi{k-1} with xi0 = eta*^i_t (i_t the t-th
// position of color c_0) and xi_s = xi_{s-1}^d_s (d_s the first position of
// color c_s). Each output level uses k input levels.
inline TupleTree transform_ctp1_to_tp1(const WitnessFamily& w, const QfType& q,
                                       std::size_t out_height, std::size_t out_width) {
  const IndexTree& in = detail::require_tree(w, "transform_ctp1_to_tp1");
  auto pat = as_order_pattern(q);
  if (!pat || !chain_notation(q)) throw Error("q must be a chain type c_0<...<c_{k-1}");
  const std::size_t k = pat->arity();
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (pat->cmp[i][i + 1] != -1) throw Error("q must be a strict chain");
  if (!w.family.assigned(0)) throw Error("the input tree needs a root parameter");
  const ColoredOrder& b = in.branching();
  for (std::size_t i = 0; i < k; ++i)
    if (!pat->colors[i] || b.positions_of(*pat->colors[i]).empty())
      throw Error("the branching order has no position of color " + pat->colors[i].value_or("*"));
  const auto c0 = b.positions_of(*pat->colors[0]);
  if (c0.size() < out_width)
    throw Error("the branching order has " + std::to_string(c0.size()) + " positions of color " +
                *pat->colors[0] + "; width " + std::to_string(out_width) + " needs that many");
  if (out_height * k > in.height())
    throw Error("input height " + std::to_string(in.height()) + " supports output height at most " +
                std::to_string(in.height() / k));
  std::vector<Position> d(k);
  for (std::size_t s = 1; s < k; ++s) d[s] = b.positions_of(*pat->colors[s]).front();

  IndexTree out(out_height, ColoredOrder::uncolored(out_width));
  TupleTree res;
  res.anchors.resize(out.size());
  res.sources.resize(out.size());
  std::vector<std::optional<ElementTuple>> assignment(out.size());
  for (NodeId id = 0; id < out.size(); ++id) {
    std::vector<Node> src;
    if (id == 0) {
      src.assign(k, Node{});
    } else {
      const auto path = out.path_to(id);
      const Node& parent_anchor = res.anchors[path[path.size() - 2]];
      Node xi = parent_anchor;
      xi.push_back(c0[out.node(id).back()]);
      src.push_back(xi);
      for (std::size_t s = 1; s < k; ++s) {
        xi.push_back(d[s]);
        src.push_back(xi);
      }
    }
    ElementTuple tuple;
    for (const Node& n : src) {
      const auto& t = w.family.at(in.id_of(n));
      tuple.insert(tuple.end(), t.begin(), t.end());
    }
    res.anchors[id] = src.back();
    res.sources[id] = std::move(src);
    assignment[id] = std::move(tuple);
  }
  res.witness = {{std::move(out), w.family.structure, std::move(assignment), {}},
                 conjunction_template(w.formula, k),
                 InconsistencySpec::of_k(2)};
  return res;
}

// Anchor data for the IP=c-TP2 reduction with q = c_0<...<c_{m-2}<R<G.
struct BlockParams {
  std::size_t K = 2;
  std::size_t m = 1;
  std::vector<Position> anchors;  // j_0 < ... < j_m
  std::vector<std::string> colors;

  // The constant path f_i, i < m-1.
  Position f(std::size_t i) const { return anchors.at(i); }
  // The alternating path: j_{m-1} on even rows, j_m on odd rows.
  Position h(std::size_t row) const { return row % 2 == 0 ? anchors[m - 1] : anchors[m]; }
};

// Smallest anchors: j_0 is the first position colored c_0, each next
// anchor the first later position of the next color.
inline BlockParams block_params(const ColoredOrder& row_order, const QfType& q, std::size_t K = 2) {
  auto pat = as_order_pattern(q);
  if (!pat || !chain_notation(q) || pat->arity() < 2)
    throw Error("q must be a chain type with at least two variables");
  const std::size_t n = pat->arity();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (pat->cmp[i][i + 1] != -1) throw Error("q must be a strict chain");
  BlockParams bp;
  bp.K = K;
  bp.m = n - 1;
  for (const auto& c : pat->colors) {
    if (!c) throw Error("q must be colored");
    bp.colors.push_back(*c);
  }
  if (bp.colors[n - 2] == bp.colors[n - 1])
    throw Error("the last two colors of q must differ");
  Position next = 0;
  for (const auto& c : bp.colors) {
    std::optional<Position> found;
    for (Position p = next; p < row_order.size() && !found; ++p)
      if (row_order.colored() && row_order.color_name(p) == c) found = p;
    if (!found)
      throw Error("the row order has no position of color " + c + " at or after " +
                  std::to_string(next));
    bp.anchors.push_back(*found);
    next = *found + 1;
  }
  return bp;
}

inline void validate_block_params(const BlockParams& bp, const ColoredOrder& row_order) {
  if (bp.m < 1 || bp.anchors.size() != bp.m + 1 || bp.colors.size() != bp.m + 1)
    throw Error("block parameters need m+1 anchors and colors");
  for (std::size_t i = 0; i <= bp.m; ++i) {
    row_order.check(bp.anchors[i]);
    if (i > 0 && bp.anchors[i - 1] >= bp.anchors[i]) throw Error("anchors must increase");
    if (row_order.color_name(bp.anchors[i]) != bp.colors[i])
      throw Error("anchor " + std::to_string(i) + " does not have color " + bp.colors[i]);
  }
  if (bp.colors[bp.m - 1] == bp.colors[bp.m])
    throw Error("the anchors j_{m-1}, j_m must have different colors");
}

// The instances of f_0, ..., f_{m-2} and h on the first `rows` rows.
inline std::vector<InstantiatedFormula> fh_union(const WitnessFamily& w, const BlockParams& bp,
                                                 std::size_t rows) {
  const auto& arr = std::get<ArrayIndex>(w.family.index);
  std::vector<IndexId> ids;
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t i = 0; i + 1 < bp.m; ++i) ids.push_back(arr.id_of({k, bp.f(i)}));
    ids.push_back(arr.id_of({k, bp.h(k)}));
  }
  return w.instances(ids);
}

struct IpCandidate {
  IndexedFamily sequence;
  FormulaTemplate formula;
  Position column = 0;
  std::vector<InstantiatedFormula> alternating;
  std::vector<InstantiatedFormula> justification;
  // Even row k -> whether {phi(x, a_{k,j_0}), ..., phi(x, a_{k,j_m})} is
  // inconsistent, which forces !phi(x, a_{k,j_m}).
  std::vector<std::pair<std::size_t, bool>> forcing;
  bool verified = false;
};

// Case 1: the anchor paths are jointly consistent; the column j_m
// alternates.
inline IpCandidate extract_ip_case1(const WitnessFamily& w, const BlockParams& bp) {
  const auto* arr = std::get_if<ArrayIndex>(&w.family.index);
  if (!arr) throw Error("extract_ip_case1 needs an array-indexed witness");
  validate_block_params(bp, arr->row_order());
  const std::size_t rows = arr->rows();
  IpCandidate out;
  out.justification = fh_union(w, bp, rows);
  if (!oracle_consistent(w.oracle(), out.justification))
    throw Error("the anchor paths are jointly inconsistent; apply block_transform_case2");
  out.column = bp.anchors[bp.m];
  out.formula = w.formula;
  out.sequence = IndexedFamily{ColoredOrder::uncolored(rows), w.family.structure, {}, {}};
  for (std::size_t k = 0; k < rows; ++k)
    out.sequence.assignment.push_back(w.family.at(arr->id_of({k, out.column})));
  out.alternating = alternating_instances(out.sequence, w.formula);

  bool forced = true;
  for (std::size_t k = 0; k < rows; k += 2) {
    std::vector<IndexId> ids;
    for (Position j : bp.anchors) ids.push_back(arr->id_of({k, j}));
    const bool inconsistent = !oracle_consistent(w.oracle(), w.instances(ids));
    out.forcing.emplace_back(k, inconsistent);
    forced = forced && inconsistent;
  }
  std::vector<InstantiatedFormula> all = out.justification;
  for (const auto& f : out.alternating)
    if (!f.positive) all.push_back(f);
  out.verified = forced && oracle_consistent(w.oracle(), all);
  return out;
}

// Case 2: blocks of K rows. Column j of the new array has color e_{j mod m};
// b_{i,j} stacks a_{iK+t, j_l} (t < K) for l = j mod m < m-1, and the
// alternating block a_{iK, j_m}, a_{iK+1, j_{m-1}}, ... for l = m-1.
inline WitnessFamily block_transform_case2(const WitnessFamily& w, const BlockParams& bp,
                                           std::size_t out_rows = 0) {
  const auto* arr = std::get_if<ArrayIndex>(&w.family.index);
  if (!arr) throw Error("block_transform_case2 needs an array-indexed witness");
  if (bp.K == 0 || bp.K % 2 != 0) throw Error("K must be a positive even number");
  validate_block_params(bp, arr->row_order());
  if (bp.m < 2) throw Error("the block transform needs q with at least three variables");
  if (out_rows == 0) out_rows = arr->rows() / bp.K;
  if (out_rows == 0 || arr->rows() < out_rows * bp.K)
    throw Error("the array has " + std::to_string(arr->rows()) + " rows; " +
                std::to_string(std::max<std::size_t>(out_rows, 1)) + " output rows need " +
                std::to_string(std::max<std::size_t>(out_rows, 1) * bp.K));
  if (oracle_consistent(w.oracle(), fh_union(w, bp, bp.K)))
    throw Error("the anchor paths on the first K rows are consistent; choose a larger K");

  std::vector<std::string> palette;
  for (std::size_t l = 0; l < bp.m; ++l) palette.push_back("e" + std::to_string(l));
  ColoredOrder order = standard_c(2 * bp.m, palette);
  ArrayIndex out(out_rows, order);
  std::vector<std::optional<ElementTuple>> assignment(out.size());
  for (std::size_t id = 0; id < out.size(); ++id) {
    const Cell cell = out.cell(id);
    const std::size_t l = cell.col % bp.m;
    ElementTuple tuple;
    for (std::size_t t = 0; t < bp.K; ++t) {
      Position j = l + 1 < bp.m ? bp.anchors[l] : (t % 2 == 0 ? bp.anchors[bp.m] : bp.anchors[bp.m - 1]);
      const auto& a = w.family.at(arr->id_of({cell.row * bp.K + t, j}));
      tuple.insert(tuple.end(), a.begin(), a.end());
    }
    assignment[id] = std::move(tuple);
  }
  std::string r;
  for (std::size_t l = 0; l < bp.m; ++l) r += (l ? "<" : "") + palette[l];
  return {{std::move(out), w.family.structure, std::move(assignment), {}},
          conjunction_template(w.formula, bp.K),
          InconsistencySpec::of_q(parse_chain(r))};
}

// An input path d' whose instances contain those of output path d.
inline std::vector<Position> case2_path_preimage(const BlockParams& bp, const ColoredOrder& out_order,
                                                 const std::vector<Position>& d,
                                                 std::size_t in_rows) {
  std::vector<Position> out(in_rows, bp.anchors[0]);
  for (std::size_t i = 0; i < d.size(); ++i) {
    out_order.check(d[i]);
    const std::size_t l = d[i] % bp.m;
    for (std::size_t t = 0; t < bp.K && i * bp.K + t < in_rows; ++t)
      out[i * bp.K + t] = l + 1 < bp.m ? bp.anchors[l]
                                       : (t % 2 == 0 ? bp.anchors[bp.m] : bp.anchors[bp.m - 1]);
  }
  return out;
}

// Checks that every parameter block of psi(x, b_{i,d(i)}) is the parameter
// of phi(x, a_{iK+t, d'(iK+t)}).
inline bool verify_case2_correspondence(const WitnessFamily& in, const WitnessFamily& out,
                                        const BlockParams& bp, const std::vector<Position>& d) {
  const auto& ain = std::get<ArrayIndex>(in.family.index);
  const auto& aout = std::get<ArrayIndex>(out.family.index);
  const auto pre = case2_path_preimage(bp, aout.row_order(), d, ain.rows());
  const std::size_t len = in.family.tuple_length();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& b = out.family.at(aout.id_of({i, d[i]}));
    for (std::size_t t = 0; t < bp.K; ++t) {
      const auto& a = in.family.at(ain.id_of({i * bp.K + t, pre[i * bp.K + t]}));
      if (!std::equal(a.begin(), a.end(), b.begin() + static_cast<std::ptrdiff_t>(t * len)))
        return false;
    }
  }
  return true;
}

// Set-system c-TP2 array for q = c_0<...<c_{n-1}, the palette of `order` in
// order of first appearance. Every path f: rows -> columns owns a point in
// each S_{i,f(i)}; for each row i and each set T of n-1 colors, a point
// z_{i,T} lies in every S_{i,j} with color(j) in T. Rows then have empty
// n-fold intersections along q while all smaller intersections are not.
inline WitnessFamily gen_set_ctp2_array(std::size_t rows, const ColoredOrder& order) {
  const auto& palette = order.palette();
  if (palette.size() < 2) throw Error("gen_set_ctp2_array needs at least two colors");
  std::size_t paths = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    paths *= order.size();
    if (paths > 1'000'000) throw Error("too many paths for the set array");
  }
  ArrayIndex arr(rows, order);
  StructureBuilder sb(OracleKind::kSetIntersection);
  std::vector<ElementId> set_of(arr.size());
  for (std::size_t id = 0; id < arr.size(); ++id) {
    Cell c = arr.cell(id);
    set_of[id] = sb.fresh("S." + std::to_string(c.row) + "." + std::to_string(c.col));
  }
  std::vector<Position> f(rows, 0);
  for (std::size_t n = 0; n < paths; ++n) {
    if (n > 0) {
      std::size_t i = rows;
      while (i > 0 && ++f[i - 1] == order.size()) f[--i] = 0;
    }
    std::string name = "p";
    for (Position p : f) name += "." + std::to_string(p);
    const ElementId pt = sb.fresh(name);
    for (std::size_t i = 0; i < rows; ++i) sb.member(pt, set_of[arr.id_of({i, f[i]})]);
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (const auto& missing : palette) {
      std::string name = "z." + std::to_string(i) + ".";
      for (const auto& c : palette)
        if (c != missing) name += c;
      const ElementId z = sb.fresh(name);
      for (Position j = 0; j < order.size(); ++j)
        if (order.color_name(j) != missing) sb.member(z, set_of[arr.id_of({i, j})]);
    }
  }
  std::vector<std::optional<ElementTuple>> assignment(arr.size());
  for (std::size_t id = 0; id < arr.size(); ++id) assignment[id] = ElementTuple{set_of[id]};
  std::string q;
  for (std::size_t l = 0; l < palette.size(); ++l) q += (l ? "<" : "") + palette[l];
  return {{std::move(arr), sb.build(), std::move(assignment), {}},
          membership_template(),
          InconsistencySpec::of_q(parse_chain(q))};
}

// Type of the sub-tuple of q on the given variables, renumbered.
inline QfType subtype(const QfType& q, const std::vector<std::size_t>& vars) {
  auto pat = as_order_pattern(q);
  if (!pat) throw Error("subtype needs an order type");
  OrderPattern p;
  for (std::size_t a : vars) {
    p.colors.push_back(pat->colors.at(a));
    std::vector<int> row;
    for (std::size_t b : vars) row.push_back(pat->cmp[a][b]);
    p.cmp.push_back(std::move(row));
  }
  return order_type(p);
}

// Whether some type implied by q in fewer variables already yields an
// inconsistent tuple in row 0. Returns the offending subtype, if any.
inline std::optional<QfType> minimality_violation(const WitnessFamily& w) {
  const auto& arr = std::get<ArrayIndex>(w.family.index);
  const QfType& q = *w.spec.q;
  const std::size_t n = q.arity();
  if (arr.rows() == 0) return std::nullopt;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) vars.push_back(i);
    QfType r = subtype(q, vars);
    auto t = realizations(arr.row_order(), r, 1);
    if (t.empty()) continue;
    std::vector<IndexId> ids;
    for (Position p : t.front()) ids.push_back(arr.id_of({0, p}));
    if (!oracle_consistent(w.oracle(), w.instances(ids))) return r;
  }
  return std::nullopt;
}

struct ReductionStep {
  std::string action;  // "case1", "case2", "classical", "stop"
  QfType q;
  std::size_t K = 0;
  bool minimal = true;
  std::string detail;
};

struct Reduction {
  std::vector<ReductionStep> trace;
  std::optional<IpCandidate> ip;
  WitnessFamily final_witness;
  bool classical_tp2 = false;
};

// Alternates case 1 and case 2 until an IP candidate appears or q has a
// single color.
inline Reduction ctp2_to_ip(const WitnessFamily& w, std::size_t max_steps = 16) {
  if (!w.spec.q) throw Error("ctp2_to_ip needs a q specification");
  Reduction out;
  out.final_witness = w;
  for (std::size_t step = 0; step < max_steps; ++step) {
    WitnessFamily& cur = out.final_witness;
    const auto& arr = std::get<ArrayIndex>(cur.family.index);
    ReductionStep rs;
    rs.q = *cur.spec.q;
    if (mentioned_colors(rs.q).size() <= 1) {
      rs.action = "classical";
      rs.detail = "q has a single color: classical TP2";
      out.classical_tp2 = true;
      out.trace.push_back(std::move(rs));
      return out;
    }
    auto violation = minimality_violation(cur);
    rs.minimal = !violation;
    if (violation) rs.detail = "not minimal: " + describe(*violation) + " is already inconsistent; ";
    BlockParams bp = block_params(arr.row_order(), rs.q);
    if (oracle_consistent(cur.oracle(), fh_union(cur, bp, arr.rows()))) {
      rs.action = "case1";
      rs.detail += "anchor paths consistent; column " + std::to_string(bp.anchors[bp.m]) + " alternates";
      out.ip = extract_ip_case1(cur, bp);
      out.trace.push_back(std::move(rs));
      return out;
    }
    std::optional<std::size_t> K;
    for (std::size_t k = 2; k <= arr.rows() && !K; k += 2)
      if (!oracle_consistent(cur.oracle(), fh_union(cur, bp, k))) K = k;
    if (!K || bp.m < 2) {
      rs.action = "stop";
      rs.detail += !K ? "no even K within the array makes the anchor paths inconsistent"
                      : "anchor paths inconsistent for a two-variable q: paths are not consistent";
      out.trace.push_back(std::move(rs));
      return out;
    }
    bp.K = *K;
    rs.action = "case2";
    rs.K = *K;
    rs.detail += "anchor paths inconsistent at K=" + std::to_string(*K);
    out.trace.push_back(std::move(rs));
    WitnessFamily next = block_transform_case2(cur, bp);
    out.final_witness = std::move(next);
  }
  throw Error("reduction did not finish within " + std::to_string(max_steps) + " steps");
}

// Equality structure {a, b}; every step divides x = a via the sequence
// a, b, a, b on the order RGRG, where R<G pairs ask x = a and x = b.
inline DividingChain gen_triviality_chain(std::size_t n) {
  if (n == 0) throw Error("a dividing chain needs at least one step");
  StructureBuilder sb(OracleKind::kEquality);
  const ElementId a = sb.fresh("a"), b = sb.fresh("b");
  DividingChain chain;
  chain.structure = sb.build();
  chain.formula = equality_template();
  chain.delta = {equality_template()};
  chain.arity = 2;
  const ColoredOrder order = standard_c(4, {"R", "G"});
  for (std::size_t i = 0; i < n; ++i) {
    ChainStep s;
    s.params = {a};
    s.q = parse_chain("R<G");
    s.pivot = 0;
    s.family = IndexedFamily{order, chain.structure, {}, {}};
    for (Position p = 0; p < order.size(); ++p)
      s.family.assignment.push_back(ElementTuple{order.color_name(p) == "R" ? a : b});
    chain.steps.push_back(std::move(s));
  }
  return chain;
}

// The tree of height rows over the row order in which every node at level
// i+1 carries the cell of row i named by its last entry: siblings are rows,
// paths are array paths.
inline WitnessFamily array_as_tree(const WitnessFamily& w) {
  const auto* arr = std::get_if<ArrayIndex>(&w.family.index);
  if (!arr) throw Error("array_as_tree needs an array-indexed witness");
  IndexTree tree(arr->rows(), arr->row_order());
  std::vector<std::optional<ElementTuple>> assignment(tree.size());
  for (NodeId id = 1; id < tree.size(); ++id) {
    const Node& n = tree.node(id);
    assignment[id] = w.family.at(arr->id_of({n.size() - 1, n.back()}));
  }
  WitnessFamily out = w;
  out.family.index = std::move(tree);
  out.family.assignment = std::move(assignment);
  return out;
}

}  // namespace treeprop

#endif  // TREEPROP_CONSTRUCTIONS_HPP_
