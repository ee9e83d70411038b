#pragma once

// 2-cell pasting utilities for finite bicategories: vertical composition of
// step sequences, inverse search, equivalence detection with promotion to
// adjoint equivalence, and a canonical-coherence engine that produces the
// unique structural isomorphism between any two bracketings of the same
// 1-cell string (units included).  The engine leans on the coherence
// theorem, so callers must hand it valid bicategories.

#include <memory>

#include "fibcat/core.hpp"
#include "fibcat/validate.hpp"

namespace fibcat {

// b.a for a nonempty list of steps, innermost (first-applied) last.
inline CellName vcomp_seq(const CellTables& t, const std::vector<CellName>& steps) {
  if (steps.empty()) throw Error("vcomp_seq: empty step list");
  CellName acc = steps.back();
  for (auto it = std::next(steps.rbegin()); it != steps.rend(); ++it)
    acc = t.comp2v(*it, acc);
  return acc;
}

inline std::optional<CellName> find_inverse_2cell(const CellTables& t,
                                                  const CellName& a) {
  const auto& d = t.two(a);
  if (d.src == d.tgt && a == t.id_2(d.src)) return a;
  for (const auto& cand : t.two_cells_between(d.tgt, d.src))
    if (t.comp2v(cand, a) == t.id_2(d.src) && t.comp2v(a, cand) == t.id_2(d.tgt))
      return cand;
  return std::nullopt;
}

inline std::optional<CellName> find_inverse_2cell(const FinBicategory& b,
                                                  const CellName& a) {
  if (auto inv = b.declared_inverse(a)) return inv;
  return find_inverse_2cell(b.t, a);
}

inline bool is_invertible_2cell(const CellTables& t, const CellName& a) {
  return find_inverse_2cell(t, a).has_value();
}

inline CellName inverse_2cell(const FinBicategory& b, const CellName& a) {
  auto inv = find_inverse_2cell(b, a);
  if (!inv) throw Error("2-cell is not invertible: " + a);
  return *inv;
}

// ---------------------------------------------------------------------------
// Pasting trees.

// Binary bracketing of a 1-cell string.  Leaves name 1-cells of the ambient
// bicategory; eval composes through the hcomp1 table.
struct PTree {
  CellName leaf;  // nonempty iff leaf node
  std::shared_ptr<PTree> lhs, rhs;

  bool is_leaf() const { return !leaf.empty(); }
};

inline PTree pleaf(CellName f) { return PTree{std::move(f), nullptr, nullptr}; }
inline PTree pnode(PTree l, PTree r) {
  return PTree{"", std::make_shared<PTree>(std::move(l)),
               std::make_shared<PTree>(std::move(r))};
}
// Left-nested composite of a nonempty list, outermost (last-applied) first:
// pchain({c, b, a}) stands for (c.b).a.
inline PTree pchain(const std::vector<CellName>& cells) {
  if (cells.empty()) throw Error("pchain: empty");
  PTree acc = pleaf(cells[0]);
  for (std::size_t i = 1; i < cells.size(); ++i)
    acc = pnode(std::move(acc), pleaf(cells[i]));
  return acc;
}

inline CellName eval_tree(const CellTables& t, const PTree& tree) {
  if (tree.is_leaf()) return tree.leaf;
  return t.comp1(eval_tree(t, *tree.lhs), eval_tree(t, *tree.rhs));
}

namespace detail {

inline bool is_unit_leaf(const CellTables& t, const PTree& tree) {
  if (!tree.is_leaf()) return false;
  const auto& d = t.one(tree.leaf);
  return d.src == d.tgt && t.id_1(d.src) == tree.leaf;
}

inline void frontier(const CellTables& t, const PTree& tree,
                     std::vector<CellName>& out) {
  if (tree.is_leaf()) {
    if (!is_unit_leaf(t, tree)) out.push_back(tree.leaf);
    return;
  }
  frontier(t, *tree.lhs, out);
  frontier(t, *tree.rhs, out);
}

struct NormalizeResult {
  PTree normal;
  CellName path;  // 2-cell  eval(input) => eval(normal)
};

// Normal form: right comb of non-unit leaves (or a single unit leaf when the
// whole string is units).  The returned path is a composite of whiskered
// associators and unitors.
inline NormalizeResult normalize_tree(const FinBicategory& b, const PTree& tree) {
  const CellTables& t = b.t;
  if (tree.is_leaf()) return {tree, t.id_2(tree.leaf)};

  NormalizeResult L = normalize_tree(b, *tree.lhs);
  NormalizeResult R = normalize_tree(b, *tree.rhs);
  CellName acc = t.comp2h(L.path, R.path);
  PTree lhs = L.normal;
  PTree rhs = R.normal;

  if (is_unit_leaf(t, lhs)) {
    acc = t.comp2v(b.l(eval_tree(t, rhs)), acc);
    return {rhs, acc};
  }
  if (is_unit_leaf(t, rhs)) {
    acc = t.comp2v(b.r(eval_tree(t, lhs)), acc);
    return {lhs, acc};
  }
  if (lhs.is_leaf()) return {pnode(lhs, rhs), acc};

  // lhs = (A.B): rotate (A.B).rhs => A.(B.rhs) and renormalize the tail.
  PTree A = *lhs.lhs;
  PTree B = *lhs.rhs;
  acc = t.comp2v(b.a(eval_tree(t, A), eval_tree(t, B), eval_tree(t, rhs)), acc);
  NormalizeResult tail = normalize_tree(b, pnode(B, rhs));
  acc = t.comp2v(t.comp2h(t.id_2(eval_tree(t, A)), tail.path), acc);
  if (is_unit_leaf(t, tail.normal)) {
    // A is non-unit, so the tail can only be a unit when the string B.rhs
    // was all units; strip it.
    acc = t.comp2v(b.r(eval_tree(t, A)), acc);
    return {A, acc};
  }
  return {pnode(A, tail.normal), acc};
}

}  // namespace detail

// The canonical structural isomorphism  eval(from) => eval(to)  built from
// associators and unitors.  Requires the two trees to spell the same 1-cell
// string up to unit insertions.
inline CellName coherence_cell(const FinBicategory& b, const PTree& from,
                               const PTree& to) {
  const CellTables& t = b.t;
  std::vector<CellName> ff, tf;
  detail::frontier(t, from, ff);
  detail::frontier(t, to, tf);
  if (ff != tf)
    throw Error("coherence_cell: frontiers differ: [" + detail::join(ff) + "] vs [" +
                detail::join(tf) + "]");
  detail::NormalizeResult nf = detail::normalize_tree(b, from);
  detail::NormalizeResult nt = detail::normalize_tree(b, to);
  if (eval_tree(t, nf.normal) != eval_tree(t, nt.normal))
    throw Error("coherence_cell: normal forms disagree");
  CellName back = inverse_2cell(b, nt.path);
  return t.comp2v(back, nf.path);
}

// ---------------------------------------------------------------------------
// Equivalences.

struct EquivalenceData {
  CellName fwd;      // f : x -> y
  CellName inv;      // g : y -> x
  CellName unit;     // id_x => g.f, invertible
  CellName counit;   // f.g => id_y, invertible
};

// Exhaustive search for a pseudo-inverse; deterministic (lexicographically
// least witness).
inline std::optional<EquivalenceData> find_equivalence(const CellTables& t,
                                                       const CellName& f) {
  const auto& d = t.one(f);
  for (const auto& g : t.one_cells_between(d.tgt, d.src)) {
    std::optional<CellName> unit, counit;
    for (const auto& u : t.two_cells_between(t.id_1(d.src), t.comp1(g, f)))
      if (is_invertible_2cell(t, u)) {
        unit = u;
        break;
      }
    if (!unit) continue;
    for (const auto& c : t.two_cells_between(t.comp1(f, g), t.id_1(d.tgt)))
      if (is_invertible_2cell(t, c)) {
        counit = c;
        break;
      }
    if (counit) return EquivalenceData{f, g, *unit, *counit};
  }
  return std::nullopt;
}

inline bool is_equivalence_1cell(const CellTables& t, const CellName& f) {
  return find_equivalence(t, f).has_value();
}

// Triangle identities for (f, g, unit, counit):
//   l_f . (counit * 1_f) . a^{-1}_{f,g,f} . (1_f * unit) . r^{-1}_f = 1_f
//   r_g . (1_g * counit) . a_{g,f,g} . (unit * 1_g) . l^{-1}_g = 1_g
inline bool adjunction_triangles_hold(const FinBicategory& b, const EquivalenceData& e) {
  const CellTables& t = b.t;
  const auto& d = t.one(e.fwd);
  CellName t1 = vcomp_seq(
      t, {b.l(e.fwd), t.comp2h(e.counit, t.id_2(e.fwd)),
          inverse_2cell(b, b.a(e.fwd, e.inv, e.fwd)), t.comp2h(t.id_2(e.fwd), e.unit),
          inverse_2cell(b, b.r(e.fwd))});
  if (t1 != t.id_2(e.fwd)) return false;
  CellName t2 = vcomp_seq(
      t, {b.r(e.inv), t.comp2h(t.id_2(e.inv), e.counit), b.a(e.inv, e.fwd, e.inv),
          t.comp2h(e.unit, t.id_2(e.inv)), inverse_2cell(b, b.l(e.inv))});
  return t2 == t.id_2(e.inv);
}

// Upgrade an equivalence to an adjoint equivalence by re-choosing the counit
// (exhaustively; the standard zig-zag guarantees a solution exists).
inline std::optional<EquivalenceData> find_adjoint_equivalence(const FinBicategory& b,
                                                               const CellName& f) {
  const CellTables& t = b.t;
  auto base = find_equivalence(t, f);
  if (!base) return std::nullopt;
  const auto& d = t.one(f);
  for (const auto& c : t.two_cells_between(t.comp1(f, base->inv), t.id_1(d.tgt))) {
    if (!is_invertible_2cell(t, c)) continue;
    EquivalenceData cand{f, base->inv, base->unit, c};
    if (adjunction_triangles_hold(b, cand)) return cand;
  }
  return std::nullopt;
}

}  // namespace fibcat
