#pragma once

// Dualization of finite bicategories: op reverses 1-cells, co reverses
// 2-cells, coop reverses both.  Cells keep their names; only tables and
// boundaries are remapped.  Each mode is an involution.

#include "fibcat/core.hpp"
#include "fibcat/validate.hpp"

namespace fibcat {

enum class DualMode { op, co, coop };

inline DualMode parse_dual_mode(const std::string& s) {
  if (s == "op") return DualMode::op;
  if (s == "co") return DualMode::co;
  if (s == "coop") return DualMode::coop;
  throw Error("unknown dual mode: " + s);
}

inline FinBicategory dualize(const FinBicategory& b, DualMode mode) {
  bool flip1 = mode == DualMode::op || mode == DualMode::coop;
  bool flip2 = mode == DualMode::co || mode == DualMode::coop;
  const CellTables& t = b.t;
  FinBicategory out;
  CellTables& o = out.t;

  o.objects = t.objects;
  for (const auto& [f, d] : t.one_cells)
    o.one_cells[f] = flip1 ? OneCell{d.tgt, d.src} : d;
  for (const auto& [a, d] : t.two_cells)
    o.two_cells[a] = flip2 ? TwoCell{d.tgt, d.src} : d;
  o.id1 = t.id1;
  o.id2 = t.id2;

  for (const auto& [k, v] : t.hcomp1)
    o.hcomp1[flip1 ? std::pair{k.second, k.first} : k] = v;
  for (const auto& [k, v] : t.vcomp2)
    o.vcomp2[flip2 ? std::pair{k.second, k.first} : k] = v;
  for (const auto& [k, v] : t.hcomp2) {
    auto key = k;
    if (flip1) key = {key.second, key.first};
    o.hcomp2[key] = v;
  }

  auto inverse_of = [&](const CellName& c) {
    auto inv = b.declared_inverse(c);
    if (!inv) throw Error("dualize: coherence cell lacks declared inverse: " + c);
    return *inv;
  };

  // op:  a'_{h,g,f} = a^{-1}_{f,g,h};  l' = r, r' = l.
  // co:  a'_{h,g,f} = a^{-1}_{h,g,f};  l' = l^{-1}, r' = r^{-1}.
  // coop combines both.
  for (const auto& [k, v] : b.assoc) {
    auto key = k;
    if (flip1) key = {std::get<2>(k), std::get<1>(k), std::get<0>(k)};
    // In the op dual the bracketing swap is itself an inverse; combined with
    // co the two inversions cancel.
    bool invert = flip1 != flip2;
    out.assoc[key] = invert ? inverse_of(v) : v;
  }
  for (const auto& [f, v] : b.lunit) {
    const CellName cell = flip2 ? inverse_of(v) : v;
    if (flip1)
      out.runit[f] = cell;
    else
      out.lunit[f] = cell;
  }
  for (const auto& [f, v] : b.runit) {
    const CellName cell = flip2 ? inverse_of(v) : v;
    if (flip1)
      out.lunit[f] = cell;
    else
      out.runit[f] = cell;
  }
  out.inv2 = b.inv2;
  return out;
}

inline FinTwoCategory dualize(const FinTwoCategory& c, DualMode mode) {
  FinBicategory b = dualize(embed_bicategory(c), mode);
  return FinTwoCategory{b.t};
}

}  // namespace fibcat
