#pragma once

// A small gallery of finite 2-categories, bicategories, diagrams and
// trihomomorphisms used by the test suite, the acceptance suite and the
// sample-file generator.
//
// Naming scheme inside generated categories:
//   id_<x>   identity 1-cell of the object x
//   ii_<f>   identity 2-cell of the 1-cell f

#include "fibcat/core.hpp"
#include "fibcat/diagram.hpp"
#include "fibcat/maps.hpp"
#include "fibcat/validate.hpp"

namespace fibcat::samples {

// Builder that auto-completes identities and the unit rows of each
// composition table; handy for strictly unital fixtures.
struct StrictBuilder {
  CellTables t;

  void object(const CellName& x) {
    t.objects.insert(x);
    CellName id = "id_" + x;
    t.one_cells[id] = {x, x};
    t.id1[x] = id;
  }
  void one(const CellName& f, const CellName& src, const CellName& tgt) {
    t.one_cells[f] = {src, tgt};
  }
  void two(const CellName& a, const CellName& src, const CellName& tgt) {
    t.two_cells[a] = {src, tgt};
  }
  void comp1(const CellName& g, const CellName& f, const CellName& gf) {
    t.hcomp1[{g, f}] = gf;
  }
  void comp2v(const CellName& b, const CellName& a, const CellName& ba) {
    t.vcomp2[{b, a}] = ba;
  }
  void comp2h(const CellName& s, const CellName& u, const CellName& su) {
    t.hcomp2[{s, u}] = su;
  }

  // Add identity 2-cells, unit composition rows, and the horizontal unit
  // rows; existing entries win.
  void finish() {
    for (const auto& [f, d] : t.one_cells)
      if (!t.id2.count(f)) {
        CellName ii = "ii_" + f;
        t.two_cells[ii] = {f, f};
        t.id2[f] = ii;
      }
    for (const auto& [f, d] : t.one_cells) {
      t.hcomp1.insert({{f, t.id1.at(d.src)}, f});
      t.hcomp1.insert({{t.id1.at(d.tgt), f}, f});
    }
    for (const auto& [a, d] : t.two_cells) {
      t.vcomp2.insert({{a, t.id2.at(d.src)}, a});
      t.vcomp2.insert({{t.id2.at(d.tgt), a}, a});
    }
    for (const auto& [a, d] : t.two_cells) {
      const auto& f = t.one_cells.at(d.src);
      t.hcomp2.insert({{a, t.id2.at(t.id1.at(f.src))}, a});
      t.hcomp2.insert({{t.id2.at(t.id1.at(f.tgt)), a}, a});
    }
    // Remaining identity-against-identity horizontal entries.
    for (const auto& [f, fd] : t.one_cells)
      for (const auto& [g, gd] : t.one_cells)
        if (fd.tgt == gd.src)
          t.hcomp2.insert({{t.id2.at(g), t.id2.at(f)}, t.id2.at(t.hcomp1.at({g, f}))});
  }

  FinTwoCategory done() {
    finish();
    return FinTwoCategory{t};
  }
};

// The terminal 2-category: one object, identity cells only.
inline FinTwoCategory terminal() {
  StrictBuilder b;
  b.object("pt");
  return b.done();
}

// The walking arrow: objects "0","1" and u : 0 -> 1.
inline FinTwoCategory walking_arrow() {
  StrictBuilder b;
  b.object("0");
  b.object("1");
  b.one("u", "0", "1");
  return b.done();
}

// The walking composable pair: v : 0 -> 1, w : 1 -> 2, wv = w.v.
inline FinTwoCategory walking_composable_pair() {
  StrictBuilder b;
  b.object("0");
  b.object("1");
  b.object("2");
  b.one("v", "0", "1");
  b.one("w", "1", "2");
  b.one("wv", "0", "2");
  b.comp1("w", "v", "wv");
  return b.done();
}

// The walking 2-cell: f, g : a -> b and al : f => g.
inline FinTwoCategory walking_two_cell() {
  StrictBuilder b;
  b.object("a");
  b.object("b");
  b.one("f", "a", "b");
  b.one("g", "a", "b");
  b.two("al", "f", "g");
  return b.done();
}

// Walking 2-cell plus a non-invertible idempotent ee : g => g.
inline FinTwoCategory walking_two_cell_idem() {
  StrictBuilder b;
  b.object("a");
  b.object("b");
  b.one("f", "a", "b");
  b.one("g", "a", "b");
  b.two("al", "f", "g");
  b.two("ee", "g", "g");
  b.comp2v("ee", "ee", "ee");
  b.comp2v("ee", "al", "al");
  return b.done();
}

// Chaotic 2-cell structure over a strict category: exactly one 2-cell
// c_<u>_<v> between every ordered pair of parallel 1-cells.  Every 2-cell
// equation holds, so any boundary-correct table choice is coherent.
inline FinTwoCategory chaotic_over(StrictBuilder b) {
  CellTables& t = b.t;
  // Identity 1-cell rows first so names exist.
  for (const auto& [f, d] : t.one_cells) {
    t.hcomp1.insert({{f, t.id1.at(d.src)}, f});
    t.hcomp1.insert({{t.id1.at(d.tgt), f}, f});
  }
  auto cname = [](const CellName& u, const CellName& v) { return "c_" + u + "_" + v; };
  for (const auto& [u, ud] : t.one_cells)
    for (const auto& [v, vd] : t.one_cells)
      if (ud.src == vd.src && ud.tgt == vd.tgt) t.two_cells[cname(u, v)] = {u, v};
  for (const auto& [f, d] : t.one_cells) t.id2[f] = cname(f, f);
  for (const auto& [bb, bd] : t.two_cells)
    for (const auto& [aa, ad] : t.two_cells)
      if (ad.tgt == bd.src) t.vcomp2[{bb, aa}] = cname(ad.src, bd.tgt);
  for (const auto& [s, sd] : t.two_cells)
    for (const auto& [u, ud] : t.two_cells) {
      const auto& fs = t.one_cells.at(sd.src);
      const auto& fu = t.one_cells.at(ud.src);
      if (fu.tgt != fs.src) continue;
      t.hcomp2[{s, u}] =
          cname(t.hcomp1.at({sd.src, ud.src}), t.hcomp1.at({sd.tgt, ud.tgt}));
    }
  return FinTwoCategory{t};
}

// Z/2 as a one-object category with chaotic 2-cells: 1-cells "e" (identity)
// and "u" with u.u = e.
inline FinTwoCategory chaotic_z2() {
  StrictBuilder b;
  b.t.objects.insert("o");
  b.one("e", "o", "o");
  b.t.id1["o"] = "e";
  b.one("u", "o", "o");
  b.comp1("u", "u", "e");
  b.comp1("u", "e", "u");
  b.comp1("e", "u", "u");
  b.comp1("e", "e", "e");
  return chaotic_over(std::move(b));
}

// Suspension of Z/n with twist group Z/m on every endo-hom and an
// associator given by the 3-cocycle  omega(h,g,f) = h * carry(g,f) mod m
// (carry(g,f) = floor((g+f)/n)).  With twist != 0 the bicategory is
// genuinely weak: coherent but with a nonidentity associator.
//
// Cells: object "o"; 1-cells m0..m{n-1}; 2-cells t<i>_<k> : m<i> => m<i>.
inline FinBicategory susp_cyclic(int n, int m, bool twisted = true) {
  FinBicategory b;
  CellTables& t = b.t;
  auto mc = [](int i) { return "m" + std::to_string(i); };
  auto tc = [](int i, int k) { return "t" + std::to_string(i) + "_" + std::to_string(k); };
  t.objects.insert("o");
  for (int i = 0; i < n; ++i) t.one_cells[mc(i)] = {"o", "o"};
  t.id1["o"] = mc(0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) t.two_cells[tc(i, k)] = {mc(i), mc(i)};
  for (int i = 0; i < n; ++i) t.id2[mc(i)] = tc(i, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.hcomp1[{mc(i), mc(j)}] = mc((i + j) % n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k)
      for (int k2 = 0; k2 < m; ++k2) t.vcomp2[{tc(i, k), tc(i, k2)}] = tc(i, (k + k2) % m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int k2 = 0; k2 < m; ++k2)
          t.hcomp2[{tc(i, k), tc(j, k2)}] = tc((i + j) % n, (k + k2) % m);
  auto carry = [&](int g, int f) { return (g + f) / n; };
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g)
      for (int f = 0; f < n; ++f) {
        int w = twisted ? (h * carry(g, f)) % m : 0;
        b.assoc[{mc(h), mc(g), mc(f)}] = tc((h + g + f) % n, w);
      }
  for (int i = 0; i < n; ++i) {
    b.lunit[mc(i)] = tc(i, 0);
    b.runit[mc(i)] = tc(i, 0);
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) b.inv2[tc(i, k)] = tc(i, (m - k) % m);
  return b;
}

inline FinBicategory susp_z4() { return susp_cyclic(4, 4, true); }

// ---------------------------------------------------------------------------
// Indexed diagrams.

inline FunctorData constant_functor_data(const FinTwoCategory& c) {
  FunctorData f;
  for (const auto& x : c.t.objects) f.on_obj[x] = x;
  for (const auto& [k, d] : c.t.one_cells) f.on_1[k] = k;
  for (const auto& [s, d] : c.t.two_cells) f.on_2[s] = s;
  return f;
}

// Constant diagram at `fibre` over `base`.
inline IndexedTwoDiagram constant_diagram(const FinTwoCategory& base,
                                          const FinTwoCategory& fibre) {
  IndexedTwoDiagram D;
  D.base = base;
  for (const auto& b : base.t.objects) D.fibres[b] = fibre;
  for (const auto& [f, d] : base.t.one_cells) D.on_1[f] = constant_functor_data(fibre);
  for (const auto& [a, d] : base.t.two_cells) {
    std::map<CellName, CellName> comp;
    for (const auto& x : fibre.t.objects) comp[x] = fibre.t.id_1(x);
    D.on_2[a] = comp;
  }
  return D;
}

// Base = walking arrow, F(1) = walking arrow, F(0) = terminal, F(u) the
// terminal 2-functor.
inline IndexedTwoDiagram diagram_over_interval() {
  IndexedTwoDiagram D;
  D.base = walking_arrow();
  FinTwoCategory one = terminal();
  FinTwoCategory two = walking_arrow();
  D.fibres["0"] = one;
  D.fibres["1"] = two;
  D.on_1["id_0"] = constant_functor_data(one);
  D.on_1["id_1"] = constant_functor_data(two);
  FunctorData term;
  for (const auto& x : two.t.objects) term.on_obj[x] = "pt";
  for (const auto& [k, d] : two.t.one_cells) term.on_1[k] = "id_pt";
  for (const auto& [s, d] : two.t.two_cells) term.on_2[s] = "ii_id_pt";
  D.on_1["u"] = term;
  for (const auto& [a, d] : D.base.t.two_cells) {
    const auto& fd = D.base.t.one(D.base.t.two(a).src);
    std::map<CellName, CellName> comp;
    const auto& dst = D.fibres.at(fd.src).t;
    for (const auto& x : D.fibres.at(fd.tgt).t.objects)
      comp[x] = dst.id_1(D.on_1.at(D.base.t.two(a).src).obj(x));
    D.on_2[a] = comp;
  }
  return D;
}

// Base = walking 2-cell, F(a) = F(b) = walking arrow, F(f) = identity,
// F(g) = constant at 0, F(al) with the nonidentity component u.
inline IndexedTwoDiagram diagram_over_sigma2() {
  IndexedTwoDiagram D;
  D.base = walking_two_cell();
  FinTwoCategory two = walking_arrow();
  for (const auto& b : D.base.t.objects) D.fibres[b] = two;
  D.on_1["id_a"] = constant_functor_data(two);
  D.on_1["id_b"] = constant_functor_data(two);
  D.on_1["f"] = constant_functor_data(two);
  FunctorData c0;
  for (const auto& x : two.t.objects) c0.on_obj[x] = "0";
  for (const auto& [k, d] : two.t.one_cells) c0.on_1[k] = "id_0";
  for (const auto& [s, d] : two.t.two_cells) c0.on_2[s] = "ii_id_0";
  D.on_1["g"] = c0;
  for (const auto& [a2, d2] : D.base.t.two_cells) {
    std::map<CellName, CellName> comp;
    if (a2 == "al") {
      // F(al) : F(g) => F(f), components 0 -> id_0, 1 -> u.
      comp["0"] = "id_0";
      comp["1"] = "u";
    } else {
      const auto& f1 = D.base.t.two(a2).src;
      for (const auto& x : two.t.objects) comp[x] = two.t.id_1(D.on_1.at(f1).obj(x));
    }
    D.on_2[a2] = comp;
  }
  return D;
}

// ---------------------------------------------------------------------------
// Weak fixtures.

// Identity-on-cells fibration over susp_cyclic(n,m) whose total bicategory
// twists the associator by the coboundary of the carry 2-cochain; the
// comparison cells phi_{g,f} = t^{carry(g,f)} are nonidentity.
struct TwistedProjection {
  FinBicategory total;
  FinBicategory base;
  Homomorphism P;
};

inline TwistedProjection twisted_phi_projection(int n = 2, int m = 2) {
  auto mc = [](int i) { return "m" + std::to_string(i); };
  auto tc = [](int i, int k) { return "t" + std::to_string(i) + "_" + std::to_string(k); };
  FinBicategory base = susp_cyclic(n, m, true);
  FinBicategory total = base;
  auto carry = [&](int g, int f) { return (g + f) / n; };
  auto beta = [&](int g, int f) { return carry(g, f) % m; };
  // omega_E = omega_B + delta beta.
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g)
      for (int f = 0; f < n; ++f) {
        int w = (h * carry(g, f)) % m;
        int db = ((beta(g, f) - beta((h + g) % n, f) + beta(h, (g + f) % n) - beta(h, g)) %
                      m +
                  m) %
                 m;
        total.assoc[{mc(h), mc(g), mc(f)}] = tc((h + g + f) % n, (w + db) % m);
      }
  Homomorphism P{total, base, {}, {}, {}};
  for (const auto& x : total.t.objects) P.m.on_obj[x] = x;
  for (const auto& [f, d] : total.t.one_cells) P.m.on_1[f] = f;
  for (const auto& [a, d] : total.t.two_cells) P.m.on_2[a] = a;
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      P.phi_comp[{mc(g), mc(f)}] = tc((g + f) % n, beta(g, f));
  P.phi_id["o"] = tc(0, 0);
  return {total, base, P};
}

// Terminal bicategory (embedded strict terminal).
inline FinBicategory terminal_bicategory() { return embed_bicategory(terminal()); }

// Trihomomorphism over the terminal base with a one-object chaotic fibre:
// iota and chi components are arbitrary 1-cells (with chosen pseudo-inverses)
// and every remaining family member is the unique chaotic filler of its
// declared boundary.
inline Trihomomorphism point_trihomomorphism(const FinTwoCategory& fibre,
                                             const CellName& iota_c,
                                             const CellName& iota_inv,
                                             const CellName& chi_c,
                                             const CellName& chi_inv) {
  Trihomomorphism T;
  T.base = terminal_bicategory();
  FinBicategory K = embed_bicategory(fibre);
  T.fibres["pt"] = K;
  const CellTables& k = K.t;
  if (k.objects.size() != 1) throw Error("point_trihomomorphism: one-object fibre only");
  const CellName o = *k.objects.begin();
  auto uniq = [&](const CellName& src, const CellName& tgt) {
    auto cells = k.two_cells_between(src, tgt);
    if (cells.size() != 1) throw Error("point_trihomomorphism: fibre not chaotic");
    return cells[0];
  };

  const CellName f1 = "id_pt";
  const CellName a1 = "ii_id_pt";

  HomData h;
  for (const auto& x : k.objects) h.m.on_obj[x] = x;
  for (const auto& [c, d] : k.one_cells) h.m.on_1[c] = c;
  for (const auto& [c, d] : k.two_cells) h.m.on_2[c] = c;
  for (const auto& pair : enumerate_composable(k, 2, 1))
    h.phi_comp[{pair[0], pair[1]}] = k.id_2(k.comp1(pair[0], pair[1]));
  for (const auto& x : k.objects) h.phi_id[x] = k.id_2(k.id_1(x));
  T.on_1[f1] = h;

  TransfData idt;
  Transformation idtr = identity_transformation(identity_homomorphism(K));
  idt.comp1 = idtr.comp1;
  idt.comp2 = idtr.comp2;
  T.on_2[a1] = idt;

  T.phi_vcomp[{a1, a1}] = {{o, uniq(k.id_1(o), k.comp1(k.id_1(o), k.id_1(o)))}};
  T.phi_vid[f1] = {{o, uniq(k.id_1(o), k.id_1(o))}};

  auto adjeq = [&](const CellName& c, const CellName& ci) {
    AdjEqData adj;
    adj.fwd.comp1[o] = c;
    adj.bwd.comp1[o] = ci;
    for (const auto& [m, d] : k.one_cells) {
      adj.fwd.comp2[m] = uniq(k.comp1(c, m), k.comp1(m, c));
      adj.bwd.comp2[m] = uniq(k.comp1(ci, m), k.comp1(m, ci));
    }
    adj.unit[o] = uniq(k.id_1(o), k.comp1(ci, c));
    adj.counit[o] = uniq(k.comp1(c, ci), k.id_1(o));
    return adj;
  };
  T.chi[{f1, f1}] = adjeq(chi_c, chi_inv);
  T.iota["pt"] = adjeq(iota_c, iota_inv);

  const CellName e = k.id_1(o);
  T.chi_nat[{a1, a1}] = {{o, uniq(k.comp1(chi_c, k.comp1(e, e)), k.comp1(e, chi_c))}};
  T.iota_nat["pt"] = {{o, uniq(k.comp1(e, iota_c), iota_c)}};
  T.omega[{f1, f1, f1}] = {
      {o, uniq(k.comp1(chi_c, chi_c), k.comp1(e, k.comp1(chi_c, chi_c)))}};
  T.gamma[f1] = {{o, uniq(k.comp1(chi_c, iota_c), e)}};
  T.delta[f1] = {{o, uniq(k.comp1(chi_c, iota_c), e)}};
  return T;
}

// Nonidentity iota over the point: the identity 1-cell of the total
// bicategory acquires the second component "u".
inline Trihomomorphism iota_trihomomorphism() {
  return point_trihomomorphism(chaotic_z2(), "u", "u", "e", "e");
}

// Nonidentity chi over the point: composition in the total bicategory picks
// up a twist by "u".
inline Trihomomorphism chi_trihomomorphism() {
  return point_trihomomorphism(chaotic_z2(), "e", "e", "u", "u");
}

// Constant trihomomorphism over an arbitrary valid base with a strict
// fibre: every assignment is an identity.
inline Trihomomorphism constant_trihomomorphism(const FinBicategory& base,
                                                const FinTwoCategory& fibre) {
  IndexedTwoDiagram D;
  D.base = FinTwoCategory{base.t};  // tables only; coherence re-enters below
  for (const auto& b : base.t.objects) D.fibres[b] = fibre;
  for (const auto& [f, d] : base.t.one_cells) D.on_1[f] = constant_functor_data(fibre);
  for (const auto& [a, d] : base.t.two_cells) {
    std::map<CellName, CellName> comp;
    for (const auto& x : fibre.t.objects) comp[x] = fibre.t.id_1(x);
    D.on_2[a] = comp;
  }
  Trihomomorphism T = embed_trihomomorphism(D);
  T.base = base;
  return T;
}

// Constant trihomomorphism over the terminal base with an arbitrary valid
// fibre: all assignments are identities.
inline Trihomomorphism trivial_trihom_over_point(const FinBicategory& K) {
  Trihomomorphism T;
  T.base = terminal_bicategory();
  T.fibres["pt"] = K;
  const CellTables& k = K.t;
  const CellName f1 = "id_pt";
  const CellName a1 = "ii_id_pt";

  HomData h;
  for (const auto& x : k.objects) h.m.on_obj[x] = x;
  for (const auto& [c, d] : k.one_cells) h.m.on_1[c] = c;
  for (const auto& [c, d] : k.two_cells) h.m.on_2[c] = c;
  for (const auto& pair : enumerate_composable(k, 2, 1))
    h.phi_comp[{pair[0], pair[1]}] = k.id_2(k.comp1(pair[0], pair[1]));
  for (const auto& x : k.objects) h.phi_id[x] = k.id_2(k.id_1(x));
  T.on_1[f1] = h;

  TransfData idt;
  Transformation idtr = identity_transformation(identity_homomorphism(K));
  idt.comp1 = idtr.comp1;
  idt.comp2 = idtr.comp2;
  T.on_2[a1] = idt;

  T.phi_vcomp[{a1, a1}] = [&] {
    std::map<CellName, CellName> comp;
    for (const auto& x : k.objects) comp[x] = k.id_2(k.comp1(k.id_1(x), k.id_1(x)));
    return comp;
  }();
  T.phi_vid[f1] = [&] {
    std::map<CellName, CellName> comp;
    for (const auto& x : k.objects) comp[x] = k.id_2(k.id_1(x));
    return comp;
  }();

  AdjEqData ideq;
  ideq.fwd = idt;
  ideq.bwd = idt;
  for (const auto& x : k.objects) {
    ideq.unit[x] = k.id_2(k.comp1(k.id_1(x), k.id_1(x)));
    ideq.counit[x] = k.id_2(k.comp1(k.id_1(x), k.id_1(x)));
  }
  T.chi[{f1, f1}] = ideq;
  T.iota["pt"] = ideq;

  T.chi_nat[{a1, a1}] = [&] {
    std::map<CellName, CellName> comp;
    for (const auto& x : k.objects) {
      CellName e = k.id_1(x);
      comp[x] = k.id_2(k.comp1(e, k.comp1(e, e)));
    }
    return comp;
  }();
  T.iota_nat["pt"] = [&] {
    std::map<CellName, CellName> comp;
    for (const auto& x : k.objects) comp[x] = k.id_2(k.comp1(k.id_1(x), k.id_1(x)));
    return comp;
  }();
  T.omega[{f1, f1, f1}] = [&] {
    std::map<CellName, CellName> comp;
    for (const auto& x : k.objects) {
      CellName e = k.id_1(x);
      comp[x] = k.id_2(k.comp1(e, e));
    }
    return comp;
  }();
  T.gamma[f1] = [&] {
    std::map<CellName, CellName> comp;
    for (const auto& x : k.objects) comp[x] = k.id_2(k.comp1(k.id_1(x), k.id_1(x)));
    return comp;
  }();
  T.delta[f1] = T.gamma[f1];
  return T;
}

// Identity-on-cells endo-homomorphism of susp_cyclic(n,m) with constant
// comparison twist c: phi_{g,f} = t^c and phi_id = t^{-c}.
inline Homomorphism twisted_endo_homomorphism(int n, int m, int c) {
  FinBicategory b = susp_cyclic(n, m, true);
  auto mc = [](int i) { return "m" + std::to_string(i); };
  auto tc = [](int i, int k) { return "t" + std::to_string(i) + "_" + std::to_string(k); };
  Homomorphism H{b, b, {}, {}, {}};
  for (const auto& x : b.t.objects) H.m.on_obj[x] = x;
  for (const auto& [f, d] : b.t.one_cells) H.m.on_1[f] = f;
  for (const auto& [a, d] : b.t.two_cells) H.m.on_2[a] = a;
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) H.phi_comp[{mc(g), mc(f)}] = tc((g + f) % n, c % m);
  H.phi_id["o"] = tc(0, (m - c % m) % m);
  return H;
}

// Pseudo-natural endo-transformation of the identity on susp_cyclic(n,m):
// identity 1-cell components with square twists  sigma_{m_k} = t^{c*k}.
inline Transformation vertical_twist_transformation(int n, int m, int c) {
  Homomorphism id = identity_homomorphism(susp_cyclic(n, m, true));
  Transformation s{id, id, {}, {}, c % m == 0};
  auto tc = [](int i, int k) { return "t" + std::to_string(i) + "_" + std::to_string(k); };
  s.comp1["o"] = "m0";
  for (int k = 0; k < n; ++k)
    s.comp2["m" + std::to_string(k)] = tc(k, (c * k) % m);
  return s;
}

// Homomorphism from the terminal bicategory picking out an object of b.
inline Homomorphism point_homomorphism(const FinBicategory& b, const CellName& obj) {
  Homomorphism H{terminal_bicategory(), b, {}, {}, {}};
  H.m.on_obj["pt"] = obj;
  H.m.on_1["id_pt"] = b.t.id_1(obj);
  H.m.on_2["ii_id_pt"] = b.t.id_2(b.t.id_1(obj));
  H.phi_comp[{"id_pt", "id_pt"}] = b.t.id_2(b.t.comp1(b.t.id_1(obj), b.t.id_1(obj)));
  H.phi_id["pt"] = b.t.id_2(b.t.id_1(obj));
  return H;
}

inline TwoFunctor point_two_functor(const FinTwoCategory& c, const CellName& obj) {
  TwoFunctor F{terminal(), c, {}};
  F.m.on_obj["pt"] = obj;
  F.m.on_1["id_pt"] = c.t.id_1(obj);
  F.m.on_2["ii_id_pt"] = c.t.id_2(c.t.id_1(obj));
  return F;
}

}  // namespace fibcat::samples
