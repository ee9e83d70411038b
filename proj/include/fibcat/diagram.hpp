#pragma once

// Indexed diagrams and trihomomorphisms: the inputs of the two Grothendieck
// constructions.
//
// An IndexedTwoDiagram is a strict contravariant assignment on a finite
// strict base: objects go to 2-categories, 1-cells f : b -> b' to 2-functors
// F f : F b' -> F b, and 2-cells alpha : f => g to strict 2-natural
// transformations F alpha : F g => F f, with functoriality on the nose.
//
// A Trihomomorphism carries the weak analogue: local homomorphisms with
// vertical comparison cells, adjoint-equivalence transformations chi and
// iota, and the invertible modification families omega, gamma, delta.
// Component boundary conventions are spelled out field by field; every
// lifting construction in the library evaluates these exact shapes.

#include "fibcat/core.hpp"
#include "fibcat/maps.hpp"

namespace fibcat {

// ---------------------------------------------------------------------------
// Strict indexed diagrams.

struct IndexedTwoDiagram {
  FinTwoCategory base;
  std::map<CellName, FinTwoCategory> fibres;  // object b -> F b
  std::map<CellName, FunctorData> on_1;       // f : b -> b'  ->  F f : F b' -> F b
  // alpha : f => g  ->  components of F alpha : F g => F f, one 1-cell of
  // F b per object of F b'.
  std::map<CellName, std::map<CellName, CellName>> on_2;

  const FinTwoCategory& fibre(const CellName& b) const {
    auto it = fibres.find(b);
    if (it == fibres.end()) throw Error("diagram has no fibre at " + b);
    return it->second;
  }
  const FunctorData& reindex(const CellName& f) const {
    auto it = on_1.find(f);
    if (it == on_1.end()) throw Error("diagram undefined on 1-cell " + f);
    return it->second;
  }
  const std::map<CellName, CellName>& two_nat(const CellName& a) const {
    auto it = on_2.find(a);
    if (it == on_2.end()) throw Error("diagram undefined on 2-cell " + a);
    return it->second;
  }
};

// Strict 2-naturality of a family 1-cell components comp : F => G for
// parallel strict 2-functors F, G : D -> C given by their action tables.
inline void check_strict_two_natural(const CellTables& D, const CellTables& C,
                                     const FunctorData& F, const FunctorData& G,
                                     const std::map<CellName, CellName>& comp,
                                     const std::string& tag, ValidationReport& rep) {
  for (const auto& e : D.objects) {
    auto it = comp.find(e);
    if (it == comp.end()) {
      rep.add(tag + "/missing-component", {e});
      continue;
    }
    if (!C.has_one(it->second)) {
      rep.add(tag + "/dangling-1-cell", {e, it->second});
      continue;
    }
    const auto& d = C.one_cells.at(it->second);
    if (d.src != F.obj(e) || d.tgt != G.obj(e)) rep.add(tag + "/boundary", {e, it->second});
  }
  if (!rep.passed) return;
  for (const auto& [k, kd] : D.one_cells)
    if (C.comp1(G.one(k), comp.at(kd.src)) != C.comp1(comp.at(kd.tgt), F.one(k)))
      rep.add(tag + "/naturality-1", {k});
  for (const auto& [rho, rd] : D.two_cells) {
    const auto& kd = D.one(rd.src);
    CellName lhs = C.comp2h(G.two(rho), C.id_2(comp.at(kd.src)));
    CellName rhs = C.comp2h(C.id_2(comp.at(kd.tgt)), F.two(rho));
    if (lhs != rhs) rep.add(tag + "/naturality-2", {rho});
  }
}

inline ValidationReport validate_indexed_diagram(const IndexedTwoDiagram& D,
                                                 std::size_t witness_limit = 100) {
  ValidationReport rep;
  const CellTables& B = D.base.t;

  ValidationReport base_rep = validate_two_category(D.base);
  if (!base_rep.passed) {
    rep.add("component/base-invalid", {});
    rep.merge(base_rep);
    rep.truncate(witness_limit);
    return rep;
  }
  for (const auto& b : B.objects) {
    if (!D.fibres.count(b)) {
      rep.add("component/missing-fibre", {b});
      continue;
    }
    if (!validate_two_category(D.fibre(b)).passed) rep.add("component/fibre-invalid", {b});
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }
  for (const auto& [f, fd] : B.one_cells) {
    if (!D.on_1.count(f)) {
      rep.add("component/missing-on-1", {f});
      continue;
    }
    TwoFunctor Ff{D.fibre(fd.tgt), D.fibre(fd.src), D.reindex(f)};
    if (!validate_two_functor(Ff).passed) rep.add("component/on-1-invalid", {f});
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }
  for (const auto& [a, ad] : B.two_cells) {
    if (!D.on_2.count(a)) {
      rep.add("component/missing-on-2", {a});
      continue;
    }
    const auto& fd = B.one(ad.src);
    // F alpha : F g => F f.
    check_strict_two_natural(D.fibre(fd.tgt).t, D.fibre(fd.src).t, D.reindex(ad.tgt),
                             D.reindex(ad.src), D.two_nat(a), "component/on-2[" + a + "]",
                             rep);
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }

  // Strict contravariant functoriality.
  for (const auto& b : B.objects) {
    const FunctorData& I = D.reindex(B.id_1(b));
    const CellTables& Fb = D.fibre(b).t;
    bool ok = true;
    for (const auto& x : Fb.objects) ok = ok && I.obj(x) == x;
    for (const auto& [k, kd] : Fb.one_cells) ok = ok && I.one(k) == k;
    for (const auto& [s, sd] : Fb.two_cells) ok = ok && I.two(s) == s;
    if (!ok) rep.add("functoriality/id1", {b});
  }
  for (const auto& pair : enumerate_composable(B, 2, 1)) {
    const auto& g = pair[0];
    const auto& f = pair[1];
    const FunctorData& L = D.reindex(B.comp1(g, f));
    const FunctorData& Ff = D.reindex(f);
    const FunctorData& Fg = D.reindex(g);
    const CellTables& top = D.fibre(B.one(g).tgt).t;
    bool ok = true;
    for (const auto& x : top.objects) ok = ok && L.obj(x) == Ff.obj(Fg.obj(x));
    for (const auto& [k, kd] : top.one_cells) ok = ok && L.one(k) == Ff.one(Fg.one(k));
    for (const auto& [s, sd] : top.two_cells) ok = ok && L.two(s) == Ff.two(Fg.two(s));
    if (!ok) rep.add("functoriality/hcomp1", {g, f});
  }
  for (const auto& [f, fd] : B.one_cells) {
    const auto& comp = D.two_nat(B.id_2(f));
    const CellTables& top = D.fibre(fd.tgt).t;
    const CellTables& bot = D.fibre(fd.src).t;
    for (const auto& x : top.objects)
      if (comp.at(x) != bot.id_1(D.reindex(f).obj(x))) {
        rep.add("functoriality/id2", {f, x});
        break;
      }
  }
  for (const auto& pair : enumerate_composable(B, 2, 2)) {
    const auto& c = pair[0];  // gamma : g => h
    const auto& a = pair[1];  // alpha : f => g
    const auto& comp = D.two_nat(B.comp2v(c, a));
    const auto& ca = D.two_nat(a);
    const auto& cc = D.two_nat(c);
    const auto& fd = B.one(B.two(a).src);
    const CellTables& top = D.fibre(fd.tgt).t;
    const CellTables& bot = D.fibre(fd.src).t;
    for (const auto& x : top.objects)
      if (comp.at(x) != bot.comp1(ca.at(x), cc.at(x))) {
        rep.add("functoriality/vcomp2", {c, a, x});
        break;
      }
  }
  for (const auto& [s, u] : horizontal_pairs(B)) {
    // s : j => k over the g-side, u : f => g over the f-side;
    // F(s*u) has components  F f(F s_e) . F u_{F k(e)}.
    const auto& comp = D.two_nat(B.comp2h(s, u));
    const auto& cs = D.two_nat(s);
    const auto& cu = D.two_nat(u);
    const auto& f = B.two(u).src;
    const auto& k = B.two(s).tgt;
    const CellTables& top = D.fibre(B.one(k).tgt).t;
    const CellTables& bot = D.fibre(B.one(f).src).t;
    for (const auto& x : top.objects)
      if (comp.at(x) != bot.comp1(D.reindex(f).one(cs.at(x)), cu.at(D.reindex(k).obj(x)))) {
        rep.add("functoriality/hcomp2", {s, u, x});
        break;
      }
  }
  rep.truncate(witness_limit);
  return rep;
}

// ---------------------------------------------------------------------------
// Diagram-level transformations, modifications, perturbations (the cells that
// the strict Grothendieck construction acts on).

struct DiagramTransformation {
  std::map<CellName, FunctorData> comp;  // object b -> 2-functor D1(b) -> D2(b)
};

struct DiagramModification {
  std::map<CellName, std::map<CellName, CellName>> comp;  // b -> (object of D1(b) -> 1-cell)
};

struct DiagramPerturbation {
  std::map<CellName, std::map<CellName, CellName>> comp;  // b -> (object of D1(b) -> 2-cell)
};

inline ValidationReport validate_diagram_transformation(const IndexedTwoDiagram& D1,
                                                        const IndexedTwoDiagram& D2,
                                                        const DiagramTransformation& eta,
                                                        std::size_t witness_limit = 100) {
  ValidationReport rep;
  if (!structurally_equal(D1.base, D2.base)) {
    rep.add("boundary/base-mismatch", {});
    return rep;
  }
  const CellTables& B = D1.base.t;
  for (const auto& b : B.objects) {
    auto it = eta.comp.find(b);
    if (it == eta.comp.end()) {
      rep.add("malformed-map/missing-component", {b});
      continue;
    }
    TwoFunctor F{D1.fibre(b), D2.fibre(b), it->second};
    if (!validate_two_functor(F).passed) rep.add("component-invalid", {b});
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }
  // 2-naturality: eta_x . D1(f) = D2(f) . eta_y for f : x -> y, and the
  // analogous whisker equality on 2-cells of the base.
  for (const auto& [f, fd] : B.one_cells) {
    const FunctorData& ex = eta.comp.at(fd.src);
    const FunctorData& ey = eta.comp.at(fd.tgt);
    const FunctorData& f1 = D1.reindex(f);
    const FunctorData& f2 = D2.reindex(f);
    const CellTables& top = D1.fibre(fd.tgt).t;
    bool ok = true;
    for (const auto& x : top.objects) ok = ok && ex.obj(f1.obj(x)) == f2.obj(ey.obj(x));
    for (const auto& [k, kd] : top.one_cells) ok = ok && ex.one(f1.one(k)) == f2.one(ey.one(k));
    for (const auto& [s, sd] : top.two_cells) ok = ok && ex.two(f1.two(s)) == f2.two(ey.two(s));
    if (!ok) rep.add("naturality/1-cell", {f});
  }
  for (const auto& [a, ad] : B.two_cells) {
    const auto& fd = B.one(ad.src);
    const FunctorData& ex = eta.comp.at(fd.src);
    const FunctorData& ey = eta.comp.at(fd.tgt);
    const auto& c1 = D1.two_nat(a);
    const auto& c2 = D2.two_nat(a);
    const CellTables& top = D1.fibre(fd.tgt).t;
    for (const auto& x : top.objects)
      if (ex.one(c1.at(x)) != c2.at(ey.obj(x))) {
        rep.add("naturality/2-cell", {a, x});
        break;
      }
  }
  rep.truncate(witness_limit);
  return rep;
}

inline ValidationReport validate_diagram_modification(const IndexedTwoDiagram& D1,
                                                      const IndexedTwoDiagram& D2,
                                                      const DiagramTransformation& eta,
                                                      const DiagramTransformation& eps,
                                                      const DiagramModification& m,
                                                      std::size_t witness_limit = 100) {
  ValidationReport rep;
  const CellTables& B = D1.base.t;
  for (const auto& b : B.objects) {
    auto it = m.comp.find(b);
    if (it == m.comp.end()) {
      rep.add("malformed-map/missing-component", {b});
      continue;
    }
    check_strict_two_natural(D1.fibre(b).t, D2.fibre(b).t, eta.comp.at(b), eps.comp.at(b),
                             it->second, "component[" + b + "]", rep);
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }
  // Modification axiom: for f : x -> y,  Gamma_x . D1(f) = D2(f) . Gamma_y,
  // i.e. (Gamma_x)_{D1 f(e)} = D2 f((Gamma_y)_e) for every object e.
  for (const auto& [f, fd] : B.one_cells) {
    const auto& gx = m.comp.at(fd.src);
    const auto& gy = m.comp.at(fd.tgt);
    const CellTables& top = D1.fibre(fd.tgt).t;
    for (const auto& e : top.objects)
      if (gx.at(D1.reindex(f).obj(e)) != D2.reindex(f).one(gy.at(e))) {
        rep.add("modification-axiom", {f, e});
        break;
      }
  }
  rep.truncate(witness_limit);
  return rep;
}

inline ValidationReport validate_diagram_perturbation(const IndexedTwoDiagram& D1,
                                                      const IndexedTwoDiagram& D2,
                                                      const DiagramModification& gam,
                                                      const DiagramModification& lam,
                                                      const DiagramPerturbation& z,
                                                      std::size_t witness_limit = 100) {
  ValidationReport rep;
  const CellTables& B = D1.base.t;
  for (const auto& b : B.objects) {
    auto it = z.comp.find(b);
    if (it == z.comp.end()) {
      rep.add("malformed-map/missing-component", {b});
      continue;
    }
    const CellTables& fib2 = D2.fibre(b).t;
    for (const auto& e : D1.fibre(b).t.objects) {
      auto jt = it->second.find(e);
      if (jt == it->second.end()) {
        rep.add("malformed-map/missing-component", {b, e});
        continue;
      }
      const auto& d = fib2.two(jt->second);
      if (d.src != gam.comp.at(b).at(e) || d.tgt != lam.comp.at(b).at(e))
        rep.add("boundary/component", {b, e, jt->second});
    }
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }
  for (const auto& [f, fd] : B.one_cells) {
    const auto& zx = z.comp.at(fd.src);
    const auto& zy = z.comp.at(fd.tgt);
    const CellTables& top = D1.fibre(fd.tgt).t;
    for (const auto& e : top.objects)
      if (zx.at(D1.reindex(f).obj(e)) != D2.reindex(f).two(zy.at(e))) {
        rep.add("perturbation-axiom", {f, e});
        break;
      }
  }
  rep.truncate(witness_limit);
  return rep;
}

// ---------------------------------------------------------------------------
// Trihomomorphisms.

// Lite homomorphism payload: action tables plus comparison cells, with the
// ambient bicategories implied by context.
struct HomData {
  FunctorData m;
  std::map<std::pair<CellName, CellName>, CellName> phi_comp;
  std::map<CellName, CellName> phi_id;
};

struct TransfData {
  std::map<CellName, CellName> comp1;
  std::map<CellName, CellName> comp2;
};

struct AdjEqData {
  TransfData fwd;
  TransfData bwd;
  std::map<CellName, CellName> unit;    // per object e : id => bwd_e . fwd_e
  std::map<CellName, CellName> counit;  // per object e : fwd_e . bwd_e => id
};

struct Trihomomorphism {
  FinBicategory base;
  std::map<CellName, FinBicategory> fibres;
  std::map<CellName, HomData> on_1;    // f : b -> b'  ->  F f : F b' -> F b
  std::map<CellName, TransfData> on_2; // alpha : f => g  ->  F alpha : F g => F f

  // Local comparison cells of the hom pseudo-functors.  For vertically
  // composable alpha : f => g, gamma : g => h (alpha first) and each object
  // e of F b':
  //   phi_vcomp[(gamma,alpha)][e] : F(gamma.alpha)_e => F alpha_e . F gamma_e
  //   phi_vid[f][e]               : F(1_f)_e => id1(F f(e))
  std::map<std::pair<CellName, CellName>, std::map<CellName, CellName>> phi_vcomp;
  std::map<CellName, std::map<CellName, CellName>> phi_vid;

  // chi[(g,f)] : F f . F g => F(g.f)   (adjoint equivalence)
  // iota[a]    : 1_{F a}   => F(1_a)   (adjoint equivalence)
  std::map<std::pair<CellName, CellName>, AdjEqData> chi;
  std::map<CellName, AdjEqData> iota;

  // Naturality modifications.  For alpha : f => g and beta : j => k
  // horizontally composable (alpha on the f-side), per object e:
  //   chi_nat[(beta,alpha)][e] :
  //     chi_{jf,e} . (F f(F beta_e) . F alpha_{F k(e)})  =>  F(beta*alpha)_e . chi_{kg,e}
  // and per object a of the base and e of F a:
  //   iota_nat[a][e] : F(1_{1_a})_e . iota_{a,e} => iota_{a,e}
  std::map<std::pair<CellName, CellName>, std::map<CellName, CellName>> chi_nat;
  std::map<CellName, std::map<CellName, CellName>> iota_nat;

  // omega[(h,g,f)][e] :
  //   chi_{(h.g)f,e} . F f(chi_{hg,e})  =>  F(a_{h,g,f})_e . (chi_{h(gf),e} . chi_{gf,F h(e)})
  // gamma[f][e] : chi_{1f,e} . F f(iota_{y,e})   => F(l_f)_e      (f : x -> y)
  // delta[f][e] : chi_{f1,e} . iota_{x,F f(e)}   => F(r_f)_e
  std::map<std::tuple<CellName, CellName, CellName>, std::map<CellName, CellName>> omega;
  std::map<CellName, std::map<CellName, CellName>> gamma;
  std::map<CellName, std::map<CellName, CellName>> delta;

  const FinBicategory& fibre(const CellName& b) const {
    auto it = fibres.find(b);
    if (it == fibres.end()) throw Error("trihomomorphism has no fibre at " + b);
    return it->second;
  }
  const HomData& hom1(const CellName& f) const {
    auto it = on_1.find(f);
    if (it == on_1.end()) throw Error("trihomomorphism undefined on 1-cell " + f);
    return it->second;
  }
  const TransfData& tr2(const CellName& a) const {
    auto it = on_2.find(a);
    if (it == on_2.end()) throw Error("trihomomorphism undefined on 2-cell " + a);
    return it->second;
  }
};

// Materialize the homomorphism F f with its ambient bicategories.
inline Homomorphism hom_of(const Trihomomorphism& T, const CellName& f) {
  const auto& fd = T.base.t.one(f);
  const HomData& h = T.hom1(f);
  return Homomorphism{T.fibre(fd.tgt), T.fibre(fd.src), h.m, h.phi_comp, h.phi_id};
}

// Materialize F alpha : F g => F f as a Transformation.
inline Transformation transf_of(const Trihomomorphism& T, const CellName& alpha) {
  const auto& ad = T.base.t.two(alpha);
  const TransfData& d = T.tr2(alpha);
  Transformation s{hom_of(T, ad.tgt), hom_of(T, ad.src), d.comp1, d.comp2, false};
  return s;
}

inline Transformation materialize_transf(const TransfData& d, Homomorphism src,
                                         Homomorphism tgt) {
  return Transformation{std::move(src), std::move(tgt), d.comp1, d.comp2, false};
}

// chi_{g,f} forward transformation  F f . F g => F(g.f).
inline Transformation chi_fwd(const Trihomomorphism& T, const CellName& g,
                              const CellName& f) {
  auto it = T.chi.find({g, f});
  if (it == T.chi.end()) throw Error("chi undefined at (" + g + "," + f + ")");
  return materialize_transf(it->second.fwd, compose_homomorphism(hom_of(T, f), hom_of(T, g)),
                            hom_of(T, T.base.t.comp1(g, f)));
}

inline Transformation iota_fwd(const Trihomomorphism& T, const CellName& a) {
  auto it = T.iota.find(a);
  if (it == T.iota.end()) throw Error("iota undefined at " + a);
  return materialize_transf(it->second.fwd, identity_homomorphism(T.fibre(a)),
                            hom_of(T, T.base.t.id_1(a)));
}

namespace detail {

inline void check_adjoint_equivalence(const AdjEqData& adj, const Homomorphism& S,
                                      const Homomorphism& Tm, const std::string& tag,
                                      ValidationReport& rep) {
  Transformation fwd = materialize_transf(adj.fwd, S, Tm);
  Transformation bwd = materialize_transf(adj.bwd, Tm, S);
  if (!validate_transformation(fwd).passed) rep.add(tag + "/fwd-invalid", {});
  if (!validate_transformation(bwd).passed) rep.add(tag + "/bwd-invalid", {});
  if (!rep.passed) return;

  Modification unit{identity_transformation(S), vcomp_transformation(bwd, fwd), adj.unit};
  if (!validate_modification(unit).passed) rep.add(tag + "/unit-invalid", {});
  Modification counit{vcomp_transformation(fwd, bwd), identity_transformation(Tm),
                      adj.counit};
  if (!validate_modification(counit).passed) rep.add(tag + "/counit-invalid", {});
  if (!rep.passed) return;

  const FinBicategory& B = S.cod;
  for (const auto& e : S.dom.t.objects) {
    EquivalenceData comp{fwd.at(e), bwd.at(e), adj.unit.at(e), adj.counit.at(e)};
    if (!is_invertible_2cell(B.t, comp.unit) || !is_invertible_2cell(B.t, comp.counit)) {
      rep.add(tag + "/unit-counit-not-invertible", {e});
      continue;
    }
    if (!adjunction_triangles_hold(B, comp)) rep.add(tag + "/triangle", {e});
  }
}

// Component family with declared boundaries checked against two parallel
// transformations, then the modification axiom.
inline void check_invertible_modification(const Transformation& src,
                                          const Transformation& tgt,
                                          const std::map<CellName, CellName>& comp,
                                          const std::string& tag, ValidationReport& rep) {
  Modification m{src, tgt, comp};
  ValidationReport r = validate_modification(m);
  if (!r.passed) {
    rep.add(tag + "/modification", {});
    rep.merge(r);
    return;
  }
  const CellTables& C = src.source.cod.t;
  for (const auto& [e, c] : comp)
    if (!is_invertible_2cell(C, c)) rep.add(tag + "/not-invertible", {e, c});
}

}  // namespace detail

inline ValidationReport validate_trihomomorphism(const Trihomomorphism& T,
                                                 std::size_t witness_limit = 100) {
  ValidationReport rep;
  const CellTables& B = T.base.t;
  if (!validate_bicategory(T.base).passed) rep.add("component/base-invalid", {});
  for (const auto& b : B.objects) {
    if (!T.fibres.count(b)) {
      rep.add("component/missing-fibre", {b});
      continue;
    }
    if (!validate_bicategory(T.fibre(b)).passed) rep.add("component/fibre-invalid", {b});
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }

  for (const auto& [f, fd] : B.one_cells) {
    if (!T.on_1.count(f)) {
      rep.add("component/missing-on-1", {f});
      continue;
    }
    if (!validate_homomorphism(hom_of(T, f)).passed) rep.add("component/on-1-invalid", {f});
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }
  for (const auto& [a, ad] : B.two_cells) {
    if (!T.on_2.count(a)) {
      rep.add("component/missing-on-2", {a});
      continue;
    }
    if (!validate_transformation(transf_of(T, a)).passed)
      rep.add("component/on-2-invalid", {a});
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }

  // Local pseudo-functor structure on each hom.
  for (const auto& pair : enumerate_composable(B, 2, 2)) {
    const auto& g = pair[0];  // gamma : g => h
    const auto& a = pair[1];  // alpha : f => g
    auto it = T.phi_vcomp.find({g, a});
    if (it == T.phi_vcomp.end()) {
      rep.add("local/missing-phi-vcomp", {g, a});
      continue;
    }
    Transformation Fga = transf_of(T, B.comp2v(g, a));
    Transformation composite = vcomp_transformation(transf_of(T, a), transf_of(T, g));
    detail::check_invertible_modification(Fga, composite, it->second,
                                          "local/phi-vcomp[" + g + "," + a + "]", rep);
  }
  for (const auto& [f, fd] : B.one_cells) {
    auto it = T.phi_vid.find(f);
    if (it == T.phi_vid.end()) {
      rep.add("local/missing-phi-vid", {f});
      continue;
    }
    Transformation F1f = transf_of(T, B.id_2(f));
    Transformation idT = identity_transformation(hom_of(T, f));
    detail::check_invertible_modification(F1f, idT, it->second, "local/phi-vid[" + f + "]",
                                          rep);
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }
  // Pseudo-functor coherence of the local comparison cells.
  for (const auto& triple : enumerate_composable(B, 3, 2)) {
    const auto& e2 = triple[0];  // epsilon : h => k
    const auto& g = triple[1];   // gamma : g => h
    const auto& a = triple[2];   // alpha : f => g
    const auto& top = B.one(B.two(a).src);
    const FinBicategory& fib = T.fibre(top.src);
    const CellTables& C = fib.t;
    const auto& Fe = T.tr2(e2).comp1;
    const auto& Fg = T.tr2(g).comp1;
    const auto& Fa = T.tr2(a).comp1;
    for (const auto& e : T.fibre(top.tgt).t.objects) {
      CellName lhs = vcomp_seq(
          C, {fib.a(Fa.at(e), Fg.at(e), Fe.at(e)),
              C.comp2h(T.phi_vcomp.at({g, a}).at(e), C.id_2(Fe.at(e))),
              T.phi_vcomp.at({e2, B.comp2v(g, a)}).at(e)});
      CellName rhs = vcomp_seq(
          C, {C.comp2h(C.id_2(Fa.at(e)), T.phi_vcomp.at({e2, g}).at(e)),
              T.phi_vcomp.at({B.comp2v(e2, g), a}).at(e)});
      if (lhs != rhs) {
        rep.add("local/pseudofunctor-assoc", {e2, g, a, e});
        break;
      }
    }
  }
  for (const auto& [a, ad] : B.two_cells) {
    const auto& top = B.one(ad.src);
    const FinBicategory& fib = T.fibre(top.src);
    const CellTables& C = fib.t;
    const auto& Fa = T.tr2(a).comp1;
    for (const auto& e : T.fibre(top.tgt).t.objects) {
      // Pre-composing with 1_f lands F(1_f) on the left of the component
      // composite, post-composing with 1_g on the right.
      CellName lhs = vcomp_seq(
          C, {fib.l(Fa.at(e)),
              C.comp2h(T.phi_vid.at(ad.src).at(e), C.id_2(Fa.at(e))),
              T.phi_vcomp.at({a, B.id_2(ad.src)}).at(e)});
      if (lhs != C.id_2(Fa.at(e))) {
        rep.add("local/pseudofunctor-pre-unit", {a, e});
        break;
      }
      CellName lhs2 = vcomp_seq(
          C, {fib.r(Fa.at(e)),
              C.comp2h(C.id_2(Fa.at(e)), T.phi_vid.at(ad.tgt).at(e)),
              T.phi_vcomp.at({B.id_2(ad.tgt), a}).at(e)});
      if (lhs2 != C.id_2(Fa.at(e))) {
        rep.add("local/pseudofunctor-post-unit", {a, e});
        break;
      }
    }
  }

  // chi and iota adjoint equivalences.
  for (const auto& pair : enumerate_composable(B, 2, 1)) {
    const auto& g = pair[0];
    const auto& f = pair[1];
    auto it = T.chi.find({g, f});
    if (it == T.chi.end()) {
      rep.add("chi/missing", {g, f});
      continue;
    }
    detail::check_adjoint_equivalence(
        it->second, compose_homomorphism(hom_of(T, f), hom_of(T, g)),
        hom_of(T, B.comp1(g, f)), "chi[" + g + "," + f + "]", rep);
  }
  for (const auto& a : B.objects) {
    auto it = T.iota.find(a);
    if (it == T.iota.end()) {
      rep.add("iota/missing", {a});
      continue;
    }
    detail::check_adjoint_equivalence(it->second, identity_homomorphism(T.fibre(a)),
                                      hom_of(T, B.id_1(a)), "iota[" + a + "]", rep);
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }

  // chi naturality modifications.
  for (const auto& [s, u] : horizontal_pairs(B)) {
    auto it = T.chi_nat.find({s, u});
    if (it == T.chi_nat.end()) {
      rep.add("chi-nat/missing", {s, u});
      continue;
    }
    const auto& f = B.two(u).src;
    const auto& g = B.two(u).tgt;
    const auto& j = B.two(s).src;
    const auto& k = B.two(s).tgt;
    Transformation lhs = vcomp_transformation(
        chi_fwd(T, j, f),
        vcomp_transformation(whisker_post(hom_of(T, f), transf_of(T, s)),
                             whisker_pre(transf_of(T, u), hom_of(T, k))));
    Transformation rhs = vcomp_transformation(transf_of(T, B.comp2h(s, u)),
                                              chi_fwd(T, k, g));
    detail::check_invertible_modification(lhs, rhs, it->second,
                                          "chi-nat[" + s + "," + u + "]", rep);
  }
  // iota naturality modifications.
  for (const auto& a : B.objects) {
    auto it = T.iota_nat.find(a);
    if (it == T.iota_nat.end()) {
      rep.add("iota-nat/missing", {a});
      continue;
    }
    Transformation lhs =
        vcomp_transformation(transf_of(T, B.id_2(B.id_1(a))), iota_fwd(T, a));
    detail::check_invertible_modification(lhs, iota_fwd(T, a), it->second,
                                          "iota-nat[" + a + "]", rep);
  }

  // omega, gamma, delta.
  for (const auto& triple : enumerate_composable(B, 3, 1)) {
    const auto& h = triple[0];
    const auto& g = triple[1];
    const auto& f = triple[2];
    auto it = T.omega.find({h, g, f});
    if (it == T.omega.end()) {
      rep.add("omega/missing", {h, g, f});
      continue;
    }
    Transformation lhs = vcomp_transformation(
        chi_fwd(T, B.comp1(h, g), f), whisker_post(hom_of(T, f), chi_fwd(T, h, g)));
    Transformation rhs = vcomp_transformation(
        transf_of(T, T.base.a(h, g, f)),
        vcomp_transformation(chi_fwd(T, h, B.comp1(g, f)),
                             whisker_pre(chi_fwd(T, g, f), hom_of(T, h))));
    detail::check_invertible_modification(lhs, rhs, it->second,
                                          "omega[" + h + "," + g + "," + f + "]", rep);
  }
  for (const auto& [f, fd] : B.one_cells) {
    auto git = T.gamma.find(f);
    if (git == T.gamma.end()) {
      rep.add("gamma/missing", {f});
    } else {
      Transformation lhs = vcomp_transformation(
          chi_fwd(T, B.id_1(fd.tgt), f),
          whisker_post(hom_of(T, f), iota_fwd(T, fd.tgt)));
      Transformation rhs = transf_of(T, T.base.l(f));
      detail::check_invertible_modification(lhs, rhs, git->second, "gamma[" + f + "]",
                                            rep);
    }
    auto dit = T.delta.find(f);
    if (dit == T.delta.end()) {
      rep.add("delta/missing", {f});
    } else {
      Transformation lhs = vcomp_transformation(
          chi_fwd(T, f, B.id_1(fd.src)),
          whisker_pre(iota_fwd(T, fd.src), hom_of(T, f)));
      Transformation rhs = transf_of(T, T.base.r(f));
      detail::check_invertible_modification(lhs, rhs, dit->second, "delta[" + f + "]",
                                            rep);
    }
  }

  rep.truncate(witness_limit);
  return rep;
}

// Embed a strict diagram as a trihomomorphism with identity coherence data.
inline Trihomomorphism embed_trihomomorphism(const IndexedTwoDiagram& D) {
  Trihomomorphism T;
  T.base = embed_bicategory(D.base);
  for (const auto& [b, fib] : D.fibres) T.fibres[b] = embed_bicategory(fib);
  const CellTables& B = D.base.t;

  for (const auto& [f, fd] : B.one_cells) {
    HomData h;
    h.m = D.reindex(f);
    const CellTables& src = D.fibre(fd.tgt).t;
    const CellTables& dst = D.fibre(fd.src).t;
    for (const auto& pair : enumerate_composable(src, 2, 1))
      h.phi_comp[{pair[0], pair[1]}] =
          dst.id_2(dst.comp1(h.m.one(pair[0]), h.m.one(pair[1])));
    for (const auto& x : src.objects) h.phi_id[x] = dst.id_2(dst.id_1(h.m.obj(x)));
    T.on_1[f] = h;
  }
  for (const auto& [a, ad] : B.two_cells) {
    TransfData d;
    d.comp1 = D.two_nat(a);
    const auto& fd = B.one(ad.src);
    const CellTables& src = D.fibre(fd.tgt).t;
    const CellTables& dst = D.fibre(fd.src).t;
    for (const auto& [k, kd] : src.one_cells) {
      // Strict naturality: the square is the identity on the common composite.
      d.comp2[k] = dst.id_2(dst.comp1(d.comp1.at(kd.tgt), D.reindex(ad.tgt).one(k)));
    }
    T.on_2[a] = d;
  }

  for (const auto& pair : enumerate_composable(B, 2, 2))
    T.phi_vcomp[{pair[0], pair[1]}] = [&] {
      std::map<CellName, CellName> comp;
      const auto& a = pair[1];
      const auto& fd = B.one(B.two(a).src);
      const CellTables& dst = D.fibre(fd.src).t;
      for (const auto& e : D.fibre(fd.tgt).t.objects)
        comp[e] = dst.id_2(D.two_nat(B.comp2v(pair[0], pair[1])).at(e));
      return comp;
    }();
  for (const auto& [f, fd] : B.one_cells) {
    std::map<CellName, CellName> comp;
    const CellTables& dst = D.fibre(fd.src).t;
    for (const auto& e : D.fibre(fd.tgt).t.objects)
      comp[e] = dst.id_2(dst.id_1(D.reindex(f).obj(e)));
    T.phi_vid[f] = comp;
  }

  auto identity_adjeq = [&](const CellName& src_fib, const CellName& dst_fib,
                            const FunctorData& act) {
    // Identity transformation data on the common underlying action.
    AdjEqData adj;
    const CellTables& dst = D.fibre(dst_fib).t;
    for (const auto& e : D.fibre(src_fib).t.objects) {
      CellName ide = dst.id_1(act.obj(e));
      adj.fwd.comp1[e] = ide;
      adj.bwd.comp1[e] = ide;
      adj.unit[e] = dst.id_2(dst.comp1(ide, ide));
      adj.counit[e] = dst.id_2(dst.comp1(ide, ide));
    }
    for (const auto& [k, kd] : D.fibre(src_fib).t.one_cells) {
      CellName img = act.one(k);
      adj.fwd.comp2[k] = dst.id_2(img);
      adj.bwd.comp2[k] = dst.id_2(img);
    }
    return adj;
  };

  for (const auto& pair : enumerate_composable(B, 2, 1)) {
    const auto& g = pair[0];
    const auto& f = pair[1];
    const auto& gd = B.one(g);
    const auto& fd = B.one(f);
    T.chi[{g, f}] = identity_adjeq(gd.tgt, fd.src, D.reindex(B.comp1(g, f)));
  }
  for (const auto& a : B.objects) {
    FunctorData idact;
    for (const auto& x : D.fibre(a).t.objects) idact.on_obj[x] = x;
    for (const auto& [k, kd] : D.fibre(a).t.one_cells) idact.on_1[k] = k;
    for (const auto& [s, sd] : D.fibre(a).t.two_cells) idact.on_2[s] = s;
    T.iota[a] = identity_adjeq(a, a, idact);
  }

  // All remaining modification families: identity 2-cells on the composite
  // boundary (everything collapses in the strict case).
  for (const auto& [s, u] : horizontal_pairs(B)) {
    std::map<CellName, CellName> comp;
    const auto& f = B.two(u).src;
    const auto& k = B.two(s).tgt;
    const auto& x = B.one(f).src;
    const CellTables& dst = D.fibre(x).t;
    const CellTables& top = D.fibre(B.one(k).tgt).t;
    for (const auto& e : top.objects)
      comp[e] = dst.id_2(D.two_nat(B.comp2h(s, u)).at(e));
    T.chi_nat[{s, u}] = comp;
  }
  for (const auto& a : B.objects) {
    std::map<CellName, CellName> comp;
    const CellTables& fib = D.fibre(a).t;
    for (const auto& e : fib.objects) comp[e] = fib.id_2(fib.id_1(e));
    T.iota_nat[a] = comp;
  }
  for (const auto& triple : enumerate_composable(B, 3, 1)) {
    std::map<CellName, CellName> comp;
    const auto& h = triple[0];
    const auto& f = triple[2];
    const CellTables& dst = D.fibre(B.one(f).src).t;
    const CellTables& top = D.fibre(B.one(h).tgt).t;
    const FunctorData& whole = D.reindex(B.comp1(B.comp1(h, triple[1]), f));
    for (const auto& e : top.objects) comp[e] = dst.id_2(dst.id_1(whole.obj(e)));
    T.omega[{h, triple[1], f}] = comp;
  }
  for (const auto& [f, fd] : B.one_cells) {
    std::map<CellName, CellName> comp;
    const CellTables& dst = D.fibre(fd.src).t;
    for (const auto& e : D.fibre(fd.tgt).t.objects)
      comp[e] = dst.id_2(dst.id_1(D.reindex(f).obj(e)));
    T.gamma[f] = comp;
    T.delta[f] = comp;
  }
  return T;
}

}  // namespace fibcat
