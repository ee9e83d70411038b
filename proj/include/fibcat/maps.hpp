#pragma once

// Maps between finite 2-categories and bicategories: strict 2-functors,
// homomorphisms (with comparison cells phi), pseudo-natural transformations
// and modifications, together with their validators and the composition /
// whiskering algebra used throughout the weak constructions.
//
// Conventions:
//   phi_comp[(g,f)] : Hg.Hf => H(g.f)      phi_id[x] : id_{Hx} => H(id_x)
//   sigma_k         : sigma_b.F(k) => G(k).sigma_a   for k : a -> b

#include "fibcat/core.hpp"
#include "fibcat/paste.hpp"
#include "fibcat/validate.hpp"

namespace fibcat {

struct FunctorData {
  std::map<CellName, CellName> on_obj;
  std::map<CellName, CellName> on_1;
  std::map<CellName, CellName> on_2;

  const CellName& obj(const CellName& x) const {
    auto it = on_obj.find(x);
    if (it == on_obj.end()) throw Error("functor undefined on object " + x);
    return it->second;
  }
  const CellName& one(const CellName& f) const {
    auto it = on_1.find(f);
    if (it == on_1.end()) throw Error("functor undefined on 1-cell " + f);
    return it->second;
  }
  const CellName& two(const CellName& a) const {
    auto it = on_2.find(a);
    if (it == on_2.end()) throw Error("functor undefined on 2-cell " + a);
    return it->second;
  }
};

struct TwoFunctor {
  FinTwoCategory dom, cod;
  FunctorData m;
};

struct Homomorphism {
  FinBicategory dom, cod;
  FunctorData m;
  std::map<std::pair<CellName, CellName>, CellName> phi_comp;
  std::map<CellName, CellName> phi_id;

  const CellName& phi(const CellName& g, const CellName& f) const {
    auto it = phi_comp.find({g, f});
    if (it == phi_comp.end())
      throw Error("phi_comp undefined at (" + g + "," + f + ")");
    return it->second;
  }
  const CellName& phi_at(const CellName& x) const {
    auto it = phi_id.find(x);
    if (it == phi_id.end()) throw Error("phi_id undefined at " + x);
    return it->second;
  }
};

// ---------------------------------------------------------------------------
// Validation.

inline void check_functor_boundaries(const CellTables& dom, const CellTables& cod,
                                     const FunctorData& m, ValidationReport& rep) {
  for (const auto& x : dom.objects) {
    auto it = m.on_obj.find(x);
    if (it == m.on_obj.end())
      rep.add("malformed-map/missing-object", {x});
    else if (!cod.has_object(it->second))
      rep.add("malformed-map/dangling-object", {x, it->second});
  }
  for (const auto& [f, d] : dom.one_cells) {
    auto it = m.on_1.find(f);
    if (it == m.on_1.end()) {
      rep.add("malformed-map/missing-1-cell", {f});
      continue;
    }
    if (!cod.has_one(it->second)) {
      rep.add("malformed-map/dangling-1-cell", {f, it->second});
      continue;
    }
    const auto& fd = cod.one_cells.at(it->second);
    if (fd.src != m.obj(d.src) || fd.tgt != m.obj(d.tgt))
      rep.add("boundary/on_1", {f, it->second});
  }
  for (const auto& [a, d] : dom.two_cells) {
    auto it = m.on_2.find(a);
    if (it == m.on_2.end()) {
      rep.add("malformed-map/missing-2-cell", {a});
      continue;
    }
    if (!cod.has_two(it->second)) {
      rep.add("malformed-map/dangling-2-cell", {a, it->second});
      continue;
    }
    const auto& ad = cod.two_cells.at(it->second);
    if (ad.src != m.one(d.src) || ad.tgt != m.one(d.tgt))
      rep.add("boundary/on_2", {a, it->second});
  }
}

inline ValidationReport validate_two_functor(const TwoFunctor& F,
                                             std::size_t witness_limit = 100) {
  ValidationReport rep;
  const CellTables& D = F.dom.t;
  const CellTables& C = F.cod.t;
  check_functor_boundaries(D, C, F.m, rep);
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }
  for (const auto& x : D.objects)
    if (F.m.one(D.id_1(x)) != C.id_1(F.m.obj(x))) rep.add("preserve/id1", {x});
  for (const auto& [f, d] : D.one_cells)
    if (F.m.two(D.id_2(f)) != C.id_2(F.m.one(f))) rep.add("preserve/id2", {f});
  for (const auto& pair : enumerate_composable(D, 2, 1))
    if (F.m.one(D.comp1(pair[0], pair[1])) !=
        C.comp1(F.m.one(pair[0]), F.m.one(pair[1])))
      rep.add("preserve/hcomp1", {pair[0], pair[1]});
  for (const auto& pair : enumerate_composable(D, 2, 2))
    if (F.m.two(D.comp2v(pair[0], pair[1])) !=
        C.comp2v(F.m.two(pair[0]), F.m.two(pair[1])))
      rep.add("preserve/vcomp2", {pair[0], pair[1]});
  for (const auto& [s, u] : horizontal_pairs(D))
    if (F.m.two(D.comp2h(s, u)) != C.comp2h(F.m.two(s), F.m.two(u)))
      rep.add("preserve/hcomp2", {s, u});
  rep.truncate(witness_limit);
  return rep;
}

inline ValidationReport validate_homomorphism(const Homomorphism& H,
                                              std::size_t witness_limit = 100) {
  ValidationReport rep;
  const CellTables& D = H.dom.t;
  const CellTables& C = H.cod.t;
  check_functor_boundaries(D, C, H.m, rep);

  for (const auto& pair : enumerate_composable(D, 2, 1)) {
    auto it = H.phi_comp.find({pair[0], pair[1]});
    if (it == H.phi_comp.end()) {
      rep.add("malformed-map/missing-phi-comp", {pair[0], pair[1]});
      continue;
    }
    if (!C.has_two(it->second)) {
      rep.add("malformed-map/dangling-2-cell", {it->second});
      continue;
    }
    const auto& d = C.two_cells.at(it->second);
    if (d.src != C.comp1(H.m.one(pair[0]), H.m.one(pair[1])) ||
        d.tgt != H.m.one(D.comp1(pair[0], pair[1])))
      rep.add("boundary/phi-comp", {pair[0], pair[1], it->second});
  }
  for (const auto& x : D.objects) {
    auto it = H.phi_id.find(x);
    if (it == H.phi_id.end()) {
      rep.add("malformed-map/missing-phi-id", {x});
      continue;
    }
    if (!C.has_two(it->second)) {
      rep.add("malformed-map/dangling-2-cell", {it->second});
      continue;
    }
    const auto& d = C.two_cells.at(it->second);
    if (d.src != C.id_1(H.m.obj(x)) || d.tgt != H.m.one(D.id_1(x)))
      rep.add("boundary/phi-id", {x, it->second});
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }

  // Strict preservation of the hom-category structure.
  for (const auto& [f, d] : D.one_cells)
    if (H.m.two(D.id_2(f)) != C.id_2(H.m.one(f))) rep.add("preserve/id2", {f});
  for (const auto& pair : enumerate_composable(D, 2, 2))
    if (H.m.two(D.comp2v(pair[0], pair[1])) !=
        C.comp2v(H.m.two(pair[0]), H.m.two(pair[1])))
      rep.add("preserve/vcomp2", {pair[0], pair[1]});

  // Invertibility of the comparison cells.
  for (const auto& [k, v] : H.phi_comp)
    if (!is_invertible_2cell(C, v)) rep.add("phi/comp-not-invertible", {k.first, k.second, v});
  for (const auto& [x, v] : H.phi_id)
    if (!is_invertible_2cell(C, v)) rep.add("phi/id-not-invertible", {x, v});
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }

  // Naturality of phi in both arguments.
  for (const auto& [s, u] : horizontal_pairs(D)) {
    const auto& sd = D.two(s);
    const auto& ud = D.two(u);
    CellName lhs = C.comp2v(H.phi(sd.tgt, ud.tgt), C.comp2h(H.m.two(s), H.m.two(u)));
    CellName rhs = C.comp2v(H.m.two(D.comp2h(s, u)), H.phi(sd.src, ud.src));
    if (lhs != rhs) rep.add("phi/naturality", {s, u});
  }

  // Hexagon:  H(a) . phi_{h.g,f} . (phi_{h,g} * 1) = phi_{h,g.f} . (1 * phi_{g,f}) . a'.
  for (const auto& triple : enumerate_composable(D, 3, 1)) {
    const auto& h = triple[0];
    const auto& g = triple[1];
    const auto& f = triple[2];
    CellName lhs = vcomp_seq(
        C, {H.m.two(H.dom.a(h, g, f)), H.phi(D.comp1(h, g), f),
            C.comp2h(H.phi(h, g), C.id_2(H.m.one(f)))});
    CellName rhs = vcomp_seq(
        C, {H.phi(h, D.comp1(g, f)), C.comp2h(C.id_2(H.m.one(h)), H.phi(g, f)),
            H.cod.a(H.m.one(h), H.m.one(g), H.m.one(f))});
    if (lhs != rhs) rep.add("phi/hexagon", {h, g, f});
  }

  // Unit coherences.
  for (const auto& [f, d] : D.one_cells) {
    CellName lhs = vcomp_seq(
        C, {H.m.two(H.dom.l(f)), H.phi(D.id_1(d.tgt), f),
            C.comp2h(H.phi_at(d.tgt), C.id_2(H.m.one(f)))});
    if (lhs != H.cod.l(H.m.one(f))) rep.add("phi/left-unit", {f});
    CellName rhs = vcomp_seq(
        C, {H.m.two(H.dom.r(f)), H.phi(f, D.id_1(d.src)),
            C.comp2h(C.id_2(H.m.one(f)), H.phi_at(d.src))});
    if (rhs != H.cod.r(H.m.one(f))) rep.add("phi/right-unit", {f});
  }

  rep.truncate(witness_limit);
  return rep;
}

// ---------------------------------------------------------------------------
// Construction helpers.

inline TwoFunctor identity_two_functor(const FinTwoCategory& c) {
  TwoFunctor F{c, c, {}};
  for (const auto& x : c.t.objects) F.m.on_obj[x] = x;
  for (const auto& [f, d] : c.t.one_cells) F.m.on_1[f] = f;
  for (const auto& [a, d] : c.t.two_cells) F.m.on_2[a] = a;
  return F;
}

inline TwoFunctor compose_two_functor(const TwoFunctor& G, const TwoFunctor& F) {
  TwoFunctor R{F.dom, G.cod, {}};
  for (const auto& [x, y] : F.m.on_obj) R.m.on_obj[x] = G.m.obj(y);
  for (const auto& [f, g] : F.m.on_1) R.m.on_1[f] = G.m.one(g);
  for (const auto& [a, b] : F.m.on_2) R.m.on_2[a] = G.m.two(b);
  return R;
}

inline bool same_action(const FunctorData& a, const FunctorData& b) {
  return a.on_obj == b.on_obj && a.on_1 == b.on_1 && a.on_2 == b.on_2;
}

inline Homomorphism embed_homomorphism(const TwoFunctor& F) {
  Homomorphism H{embed_bicategory(F.dom), embed_bicategory(F.cod), F.m, {}, {}};
  for (const auto& pair : enumerate_composable(F.dom.t, 2, 1))
    H.phi_comp[{pair[0], pair[1]}] =
        F.cod.t.id_2(F.cod.t.comp1(F.m.one(pair[0]), F.m.one(pair[1])));
  for (const auto& x : F.dom.t.objects)
    H.phi_id[x] = F.cod.t.id_2(F.cod.t.id_1(F.m.obj(x)));
  return H;
}

inline Homomorphism identity_homomorphism(const FinBicategory& b) {
  Homomorphism H{b, b, {}, {}, {}};
  for (const auto& x : b.t.objects) H.m.on_obj[x] = x;
  for (const auto& [f, d] : b.t.one_cells) H.m.on_1[f] = f;
  for (const auto& [a, d] : b.t.two_cells) H.m.on_2[a] = a;
  for (const auto& pair : enumerate_composable(b.t, 2, 1))
    H.phi_comp[{pair[0], pair[1]}] = b.t.id_2(b.t.comp1(pair[0], pair[1]));
  for (const auto& x : b.t.objects) H.phi_id[x] = b.t.id_2(b.t.id_1(x));
  return H;
}

// G after F, with the pasted comparison cells.
inline Homomorphism compose_homomorphism(const Homomorphism& G, const Homomorphism& F) {
  Homomorphism R{F.dom, G.cod, {}, {}, {}};
  for (const auto& [x, y] : F.m.on_obj) R.m.on_obj[x] = G.m.obj(y);
  for (const auto& [f, g] : F.m.on_1) R.m.on_1[f] = G.m.one(g);
  for (const auto& [a, b] : F.m.on_2) R.m.on_2[a] = G.m.two(b);
  const CellTables& C = G.cod.t;
  for (const auto& pair : enumerate_composable(F.dom.t, 2, 1)) {
    const auto& g = pair[0];
    const auto& f = pair[1];
    R.phi_comp[{g, f}] = C.comp2v(G.m.two(F.phi(g, f)), G.phi(F.m.one(g), F.m.one(f)));
  }
  for (const auto& x : F.dom.t.objects)
    R.phi_id[x] = C.comp2v(G.m.two(F.phi_at(x)), G.phi_at(F.m.obj(x)));
  return R;
}

// ---------------------------------------------------------------------------
// Transformations and modifications.

struct Transformation {
  Homomorphism source, target;          // F, G : A -> B
  std::map<CellName, CellName> comp1;   // a -> sigma_a
  std::map<CellName, CellName> comp2;   // k -> sigma_k
  bool strict = false;

  const CellName& at(const CellName& a) const {
    auto it = comp1.find(a);
    if (it == comp1.end()) throw Error("transformation undefined at object " + a);
    return it->second;
  }
  const CellName& sq(const CellName& k) const {
    auto it = comp2.find(k);
    if (it == comp2.end()) throw Error("transformation undefined at 1-cell " + k);
    return it->second;
  }
};

struct Modification {
  Transformation source, target;       // sigma, tau : F => G
  std::map<CellName, CellName> comp;   // a -> Gamma_a : sigma_a => tau_a

  const CellName& at(const CellName& a) const {
    auto it = comp.find(a);
    if (it == comp.end()) throw Error("modification undefined at object " + a);
    return it->second;
  }
};

// The expected pseudo-naturality square for composites:
//   sigma_{g.f} = (phi^G * 1) . coh . (1 * sigma_f) . coh . (sigma_g * 1) . coh . (1 * inv phi^F)
inline CellName expected_square_composite(const Transformation& s, const CellName& g,
                                          const CellName& f) {
  const Homomorphism& F = s.source;
  const Homomorphism& G = s.target;
  const FinBicategory& B = F.cod;
  const CellTables& C = B.t;
  const auto& fd = F.dom.t.one(f);
  const auto& gd = F.dom.t.one(g);
  CellName a = fd.src, c = gd.tgt;
  CellName Ff = F.m.one(f), Fg = F.m.one(g), Gf = G.m.one(f), Gg = G.m.one(g);
  CellName sa = s.at(a), sb = s.at(fd.tgt), sc = s.at(c);

  std::vector<CellName> steps;
  steps.push_back(C.comp2h(G.phi(g, f), C.id_2(sa)));
  steps.push_back(coherence_cell(B, pnode(pleaf(Gg), pnode(pleaf(Gf), pleaf(sa))),
                                 pnode(pnode(pleaf(Gg), pleaf(Gf)), pleaf(sa))));
  steps.push_back(C.comp2h(C.id_2(Gg), s.sq(f)));
  steps.push_back(coherence_cell(B, pnode(pnode(pleaf(Gg), pleaf(sb)), pleaf(Ff)),
                                 pnode(pleaf(Gg), pnode(pleaf(sb), pleaf(Ff)))));
  steps.push_back(C.comp2h(s.sq(g), C.id_2(Ff)));
  steps.push_back(coherence_cell(B, pnode(pleaf(sc), pnode(pleaf(Fg), pleaf(Ff))),
                                 pnode(pnode(pleaf(sc), pleaf(Fg)), pleaf(Ff))));
  steps.push_back(C.comp2h(C.id_2(sc), inverse_2cell(B, F.phi(g, f))));
  return vcomp_seq(C, steps);
}

inline CellName expected_square_identity(const Transformation& s, const CellName& a) {
  const Homomorphism& F = s.source;
  const Homomorphism& G = s.target;
  const FinBicategory& B = F.cod;
  const CellTables& C = B.t;
  CellName sa = s.at(a);
  std::vector<CellName> steps;
  steps.push_back(C.comp2h(G.phi_at(a), C.id_2(sa)));
  steps.push_back(inverse_2cell(B, B.l(sa)));
  steps.push_back(B.r(sa));
  steps.push_back(C.comp2h(C.id_2(sa), inverse_2cell(B, F.phi_at(a))));
  return vcomp_seq(C, steps);
}

inline ValidationReport validate_transformation(const Transformation& s,
                                                std::size_t witness_limit = 100) {
  ValidationReport rep;
  const Homomorphism& F = s.source;
  const Homomorphism& G = s.target;
  if (!structurally_equal(F.dom.t, G.dom.t) || !structurally_equal(F.cod.t, G.cod.t)) {
    rep.add("boundary/source-target-mismatch", {});
    return rep;
  }
  const CellTables& A = F.dom.t;
  const FinBicategory& B = F.cod;
  const CellTables& C = B.t;

  for (const auto& x : A.objects) {
    auto it = s.comp1.find(x);
    if (it == s.comp1.end()) {
      rep.add("malformed-map/missing-component", {x});
      continue;
    }
    if (!C.has_one(it->second)) {
      rep.add("malformed-map/dangling-1-cell", {x, it->second});
      continue;
    }
    const auto& d = C.one_cells.at(it->second);
    if (d.src != F.m.obj(x) || d.tgt != G.m.obj(x))
      rep.add("boundary/component", {x, it->second});
  }
  for (const auto& [k, kd] : A.one_cells) {
    auto it = s.comp2.find(k);
    if (it == s.comp2.end()) {
      rep.add("malformed-map/missing-square", {k});
      continue;
    }
    if (!C.has_two(it->second)) {
      rep.add("malformed-map/dangling-2-cell", {k, it->second});
      continue;
    }
    const auto& d = C.two_cells.at(it->second);
    if (d.src != C.comp1(s.at(kd.tgt), F.m.one(k)) ||
        d.tgt != C.comp1(G.m.one(k), s.at(kd.src)))
      rep.add("boundary/square", {k, it->second});
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }

  for (const auto& [k, v] : s.comp2)
    if (!is_invertible_2cell(C, v)) rep.add("square-not-invertible", {k, v});
  if (s.strict)
    for (const auto& [k, v] : s.comp2)
      if (v != C.id_2(C.two(v).src)) rep.add("strict-flag/nonidentity-square", {k, v});
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }

  // Respect for 2-cells:  sigma_{k'} . (1_{sigma_b} * F rho) = (G rho * 1_{sigma_a}) . sigma_k.
  for (const auto& [rho, rd] : A.two_cells) {
    const auto& kd = A.one(rd.src);
    CellName lhs = C.comp2v(s.sq(rd.tgt), C.comp2h(C.id_2(s.at(kd.tgt)), F.m.two(rho)));
    CellName rhs = C.comp2v(C.comp2h(G.m.two(rho), C.id_2(s.at(kd.src))), s.sq(rd.src));
    if (lhs != rhs) rep.add("pseudo-naturality/2-cell", {rho});
  }
  for (const auto& pair : enumerate_composable(A, 2, 1))
    if (s.sq(A.comp1(pair[0], pair[1])) !=
        expected_square_composite(s, pair[0], pair[1]))
      rep.add("pseudo-naturality/composite", {pair[0], pair[1]});
  for (const auto& x : A.objects)
    if (s.sq(A.id_1(x)) != expected_square_identity(s, x))
      rep.add("pseudo-naturality/identity", {x});

  rep.truncate(witness_limit);
  return rep;
}

inline ValidationReport validate_modification(const Modification& m,
                                              std::size_t witness_limit = 100) {
  ValidationReport rep;
  const Transformation& s = m.source;
  const Transformation& t = m.target;
  const CellTables& A = s.source.dom.t;
  const CellTables& C = s.source.cod.t;
  for (const auto& x : A.objects) {
    auto it = m.comp.find(x);
    if (it == m.comp.end()) {
      rep.add("malformed-map/missing-component", {x});
      continue;
    }
    if (!C.has_two(it->second)) {
      rep.add("malformed-map/dangling-2-cell", {x, it->second});
      continue;
    }
    const auto& d = C.two_cells.at(it->second);
    if (d.src != s.at(x) || d.tgt != t.at(x)) rep.add("boundary/component", {x, it->second});
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }
  // tau_k . (Gamma_b * 1_{Fk}) = (1_{Gk} * Gamma_a) . sigma_k
  for (const auto& [k, kd] : A.one_cells) {
    CellName lhs = C.comp2v(t.sq(k), C.comp2h(m.at(kd.tgt), C.id_2(s.source.m.one(k))));
    CellName rhs = C.comp2v(C.comp2h(C.id_2(s.target.m.one(k)), m.at(kd.src)), s.sq(k));
    if (lhs != rhs) rep.add("modification-axiom", {k});
  }
  rep.truncate(witness_limit);
  return rep;
}

// ---------------------------------------------------------------------------
// Transformation algebra.

inline Transformation identity_transformation(const Homomorphism& F) {
  Transformation s{F, F, {}, {}, true};
  const CellTables& C = F.cod.t;
  for (const auto& x : F.dom.t.objects) s.comp1[x] = C.id_1(F.m.obj(x));
  for (const auto& [k, kd] : F.dom.t.one_cells) {
    CellName Fk = F.m.one(k);
    s.comp2[k] = C.comp2v(inverse_2cell(F.cod, F.cod.r(Fk)), F.cod.l(Fk));
  }
  s.strict = [&] {
    for (const auto& [k, v] : s.comp2)
      if (v != C.id_2(C.two(v).src)) return false;
    return true;
  }();
  return s;
}

// tau . sigma for sigma : F => G, tau : G => H.
inline Transformation vcomp_transformation(const Transformation& tau,
                                           const Transformation& sigma) {
  const Homomorphism& F = sigma.source;
  const Homomorphism& H = tau.target;
  const FinBicategory& B = F.cod;
  const CellTables& C = B.t;
  Transformation out{F, H, {}, {}, false};
  for (const auto& x : F.dom.t.objects)
    out.comp1[x] = C.comp1(tau.at(x), sigma.at(x));
  for (const auto& [k, kd] : F.dom.t.one_cells) {
    CellName Fk = F.m.one(k);
    CellName Gk = sigma.target.m.one(k);
    CellName Hk = H.m.one(k);
    CellName sa = sigma.at(kd.src), sb = sigma.at(kd.tgt);
    CellName ta = tau.at(kd.src), tb = tau.at(kd.tgt);
    std::vector<CellName> steps;
    steps.push_back(coherence_cell(B, pnode(pleaf(Hk), pnode(pleaf(ta), pleaf(sa))),
                                   pnode(pnode(pleaf(Hk), pleaf(ta)), pleaf(sa))));
    steps.push_back(C.comp2h(tau.sq(k), C.id_2(sa)));
    steps.push_back(coherence_cell(B, pnode(pnode(pleaf(tb), pleaf(Gk)), pleaf(sa)),
                                   pnode(pleaf(tb), pnode(pleaf(Gk), pleaf(sa)))));
    steps.push_back(C.comp2h(C.id_2(tb), sigma.sq(k)));
    steps.push_back(coherence_cell(B, pnode(pleaf(tb), pnode(pleaf(sb), pleaf(Fk))),
                                   pnode(pnode(pleaf(tb), pleaf(sb)), pleaf(Fk))));
    out.comp2[k] = vcomp_seq(C, steps);
  }
  return out;
}

// H . sigma : post-compose a transformation with a homomorphism.
inline Transformation whisker_post(const Homomorphism& H, const Transformation& sigma) {
  Transformation out{compose_homomorphism(H, sigma.source),
                     compose_homomorphism(H, sigma.target),
                     {}, {}, false};
  const CellTables& C = H.cod.t;
  for (const auto& [x, v] : sigma.comp1) out.comp1[x] = H.m.one(v);
  for (const auto& [k, kd] : sigma.source.dom.t.one_cells) {
    CellName Fk = sigma.source.m.one(k);
    CellName Gk = sigma.target.m.one(k);
    CellName sa = sigma.at(kd.src), sb = sigma.at(kd.tgt);
    out.comp2[k] = vcomp_seq(
        C, {inverse_2cell(H.cod, H.phi(Gk, sa)), H.m.two(sigma.sq(k)), H.phi(sb, Fk)});
  }
  return out;
}

// sigma . H : pre-compose a transformation with a homomorphism.
inline Transformation whisker_pre(const Transformation& sigma, const Homomorphism& H) {
  Transformation out{compose_homomorphism(sigma.source, H),
                     compose_homomorphism(sigma.target, H),
                     {}, {}, false};
  for (const auto& x : H.dom.t.objects) out.comp1[x] = sigma.at(H.m.obj(x));
  for (const auto& [k, kd] : H.dom.t.one_cells) out.comp2[k] = sigma.sq(H.m.one(k));
  return out;
}

}  // namespace fibcat
