#pragma once

// Oplax comma bicategories, the free fibration, equiv-/iso-comma and strict
// pullback restrictions, and composite fibrations with double-lift cleavages.
//
// Comma cells are tuple-named with enough boundary data to be unambiguous:
//   objects  (x|x'|tx)
//   1-cells  (f|f'|tf|tx|ty)
//   2-cells  (al|al'|tf|tg|tx|ty)

#include "fibcat/fib_weak.hpp"
#include "fibcat/groth_strict.hpp"

namespace fibcat {

struct OplaxCommaResult {
  FinBicategory total;
  WeakProjection d0;   // onto the domain of F
  Homomorphism d1;     // onto the domain of G
  // The oplax transformation tau : F d0 -> G d1.
  std::map<CellName, CellName> tau_obj;  // comma object -> 1-cell of D
  std::map<CellName, CellName> tau_one;  // comma 1-cell -> 2-cell of D
  std::map<CellName, std::vector<CellName>> obj_parts, one_parts, two_parts;
};

// The second component of a composite comma 1-cell:
//   tz.F(g.f) => (1*phiF^-1) => coherence => (tau_g*1) => coherence =>
//   (1*tau_f) => coherence => (phiG*1) => G(g'.f').tx
namespace detail {
inline CellName comma_compose_tau(const Homomorphism& F, const Homomorphism& G,
                                  const CellName& f, const CellName& g,
                                  const CellName& fp, const CellName& gp,
                                  const CellName& tf, const CellName& tg,
                                  const CellName& tx, const CellName& ty,
                                  const CellName& tz) {
  const FinBicategory& D = F.cod;
  const CellTables& d = D.t;
  CellName Ff = F.m.one(f), Fg = F.m.one(g);
  CellName Gf = G.m.one(fp), Gg = G.m.one(gp);
  std::vector<CellName> steps;
  steps.push_back(d.comp2h(d.id_2(tz), inverse_2cell(D, F.phi(g, f))));
  steps.push_back(coherence_cell(D, pnode(pleaf(tz), pnode(pleaf(Fg), pleaf(Ff))),
                                 pnode(pnode(pleaf(tz), pleaf(Fg)), pleaf(Ff))));
  steps.push_back(d.comp2h(tg, d.id_2(Ff)));
  steps.push_back(coherence_cell(D, pnode(pnode(pleaf(Gg), pleaf(ty)), pleaf(Ff)),
                                 pnode(pleaf(Gg), pnode(pleaf(ty), pleaf(Ff)))));
  steps.push_back(d.comp2h(d.id_2(Gg), tf));
  steps.push_back(coherence_cell(D, pnode(pleaf(Gg), pnode(pleaf(Gf), pleaf(tx))),
                                 pnode(pnode(pleaf(Gg), pleaf(Gf)), pleaf(tx))));
  steps.push_back(d.comp2h(G.phi(gp, fp), d.id_2(tx)));
  std::reverse(steps.begin(), steps.end());
  return vcomp_seq(d, steps);
}

inline CellName comma_identity_tau(const Homomorphism& F, const Homomorphism& G,
                                   const CellName& x, const CellName& xp,
                                   const CellName& tx) {
  const FinBicategory& D = F.cod;
  const CellTables& d = D.t;
  std::vector<CellName> steps;
  steps.push_back(d.comp2h(d.id_2(tx), inverse_2cell(D, F.phi_at(x))));
  steps.push_back(D.r(tx));
  steps.push_back(inverse_2cell(D, D.l(tx)));
  steps.push_back(d.comp2h(G.phi_at(xp), d.id_2(tx)));
  std::reverse(steps.begin(), steps.end());
  return vcomp_seq(d, steps);
}
}  // namespace detail

inline OplaxCommaResult oplax_comma(const Homomorphism& F, const Homomorphism& G) {
  if (!structurally_equal(F.cod.t, G.cod.t))
    throw Error("oplax_comma: codomain mismatch");
  const CellTables& C = F.dom.t;
  const CellTables& B = G.dom.t;
  const CellTables& D = F.cod.t;

  OplaxCommaResult R;
  CellTables& t = R.total.t;
  FunctorData m0, m1;

  // Objects.
  for (const auto& x : C.objects)
    for (const auto& xp : B.objects)
      for (const auto& tx : D.one_cells_between(F.m.obj(x), G.m.obj(xp))) {
        CellName n = detail::tup({x, xp, tx});
        t.objects.insert(n);
        m0.on_obj[n] = x;
        m1.on_obj[n] = xp;
        R.tau_obj[n] = tx;
        R.obj_parts[n] = {x, xp, tx};
      }

  // 1-cells.
  for (const auto& [nx, px] : R.obj_parts)
    for (const auto& [ny, py] : R.obj_parts) {
      for (const auto& f : C.one_cells_between(px[0], py[0]))
        for (const auto& fp : B.one_cells_between(px[1], py[1])) {
          CellName src1 = D.comp1(py[2], F.m.one(f));
          CellName tgt1 = D.comp1(G.m.one(fp), px[2]);
          for (const auto& tf : D.two_cells_between(src1, tgt1)) {
            CellName n = detail::tup({f, fp, tf, px[2], py[2]});
            t.one_cells[n] = {nx, ny};
            m0.on_1[n] = f;
            m1.on_1[n] = fp;
            R.tau_one[n] = tf;
            R.one_parts[n] = {f, fp, tf, px[2], py[2]};
          }
        }
    }

  // 2-cells: pairs satisfying the pasting membership equation.
  for (const auto& [n1, p1] : R.one_parts)
    for (const auto& [n2, p2] : R.one_parts) {
      if (t.one_cells.at(n1).src != t.one_cells.at(n2).src ||
          t.one_cells.at(n1).tgt != t.one_cells.at(n2).tgt)
        continue;
      const auto& f = p1[0];
      const auto& g = p2[0];
      const auto& fp = p1[1];
      const auto& gp = p2[1];
      const auto& tf = p1[2];
      const auto& tg = p2[2];
      const auto& tx = p1[3];
      const auto& ty = p1[4];
      for (const auto& al : C.two_cells_between(f, g))
        for (const auto& alp : B.two_cells_between(fp, gp)) {
          CellName lhs = D.comp2v(tg, D.comp2h(D.id_2(ty), F.m.two(al)));
          CellName rhs = D.comp2v(D.comp2h(G.m.two(alp), D.id_2(tx)), tf);
          if (lhs != rhs) continue;
          CellName n = detail::tup({al, alp, tf, tg, tx, ty});
          t.two_cells[n] = {n1, n2};
          m0.on_2[n] = al;
          m1.on_2[n] = alp;
          R.two_parts[n] = {al, alp, tf, tg, tx, ty};
        }
    }

  // Identities.
  for (const auto& [nx, px] : R.obj_parts) {
    CellName ti = detail::comma_identity_tau(F, G, px[0], px[1], px[2]);
    t.id1[nx] = detail::tup({C.id_1(px[0]), B.id_1(px[1]), ti, px[2], px[2]});
    if (!t.one_cells.count(t.id1[nx]))
      throw Error("oplax_comma: missing identity 1-cell at " + nx);
  }
  for (const auto& [n, p] : R.one_parts) {
    t.id2[n] = detail::tup({C.id_2(p[0]), B.id_2(p[1]), p[2], p[2], p[3], p[4]});
    if (!t.two_cells.count(t.id2[n]))
      throw Error("oplax_comma: missing identity 2-cell at " + n);
  }

  // Horizontal composition of 1-cells.
  for (const auto& [n2, p2] : R.one_parts)
    for (const auto& [n1, p1] : R.one_parts) {
      if (t.one_cells.at(n1).tgt != t.one_cells.at(n2).src) continue;
      CellName tau = detail::comma_compose_tau(F, G, p1[0], p2[0], p1[1], p2[1], p1[2],
                                               p2[2], p1[3], p1[4], p2[4]);
      CellName n = detail::tup({C.comp1(p2[0], p1[0]), B.comp1(p2[1], p1[1]), tau,
                                p1[3], p2[4]});
      if (!t.one_cells.count(n))
        throw Error("oplax_comma: missing composite 1-cell " + n);
      t.hcomp1[{n2, n1}] = n;
    }

  // Vertical and horizontal composition of 2-cells are componentwise.
  for (const auto& [n2, p2] : R.two_parts)
    for (const auto& [n1, p1] : R.two_parts) {
      if (t.two_cells.at(n1).tgt == t.two_cells.at(n2).src) {
        CellName n = detail::tup({C.comp2v(p2[0], p1[0]), B.comp2v(p2[1], p1[1]), p1[2],
                                  p2[3], p1[4], p1[5]});
        if (!t.two_cells.count(n))
          throw Error("oplax_comma: missing vertical composite " + n);
        t.vcomp2[{n2, n1}] = n;
      }
      const CellName& s1 = t.two_cells.at(n1).src;
      const CellName& s2 = t.two_cells.at(n2).src;
      if (t.one_cells.at(s1).tgt == t.one_cells.at(s2).src) {
        // The composite boundary 1-cells carry the tau parts.
        const CellName c_src = t.hcomp1.at({s2, s1});
        const CellName c_tgt =
            t.hcomp1.at({t.two_cells.at(n2).tgt, t.two_cells.at(n1).tgt});
        CellName n = detail::tup({C.comp2h(p2[0], p1[0]), B.comp2h(p2[1], p1[1]),
                                  R.one_parts.at(c_src)[2], R.one_parts.at(c_tgt)[2],
                                  p1[4], p2[5]});
        if (!t.two_cells.count(n))
          throw Error("oplax_comma: missing horizontal composite " + n);
        t.hcomp2[{n2, n1}] = n;
      }
    }

  // Coherence cells are componentwise coherence cells of C and B.
  for (const auto& triple : enumerate_composable(t, 3, 1)) {
    const auto& ph = R.one_parts.at(triple[0]);
    const auto& pg = R.one_parts.at(triple[1]);
    const auto& pf = R.one_parts.at(triple[2]);
    const CellName src1 = t.comp1(t.comp1(triple[0], triple[1]), triple[2]);
    const CellName tgt1 = t.comp1(triple[0], t.comp1(triple[1], triple[2]));
    CellName n = detail::tup({F.dom.a(ph[0], pg[0], pf[0]), G.dom.a(ph[1], pg[1], pf[1]),
                              R.one_parts.at(src1)[2], R.one_parts.at(tgt1)[2], pf[3],
                              ph[4]});
    if (!t.two_cells.count(n)) throw Error("oplax_comma: missing associator " + n);
    R.total.assoc[{triple[0], triple[1], triple[2]}] = n;
  }
  for (const auto& [n1, p] : R.one_parts) {
    const auto& d1 = t.one_cells.at(n1);
    CellName lsrc = t.comp1(t.id1.at(d1.tgt), n1);
    CellName ln = detail::tup({F.dom.l(p[0]), G.dom.l(p[1]), R.one_parts.at(lsrc)[2],
                               p[2], p[3], p[4]});
    if (!t.two_cells.count(ln)) throw Error("oplax_comma: missing left unitor " + ln);
    R.total.lunit[n1] = ln;
    CellName rsrc = t.comp1(n1, t.id1.at(d1.src));
    CellName rn = detail::tup({F.dom.r(p[0]), G.dom.r(p[1]), R.one_parts.at(rsrc)[2],
                               p[2], p[3], p[4]});
    if (!t.two_cells.count(rn)) throw Error("oplax_comma: missing right unitor " + rn);
    R.total.runit[n1] = rn;
  }
  for (const auto& [k, v] : R.total.assoc)
    if (!R.total.inv2.count(v)) R.total.inv2[v] = *find_inverse_2cell(t, v);
  for (const auto& m : {&R.total.lunit, &R.total.runit})
    for (const auto& [k, v] : *m)
      if (!R.total.inv2.count(v)) R.total.inv2[v] = *find_inverse_2cell(t, v);

  // Projections preserve composition and identities on the nose.
  Homomorphism D0{R.total, F.dom, m0, {}, {}};
  for (const auto& pair : enumerate_composable(t, 2, 1))
    D0.phi_comp[{pair[0], pair[1]}] =
        C.id_2(C.comp1(m0.one(pair[0]), m0.one(pair[1])));
  for (const auto& x : t.objects) D0.phi_id[x] = C.id_2(C.id_1(m0.obj(x)));
  Homomorphism D1{R.total, G.dom, m1, {}, {}};
  for (const auto& pair : enumerate_composable(t, 2, 1))
    D1.phi_comp[{pair[0], pair[1]}] =
        B.id_2(B.comp1(m1.one(pair[0]), m1.one(pair[1])));
  for (const auto& x : t.objects) D1.phi_id[x] = B.id_2(B.id_1(m1.obj(x)));

  R.d0 = WeakProjection{D0};
  R.d1 = D1;
  return R;
}

// The canonical cleavage of d0: lifts have an identity second leg.
inline Cleavage d0_cleavage(const OplaxCommaResult& R, const Homomorphism& F,
                            const Homomorphism& G) {
  const CellTables& t = R.total.t;
  const CellTables& C = F.dom.t;
  const CellTables& D = F.cod.t;
  const FinBicategory& Dtot = F.cod;
  Cleavage out;
  for (const auto& [ny, py] : R.obj_parts)
    for (const auto& [f, fd] : C.one_cells) {
      if (fd.tgt != py[0]) continue;
      // (f, 1_{y'}, sigma): x' = y', tau_x = ty . Ff, with
      // sigma = (phiG_{y'} * 1) . l^{-1}.
      CellName tx = D.comp1(py[2], F.m.one(f));
      std::vector<CellName> steps;
      steps.push_back(D.comp2h(G.phi_at(py[1]), D.id_2(tx)));
      steps.push_back(inverse_2cell(Dtot, Dtot.l(tx)));
      std::reverse(steps.begin(), steps.end());
      CellName sigma = vcomp_seq(D, steps);
      CellName n = detail::tup({f, G.dom.t.id_1(py[1]), sigma, tx, py[2]});
      if (!t.one_cells.count(n)) throw Error("d0_cleavage: missing chosen lift " + n);
      out.lift1[{f, ny}] = n;
    }
  for (const auto& [nk, pk] : R.one_parts)
    for (const auto& [al, ad] : C.two_cells) {
      if (ad.tgt != pk[0]) continue;
      // (al, 1_{g'}) at (g, g', tg): sigma_f = tg . (1_{ty} * F al).
      CellName tf = D.comp2v(pk[2], D.comp2h(D.id_2(pk[4]), F.m.two(al)));
      CellName n = detail::tup({al, G.dom.t.id_2(pk[1]), tf, pk[2], pk[3], pk[4]});
      if (!t.two_cells.count(n)) throw Error("d0_cleavage: missing chosen 2-lift " + n);
      out.lift2[{al, nk}] = n;
    }
  return out;
}

// The three local two-sided equations, checked exactly per 2-cell.
inline ValidationReport check_two_sided_local(const OplaxCommaResult& R,
                                              const Homomorphism& F,
                                              const Homomorphism& G,
                                              std::size_t witness_limit = 100) {
  ValidationReport rep;
  const CellTables& t = R.total.t;
  const CellTables& B = G.dom.t;
  const CellTables& D = F.cod.t;
  Cleavage C0 = d0_cleavage(R, F, G);
  for (const auto& [n, p] : R.two_parts) {
    const auto& al = p[0];
    const auto& alp = p[1];
    const CellName src1 = t.two_cells.at(n).src;
    const CellName tgt1 = t.two_cells.at(n).tgt;

    // (1) the d0-cartesian lift of al at the target has identity second leg.
    CellName cart = C0.l2(al, tgt1);
    const auto& pc = R.two_parts.at(cart);
    if (pc[1] != B.id_2(R.one_parts.at(tgt1)[1])) {
      rep.add("two-sided/d1-of-cartesian-lift", {n, cart});
      continue;
    }
    // (2) the d1-opcartesian lift of al' at the source has identity first leg.
    const auto& ps = R.one_parts.at(src1);
    CellName taumid =
        D.comp2v(D.comp2h(G.m.two(alp), D.id_2(ps[3])), ps[2]);
    CellName op = detail::tup({F.dom.t.id_2(ps[0]), alp, ps[2], taumid, ps[3], ps[4]});
    if (!t.two_cells.count(op)) {
      rep.add("two-sided/opcartesian-lift-missing", {n, op});
      continue;
    }
    // (3) they compose back to (al, al').
    if (t.comp2v(cart, op) != n) rep.add("two-sided/composite", {n, cart, op});
  }
  rep.truncate(witness_limit);
  return rep;
}

inline OplaxCommaResult free_fibration(const Homomorphism& H) {
  return oplax_comma(identity_homomorphism(H.cod), H);
}

// ---------------------------------------------------------------------------
// Comma pullbacks.

enum class CommaVariant { equiv, iso, strict };

struct CommaPullbackResult {
  FinBicategory total;
  WeakProjection P2;  // onto the domain of F
  Homomorphism F2;    // onto the total of P
  OplaxCommaResult comma;  // the ambient oplax comma
};

inline CommaPullbackResult comma_pullback(const WeakProjection& P, const Homomorphism& F,
                                          CommaVariant variant) {
  if (variant != CommaVariant::equiv) {
    if (!strictly_preserving(P) ||
        ![&] {
          for (const auto& [k, v] : F.phi_comp)
            if (v != F.cod.t.id_2(F.cod.t.two(v).src)) return false;
          for (const auto& [x, v] : F.phi_id)
            if (v != F.cod.t.id_2(F.cod.t.two(v).src)) return false;
          return true;
        }())
      throw Error("comma_pullback: iso/strict variants require strict 2-functors");
  }
  OplaxCommaResult R = oplax_comma(F, P.P);
  const CellTables& t = R.total.t;
  const CellTables& D = F.cod.t;

  auto keep_obj = [&](const std::vector<CellName>& p) {
    switch (variant) {
      case CommaVariant::equiv:
        return is_equivalence_1cell(D, p[2]);
      case CommaVariant::iso:
        return is_iso_1cell_strict(D, p[2]);
      case CommaVariant::strict:
        return p[2] == D.id_1(D.one(p[2]).src);
    }
    return false;
  };
  auto keep_one = [&](const std::vector<CellName>& p) {
    switch (variant) {
      case CommaVariant::equiv:
        return is_invertible_2cell(D, p[2]);
      case CommaVariant::iso:
      case CommaVariant::strict:
        return p[2] == D.id_2(D.two(p[2]).src);
    }
    return false;
  };

  CommaPullbackResult out;
  out.comma = R;
  CellTables& s = out.total.t;
  for (const auto& [n, p] : R.obj_parts)
    if (keep_obj(p)) s.objects.insert(n);
  for (const auto& [n, p] : R.one_parts) {
    const auto& d = t.one_cells.at(n);
    if (s.objects.count(d.src) && s.objects.count(d.tgt) && keep_one(p))
      s.one_cells[n] = d;
  }
  for (const auto& [n, d] : t.two_cells)
    if (s.one_cells.count(d.src) && s.one_cells.count(d.tgt)) s.two_cells[n] = d;
  for (const auto& x : s.objects) {
    s.id1[x] = t.id1.at(x);
    if (!s.one_cells.count(s.id1.at(x)))
      throw Error("comma_pullback: identity 1-cell escaped the restriction at " + x);
  }
  for (const auto& [f, d] : s.one_cells) s.id2[f] = t.id2.at(f);
  for (const auto& [k, v] : t.hcomp1)
    if (s.one_cells.count(k.first) && s.one_cells.count(k.second)) {
      if (!s.one_cells.count(v))
        throw Error("comma_pullback: composite escaped the restriction");
      s.hcomp1[k] = v;
    }
  for (const auto& [k, v] : t.vcomp2)
    if (s.two_cells.count(k.first) && s.two_cells.count(k.second)) s.vcomp2[k] = v;
  for (const auto& [k, v] : t.hcomp2)
    if (s.two_cells.count(k.first) && s.two_cells.count(k.second)) s.hcomp2[k] = v;
  for (const auto& [k, v] : R.total.assoc)
    if (s.one_cells.count(std::get<0>(k)) && s.one_cells.count(std::get<1>(k)) &&
        s.one_cells.count(std::get<2>(k)))
      out.total.assoc[k] = v;
  for (const auto& [k, v] : R.total.lunit)
    if (s.one_cells.count(k)) out.total.lunit[k] = v;
  for (const auto& [k, v] : R.total.runit)
    if (s.one_cells.count(k)) out.total.runit[k] = v;
  for (const auto& [k, v] : R.total.inv2)
    if (s.two_cells.count(k) && s.two_cells.count(v)) out.total.inv2[k] = v;

  auto restrict_hom = [&](const Homomorphism& H) {
    Homomorphism out2{out.total, H.cod, {}, {}, {}};
    for (const auto& x : s.objects) out2.m.on_obj[x] = H.m.on_obj.at(x);
    for (const auto& [f, d] : s.one_cells) out2.m.on_1[f] = H.m.on_1.at(f);
    for (const auto& [a, d] : s.two_cells) out2.m.on_2[a] = H.m.on_2.at(a);
    for (const auto& pair : enumerate_composable(s, 2, 1))
      out2.phi_comp[{pair[0], pair[1]}] = H.phi_comp.at({pair[0], pair[1]});
    for (const auto& x : s.objects) out2.phi_id[x] = H.phi_id.at(x);
    return out2;
  };
  out.P2 = WeakProjection{restrict_hom(R.d0.P)};
  out.F2 = restrict_hom(R.d1);
  return out;
}

// ---------------------------------------------------------------------------
// Composite fibrations.

struct CompositeFibration {
  WeakProjection composite;
  Cleavage cleavage;  // double lifts
};

inline CompositeFibration compose_fibrations(const WeakProjection& P,
                                             const WeakProjection& Q,
                                             const Cleavage& CP, const Cleavage& CQ) {
  if (!structurally_equal(Q.base().t, P.total().t))
    throw Error("compose_fibrations: middle categories differ");
  CompositeFibration out;
  out.composite = WeakProjection{compose_homomorphism(P.P, Q.P)};
  const CellTables& E = Q.total().t;
  const CellTables& B = P.base().t;
  for (const auto& e : E.objects)
    for (const auto& [f, fd] : B.one_cells) {
      if (fd.tgt != out.composite.obj(e)) continue;
      CellName mid = CP.l1(f, Q.obj(e));
      out.cleavage.lift1[{f, e}] = CQ.l1(mid, e);
    }
  for (const auto& [k, kd] : E.one_cells)
    for (const auto& [al, ad] : B.two_cells) {
      if (ad.tgt != out.composite.one(k)) continue;
      CellName mid = CP.l2(al, Q.one(k));
      out.cleavage.lift2[{al, k}] = CQ.l2(mid, k);
    }
  return out;
}

inline std::pair<Projection, Cleavage> compose_fibrations_strict(const Projection& P,
                                                                 const Projection& Q,
                                                                 const Cleavage& CP,
                                                                 const Cleavage& CQ) {
  if (!structurally_equal(Q.base(), P.total()))
    throw Error("compose_fibrations_strict: middle categories differ");
  Projection comp{compose_two_functor(P.P, Q.P)};
  Cleavage C;
  const CellTables& E = Q.total().t;
  const CellTables& B = P.base().t;
  for (const auto& e : E.objects)
    for (const auto& [f, fd] : B.one_cells) {
      if (fd.tgt != comp.obj(e)) continue;
      C.lift1[{f, e}] = CQ.l1(CP.l1(f, Q.obj(e)), e);
    }
  for (const auto& [k, kd] : E.one_cells)
    for (const auto& [al, ad] : B.two_cells) {
      if (ad.tgt != comp.one(k)) continue;
      C.lift2[{al, k}] = CQ.l2(CP.l2(al, Q.one(k)), k);
    }
  return {comp, C};
}

}  // namespace fibcat
