#pragma once

// The weak Grothendieck construction on trihomomorphisms, fibre bicategories
// of a fibration, and reindexing homomorphisms between fibres.
//
// Second components of constructed cells are evaluated exactly as displayed
// pastes: comparison cells (chi, iota, omega, gamma, delta, local phi and
// the lifts' pseudo-naturality squares) are inserted by formula, with
// canonical coherence isomorphisms bridging bracketings.  Multi-factor
// composites in constructed cells are left-nested.

#include "fibcat/diagram.hpp"
#include "fibcat/fib_weak.hpp"
#include "fibcat/groth_strict.hpp"

namespace fibcat {

struct WeakGrothendieckResult {
  FinBicategory total;
  WeakProjection proj;
  Cleavage cleavage;
  std::map<CellName, std::vector<CellName>> obj_parts, one_parts, two_parts;
};

inline WeakGrothendieckResult weak_grothendieck(const Trihomomorphism& T) {
  {
    ValidationReport pre = validate_trihomomorphism(T);
    if (!pre.passed)
      throw Error("weak_grothendieck: invalid trihomomorphism: " +
                  (pre.violations.empty() ? "?" : pre.violations[0].law));
  }
  const CellTables& B = T.base.t;
  WeakGrothendieckResult R;
  CellTables& t = R.total.t;
  FunctorData pmap;

  auto chi1 = [&](const CellName& g, const CellName& f, const CellName& e) {
    return T.chi.at({g, f}).fwd.comp1.at(e);
  };
  auto iota1 = [&](const CellName& x, const CellName& e) {
    return T.iota.at(x).fwd.comp1.at(e);
  };

  for (const auto& x : B.objects)
    for (const auto& xb : T.fibre(x).t.objects) {
      CellName n = detail::tup({x, xb});
      t.objects.insert(n);
      pmap.on_obj[n] = x;
      R.obj_parts[n] = {x, xb};
    }

  for (const auto& [f, fd] : B.one_cells) {
    const CellTables& Fx = T.fibre(fd.src).t;
    const HomData& Ff = T.hom1(f);
    for (const auto& yb : T.fibre(fd.tgt).t.objects)
      for (const auto& [fb, fbd] : Fx.one_cells) {
        if (fbd.tgt != Ff.m.obj(yb)) continue;
        CellName n = detail::tup({f, fb, yb});
        t.one_cells[n] = {detail::tup({fd.src, fbd.src}), detail::tup({fd.tgt, yb})};
        pmap.on_1[n] = f;
        R.one_parts[n] = {f, fb, yb};
      }
  }

  for (const auto& [a, ad] : B.two_cells) {
    const auto& fc = B.one(ad.src);
    const CellTables& Fx = T.fibre(fc.src).t;
    const HomData& Fg = T.hom1(ad.tgt);
    const auto& Fa = T.tr2(a).comp1;
    for (const auto& yb : T.fibre(fc.tgt).t.objects)
      for (const auto& [gb, gbd] : Fx.one_cells) {
        if (gbd.tgt != Fg.m.obj(yb)) continue;
        CellName tgt1 = Fx.comp1(Fa.at(yb), gb);
        for (const auto& [ab, abd] : Fx.two_cells) {
          if (abd.tgt != tgt1) continue;
          CellName n = detail::tup({a, ab, gb, yb});
          t.two_cells[n] = {detail::tup({ad.src, abd.src, yb}),
                            detail::tup({ad.tgt, gb, yb})};
          pmap.on_2[n] = a;
          R.two_parts[n] = {a, ab, gb, yb};
        }
      }
  }

  // Identity 1-cells carry the iota component.
  for (const auto& x : B.objects) {
    const CellTables& Fx = T.fibre(x).t;
    for (const auto& xb : Fx.objects)
      t.id1[detail::tup({x, xb})] = detail::tup({B.id_1(x), iota1(x, xb), xb});
  }

  // Identity 2-cells: (1_f, (inv phi_vid * 1) . inv l).
  for (const auto& [n, parts] : R.one_parts) {
    const auto& f = parts[0];
    const auto& fb = parts[1];
    const auto& yb = parts[2];
    const FinBicategory& Fx = T.fibre(B.one(f).src);
    CellName second = vcomp_seq(
        Fx.t, {Fx.t.comp2h(inverse_2cell(Fx, T.phi_vid.at(f).at(yb)), Fx.t.id_2(fb)),
               inverse_2cell(Fx, Fx.l(fb))});
    t.id2[n] = detail::tup({B.id_2(f), second, fb, yb});
  }

  // Horizontal composition of 1-cells: second = (chi . F f(gb)) . fb.
  for (const auto& [n2, p2] : R.one_parts)
    for (const auto& [n1, p1] : R.one_parts) {
      if (t.one_cells.at(n1).tgt != t.one_cells.at(n2).src) continue;
      const auto& f = p1[0];
      const auto& g = p2[0];
      const CellTables& Fx = T.fibre(B.one(f).src).t;
      CellName second =
          Fx.comp1(Fx.comp1(chi1(g, f, p2[2]), T.hom1(f).m.one(p2[1])), p1[1]);
      t.hcomp1[{n2, n1}] = detail::tup({B.comp1(g, f), second, p2[2]});
    }

  // Vertical composition:
  //   (c,cb).(a,ab) = (c.a, (inv phi_{c,a} * 1) . inv assoc . (1 * cb) . ab).
  for (const auto& [n2, p2] : R.two_parts)
    for (const auto& [n1, p1] : R.two_parts) {
      if (t.two_cells.at(n1).tgt != t.two_cells.at(n2).src) continue;
      const auto& a = p1[0];
      const auto& c = p2[0];
      const auto& yb = p1[3];
      const FinBicategory& Fx = T.fibre(B.one(B.two(a).src).src);
      CellName Fa = T.tr2(a).comp1.at(yb);
      CellName Fc = T.tr2(c).comp1.at(yb);
      CellName second = vcomp_seq(
          Fx.t,
          {Fx.t.comp2h(inverse_2cell(Fx, T.phi_vcomp.at({c, a}).at(yb)), Fx.t.id_2(p2[2])),
           inverse_2cell(Fx, Fx.a(Fa, Fc, p2[2])),
           Fx.t.comp2h(Fx.t.id_2(Fa), p2[1]), p1[1]});
      t.vcomp2[{n2, n1}] = detail::tup({B.comp2v(c, a), second, p2[2], yb});
    }

  // Horizontal composition of 2-cells.
  for (const auto& [n2, p2] : R.two_parts)
    for (const auto& [n1, p1] : R.two_parts) {
      const CellName& src2 = t.two_cells.at(n2).src;
      const CellName& src1 = t.two_cells.at(n1).src;
      if (t.one_cells.at(src1).tgt != t.one_cells.at(src2).src) continue;
      const auto& a = p1[0];   // alpha : f => g
      const auto& b2 = p2[0];  // beta : j => k
      const auto& ab = p1[1];
      const auto& bb = p2[1];
      const auto& gb = p1[2];
      const auto& kb = p2[2];
      const auto& yb = p1[3];
      const auto& zb = p2[3];
      const CellName f = B.two(a).src;
      const CellName g = B.two(a).tgt;
      const CellName j = B.two(b2).src;
      const CellName k = B.two(b2).tgt;
      const FinBicategory& Fx = T.fibre(B.one(f).src);
      const CellTables& FxT = Fx.t;
      const HomData& Ff = T.hom1(f);
      const HomData& Fg = T.hom1(g);

      CellName fb = FxT.two(ab).src;
      CellName jb = T.fibre(B.one(j).src).t.two(bb).src;
      CellName Fa_y = T.tr2(a).comp1.at(yb);
      CellName Fb_z = T.tr2(b2).comp1.at(zb);
      CellName Fa_kz = T.tr2(a).comp1.at(T.hom1(k).m.obj(zb));
      CellName chi_jf = chi1(j, f, zb);
      CellName chi_kg = chi1(k, g, zb);
      CellName Ffjb = Ff.m.one(jb);
      CellName Ffkb = Ff.m.one(kb);
      CellName FfFbz = Ff.m.one(Fb_z);
      CellName Fgkb = Fg.m.one(kb);
      CellName Fba_z = T.tr2(B.comp2h(b2, a)).comp1.at(zb);

      std::vector<CellName> steps;
      // (1) whisker ab under the source prefix.
      steps.push_back(FxT.comp2h(FxT.id_2(FxT.comp1(chi_jf, Ffjb)), ab));
      // (2) F f applied to bb, with the comparison cell of F f.
      CellName Ffbb = FxT.comp2v(
          inverse_2cell(Fx, T.hom1(f).phi_comp.at({Fb_z, kb})), Ff.m.two(bb));
      steps.push_back(FxT.comp2h(
          FxT.comp2h(FxT.id_2(chi_jf), Ffbb),
          FxT.id_2(FxT.comp1(Fa_y, gb))));
      // (3) rebracket to pair Ff(kb) with Fa_y.
      steps.push_back(coherence_cell(
          Fx,
          pnode(pnode(pleaf(chi_jf), pnode(pleaf(FfFbz), pleaf(Ffkb))),
                pnode(pleaf(Fa_y), pleaf(gb))),
          pnode(pnode(pleaf(chi_jf), pleaf(FfFbz)),
                pnode(pnode(pleaf(Ffkb), pleaf(Fa_y)), pleaf(gb)))));
      // (4) pseudo-naturality of F alpha at kb, inverted.
      steps.push_back(FxT.comp2h(
          FxT.id_2(FxT.comp1(chi_jf, FfFbz)),
          FxT.comp2h(inverse_2cell(Fx, T.tr2(a).comp2.at(kb)), FxT.id_2(gb))));
      // (5) rebracket to the chi_nat source shape.
      steps.push_back(coherence_cell(
          Fx,
          pnode(pnode(pleaf(chi_jf), pleaf(FfFbz)),
                pnode(pnode(pleaf(Fa_kz), pleaf(Fgkb)), pleaf(gb))),
          pnode(pnode(pleaf(chi_jf), pnode(pleaf(FfFbz), pleaf(Fa_kz))),
                pnode(pleaf(Fgkb), pleaf(gb)))));
      // (6) chi naturality modification.
      steps.push_back(FxT.comp2h(T.chi_nat.at({b2, a}).at(zb),
                                 FxT.id_2(FxT.comp1(Fgkb, gb))));
      // (7) final rebracket to  F(beta*alpha)_z . ((chi_kg . Fg(kb)) . gb).
      steps.push_back(coherence_cell(
          Fx,
          pnode(pnode(pleaf(Fba_z), pleaf(chi_kg)), pnode(pleaf(Fgkb), pleaf(gb))),
          pnode(pleaf(Fba_z),
                pnode(pnode(pleaf(chi_kg), pleaf(Fgkb)), pleaf(gb)))));
      std::reverse(steps.begin(), steps.end());
      CellName second = vcomp_seq(FxT, steps);

      CellName tgt2nd = FxT.comp1(FxT.comp1(chi_kg, Fgkb), gb);
      (void)fb;
      t.hcomp2[{n2, n1}] = detail::tup({B.comp2h(b2, a), second, tgt2nd, zb});
      if (!t.two_cells.count(t.hcomp2[{n2, n1}]))
        throw Error("weak_grothendieck: missing horizontal composite cell");
    }

  // Associators.
  for (const auto& [nh, ph] : R.one_parts)
    for (const auto& [ng, pg] : R.one_parts) {
      if (t.one_cells.at(ng).tgt != t.one_cells.at(nh).src) continue;
      for (const auto& [nf, pf] : R.one_parts) {
        if (t.one_cells.at(nf).tgt != t.one_cells.at(ng).src) continue;
        const auto& h = ph[0];
        const auto& g = pg[0];
        const auto& f = pf[0];
        const auto& hb = ph[1];
        const auto& gb = pg[1];
        const auto& fb = pf[1];
        const auto& zb = ph[2];
        const auto& yb = pg[2];
        const FinBicategory& Fw = T.fibre(B.one(f).src);
        const CellTables& FwT = Fw.t;
        const CellTables& FxT = T.fibre(B.one(f).tgt).t;
        const HomData& Ff = T.hom1(f);
        const HomData& Fg = T.hom1(g);
        const HomData& Fh = T.hom1(h);
        (void)Fh;

        CellName hg = B.comp1(h, g);
        CellName gf = B.comp1(g, f);
        CellName a_base = T.base.a(h, g, f);
        CellName Fa_z = T.tr2(a_base).comp1.at(zb);

        CellName chi_hg = chi1(h, g, zb);          // in F x
        CellName q = FxT.comp1(chi_hg, Fg.m.one(hb));  // in F x
        CellName chi_hg_f = chi1(hg, f, zb);       // in F w
        CellName chi_gf_y = chi1(g, f, yb);        // in F w
        CellName chi_gf_hz = chi1(g, f, T.hom1(h).m.obj(zb));
        CellName chi_hgf = chi1(h, gf, zb);
        CellName Ffq = Ff.m.one(q);
        CellName Ff_chi_hg = Ff.m.one(chi_hg);
        CellName Ff_Fg_hb = Ff.m.one(Fg.m.one(hb));
        CellName Ffgb = Ff.m.one(gb);
        CellName Fgf_hb = T.hom1(gf).m.one(hb);

        std::vector<CellName> steps;
        // Expand F f of the middle composite with the comparison cells of F f.
        steps.push_back(FwT.comp2h(
            FwT.comp2h(FwT.id_2(chi_hg_f),
                       inverse_2cell(Fw, T.hom1(f).phi_comp.at({q, gb}))),
            FwT.id_2(fb)));
        steps.push_back(FwT.comp2h(
            FwT.comp2h(FwT.id_2(chi_hg_f),
                       FwT.comp2h(inverse_2cell(
                                      Fw, T.hom1(f).phi_comp.at({chi_hg, Fg.m.one(hb)})),
                                  FwT.id_2(Ffgb))),
            FwT.id_2(fb)));
        // Rebracket so the omega source is a single factor.
        steps.push_back(coherence_cell(
            Fw,
            pnode(pnode(pleaf(chi_hg_f),
                        pnode(pnode(pleaf(Ff_chi_hg), pleaf(Ff_Fg_hb)), pleaf(Ffgb))),
                  pleaf(fb)),
            pnode(pnode(pnode(pleaf(chi_hg_f), pleaf(Ff_chi_hg)),
                        pnode(pleaf(Ff_Fg_hb), pleaf(Ffgb))),
                  pleaf(fb))));
        // omega.
        steps.push_back(FwT.comp2h(
            FwT.comp2h(T.omega.at({h, g, f}).at(zb),
                       FwT.id_2(FwT.comp1(Ff_Fg_hb, Ffgb))),
            FwT.id_2(fb)));
        // Rebracket to isolate chi_{gf} against Ff Fg(hb).
        steps.push_back(coherence_cell(
            Fw,
            pnode(pnode(pnode(pleaf(Fa_z), pnode(pleaf(chi_hgf), pleaf(chi_gf_hz))),
                        pnode(pleaf(Ff_Fg_hb), pleaf(Ffgb))),
                  pleaf(fb)),
            pnode(pleaf(Fa_z),
                  pnode(pnode(pleaf(chi_hgf),
                              pnode(pleaf(chi_gf_hz), pleaf(Ff_Fg_hb))),
                        pnode(pleaf(Ffgb), pleaf(fb))))));
        // Pseudo-naturality of chi_{gf} at hb.
        steps.push_back(FwT.comp2h(
            FwT.id_2(Fa_z),
            FwT.comp2h(
                FwT.comp2h(FwT.id_2(chi_hgf), T.chi.at({g, f}).fwd.comp2.at(hb)),
                FwT.id_2(FwT.comp1(Ffgb, fb)))));
        // Final rebracket to  Fa_z . ((chi_{h(gf)} . F(gf)(hb)) . ((chi_{gf} . Ff(gb)) . fb)).
        steps.push_back(coherence_cell(
            Fw,
            pnode(pleaf(Fa_z),
                  pnode(pnode(pleaf(chi_hgf),
                              pnode(pleaf(Fgf_hb), pleaf(chi_gf_y))),
                        pnode(pleaf(Ffgb), pleaf(fb)))),
            pnode(pleaf(Fa_z),
                  pnode(pnode(pleaf(chi_hgf), pleaf(Fgf_hb)),
                        pnode(pnode(pleaf(chi_gf_y), pleaf(Ffgb)), pleaf(fb))))));
        std::reverse(steps.begin(), steps.end());
        CellName second = vcomp_seq(FwT, steps);

        CellName inner = FwT.comp1(FwT.comp1(chi_gf_y, Ffgb), fb);
        CellName tgt2nd = FwT.comp1(FwT.comp1(chi_hgf, Fgf_hb), inner);
        R.total.assoc[{nh, ng, nf}] = detail::tup({a_base, second, tgt2nd, zb});
        if (!t.two_cells.count(R.total.assoc.at({nh, ng, nf})))
          throw Error("weak_grothendieck: missing associator cell");
      }
    }

  // Unitors.
  for (const auto& [n, parts] : R.one_parts) {
    const auto& f = parts[0];
    const auto& fb = parts[1];
    const auto& yb = parts[2];
    const auto& fd = B.one(f);
    const FinBicategory& Fx = T.fibre(fd.src);
    const CellTables& FxT = Fx.t;

    // Left unitor: gamma whiskered by fb.
    {
      CellName second = FxT.comp2h(T.gamma.at(f).at(yb), FxT.id_2(fb));
      R.total.lunit[n] = detail::tup({T.base.l(f), second, fb, yb});
    }
    // Right unitor: iota naturality then delta.
    {
      CellName chi_f1 = chi1(f, B.id_1(fd.src), yb);
      CellName F1fb = T.hom1(B.id_1(fd.src)).m.one(fb);
      CellName iota_x = iota1(fd.src, FxT.one(fb).src);
      CellName iota_Ffy = iota1(fd.src, T.hom1(f).m.obj(yb));
      std::vector<CellName> steps;
      steps.push_back(coherence_cell(
          Fx, pnode(pnode(pleaf(chi_f1), pleaf(F1fb)), pleaf(iota_x)),
          pnode(pleaf(chi_f1), pnode(pleaf(F1fb), pleaf(iota_x)))));
      steps.push_back(FxT.comp2h(
          FxT.id_2(chi_f1),
          inverse_2cell(Fx, T.iota.at(fd.src).fwd.comp2.at(fb))));
      steps.push_back(coherence_cell(
          Fx, pnode(pleaf(chi_f1), pnode(pleaf(iota_Ffy), pleaf(fb))),
          pnode(pnode(pleaf(chi_f1), pleaf(iota_Ffy)), pleaf(fb))));
      steps.push_back(FxT.comp2h(T.delta.at(f).at(yb), FxT.id_2(fb)));
      std::reverse(steps.begin(), steps.end());
      CellName second = vcomp_seq(FxT, steps);
      R.total.runit[n] = detail::tup({T.base.r(f), second, fb, yb});
    }
    if (!t.two_cells.count(R.total.lunit.at(n)) || !t.two_cells.count(R.total.runit.at(n)))
      throw Error("weak_grothendieck: missing unitor cell");
  }

  // Declared inverses for all coherence cells.
  for (const auto& [k, v] : R.total.assoc)
    if (!R.total.inv2.count(v)) {
      auto inv = find_inverse_2cell(t, v);
      if (!inv) throw Error("weak_grothendieck: associator not invertible: " + v);
      R.total.inv2[v] = *inv;
    }
  for (const auto& m : {&R.total.lunit, &R.total.runit})
    for (const auto& [k, v] : *m)
      if (!R.total.inv2.count(v)) {
        auto inv = find_inverse_2cell(t, v);
        if (!inv) throw Error("weak_grothendieck: unitor not invertible: " + v);
        R.total.inv2[v] = *inv;
      }

  R.proj = WeakProjection{Homomorphism{R.total, T.base, pmap, {}, {}}};
  for (const auto& pair : enumerate_composable(t, 2, 1))
    R.proj.P.phi_comp[{pair[0], pair[1]}] =
        B.id_2(B.comp1(pmap.one(pair[0]), pmap.one(pair[1])));
  for (const auto& x : t.objects) R.proj.P.phi_id[x] = B.id_2(B.id_1(pmap.obj(x)));

  // Chosen cartesian lifts: identity second components.
  for (const auto& [f, fd] : B.one_cells) {
    const HomData& Ff = T.hom1(f);
    const CellTables& Fx = T.fibre(fd.src).t;
    for (const auto& yb : T.fibre(fd.tgt).t.objects)
      R.cleavage.lift1[{f, detail::tup({fd.tgt, yb})}] =
          detail::tup({f, Fx.id_1(Ff.m.obj(yb)), yb});
  }
  for (const auto& [a, ad] : B.two_cells) {
    const auto& fc = B.one(ad.src);
    const CellTables& Fx = T.fibre(fc.src).t;
    const auto& Fa = T.tr2(a).comp1;
    for (const auto& [n, parts] : R.one_parts) {
      if (parts[0] != ad.tgt) continue;
      R.cleavage.lift2[{a, n}] = detail::tup(
          {a, Fx.id_2(Fx.comp1(Fa.at(parts[2]), parts[1])), parts[1], parts[2]});
    }
  }

  // The deferred check of the two global trihomomorphism axioms.
  ValidationReport post = validate_bicategory(R.total);
  if (!post.passed)
    throw Error("weak_grothendieck: trihomomorphism global axiom violation: " +
                post.violations[0].law + "(" + detail::join(post.violations[0].cells) +
                ")");
  return R;
}

// ---------------------------------------------------------------------------
// Fibres of a fibration.

// The fibre bicategory over b.  Requires a strictly preserving projection
// (strictify first otherwise) and a cleavage covering the local lifts.
inline FinBicategory fibre_bicategory(const WeakProjection& pr, const Cleavage& C,
                                      const CellName& b) {
  if (!strictly_preserving(pr))
    throw Error("fibre_bicategory: projection must preserve composition strictly");
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const FinBicategory& Etot = pr.total();
  const CellName ib = B.id_1(b);
  const CellName iib = B.id_2(ib);
  const CellName runit_inv = inverse_2cell(pr.base(), pr.base().r(ib));

  FinBicategory out;
  CellTables& t = out.t;
  for (const auto& e : E.objects)
    if (pr.obj(e) == b) t.objects.insert(e);
  for (const auto& [f, d] : E.one_cells)
    if (pr.one(f) == ib) t.one_cells[f] = d;
  for (const auto& [a, d] : E.two_cells)
    if (pr.two(a) == iib) t.two_cells[a] = d;
  t.vcomp2 = [&] {
    std::map<std::pair<CellName, CellName>, CellName> v;
    for (const auto& [c, cd] : t.two_cells)
      for (const auto& [a, ad] : t.two_cells)
        if (ad.tgt == cd.src) v[{c, a}] = E.comp2v(c, a);
    return v;
  }();
  for (const auto& [f, d] : t.one_cells) t.id2[f] = E.id_2(f);

  // Identity 1-cells: domain of the lift of phi_e = 1 at 1_e.
  for (const auto& e : t.objects) t.id1[e] = E.two(C.l2(iib, E.id_1(e))).src;

  // Composition: domain of the lift of r^{-1} at g.f.
  std::map<std::pair<CellName, CellName>, CellName> phi;  // fibre pair -> lift 2-cell
  for (const auto& [g, gd] : t.one_cells)
    for (const auto& [f, fd] : t.one_cells) {
      if (fd.tgt != gd.src) continue;
      CellName lift = C.l2(runit_inv, E.comp1(g, f));
      phi[{g, f}] = lift;
      t.hcomp1[{g, f}] = E.two(lift).src;
    }

  // Horizontal composition of 2-cells: unique transport through the lifts.
  for (const auto& [b2, bd] : t.two_cells)
    for (const auto& [a2, ad] : t.two_cells) {
      if (!E.composable2h(b2, a2)) continue;
      CellName p = phi.at({bd.src, ad.src});
      CellName p2 = phi.at({bd.tgt, ad.tgt});
      CellName rhs = E.comp2v(E.comp2h(b2, a2), p);
      std::vector<CellName> found;
      for (const auto& cand : E.two_cells_between(E.two(p).src, E.two(p2).src))
        if (pr.two(cand) == iib && E.comp2v(p2, cand) == rhs) found.push_back(cand);
      if (found.size() != 1)
        throw Error("fibre_bicategory: expected unique composite at (" + b2 + "," + a2 +
                    "), found " + std::to_string(found.size()));
      t.hcomp2[{b2, a2}] = found[0];
    }

  // Coherence cells by direct pasting of the lift cells.
  std::map<CellName, CellName> rho;  // fibre object -> lift of 1 at 1_e
  for (const auto& e : t.objects) rho[e] = C.l2(iib, E.id_1(e));
  for (const auto& triple : enumerate_composable(t, 3, 1)) {
    const auto& h = triple[0];
    const auto& g = triple[1];
    const auto& f = triple[2];
    CellName hg = t.comp1(h, g);
    CellName gf = t.comp1(g, f);
    CellName p1 = vcomp_seq(E, {Etot.a(h, g, f), E.comp2h(phi.at({h, g}), E.id_2(f)),
                                phi.at({hg, f})});
    CellName p2 = vcomp_seq(E, {E.comp2h(E.id_2(h), phi.at({g, f})), phi.at({h, gf})});
    out.assoc[{h, g, f}] = E.comp2v(inverse_2cell(Etot, p2), p1);
  }
  for (const auto& [f, fd] : t.one_cells) {
    CellName e1 = t.id_1(fd.tgt);
    out.lunit[f] =
        vcomp_seq(E, {Etot.l(f), E.comp2h(rho.at(fd.tgt), E.id_2(f)), phi.at({e1, f})});
    CellName e0 = t.id_1(fd.src);
    out.runit[f] =
        vcomp_seq(E, {Etot.r(f), E.comp2h(E.id_2(f), rho.at(fd.src)), phi.at({f, e0})});
  }
  for (const auto& [k, v] : out.assoc)
    if (!out.inv2.count(v)) out.inv2[v] = inverse_2cell(Etot, v);
  for (const auto& m : {&out.lunit, &out.runit})
    for (const auto& [k, v] : *m)
      if (!out.inv2.count(v)) out.inv2[v] = inverse_2cell(Etot, v);

  ValidationReport rep = validate_bicategory(out);
  if (!rep.passed)
    throw Error("fibre_bicategory: output invalid: " + rep.violations[0].law);
  return out;
}

// ---------------------------------------------------------------------------
// Reindexing.

struct ReindexResult {
  Homomorphism hom;  // f* : fibre(b') -> fibre(b)
  // Comparison isomorphisms  <f|e'> . f*(h) => h . <f|e>  per fibre 1-cell h.
  std::map<CellName, CellName> comparison;
};

inline ReindexResult reindex(const WeakProjection& pr, const Cleavage& C,
                             const CellName& f) {
  if (!strictly_preserving(pr))
    throw Error("reindex: projection must preserve composition strictly");
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const auto& fd = B.one(f);
  const CellName b = fd.src;
  FinBicategory fib_src = fibre_bicategory(pr, C, fd.tgt);
  FinBicategory fib_dst = fibre_bicategory(pr, C, b);
  const CellName vert = B.id_1(b);
  const CellName vert2 = B.id_2(vert);
  // Base comparison  f . 1 => 1 . f  used by every transported 1-cell.
  const CellName base_cmp =
      B.comp2v(inverse_2cell(pr.base(), pr.base().l(f)), pr.base().r(f));

  ReindexResult R;
  Homomorphism& H = R.hom;
  H.dom = fib_src;
  H.cod = fib_dst;

  for (const auto& e : fib_src.t.objects) H.m.on_obj[e] = E.one(C.l1(f, e)).src;

  for (const auto& [h, hd] : fib_src.t.one_cells) {
    const CellName le = C.l1(f, hd.src);
    const CellName le2 = C.l1(f, hd.tgt);
    const CellName rhs = E.comp1(h, le);
    bool done = false;
    for (const auto& hat : E.one_cells_between(E.one(le).src, E.one(le2).src)) {
      if (pr.one(hat) != vert || done) continue;
      for (const auto& cmp : E.two_cells_between(E.comp1(le2, hat), rhs)) {
        if (!is_invertible_2cell(E, cmp)) continue;
        if (pr.two(cmp) != base_cmp) continue;
        H.m.on_1[h] = hat;
        R.comparison[h] = cmp;
        done = true;
        break;
      }
    }
    if (!done) throw Error("reindex: no transported 1-cell for " + h);
  }

  for (const auto& [al, ad] : fib_src.t.two_cells) {
    const CellName le = C.l1(f, E.one(ad.src).src);
    const CellName le2 = C.l1(f, E.one(ad.src).tgt);
    // hat_al : f*h => f*k over the vertical identity with
    //   cmp_k . (1_{le2} * hat_al) = (al * 1_{le}) . cmp_h.
    const CellName want = E.comp2v(E.comp2h(al, E.id_2(le)), R.comparison.at(ad.src));
    std::vector<CellName> found;
    for (const auto& cand : E.two_cells_between(H.m.one(ad.src), H.m.one(ad.tgt)))
      if (pr.two(cand) == vert2 &&
          E.comp2v(R.comparison.at(ad.tgt), E.comp2h(E.id_2(le2), cand)) == want)
        found.push_back(cand);
    if (found.size() != 1)
      throw Error("reindex: expected unique transported 2-cell for " + al + ", found " +
                  std::to_string(found.size()));
    H.m.on_2[al] = found[0];
  }

  // Comparison cells of f*: unique fillers against the transported data.
  for (const auto& pair : enumerate_composable(fib_src.t, 2, 1)) {
    const auto& k = pair[0];
    const auto& h = pair[1];
    const CellName e0 = fib_src.t.one(h).src;
    const CellName e1 = fib_src.t.one(h).tgt;
    const CellName e2 = fib_src.t.one(k).tgt;
    const CellName le0 = C.l1(f, e0);
    const CellName le1 = C.l1(f, e1);
    const CellName le2 = C.l1(f, e2);
    const CellName kh = fib_src.t.comp1(k, h);  // fibre composite upstairs
    const CellName fk = H.m.one(k);
    const CellName fh = H.m.one(h);
    const CellName fkh = fib_dst.t.comp1(fk, fh);  // fibre composite downstairs

    // gamma : le2 . (f*k *f f*h) => (k *f h) . le0  pasted from the pieces.
    const CellName phi_dn =
        C.l2(inverse_2cell(pr.base(), pr.base().r(vert)), E.comp1(fk, fh));
    const CellName phi_up = C.l2(inverse_2cell(pr.base(), pr.base().r(B.id_1(fd.tgt))),
                                 E.comp1(k, h));
    std::vector<CellName> steps;
    steps.push_back(E.comp2h(E.id_2(le2), phi_dn));
    steps.push_back(coherence_cell(pr.total(),
                                   pnode(pleaf(le2), pnode(pleaf(fk), pleaf(fh))),
                                   pnode(pnode(pleaf(le2), pleaf(fk)), pleaf(fh))));
    steps.push_back(E.comp2h(R.comparison.at(k), E.id_2(fh)));
    steps.push_back(coherence_cell(pr.total(),
                                   pnode(pnode(pleaf(k), pleaf(le1)), pleaf(fh)),
                                   pnode(pleaf(k), pnode(pleaf(le1), pleaf(fh)))));
    steps.push_back(E.comp2h(E.id_2(k), R.comparison.at(h)));
    steps.push_back(coherence_cell(pr.total(),
                                   pnode(pleaf(k), pnode(pleaf(h), pleaf(le0))),
                                   pnode(pnode(pleaf(k), pleaf(h)), pleaf(le0))));
    steps.push_back(E.comp2h(inverse_2cell(pr.total(), phi_up), E.id_2(le0)));
    std::reverse(steps.begin(), steps.end());
    const CellName gamma = vcomp_seq(E, steps);

    std::vector<CellName> found;
    for (const auto& cand : E.two_cells_between(fkh, H.m.one(kh)))
      if (pr.two(cand) == vert2 &&
          E.comp2v(R.comparison.at(kh), E.comp2h(E.id_2(le2), cand)) == gamma)
        found.push_back(cand);
    if (found.size() != 1)
      throw Error("reindex: expected unique composition comparison at (" + k + "," + h +
                  "), found " + std::to_string(found.size()));
    H.phi_comp[{k, h}] = found[0];
  }
  for (const auto& e : fib_src.t.objects) {
    const CellName le = C.l1(f, e);
    const CellName up1 = fib_src.t.id_1(e);    // 1-hat upstairs
    const CellName dn1 = fib_dst.t.id_1(H.m.obj(e));
    const CellName rho_up = C.l2(B.id_2(B.id_1(fd.tgt)), E.id_1(e));
    const CellName rho_dn = C.l2(vert2, E.id_1(H.m.obj(e)));
    std::vector<CellName> steps;
    steps.push_back(E.comp2h(E.id_2(le), rho_dn));
    steps.push_back(pr.total().r(le));
    steps.push_back(inverse_2cell(pr.total(), pr.total().l(le)));
    steps.push_back(E.comp2h(inverse_2cell(pr.total(), rho_up), E.id_2(le)));
    std::reverse(steps.begin(), steps.end());
    const CellName gamma = vcomp_seq(E, steps);
    std::vector<CellName> found;
    for (const auto& cand : E.two_cells_between(dn1, H.m.one(up1)))
      if (pr.two(cand) == vert2 &&
          E.comp2v(R.comparison.at(up1), E.comp2h(E.id_2(le), cand)) == gamma)
        found.push_back(cand);
    if (found.size() != 1)
      throw Error("reindex: expected unique identity comparison at " + e + ", found " +
                  std::to_string(found.size()));
    H.phi_id[e] = found[0];
  }

  ValidationReport rep = validate_homomorphism(H);
  if (!rep.passed)
    throw Error("reindex: output homomorphism invalid: " + rep.violations[0].law);
  return R;
}

// Componentwise comparison  f* . g*  ~  (g.f)*  built from cartesian-lift
// uniqueness: for each object e the component and its witness; iso squares
// are exhibited by search in the tests.
struct CompositeComparison {
  std::map<CellName, CellName> comp;     // e -> 1-cell f*(g*(e)) -> (gf)*(e)
  std::map<CellName, CellName> witness;  // e -> comparison 2-cell
};

inline CompositeComparison reindex_composite_comparison(const WeakProjection& pr,
                                                        const Cleavage& C,
                                                        const CellName& g,
                                                        const CellName& f) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const CellName gf = B.comp1(g, f);
  const CellName b = B.one(f).src;
  CompositeComparison out;
  for (const auto& e : E.objects) {
    if (pr.obj(e) != B.one(g).tgt) continue;
    const CellName lg = C.l1(g, e);
    const CellName lf = C.l1(f, E.one(lg).src);
    const CellName lgf = C.l1(gf, e);
    const CellName target = E.comp1(lg, lf);
    // hat : f*(g*e) -> (gf)*e over 1_b with an invertible comparison
    // lgf . hat => lg . lf over r . phi^{-1}.
    bool done = false;
    for (const auto& hat : E.one_cells_between(E.one(lf).src, E.one(lgf).src)) {
      if (pr.one(hat) != B.id_1(b) || done) continue;
      CellName basewant =
          B.comp2v(pr.base().r(gf), inverse_2cell(pr.base(), pr.P.phi(lgf, hat)));
      for (const auto& cmp : E.two_cells_between(E.comp1(lgf, hat), target)) {
        if (!is_invertible_2cell(E, cmp)) continue;
        if (pr.two(cmp) != basewant) continue;
        out.comp[e] = hat;
        out.witness[e] = cmp;
        done = true;
        break;
      }
    }
    if (!done)
      throw Error("reindex_composite_comparison: no comparison at " + e);
  }
  return out;
}

}  // namespace fibcat
