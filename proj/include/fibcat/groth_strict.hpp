#pragma once

// The strict Grothendieck construction, its pseudo-inverse, the round-trip
// isomorphism H, and the action on diagram-level transformations,
// modifications and perturbations.
//
// Constructed cells carry tuple-encoded canonical names:
//   objects  (x|xb)
//   1-cells  (f|fb|yb)        with yb the codomain fibre object
//   2-cells  (a|ab|gb|yb)     with gb the target second component
// The extra components pin down cells that share the same written pair
// (reindexing functors need not be injective), and the emitted pair maps
// recover the decomposition.

#include "fibcat/diagram.hpp"
#include "fibcat/fib_strict.hpp"

namespace fibcat {

namespace detail {
inline CellName tup(std::initializer_list<CellName> parts) {
  std::string out = "(";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += "|";
    out += p;
    first = false;
  }
  return out + ")";
}
}  // namespace detail

struct GrothendieckResult {
  FinTwoCategory total;
  Projection proj;
  Cleavage cleavage;
  // Decompositions of the canonical names.
  std::map<CellName, std::vector<CellName>> obj_parts, one_parts, two_parts;
};

inline GrothendieckResult grothendieck_strict(const IndexedTwoDiagram& D) {
  {
    ValidationReport pre = validate_indexed_diagram(D);
    if (!pre.passed)
      throw Error("grothendieck_strict: invalid diagram: " +
                  (pre.violations.empty() ? "?" : pre.violations[0].law));
  }
  const CellTables& B = D.base.t;
  GrothendieckResult R;
  CellTables& t = R.total.t;
  FunctorData pmap;

  // Objects.
  for (const auto& x : B.objects)
    for (const auto& xb : D.fibre(x).t.objects) {
      CellName n = detail::tup({x, xb});
      t.objects.insert(n);
      pmap.on_obj[n] = x;
      R.obj_parts[n] = {x, xb};
    }

  // 1-cells (f, fb) : (x,xb) -> (y,yb) with fb : xb -> F f(yb).
  for (const auto& [f, fd] : B.one_cells) {
    const CellTables& Fx = D.fibre(fd.src).t;
    const FunctorData& Ff = D.reindex(f);
    for (const auto& yb : D.fibre(fd.tgt).t.objects)
      for (const auto& [fb, fbd] : Fx.one_cells) {
        if (fbd.tgt != Ff.obj(yb)) continue;
        CellName n = detail::tup({f, fb, yb});
        t.one_cells[n] = {detail::tup({fd.src, fbd.src}), detail::tup({fd.tgt, yb})};
        pmap.on_1[n] = f;
        R.one_parts[n] = {f, fb, yb};
      }
  }

  // 2-cells (a, ab) : (f, fb) => (g, gb) with ab : fb => F a_yb . gb.
  for (const auto& [a, ad] : B.two_cells) {
    const auto& fc = B.one(ad.src);
    const CellTables& Fx = D.fibre(fc.src).t;
    const FunctorData& Fg = D.reindex(ad.tgt);
    const auto& comp = D.two_nat(a);
    for (const auto& yb : D.fibre(fc.tgt).t.objects)
      for (const auto& [gb, gbd] : Fx.one_cells) {
        if (gbd.tgt != Fg.obj(yb)) continue;
        CellName tgt1 = Fx.comp1(comp.at(yb), gb);
        for (const auto& [ab, abd] : Fx.two_cells) {
          if (abd.tgt != tgt1) continue;
          const auto& fbd = Fx.one(abd.src);
          (void)fbd;
          CellName n = detail::tup({a, ab, gb, yb});
          t.two_cells[n] = {detail::tup({ad.src, abd.src, yb}),
                            detail::tup({ad.tgt, gb, yb})};
          pmap.on_2[n] = a;
          R.two_parts[n] = {a, ab, gb, yb};
        }
      }
  }

  // Identities.
  for (const auto& x : B.objects) {
    const CellTables& Fx = D.fibre(x).t;
    for (const auto& xb : Fx.objects)
      t.id1[detail::tup({x, xb})] = detail::tup({B.id_1(x), Fx.id_1(xb), xb});
  }
  for (const auto& [n, parts] : R.one_parts) {
    const auto& f = parts[0];
    const auto& fb = parts[1];
    const auto& yb = parts[2];
    const CellTables& Fx = D.fibre(B.one(f).src).t;
    t.id2[n] = detail::tup({B.id_2(f), Fx.id_2(fb), fb, yb});
  }

  // Horizontal composition of 1-cells: (g,gb).(f,fb) = (g.f, F f(gb).fb).
  for (const auto& [n2, p2] : R.one_parts)
    for (const auto& [n1, p1] : R.one_parts) {
      if (t.one_cells.at(n1).tgt != t.one_cells.at(n2).src) continue;
      const auto& f = p1[0];
      const auto& g = p2[0];
      const CellTables& Fx = D.fibre(B.one(f).src).t;
      CellName comp2nd = Fx.comp1(D.reindex(f).one(p2[1]), p1[1]);
      t.hcomp1[{n2, n1}] = detail::tup({B.comp1(g, f), comp2nd, p2[2]});
    }

  // Vertical composition: (c,cb).(a,ab) = (c.a, (1_{Fa_yb} * cb) . ab).
  for (const auto& [n2, p2] : R.two_parts)
    for (const auto& [n1, p1] : R.two_parts) {
      if (t.two_cells.at(n1).tgt != t.two_cells.at(n2).src) continue;
      const auto& a = p1[0];
      const auto& c = p2[0];
      const auto& yb = p1[3];
      const CellTables& Fx = D.fibre(B.one(B.two(a).src).src).t;
      CellName whisk = Fx.comp2h(Fx.id_2(D.two_nat(a).at(yb)), p2[1]);
      CellName second = Fx.comp2v(whisk, p1[1]);
      t.vcomp2[{n2, n1}] = detail::tup({B.comp2v(c, a), second, p2[2], yb});
    }

  // Horizontal composition: (b,bb)*(a,ab) = (b*a, F f(bb) * ab).
  for (const auto& [n2, p2] : R.two_parts)
    for (const auto& [n1, p1] : R.two_parts) {
      const CellName& src2 = t.two_cells.at(n2).src;
      const CellName& src1 = t.two_cells.at(n1).src;
      if (t.one_cells.at(src1).tgt != t.one_cells.at(src2).src) continue;
      const auto& a = p1[0];
      const auto& b = p2[0];
      const auto& f = B.two(a).src;
      const auto& g = B.two(a).tgt;
      const CellTables& Fx = D.fibre(B.one(f).src).t;
      CellName second = Fx.comp2h(D.reindex(f).two(p2[1]), p1[1]);
      // Target second component is F g(kb).gb over the codomain object of b.
      CellName tgt2nd = Fx.comp1(D.reindex(g).one(p2[2]), p1[2]);
      CellName base2 = B.comp2h(b, a);
      t.hcomp2[{n2, n1}] = detail::tup({base2, second, tgt2nd, p2[3]});
      if (!t.two_cells.count(t.hcomp2[{n2, n1}]))
        throw Error("grothendieck_strict: internal: missing composite cell");
    }

  R.proj = Projection{TwoFunctor{R.total, D.base, pmap}};

  // Canonical split cleavage: identity second components.
  for (const auto& [f, fd] : B.one_cells) {
    const FunctorData& Ff = D.reindex(f);
    const CellTables& Fx = D.fibre(fd.src).t;
    for (const auto& yb : D.fibre(fd.tgt).t.objects)
      R.cleavage.lift1[{f, detail::tup({fd.tgt, yb})}] =
          detail::tup({f, Fx.id_1(Ff.obj(yb)), yb});
  }
  for (const auto& [a, ad] : B.two_cells) {
    const auto& fc = B.one(ad.src);
    const CellTables& Fx = D.fibre(fc.src).t;
    const auto& comp = D.two_nat(a);
    for (const auto& [n, parts] : R.one_parts) {
      if (parts[0] != ad.tgt) continue;
      const auto& gb = parts[1];
      const auto& yb = parts[2];
      R.cleavage.lift2[{a, n}] =
          detail::tup({a, Fx.id_2(Fx.comp1(comp.at(yb), gb)), gb, yb});
    }
  }
  return R;
}

// ---------------------------------------------------------------------------
// Pseudo-inverse.

// Extract the fibre of P over b as a sub-2-category (cells keep their names).
inline FinTwoCategory fibre_two_category(const Projection& pr, const CellName& b) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  FinTwoCategory out;
  CellTables& t = out.t;
  for (const auto& e : E.objects)
    if (pr.obj(e) == b) t.objects.insert(e);
  for (const auto& [f, d] : E.one_cells)
    if (pr.one(f) == B.id_1(b)) t.one_cells[f] = d;
  for (const auto& [a, d] : E.two_cells)
    if (pr.two(a) == B.id_2(B.id_1(b))) t.two_cells[a] = d;
  for (const auto& e : t.objects) t.id1[e] = E.id_1(e);
  for (const auto& [f, d] : t.one_cells) t.id2[f] = E.id_2(f);
  for (const auto& [g, gd] : t.one_cells)
    for (const auto& [f, fd] : t.one_cells)
      if (fd.tgt == gd.src) t.hcomp1[{g, f}] = E.comp1(g, f);
  for (const auto& [c, cd] : t.two_cells)
    for (const auto& [a, ad] : t.two_cells) {
      if (ad.tgt == cd.src) t.vcomp2[{c, a}] = E.comp2v(c, a);
      if (t.one_cells.count(ad.src) && t.one_cells.count(cd.src) &&
          E.composable2h(c, a))
        t.hcomp2[{c, a}] = E.comp2h(c, a);
    }
  return out;
}

// The unique lift of h . <f|e> through <f|e'>; building block of reindexing.
namespace detail {
inline CellName transport_one(const Projection& pr, const Cleavage& C, const CellName& f,
                              const CellName& h) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const auto& hd = E.one(h);
  const CellName le = C.l1(f, hd.src);
  const CellName le2 = C.l1(f, hd.tgt);
  const CellName rhs = E.comp1(h, le);
  const CellName b = B.one(f).src;
  std::vector<CellName> found;
  for (const auto& cand : E.one_cells_between(E.one(le).src, E.one(le2).src))
    if (pr.one(cand) == B.id_1(b) && E.comp1(le2, cand) == rhs) found.push_back(cand);
  if (found.size() != 1)
    throw Error("reindex: expected unique 1-cell transport of " + h + ", found " +
                std::to_string(found.size()));
  return found[0];
}

inline CellName transport_two(const Projection& pr, const Cleavage& C, const CellName& f,
                              const CellName& al, const CellName& lifted_src,
                              const CellName& lifted_tgt) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const auto& ad = E.two(al);
  const CellName le2 = C.l1(f, E.one(ad.src).tgt);
  const CellName le = C.l1(f, E.one(ad.src).src);
  const CellName rhs = E.comp2h(al, E.id_2(le));
  const CellName b = B.one(f).src;
  std::vector<CellName> found;
  for (const auto& cand : E.two_cells_between(lifted_src, lifted_tgt))
    if (pr.two(cand) == B.id_2(B.id_1(b)) && E.comp2h(E.id_2(le2), cand) == rhs)
      found.push_back(cand);
  if (found.size() != 1)
    throw Error("reindex: expected unique 2-cell transport of " + al + ", found " +
                std::to_string(found.size()));
  return found[0];
}
}  // namespace detail

// The pseudo-inverse demands a split cleavage; a non-split one is refused
// with the failing equation as witness.
inline IndexedTwoDiagram invert_strict(const Projection& pr, const Cleavage& C) {
  CleavageReport cr = check_cleavage(pr, C);
  if (!cr.fully_split()) {
    std::string msg = "invert_strict: cleavage is not split";
    if (!cr.witnesses.empty()) {
      msg += ": " + cr.witnesses[0].law + "(";
      for (std::size_t i = 0; i < cr.witnesses[0].cells.size(); ++i)
        msg += (i ? "," : "") + cr.witnesses[0].cells[i];
      msg += ")";
    }
    throw Error(msg);
  }

  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  IndexedTwoDiagram D;
  D.base = pr.base();
  for (const auto& b : B.objects) D.fibres[b] = fibre_two_category(pr, b);

  for (const auto& [f, fd] : B.one_cells) {
    FunctorData Ff;
    for (const auto& e : D.fibre(fd.tgt).t.objects)
      Ff.on_obj[e] = E.one(C.l1(f, e)).src;
    for (const auto& [h, hd] : D.fibre(fd.tgt).t.one_cells)
      Ff.on_1[h] = detail::transport_one(pr, C, f, h);
    for (const auto& [al, ad] : D.fibre(fd.tgt).t.two_cells)
      Ff.on_2[al] =
          detail::transport_two(pr, C, f, al, Ff.on_1.at(ad.src), Ff.on_1.at(ad.tgt));
    D.on_1[f] = Ff;
  }

  for (const auto& [sg, sd] : B.two_cells) {
    const auto& fb = B.one(sd.src);
    std::map<CellName, CellName> comp;
    for (const auto& e : D.fibre(fb.tgt).t.objects) {
      const CellName lg = C.l1(sd.tgt, e);
      const CellName m = E.two(C.l2(sg, lg)).src;  // domain of <sigma|<g|e>>
      const CellName lf = C.l1(sd.src, e);
      std::vector<CellName> found;
      for (const auto& cand :
           E.one_cells_between(E.one(lg).src, E.one(lf).src))
        if (pr.one(cand) == B.id_1(fb.src) && E.comp1(lf, cand) == m)
          found.push_back(cand);
      if (found.size() != 1)
        throw Error("invert_strict: expected unique factorization for 2-cell " + sg);
      comp[e] = found[0];
    }
    D.on_2[sg] = comp;
  }

  ValidationReport post = validate_indexed_diagram(D);
  if (!post.passed)
    throw Error("invert_strict: output failed diagram validation: " +
                post.violations[0].law);
  return D;
}

// ---------------------------------------------------------------------------
// Round trip.

struct RoundtripResult {
  TwoFunctor H;  // from the rebuilt total category into total(P)
  GrothendieckResult rebuilt;
  ValidationReport report;
};

inline RoundtripResult roundtrip_iso_strict(const Projection& pr, const Cleavage& C) {
  IndexedTwoDiagram D = invert_strict(pr, C);
  GrothendieckResult G = grothendieck_strict(D);
  const CellTables& E = pr.total().t;

  TwoFunctor H{G.total, pr.total(), {}};
  for (const auto& [n, parts] : G.obj_parts) H.m.on_obj[n] = parts[1];
  for (const auto& [n, parts] : G.one_parts)
    H.m.on_1[n] = E.comp1(C.l1(parts[0], parts[2]), parts[1]);
  for (const auto& [n, parts] : G.two_parts) {
    const auto& a = parts[0];
    const auto& ab = parts[1];
    const auto& gb = parts[2];
    const auto& yb = parts[3];
    const auto& ad = pr.base().t.two(a);
    const CellName lg = C.l1(ad.tgt, yb);
    const CellName lf = C.l1(ad.src, yb);
    H.m.on_2[n] =
        E.comp2v(E.comp2h(C.l2(a, lg), E.id_2(gb)), E.comp2h(E.id_2(lf), ab));
  }

  RoundtripResult out{H, G, {}};
  ValidationReport& rep = out.report;

  ValidationReport func = validate_two_functor(H);
  if (!func.passed) {
    rep.add("roundtrip/H-not-a-2-functor", {});
    rep.merge(func);
  }

  // P . H = pi on the nose.
  TwoFunctor PH = compose_two_functor(pr.P, H);
  if (!same_action(PH.m, G.proj.P.m)) rep.add("roundtrip/projection-triangle", {});

  // Bijectivity on all three dimensions.
  auto bijective = [&](const auto& table, const auto& image_size, const char* law) {
    std::set<CellName> image;
    for (const auto& [k, v] : table) image.insert(v);
    if (image.size() != table.size() || image.size() != image_size)
      rep.add(law, {std::to_string(table.size()), std::to_string(image_size)});
  };
  bijective(H.m.on_obj, E.objects.size(), "roundtrip/not-bijective-objects");
  bijective(H.m.on_1, E.one_cells.size(), "roundtrip/not-bijective-1-cells");
  bijective(H.m.on_2, E.two_cells.size(), "roundtrip/not-bijective-2-cells");

  ValidationReport cart = check_cartesian_functor(G.proj, pr, H, &G.cleavage, &C);
  if (!cart.passed) {
    rep.add("roundtrip/H-not-split-cartesian", {});
    rep.merge(cart);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Action on transformations, modifications, perturbations.

inline TwoFunctor grothendieck_map_transformation(const IndexedTwoDiagram& D1,
                                                  const IndexedTwoDiagram& D2,
                                                  const DiagramTransformation& eta) {
  ValidationReport v = validate_diagram_transformation(D1, D2, eta);
  if (!v.passed)
    throw Error("grothendieck_map: invalid transformation: " + v.violations[0].law);
  GrothendieckResult G1 = grothendieck_strict(D1);
  GrothendieckResult G2 = grothendieck_strict(D2);
  TwoFunctor F{G1.total, G2.total, {}};
  for (const auto& [n, parts] : G1.obj_parts)
    F.m.on_obj[n] = detail::tup({parts[0], eta.comp.at(parts[0]).obj(parts[1])});
  for (const auto& [n, parts] : G1.one_parts) {
    const auto& x = D1.base.t.one(parts[0]).src;
    const auto& y = D1.base.t.one(parts[0]).tgt;
    F.m.on_1[n] = detail::tup(
        {parts[0], eta.comp.at(x).one(parts[1]), eta.comp.at(y).obj(parts[2])});
  }
  for (const auto& [n, parts] : G1.two_parts) {
    const auto& fb = D1.base.t.one(D1.base.t.two(parts[0]).src);
    F.m.on_2[n] = detail::tup({parts[0], eta.comp.at(fb.src).two(parts[1]),
                               eta.comp.at(fb.src).one(parts[2]),
                               eta.comp.at(fb.tgt).obj(parts[3])});
  }
  ValidationReport fv = validate_two_functor(F);
  if (!fv.passed)
    throw Error("grothendieck_map: constructed functor invalid: " + fv.violations[0].law);
  return F;
}

// Vertical 2-natural transformation between the images of eta and eps.
struct VerticalTransformation {
  std::map<CellName, CellName> comp;  // object of the total category -> 1-cell
};

inline VerticalTransformation grothendieck_map_modification(const IndexedTwoDiagram& D1,
                                                            const IndexedTwoDiagram& D2,
                                                            const DiagramTransformation& eta,
                                                            const DiagramTransformation& eps,
                                                            const DiagramModification& m) {
  ValidationReport v = validate_diagram_modification(D1, D2, eta, eps, m);
  if (!v.passed)
    throw Error("grothendieck_map: invalid modification: " + v.violations[0].law);
  GrothendieckResult G1 = grothendieck_strict(D1);
  VerticalTransformation out;
  for (const auto& [n, parts] : G1.obj_parts) {
    const auto& x = parts[0];
    const auto& xb = parts[1];
    out.comp[n] = detail::tup({D1.base.t.id_1(x), m.comp.at(x).at(xb),
                               eps.comp.at(x).obj(xb)});
  }
  return out;
}

struct VerticalModification {
  std::map<CellName, CellName> comp;  // object of the total category -> 2-cell
};

inline VerticalModification grothendieck_map_perturbation(const IndexedTwoDiagram& D1,
                                                          const IndexedTwoDiagram& D2,
                                                          const DiagramTransformation& eta,
                                                          const DiagramTransformation& eps,
                                                          const DiagramModification& mg,
                                                          const DiagramModification& ml,
                                                          const DiagramPerturbation& z) {
  ValidationReport v = validate_diagram_perturbation(D1, D2, mg, ml, z);
  if (!v.passed)
    throw Error("grothendieck_map: invalid perturbation: " + v.violations[0].law);
  (void)eta;
  GrothendieckResult G1 = grothendieck_strict(D1);
  VerticalModification out;
  for (const auto& [n, parts] : G1.obj_parts) {
    const auto& x = parts[0];
    const auto& xb = parts[1];
    out.comp[n] = detail::tup({D1.base.t.id_2(D1.base.t.id_1(x)), z.comp.at(x).at(xb),
                               ml.comp.at(x).at(xb), eps.comp.at(x).obj(xb)});
  }
  return out;
}

// Verticality of a transformation between cartesian functors over the same
// base: every component projects to an identity.
inline ValidationReport check_vertical_transformation(const GrothendieckResult& G2,
                                                      const TwoFunctor& F1,
                                                      const TwoFunctor& F2,
                                                      const VerticalTransformation& v) {
  ValidationReport rep;
  const CellTables& T2 = G2.total.t;
  const CellTables& B = G2.proj.base().t;
  for (const auto& [n, c] : v.comp) {
    if (!T2.has_one(c)) {
      rep.add("vertical/dangling-component", {n, c});
      continue;
    }
    if (G2.proj.one(c) != B.id_1(G2.proj.obj(F1.m.obj(n))))
      rep.add("vertical/not-vertical", {n, c});
  }
  if (!rep.passed) return rep;
  check_strict_two_natural(F1.dom.t, T2, F1.m, F2.m, v.comp, "vertical", rep);
  return rep;
}

}  // namespace fibcat
