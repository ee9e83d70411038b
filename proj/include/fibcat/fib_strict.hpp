#pragma once

// Decision procedures for strict cartesian 1- and 2-cells, 2-fibration
// verification, cleavage and splitness checks, factorizations, and
// cartesian 2-functors.  Everything is decided by direct enumeration of the
// lifting conditions; witnesses are the offending cell tuples.

#include "fibcat/core.hpp"
#include "fibcat/maps.hpp"
#include "fibcat/paste.hpp"

namespace fibcat {

struct Projection {
  TwoFunctor P;  // total = P.dom, base = P.cod

  const FinTwoCategory& total() const { return P.dom; }
  const FinTwoCategory& base() const { return P.cod; }
  const CellName& obj(const CellName& x) const { return P.m.obj(x); }
  const CellName& one(const CellName& f) const { return P.m.one(f); }
  const CellName& two(const CellName& a) const { return P.m.two(a); }
};

inline Projection identity_projection(const FinTwoCategory& c) {
  return Projection{identity_two_functor(c)};
}

struct CartesianCheck {
  bool cartesian = true;
  Violation witness;  // set when !cartesian
};

// Chosen cartesian lifts.  lift1 is keyed (f, e) with f : b -> P e a base
// 1-cell and e a total object; lift2 is keyed (alpha, k) with
// alpha : f => P k a base 2-cell and k a total 1-cell.
struct Cleavage {
  std::map<std::pair<CellName, CellName>, CellName> lift1;
  std::map<std::pair<CellName, CellName>, CellName> lift2;

  const CellName& l1(const CellName& f, const CellName& e) const {
    auto it = lift1.find({f, e});
    if (it == lift1.end()) throw Error("cleavage: no 1-cell lift at (" + f + "," + e + ")");
    return it->second;
  }
  const CellName& l2(const CellName& a, const CellName& k) const {
    auto it = lift2.find({a, k});
    if (it == lift2.end()) throw Error("cleavage: no 2-cell lift at (" + a + "," + k + ")");
    return it->second;
  }
};

// ---------------------------------------------------------------------------
// Cartesianness.

// f : x -> y is cartesian when (1) every (h, u) with P h = P f . u has a
// unique lift and (2) every (sigma, tau) with P sigma = 1_{Pf} * tau lifts
// uniquely against the chosen 1-cell lifts.
inline CartesianCheck is_cartesian_1cell_strict(const Projection& pr, const CellName& f) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const auto& fd = E.one(f);
  const CellName Pf = pr.one(f);

  // Condition (1), remembering each unique lift.
  std::map<std::pair<CellName, CellName>, CellName> lifts;  // (h, u) -> hat u
  for (const auto& [h, hd] : E.one_cells) {
    if (hd.tgt != fd.tgt) continue;
    for (const auto& [u, ud] : B.one_cells) {
      if (ud.src != pr.obj(hd.src) || ud.tgt != pr.obj(fd.src)) continue;
      if (pr.one(h) != B.comp1(Pf, u)) continue;
      std::vector<CellName> found;
      for (const auto& cand : E.one_cells_between(hd.src, fd.src))
        if (pr.one(cand) == u && E.comp1(f, cand) == h) found.push_back(cand);
      if (found.size() != 1)
        return {false, {"cartesian-1/lift-count", {f, h, u, std::to_string(found.size())}}};
      lifts[{h, u}] = found[0];
    }
  }

  // Condition (2) over every qualifying square.
  for (const auto& [sigma, sd] : E.two_cells) {
    const auto& hd = E.one(sd.src);
    if (hd.tgt != fd.tgt) continue;
    const CellName h = sd.src, k = sd.tgt;
    for (const auto& [tau, td] : B.two_cells) {
      const auto& ud = B.one(td.src);
      if (ud.src != pr.obj(hd.src) || ud.tgt != pr.obj(fd.src)) continue;
      auto lu = lifts.find({h, td.src});
      auto lv = lifts.find({k, td.tgt});
      if (lu == lifts.end() || lv == lifts.end()) continue;  // (h,u) not a lifting square
      if (pr.two(sigma) != B.comp2h(B.id_2(Pf), tau)) continue;
      int count = 0;
      for (const auto& cand : E.two_cells_between(lu->second, lv->second))
        if (pr.two(cand) == tau && E.comp2h(E.id_2(f), cand) == sigma) ++count;
      if (count != 1)
        return {false, {"cartesian-1/2-cell-lift-count", {f, sigma, tau, std::to_string(count)}}};
    }
  }
  return {};
}

// alpha : f => g is cartesian when it is an ordinary cartesian arrow for the
// hom-functor P_{xy} : E(x,y) -> B(Px,Py).
inline CartesianCheck is_cartesian_2cell_strict(const Projection& pr, const CellName& alpha) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const auto& ad = E.two(alpha);
  const CellName Pa = pr.two(alpha);
  for (const auto& [beta, bd] : E.two_cells) {
    if (bd.tgt != ad.tgt) continue;
    for (const auto& [om, od] : B.two_cells) {
      if (od.src != pr.one(bd.src) || od.tgt != pr.one(ad.src)) continue;
      if (B.comp2v(Pa, om) != pr.two(beta)) continue;
      int count = 0;
      for (const auto& cand : E.two_cells_between(bd.src, ad.src))
        if (pr.two(cand) == om && E.comp2v(alpha, cand) == beta) ++count;
      if (count != 1)
        return {false, {"cartesian-2/lift-count", {alpha, beta, om, std::to_string(count)}}};
    }
  }
  return {};
}

// Precomputed cartesianness tables.
struct CartesianTables {
  std::map<CellName, bool> one;
  std::map<CellName, bool> two;
};

inline CartesianTables cartesian_tables_strict(const Projection& pr) {
  CartesianTables ct;
  for (const auto& [f, d] : pr.total().t.one_cells)
    ct.one[f] = is_cartesian_1cell_strict(pr, f).cartesian;
  for (const auto& [a, d] : pr.total().t.two_cells)
    ct.two[a] = is_cartesian_2cell_strict(pr, a).cartesian;
  return ct;
}

// ---------------------------------------------------------------------------
// Fibration report.

struct FibrationReport {
  bool has_cart_1_lifts = true;
  bool locally_fibred = true;
  bool hcomp_closed = true;
  bool precomp_closed = true;
  bool postcomp_closed = true;
  std::vector<Violation> witnesses;

  bool is_fibration() const { return has_cart_1_lifts && locally_fibred && hcomp_closed; }
};

inline FibrationReport check_two_fibration(const Projection& pr,
                                           std::size_t witness_limit = 100) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  FibrationReport rep;
  CartesianTables ct = cartesian_tables_strict(pr);

  for (const auto& e : E.objects)
    for (const auto& [f, fd] : B.one_cells) {
      if (fd.tgt != pr.obj(e)) continue;
      bool found = false;
      for (const auto& [h, hd] : E.one_cells)
        if (hd.tgt == e && pr.one(h) == f && ct.one.at(h)) found = true;
      if (!found) {
        rep.has_cart_1_lifts = false;
        rep.witnesses.push_back({"fibration/no-1-cell-lift", {f, e}});
      }
    }

  for (const auto& [g, gd] : E.one_cells)
    for (const auto& [al, ad] : B.two_cells) {
      if (ad.tgt != pr.one(g)) continue;
      bool found = false;
      for (const auto& [s, sd2] : E.two_cells)
        if (sd2.tgt == g && pr.two(s) == al && ct.two.at(s)) found = true;
      if (!found) {
        rep.locally_fibred = false;
        rep.witnesses.push_back({"fibration/no-2-cell-lift", {al, g}});
      }
    }

  for (const auto& [s, u] : horizontal_pairs(E)) {
    if (!ct.two.at(s) || !ct.two.at(u)) continue;
    if (!ct.two.at(E.comp2h(s, u))) {
      rep.hcomp_closed = false;
      rep.witnesses.push_back({"fibration/hcomp-not-closed", {s, u}});
    }
  }

  for (const auto& [s, sd] : E.two_cells) {
    if (!ct.two.at(s)) continue;
    for (const auto& [j, jd] : E.one_cells) {
      if (jd.tgt != E.src0_of2(s)) continue;
      if (!ct.two.at(E.comp2h(s, E.id_2(j)))) {
        rep.precomp_closed = false;
        rep.witnesses.push_back({"fibration/precomp-not-closed", {s, j}});
      }
    }
    for (const auto& [k, kd] : E.one_cells) {
      if (kd.src != E.tgt0_of2(s)) continue;
      if (!ct.two.at(E.comp2h(E.id_2(k), s))) {
        rep.postcomp_closed = false;
        rep.witnesses.push_back({"fibration/postcomp-not-closed", {k, s}});
      }
    }
  }

  if (rep.witnesses.size() > witness_limit) rep.witnesses.resize(witness_limit);
  return rep;
}

// Fast path of the closure condition: only chosen 2-cell lifts are composed.
inline bool hcomp_closed_on_chosen(const Projection& pr, const Cleavage& C) {
  const CellTables& E = pr.total().t;
  for (const auto& [key1, s] : C.lift2)
    for (const auto& [key2, u] : C.lift2) {
      if (!E.composable2h(s, u)) continue;
      if (!is_cartesian_2cell_strict(pr, E.comp2h(s, u)).cartesian) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Cleavages.

// Lexicographically least cartesian lift; throws when none exists.
inline Cleavage default_cleavage(const Projection& pr) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  Cleavage C;
  for (const auto& e : E.objects)
    for (const auto& [f, fd] : B.one_cells) {
      if (fd.tgt != pr.obj(e)) continue;
      for (const auto& [h, hd] : E.one_cells)
        if (hd.tgt == e && pr.one(h) == f && is_cartesian_1cell_strict(pr, h).cartesian) {
          C.lift1[{f, e}] = h;
          break;
        }
      if (!C.lift1.count({f, e}))
        throw Error("default_cleavage: no cartesian 1-cell lift of " + f + " at " + e);
    }
  for (const auto& [k, kd] : E.one_cells)
    for (const auto& [al, ad] : B.two_cells) {
      if (ad.tgt != pr.one(k)) continue;
      for (const auto& [s, sd] : E.two_cells)
        if (sd.tgt == k && pr.two(s) == al && is_cartesian_2cell_strict(pr, s).cartesian) {
          C.lift2[{al, k}] = s;
          break;
        }
      if (!C.lift2.count({al, k}))
        throw Error("default_cleavage: no cartesian 2-cell lift of " + al + " at " + k);
    }
  return C;
}

struct CleavageReport {
  bool lifts_cartesian = true;   // every chosen lift cartesian + projects exactly
  bool split_1cells = true;      // <fg|e> = <f|e> . <g|f*e>
  bool locally_split = true;     // <ab|k> = <a|k> . <b|a*k>
  bool horizontally_split = true;  // <a*c|kj> = <a|k> * <c|j>
  bool split_identities = true;  // <1_Pe|e> = 1_e and <1_Pk|k> = 1_k
  std::vector<Violation> witnesses;

  bool fully_split() const {
    return lifts_cartesian && split_1cells && locally_split && horizontally_split &&
           split_identities;
  }
};

inline CleavageReport check_cleavage(const Projection& pr, const Cleavage& C,
                                     std::size_t witness_limit = 100) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  CleavageReport rep;

  // Totality over the required indices plus cartesian validity.
  for (const auto& e : E.objects)
    for (const auto& [f, fd] : B.one_cells) {
      if (fd.tgt != pr.obj(e)) continue;
      auto it = C.lift1.find({f, e});
      if (it == C.lift1.end()) {
        rep.lifts_cartesian = false;
        rep.witnesses.push_back({"cleavage/missing-1-lift", {f, e}});
        continue;
      }
      const CellName& h = it->second;
      if (!E.has_one(h) || E.one(h).tgt != e || pr.one(h) != f) {
        rep.lifts_cartesian = false;
        rep.witnesses.push_back({"cleavage/1-lift-wrong-datum", {f, e, h}});
        continue;
      }
      if (!is_cartesian_1cell_strict(pr, h).cartesian) {
        rep.lifts_cartesian = false;
        rep.witnesses.push_back({"cleavage/1-lift-not-cartesian", {f, e, h}});
      }
    }
  for (const auto& [k, kd] : E.one_cells)
    for (const auto& [al, ad] : B.two_cells) {
      if (ad.tgt != pr.one(k)) continue;
      auto it = C.lift2.find({al, k});
      if (it == C.lift2.end()) {
        rep.lifts_cartesian = false;
        rep.witnesses.push_back({"cleavage/missing-2-lift", {al, k}});
        continue;
      }
      const CellName& s = it->second;
      if (!E.has_two(s) || E.two(s).tgt != k || pr.two(s) != al) {
        rep.lifts_cartesian = false;
        rep.witnesses.push_back({"cleavage/2-lift-wrong-datum", {al, k, s}});
        continue;
      }
      if (!is_cartesian_2cell_strict(pr, s).cartesian) {
        rep.lifts_cartesian = false;
        rep.witnesses.push_back({"cleavage/2-lift-not-cartesian", {al, k, s}});
      }
    }
  if (!rep.lifts_cartesian) {
    if (rep.witnesses.size() > witness_limit) rep.witnesses.resize(witness_limit);
    return rep;
  }

  // <fg|e> = <f|e> . <g|f*e>.
  for (const auto& e : E.objects)
    for (const auto& pair : enumerate_composable(B, 2, 1)) {
      const auto& f = pair[0];
      const auto& g = pair[1];
      if (B.one(f).tgt != pr.obj(e)) continue;
      const CellName lf = C.l1(f, e);
      const CellName fstar_e = E.one(lf).src;
      const CellName lg = C.l1(g, fstar_e);
      if (C.l1(B.comp1(f, g), e) != E.comp1(lf, lg)) {
        rep.split_1cells = false;
        rep.witnesses.push_back({"cleavage/split-1cells", {f, g, e}});
      }
    }

  // <ab|k> = <a|k> . <b|a*k>.
  for (const auto& [k, kd] : E.one_cells)
    for (const auto& pair : enumerate_composable(B, 2, 2)) {
      const auto& a = pair[0];
      const auto& b = pair[1];
      if (B.two(a).tgt != pr.one(k)) continue;
      const CellName la = C.l2(a, k);
      const CellName astar_k = E.two(la).src;
      const CellName lb = C.l2(b, astar_k);
      if (C.l2(B.comp2v(a, b), k) != E.comp2v(la, lb)) {
        rep.locally_split = false;
        rep.witnesses.push_back({"cleavage/locally-split", {a, b, k}});
      }
    }

  // <a*c|kj> = <a|k> * <c|j>.
  for (const auto& [k, kd] : E.one_cells)
    for (const auto& [j, jd] : E.one_cells) {
      if (!E.composable1(k, j)) continue;
      for (const auto& [a, ad] : B.two_cells) {
        if (ad.tgt != pr.one(k)) continue;
        for (const auto& [c, cd] : B.two_cells) {
          if (cd.tgt != pr.one(j)) continue;
          if (C.l2(B.comp2h(a, c), E.comp1(k, j)) != E.comp2h(C.l2(a, k), C.l2(c, j))) {
            rep.horizontally_split = false;
            rep.witnesses.push_back({"cleavage/horizontally-split", {a, c, k, j}});
          }
        }
      }
    }

  // Identity lifts are identities.
  for (const auto& e : E.objects)
    if (C.l1(B.id_1(pr.obj(e)), e) != E.id_1(e)) {
      rep.split_identities = false;
      rep.witnesses.push_back({"cleavage/split-identities-1", {e}});
    }
  for (const auto& [k, kd] : E.one_cells)
    if (C.l2(B.id_2(pr.one(k)), k) != E.id_2(k)) {
      rep.split_identities = false;
      rep.witnesses.push_back({"cleavage/split-identities-2", {k}});
    }

  if (rep.witnesses.size() > witness_limit) rep.witnesses.resize(witness_limit);
  return rep;
}

// ---------------------------------------------------------------------------
// Factorizations.

struct OneCellFactorization {
  CellName hat;     // vertical part, P(hat) = 1
  CellName chosen;  // <Pf|z>
};

inline OneCellFactorization factor_1cell_strict(const Projection& pr, const Cleavage& C,
                                                const CellName& f) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const auto& fd = E.one(f);
  const CellName chosen = C.l1(pr.one(f), fd.tgt);
  const CellName mid = E.one(chosen).src;
  std::vector<CellName> found;
  for (const auto& cand : E.one_cells_between(fd.src, mid))
    if (pr.one(cand) == B.id_1(pr.obj(fd.src)) && E.comp1(chosen, cand) == f)
      found.push_back(cand);
  if (found.size() != 1)
    throw Error("factor_1cell_strict: " + std::to_string(found.size()) +
                " factorizations of " + f + " (projection is not a 2-fibration?)");
  return {found[0], chosen};
}

struct TwoCellFactorization {
  CellName hat_f, hat_g, hat_h;  // vertical 1-cell parts
  CellName hat_alpha;            // vertical 2-cell part, P(hat_alpha) = 1_1
  CellName chosen;               // <P alpha | <Pg|z>>
};

inline TwoCellFactorization factor_2cell_strict(const Projection& pr, const Cleavage& C,
                                                const CellName& alpha) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const auto& ad = E.two(alpha);
  const CellName f = ad.src, g = ad.tgt;
  const auto& fd = E.one(f);

  OneCellFactorization Ff = factor_1cell_strict(pr, C, f);
  OneCellFactorization Fg = factor_1cell_strict(pr, C, g);
  const CellName chosen2 = C.l2(pr.two(alpha), Fg.chosen);
  const CellName h = E.two(chosen2).src;

  // eta : f => h . hat_g over 1_{Pf} with (chosen2 * 1) . eta = alpha.
  const CellName target = E.comp1(h, Fg.hat);
  std::vector<CellName> etas;
  for (const auto& cand : E.two_cells_between(f, target))
    if (pr.two(cand) == B.id_2(pr.one(f)) &&
        E.comp2v(E.comp2h(chosen2, E.id_2(Fg.hat)), cand) == alpha)
      etas.push_back(cand);
  if (etas.size() != 1)
    throw Error("factor_2cell_strict: " + std::to_string(etas.size()) +
                " eta candidates for " + alpha);

  // h factors through the same chosen lift (P h = P f).
  OneCellFactorization Fh = factor_1cell_strict(pr, C, h);
  if (Fh.chosen != Ff.chosen)
    throw Error("factor_2cell_strict: chosen lift mismatch for " + alpha);

  // hat_alpha : hat_f => hat_h . hat_g over 1_{1} with 1_{chosen} * hat_alpha = eta.
  const CellName vtarget = E.comp1(Fh.hat, Fg.hat);
  std::vector<CellName> hats;
  for (const auto& cand : E.two_cells_between(Ff.hat, vtarget))
    if (pr.two(cand) == B.id_2(B.id_1(pr.obj(fd.src))) &&
        E.comp2h(E.id_2(Ff.chosen), cand) == etas[0])
      hats.push_back(cand);
  if (hats.size() != 1)
    throw Error("factor_2cell_strict: " + std::to_string(hats.size()) +
                " hat candidates for " + alpha);

  TwoCellFactorization out{Ff.hat, Fg.hat, Fh.hat, hats[0], chosen2};
  // The pasting equation of the factorization, verified on the nose.
  CellName recomposed = E.comp2v(E.comp2h(chosen2, E.id_2(out.hat_g)),
                                 E.comp2h(E.id_2(Ff.chosen), out.hat_alpha));
  if (recomposed != alpha)
    throw Error("factor_2cell_strict: pasting equation failed for " + alpha);
  return out;
}

// ---------------------------------------------------------------------------
// Cartesian functors.

// F : total(P) -> total(Q) over the same base: Q F = P and F preserves all
// cartesian cells.  The fast path checks chosen lifts only; the report also
// records whether fast path and exhaustive scan agree.
inline ValidationReport check_cartesian_functor(const Projection& P, const Projection& Q,
                                                const TwoFunctor& F,
                                                const Cleavage* CP = nullptr,
                                                const Cleavage* CQ = nullptr,
                                                std::size_t witness_limit = 100) {
  ValidationReport rep;
  if (!structurally_equal(P.base(), Q.base())) {
    rep.add("cartesian-functor/base-mismatch", {});
    return rep;
  }
  TwoFunctor QF = compose_two_functor(Q.P, F);
  if (!same_action(QF.m, P.P.m)) {
    rep.add("cartesian-functor/triangle", {});
    return rep;
  }

  CartesianTables ctP = cartesian_tables_strict(P);
  bool fast_ok = true;
  if (CP) {
    for (const auto& [key, h] : CP->lift1)
      if (!is_cartesian_1cell_strict(Q, F.m.one(h)).cartesian) {
        fast_ok = false;
        rep.add("cartesian-functor/chosen-1-not-preserved", {key.first, key.second, h});
      }
    for (const auto& [key, s] : CP->lift2)
      if (!is_cartesian_2cell_strict(Q, F.m.two(s)).cartesian) {
        fast_ok = false;
        rep.add("cartesian-functor/chosen-2-not-preserved", {key.first, key.second, s});
      }
  }

  bool full_ok = true;
  for (const auto& [f, d] : P.total().t.one_cells)
    if (ctP.one.at(f) && !is_cartesian_1cell_strict(Q, F.m.one(f)).cartesian) {
      full_ok = false;
      rep.add("cartesian-functor/1-cell-not-preserved", {f, F.m.one(f)});
    }
  for (const auto& [a, d] : P.total().t.two_cells)
    if (ctP.two.at(a) && !is_cartesian_2cell_strict(Q, F.m.two(a)).cartesian) {
      full_ok = false;
      rep.add("cartesian-functor/2-cell-not-preserved", {a, F.m.two(a)});
    }

  if (CP && fast_ok != full_ok)
    rep.add("cartesian-functor/chosen-lifts-suffice-mismatch", {});

  if (CP && CQ) {
    for (const auto& [key, h] : CP->lift1)
      if (CQ->l1(key.first, F.m.obj(key.second)) != F.m.one(h))
        rep.add("cartesian-functor/not-split-1", {key.first, key.second});
    for (const auto& [key, s] : CP->lift2)
      if (CQ->l2(key.first, F.m.one(key.second)) != F.m.two(s))
        rep.add("cartesian-functor/not-split-2", {key.first, key.second});
  }

  rep.truncate(witness_limit);
  return rep;
}

// ---------------------------------------------------------------------------
// Closure and cancellation properties of cartesian cells (exhaustive).

inline bool is_iso_1cell_strict(const CellTables& t, const CellName& f) {
  const auto& d = t.one(f);
  for (const auto& g : t.one_cells_between(d.tgt, d.src))
    if (t.comp1(g, f) == t.id_1(d.src) && t.comp1(f, g) == t.id_1(d.tgt)) return true;
  return false;
}

inline ValidationReport check_cartesian_closure_strict(const Projection& pr,
                                                       std::size_t witness_limit = 100) {
  ValidationReport rep;
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  CartesianTables ct = cartesian_tables_strict(pr);

  for (const auto& pair : enumerate_composable(E, 2, 1)) {
    const auto& g = pair[0];
    const auto& f = pair[1];
    bool cf = ct.one.at(f), cg = ct.one.at(g), cgf = ct.one.at(E.comp1(g, f));
    if (cf && cg && !cgf) rep.add("closure/composition", {g, f});
    if (cg && cgf && !cf) rep.add("closure/cancellation", {g, f});
  }
  for (const auto& [f, d] : E.one_cells)
    if (ct.one.at(f) && is_iso_1cell_strict(B, pr.one(f)) && !is_iso_1cell_strict(E, f))
      rep.add("closure/iso-detection", {f});
  // Whisker reflection: h and h.alpha cartesian => alpha cartesian.
  for (const auto& [h, hd] : E.one_cells) {
    if (!ct.one.at(h)) continue;
    for (const auto& [a, ad] : E.two_cells) {
      if (E.tgt0_of2(a) != hd.src) continue;
      if (ct.two.at(E.comp2h(E.id_2(h), a)) && !ct.two.at(a))
        rep.add("closure/whisker-reflection", {h, a});
    }
  }
  // Any two cartesian lifts of the same base 1-cell differ by a unique
  // vertical isomorphism.
  for (const auto& [f, fd] : E.one_cells) {
    if (!ct.one.at(f)) continue;
    for (const auto& [f2, f2d] : E.one_cells) {
      if (!ct.one.at(f2) || f2d.tgt != fd.tgt || pr.one(f2) != pr.one(f)) continue;
      std::vector<CellName> comps;
      for (const auto& h : E.one_cells_between(f2d.src, fd.src))
        if (pr.one(h) == B.id_1(pr.obj(f2d.src)) && E.comp1(f, h) == f2) comps.push_back(h);
      if (comps.size() != 1 || !is_iso_1cell_strict(E, comps[0]))
        rep.add("closure/unique-vertical-iso", {f, f2});
    }
  }
  rep.truncate(witness_limit);
  return rep;
}

}  // namespace fibcat
