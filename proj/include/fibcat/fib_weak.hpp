#pragma once

// Bicategorical (weak) cartesianness and fibrations: decision procedures by
// bounded enumeration of lift candidates, fibration reports, equivalence
// lifting, strictification, and weak factorizations.
//
// Lifts of (h, alpha) along a cartesian 1-cell are always normalized to the
// improved form (the base comparison is an identity, so lifts project
// exactly); chosen lifts are the lexicographically least normalized ones.
// The fibre/reindexing machinery additionally requires projections that
// preserve composition and identities strictly; strictify produces one.

#include "fibcat/fib_strict.hpp"
#include "fibcat/maps.hpp"
#include "fibcat/paste.hpp"

namespace fibcat {

struct WeakProjection {
  Homomorphism P;

  const FinBicategory& total() const { return P.dom; }
  const FinBicategory& base() const { return P.cod; }
  const CellName& obj(const CellName& x) const { return P.m.obj(x); }
  const CellName& one(const CellName& f) const { return P.m.one(f); }
  const CellName& two(const CellName& a) const { return P.m.two(a); }
};

inline WeakProjection identity_weak_projection(const FinBicategory& b) {
  return WeakProjection{identity_homomorphism(b)};
}

inline WeakProjection as_weak(const Projection& pr) {
  return WeakProjection{embed_homomorphism(pr.P)};
}

// Does the projection preserve composition and identities on the nose?
inline bool strictly_preserving(const WeakProjection& pr) {
  const CellTables& B = pr.base().t;
  for (const auto& [k, v] : pr.P.phi_comp)
    if (v != B.id_2(B.two(v).src)) return false;
  for (const auto& [x, v] : pr.P.phi_id)
    if (v != B.id_2(B.two(v).src)) return false;
  return true;
}

// A lift of (h, alpha) along f: an invertible comparison
// comp : f . hat => g together with an invertible base comparison
// basecmp : P hat => h satisfying  alpha . (1_{Pf} * basecmp) = P(comp) . phi_{f,hat}.
// Lifts with an identity base comparison are the normalized ones.
struct WeakLift {
  CellName hat;
  CellName comp;
  CellName basecmp;
};

namespace detail {

// All lifts of (h, alpha) for the candidate cartesian f against g, with
// normalized lifts listed first, then lexicographically.
inline std::vector<WeakLift> weak_lifts(const WeakProjection& pr, const CellName& f,
                                        const CellName& g, const CellName& h,
                                        const CellName& alpha) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const auto& fd = E.one(f);
  const auto& gd = E.one(g);
  const CellName Pf = pr.one(f);
  std::vector<WeakLift> out;
  for (const auto& hat : E.one_cells_between(gd.src, fd.src)) {
    CellName rhs_phi = pr.P.phi(f, hat);
    for (const auto& basecmp : B.two_cells_between(pr.one(hat), h)) {
      if (!is_invertible_2cell(B, basecmp)) continue;
      CellName want = B.comp2v(alpha, B.comp2h(B.id_2(Pf), basecmp));
      for (const auto& comp : E.two_cells_between(E.comp1(f, hat), g)) {
        if (!is_invertible_2cell(E, comp)) continue;
        if (B.comp2v(pr.two(comp), rhs_phi) != want) continue;
        out.push_back({hat, comp, basecmp});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [&](const WeakLift& a, const WeakLift& b) {
    bool na = a.basecmp == B.id_2(h);
    bool nb = b.basecmp == B.id_2(h);
    if (na != nb) return na;
    return std::tie(a.hat, a.comp, a.basecmp) < std::tie(b.hat, b.comp, b.basecmp);
  });
  return out;
}

}  // namespace detail

// f is cartesian when every (h, alpha) with alpha : Pf.h => Pg invertible
// admits a normalized lift, and lifted 2-cells against the chosen lifts are
// unique.  (The non-normalized variants add nothing: the base comparison of
// any lift can be straightened through a local cartesian lift.)
inline CartesianCheck is_cartesian_1cell_weak(const WeakProjection& pr, const CellName& f) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const auto& fd = E.one(f);
  const CellName Pf = pr.one(f);

  // Chosen lift per qualifying (g, h, alpha).
  std::map<std::tuple<CellName, CellName, CellName>, WeakLift> chosen;
  for (const auto& [g, gd] : E.one_cells) {
    if (gd.tgt != fd.tgt) continue;
    for (const auto& [h, hd] : B.one_cells) {
      if (hd.src != pr.obj(gd.src) || hd.tgt != pr.obj(fd.src)) continue;
      for (const auto& alpha : B.two_cells_between(B.comp1(Pf, h), pr.one(g))) {
        if (!is_invertible_2cell(B, alpha)) continue;
        auto lifts = detail::weak_lifts(pr, f, g, h, alpha);
        if (lifts.empty())
          return {false, {"cartesian-1-weak/no-lift", {f, g, h, alpha}}};
        chosen[{g, h, alpha}] = lifts.front();
      }
    }
  }

  // 2-cell condition against the chosen lifts.
  for (const auto& [sigma, sd] : E.two_cells) {
    const auto& gd = E.one(sd.src);
    if (gd.tgt != fd.tgt) continue;
    for (const auto& [key, lift] : chosen) {
      if (std::get<0>(key) != sd.src) continue;
      const CellName& h = std::get<1>(key);
      const CellName& alpha = std::get<2>(key);
      for (const auto& [key2, lift2] : chosen) {
        if (std::get<0>(key2) != sd.tgt) continue;
        const CellName& h2 = std::get<1>(key2);
        const CellName& alpha2 = std::get<2>(key2);
        for (const auto& delta : B.two_cells_between(h, h2)) {
          // alpha' . (1_{Pf} * delta) = P sigma . alpha
          if (B.comp2v(alpha2, B.comp2h(B.id_2(Pf), delta)) !=
              B.comp2v(pr.two(sigma), alpha))
            continue;
          int count = 0;
          for (const auto& dh : E.two_cells_between(lift.hat, lift2.hat)) {
            if (E.comp2v(lift2.comp, E.comp2h(E.id_2(f), dh)) !=
                E.comp2v(sigma, lift.comp))
              continue;
            // delta . basecmp = basecmp' . P(dh)
            if (B.comp2v(delta, lift.basecmp) !=
                B.comp2v(lift2.basecmp, pr.two(dh)))
              continue;
            ++count;
          }
          if (count != 1)
            return {false,
                    {"cartesian-1-weak/2-cell-lift-count",
                     {f, sigma, delta, std::to_string(count)}}};
        }
      }
    }
  }
  return {};
}

inline CartesianCheck is_cartesian_2cell_weak(const WeakProjection& pr,
                                              const CellName& alpha) {
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

inline CartesianTables cartesian_tables_weak(const WeakProjection& pr) {
  CartesianTables ct;
  for (const auto& [f, d] : pr.total().t.one_cells)
    ct.one[f] = is_cartesian_1cell_weak(pr, f).cartesian;
  for (const auto& [a, d] : pr.total().t.two_cells)
    ct.two[a] = is_cartesian_2cell_weak(pr, a).cartesian;
  return ct;
}

inline FibrationReport check_fibration_weak(const WeakProjection& pr,
                                            std::size_t witness_limit = 100) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  FibrationReport rep;
  CartesianTables ct = cartesian_tables_weak(pr);

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

inline bool hcomp_closed_on_chosen_weak(const WeakProjection& pr, const Cleavage& C) {
  const CellTables& E = pr.total().t;
  for (const auto& [key1, s] : C.lift2)
    for (const auto& [key2, u] : C.lift2) {
      if (!E.composable2h(s, u)) continue;
      if (!is_cartesian_2cell_weak(pr, E.comp2h(s, u)).cartesian) return false;
    }
  return true;
}

// Lexicographically least exact cartesian lifts.
inline Cleavage default_cleavage_weak(const WeakProjection& pr) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  Cleavage C;
  for (const auto& e : E.objects)
    for (const auto& [f, fd] : B.one_cells) {
      if (fd.tgt != pr.obj(e)) continue;
      for (const auto& [h, hd] : E.one_cells)
        if (hd.tgt == e && pr.one(h) == f && is_cartesian_1cell_weak(pr, h).cartesian) {
          C.lift1[{f, e}] = h;
          break;
        }
      if (!C.lift1.count({f, e}))
        throw Error("default_cleavage_weak: no cartesian lift of " + f + " at " + e);
    }
  for (const auto& [k, kd] : E.one_cells)
    for (const auto& [al, ad] : B.two_cells) {
      if (ad.tgt != pr.one(k)) continue;
      for (const auto& [s, sd] : E.two_cells)
        if (sd.tgt == k && pr.two(s) == al && is_cartesian_2cell_weak(pr, s).cartesian) {
          C.lift2[{al, k}] = s;
          break;
        }
      if (!C.lift2.count({al, k}))
        throw Error("default_cleavage_weak: no cartesian 2-lift of " + al + " at " + k);
    }
  return C;
}

inline ValidationReport check_weak_cleavage(const WeakProjection& pr, const Cleavage& C,
                                            std::size_t witness_limit = 100) {
  ValidationReport rep;
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  for (const auto& e : E.objects)
    for (const auto& [f, fd] : B.one_cells) {
      if (fd.tgt != pr.obj(e)) continue;
      auto it = C.lift1.find({f, e});
      if (it == C.lift1.end()) {
        rep.add("cleavage/missing-1-lift", {f, e});
        continue;
      }
      if (!E.has_one(it->second) || E.one(it->second).tgt != e || pr.one(it->second) != f)
        rep.add("cleavage/1-lift-wrong-datum", {f, e, it->second});
      else if (!is_cartesian_1cell_weak(pr, it->second).cartesian)
        rep.add("cleavage/1-lift-not-cartesian", {f, e, it->second});
    }
  for (const auto& [k, kd] : E.one_cells)
    for (const auto& [al, ad] : B.two_cells) {
      if (ad.tgt != pr.one(k)) continue;
      auto it = C.lift2.find({al, k});
      if (it == C.lift2.end()) {
        rep.add("cleavage/missing-2-lift", {al, k});
        continue;
      }
      if (!E.has_two(it->second) || E.two(it->second).tgt != k || pr.two(it->second) != al)
        rep.add("cleavage/2-lift-wrong-datum", {al, k, it->second});
      else if (!is_cartesian_2cell_weak(pr, it->second).cartesian)
        rep.add("cleavage/2-lift-not-cartesian", {al, k, it->second});
    }
  rep.truncate(witness_limit);
  return rep;
}

// ---------------------------------------------------------------------------
// Equivalence lifting.

inline ValidationReport check_equivalence_lifting(const WeakProjection& pr,
                                                  std::size_t witness_limit = 100) {
  ValidationReport rep;
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  for (const auto& e : E.objects)
    for (const auto& [f, fd] : B.one_cells) {
      if (fd.tgt != pr.obj(e) || !is_equivalence_1cell(B, f)) continue;
      bool found = false;
      for (const auto& [h, hd] : E.one_cells)
        if (hd.tgt == e && pr.one(h) == f && is_equivalence_1cell(E, h)) found = true;
      if (!found) rep.add("equivalence-lifting/1-cell", {f, e});
    }
  for (const auto& [h, hd] : E.one_cells)
    for (const auto& [al, ad] : B.two_cells) {
      if (ad.tgt != pr.one(h) || !is_invertible_2cell(B, al)) continue;
      bool found = false;
      for (const auto& [s, sd] : E.two_cells)
        if (sd.tgt == h && pr.two(s) == al && is_invertible_2cell(E, s)) found = true;
      if (!found) rep.add("equivalence-lifting/2-cell", {al, h});
    }
  rep.truncate(witness_limit);
  return rep;
}

// ---------------------------------------------------------------------------
// Strictification.

struct StrictifyResult {
  FinBicategory total;   // E' : same cells, retabled composition
  WeakProjection proj;   // P' : strictly preserving
  Homomorphism inclusion;  // S : E -> E', identity on cells
};

namespace detail {

// Chosen local cartesian lift of alpha at k; identities lift to identities
// so that strictification is idempotent on strict projections.
inline CellName local_lift(const WeakProjection& pr, const CellName& alpha,
                           const CellName& k) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  if (alpha == B.id_2(pr.one(k))) return E.id_2(k);
  for (const auto& [s, sd] : E.two_cells)
    if (sd.tgt == k && pr.two(s) == alpha && is_cartesian_2cell_weak(pr, s).cartesian)
      return s;
  throw Error("strictify: not locally fibred at (" + alpha + ", " + k + ")");
}

}  // namespace detail

inline StrictifyResult strictify(const WeakProjection& pr) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const FinBicategory& Etot = pr.total();

  // sigma_{g,f} : g o' f => g.f  is the chosen lift of phi_{g,f} at g.f;
  // rho_e : 1'_e => 1_e the chosen lift of phi_e at 1_e.
  std::map<std::pair<CellName, CellName>, CellName> sigma;
  std::map<CellName, CellName> rho;
  for (const auto& pair : enumerate_composable(E, 2, 1))
    sigma[{pair[0], pair[1]}] =
        detail::local_lift(pr, pr.P.phi(pair[0], pair[1]), E.comp1(pair[0], pair[1]));
  for (const auto& e : E.objects)
    rho[e] = detail::local_lift(pr, pr.P.phi_at(e), E.id_1(e));

  FinBicategory out;
  CellTables& t = out.t;
  t.objects = E.objects;
  t.one_cells = E.one_cells;
  t.two_cells = E.two_cells;
  t.vcomp2 = E.vcomp2;
  t.id2 = E.id2;
  for (const auto& e : E.objects) t.id1[e] = E.two(rho.at(e)).src;
  for (const auto& pair : enumerate_composable(E, 2, 1))
    t.hcomp1[{pair[0], pair[1]}] = E.two(sigma.at({pair[0], pair[1]})).src;

  // New horizontal composition of 2-cells: the unique u over P b * P a with
  // sigma_{g',f'} . u = (b*a) . sigma_{g,f}.
  for (const auto& [b2, bd] : E.two_cells)
    for (const auto& [a2, ad] : E.two_cells) {
      if (!E.composable2h(b2, a2)) continue;
      const CellName sg = sigma.at({bd.src, ad.src});
      const CellName sg2 = sigma.at({bd.tgt, ad.tgt});
      const CellName rhs = E.comp2v(E.comp2h(b2, a2), sg);
      const CellName base = B.comp2h(pr.two(b2), pr.two(a2));
      std::vector<CellName> found;
      for (const auto& cand :
           E.two_cells_between(E.two(sg).src, E.two(sg2).src))
        if (pr.two(cand) == base && E.comp2v(sg2, cand) == rhs) found.push_back(cand);
      if (found.size() != 1)
        throw Error("strictify: expected unique composite 2-cell at (" + b2 + "," + a2 +
                    "), found " + std::to_string(found.size()));
      t.hcomp2[{b2, a2}] = found[0];
    }

  // Coherence cells by direct pasting; all pieces are invertible.
  for (const auto& triple : enumerate_composable(t, 3, 1)) {
    const auto& h = triple[0];
    const auto& g = triple[1];
    const auto& f = triple[2];
    CellName hg = t.comp1(h, g);
    CellName gf = t.comp1(g, f);
    CellName p1 = vcomp_seq(E, {Etot.a(h, g, f), E.comp2h(sigma.at({h, g}), E.id_2(f)),
                                sigma.at({hg, f})});
    CellName p2 = vcomp_seq(E, {E.comp2h(E.id_2(h), sigma.at({g, f})), sigma.at({h, gf})});
    out.assoc[{h, g, f}] = E.comp2v(inverse_2cell(Etot, p2), p1);
  }
  for (const auto& [f, fd] : t.one_cells) {
    CellName e1 = t.id_1(fd.tgt);
    out.lunit[f] = vcomp_seq(E, {Etot.l(f), E.comp2h(rho.at(fd.tgt), E.id_2(f)),
                                 sigma.at({e1, f})});
    CellName e0 = t.id_1(fd.src);
    out.runit[f] = vcomp_seq(E, {Etot.r(f), E.comp2h(E.id_2(f), rho.at(fd.src)),
                                 sigma.at({f, e0})});
  }
  for (const auto& [k, v] : out.assoc)
    if (!out.inv2.count(v)) out.inv2[v] = inverse_2cell(Etot, v);
  for (const auto& [k, v] : out.lunit)
    if (!out.inv2.count(v)) out.inv2[v] = inverse_2cell(Etot, v);
  for (const auto& [k, v] : out.runit)
    if (!out.inv2.count(v)) out.inv2[v] = inverse_2cell(Etot, v);

  // P' : same action, identity comparison cells.
  Homomorphism P2{out, pr.base(), pr.P.m, {}, {}};
  for (const auto& pair : enumerate_composable(t, 2, 1))
    P2.phi_comp[{pair[0], pair[1]}] =
        B.id_2(B.comp1(pr.one(pair[0]), pr.one(pair[1])));
  for (const auto& x : t.objects) P2.phi_id[x] = B.id_2(B.id_1(pr.obj(x)));

  // S : E -> E', identity on cells, comparison cells sigma and rho.
  Homomorphism S{pr.total(), out, {}, {}, {}};
  for (const auto& x : E.objects) S.m.on_obj[x] = x;
  for (const auto& [f, d] : E.one_cells) S.m.on_1[f] = f;
  for (const auto& [a, d] : E.two_cells) S.m.on_2[a] = a;
  for (const auto& [k, v] : sigma) S.phi_comp[k] = v;
  for (const auto& [e, v] : rho) S.phi_id[e] = v;

  return {out, WeakProjection{P2}, S};
}

// ---------------------------------------------------------------------------
// Weak factorizations.

struct WeakOneCellFactorization {
  CellName hat;         // vertical part, projects to the identity
  CellName chosen;      // <Pf|z>
  CellName comparison;  // invertible  chosen . hat => f
  std::size_t alternatives;  // factorizations seen (each unique-iso checked)
};

inline WeakOneCellFactorization factor_1cell_weak(const WeakProjection& pr,
                                                  const Cleavage& C, const CellName& f) {
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const auto& fd = E.one(f);
  const CellName chosen = C.l1(pr.one(f), fd.tgt);
  const CellName mid = E.one(chosen).src;
  // tau : chosen . hat => f with P(tau) = r_{Pf} . phi^{-1}_{chosen,hat}.
  std::vector<WeakLift> all;
  for (const auto& hat : E.one_cells_between(fd.src, mid)) {
    if (pr.one(hat) != B.id_1(pr.obj(fd.src))) continue;
    CellName want = B.comp2v(pr.base().r(pr.one(f)),
                             inverse_2cell(pr.base(), pr.P.phi(chosen, hat)));
    for (const auto& cmp : E.two_cells_between(E.comp1(chosen, hat), f)) {
      if (!is_invertible_2cell(E, cmp)) continue;
      if (pr.two(cmp) != want) continue;
      all.push_back({hat, cmp, B.id_2(B.id_1(pr.obj(fd.src)))});
    }
  }
  if (all.empty())
    throw Error("factor_1cell_weak: no factorization of " + f);
  // Uniqueness up to a unique vertical isomorphism against the first choice.
  for (std::size_t i = 1; i < all.size(); ++i) {
    int count = 0;
    for (const auto& kappa : E.two_cells_between(all[0].hat, all[i].hat)) {
      if (!is_invertible_2cell(E, kappa)) continue;
      if (pr.two(kappa) != B.id_2(B.id_1(pr.obj(fd.src)))) continue;
      if (E.comp2v(all[i].comp, E.comp2h(E.id_2(chosen), kappa)) == all[0].comp) ++count;
    }
    if (count != 1)
      throw Error("factor_1cell_weak: factorization of " + f +
                  " not unique up to unique isomorphism");
  }
  return {all[0].hat, chosen, all[0].comp, all.size()};
}

struct WeakTwoCellFactorization {
  CellName hat_f, hat_g, hat_h;
  CellName hat_alpha;       // hat_f => hat_h *fib hat_g, over the identity
  CellName chosen;          // <P alpha | <Pg|z>>
  CellName fibre_composite; // hat_h *fib hat_g
};

// Requires a strictly preserving projection (strictify first otherwise).
inline WeakTwoCellFactorization factor_2cell_weak(const WeakProjection& pr,
                                                  const Cleavage& C,
                                                  const CellName& alpha) {
  if (!strictly_preserving(pr))
    throw Error("factor_2cell_weak: projection must preserve composition strictly");
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  const FinBicategory& Btot = pr.base();
  const auto& ad = E.two(alpha);
  const CellName f = ad.src, g = ad.tgt;
  const auto& fd = E.one(f);
  const CellName w = fd.src, z = fd.tgt;
  const CellName bw = pr.obj(w);

  WeakOneCellFactorization Ff = factor_1cell_weak(pr, C, f);
  WeakOneCellFactorization Fg = factor_1cell_weak(pr, C, g);
  const CellName chosen2 = C.l2(pr.two(alpha), Fg.chosen);
  const CellName h = E.two(chosen2).src;

  // eta : chosen_f . hat_f => h . hat_g over the identity with
  // (chosen2 * 1) . eta = tau_g^{-1} . alpha . tau_f.
  const CellName lhs_target = E.comp1(h, Fg.hat);
  const CellName rhs = vcomp_seq(E, {inverse_2cell(pr.total(), Fg.comparison), alpha,
                                     Ff.comparison});
  std::vector<CellName> etas;
  for (const auto& cand :
       E.two_cells_between(E.comp1(Ff.chosen, Ff.hat), lhs_target))
    if (pr.two(cand) == B.id_2(B.comp1(pr.one(f), B.id_1(bw))) &&
        E.comp2v(E.comp2h(chosen2, E.id_2(Fg.hat)), cand) == rhs)
      etas.push_back(cand);
  if (etas.size() != 1)
    throw Error("factor_2cell_weak: " + std::to_string(etas.size()) +
                " eta candidates for " + alpha);

  WeakOneCellFactorization Fh = factor_1cell_weak(pr, C, h);
  if (Fh.chosen != Ff.chosen)
    throw Error("factor_2cell_weak: chosen lift mismatch for " + alpha);

  // Fibre composite hat_h *f hat_g : the domain of the chosen lift of
  // r^{-1}_{1} at hat_h . hat_g.
  const CellName runit_inv = inverse_2cell(Btot, Btot.r(B.id_1(bw)));
  const CellName fib_lift = C.l2(runit_inv, E.comp1(Fh.hat, Fg.hat));
  const CellName hstarg = E.two(fib_lift).src;

  // hat_alpha : hat_f => hat_h *f hat_g over 1_{1} with
  //   (1_{chosen_f} * hat_alpha) = [assoc paste] . (tau_h^{-1} * 1) . eta . (1 * fib_lift^{-1}) ...
  // assembled so that both sides live on chosen_f . (-).
  std::vector<CellName> steps;
  steps.push_back(E.comp2h(E.id_2(Ff.chosen), inverse_2cell(pr.total(), fib_lift)));
  steps.push_back(coherence_cell(pr.total(),
                                 pnode(pnode(pleaf(Ff.chosen), pleaf(Fh.hat)), pleaf(Fg.hat)),
                                 pnode(pleaf(Ff.chosen), pnode(pleaf(Fh.hat), pleaf(Fg.hat)))));
  steps.push_back(E.comp2h(inverse_2cell(pr.total(), Fh.comparison), E.id_2(Fg.hat)));
  steps.push_back(etas[0]);
  const CellName rhs2 = vcomp_seq(E, steps);
  std::vector<CellName> hats;
  for (const auto& cand : E.two_cells_between(Ff.hat, hstarg))
    if (pr.two(cand) == B.id_2(B.id_1(bw)) &&
        E.comp2h(E.id_2(Ff.chosen), cand) == rhs2)
      hats.push_back(cand);
  if (hats.size() != 1)
    throw Error("factor_2cell_weak: " + std::to_string(hats.size()) +
                " hat candidates for " + alpha);

  return {Ff.hat, Fg.hat, Fh.hat, hats[0], chosen2, hstarg};
}

// ---------------------------------------------------------------------------
// Closure properties (weak analogues, exhaustive).

inline ValidationReport check_cartesian_closure_weak(const WeakProjection& pr,
                                                     std::size_t witness_limit = 100) {
  ValidationReport rep;
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  CartesianTables ct = cartesian_tables_weak(pr);

  // Isomorphic 1-cells are cartesian together.
  for (const auto& [f, fd] : E.one_cells)
    for (const auto& g : E.one_cells_between(fd.src, fd.tgt)) {
      bool iso = false;
      for (const auto& c : E.two_cells_between(f, g))
        if (is_invertible_2cell(E, c)) iso = true;
      if (iso && ct.one.at(f) != ct.one.at(g)) rep.add("closure-weak/iso", {f, g});
    }
  for (const auto& pair : enumerate_composable(E, 2, 1)) {
    const auto& g = pair[0];
    const auto& f = pair[1];
    bool cf = ct.one.at(f), cg = ct.one.at(g), cgf = ct.one.at(E.comp1(g, f));
    if (cf && cg && !cgf) rep.add("closure-weak/composition", {g, f});
    if (cg && cgf && !cf) rep.add("closure-weak/cancellation", {g, f});
  }
  // Equivalences are cartesian; cartesian over an equivalence is an equivalence.
  for (const auto& [f, fd] : E.one_cells) {
    if (is_equivalence_1cell(E, f) && !ct.one.at(f))
      rep.add("closure-weak/equivalence-cartesian", {f});
    if (ct.one.at(f) && is_equivalence_1cell(B, pr.one(f)) && !is_equivalence_1cell(E, f))
      rep.add("closure-weak/equivalence-detection", {f});
  }
  // Invertible 2-cells are cartesian.
  for (const auto& [a, ad] : E.two_cells)
    if (is_invertible_2cell(E, a) && !ct.two.at(a))
      rep.add("closure-weak/iso-2-cartesian", {a});

  rep.truncate(witness_limit);
  return rep;
}

// Lifts of a fixed (h, alpha) along a cartesian 1-cell are unique up to a
// unique invertible 2-cell; checked exhaustively over all lift pairs.
inline ValidationReport check_weak_lift_uniqueness(const WeakProjection& pr,
                                                   std::size_t witness_limit = 100) {
  ValidationReport rep;
  const CellTables& E = pr.total().t;
  const CellTables& B = pr.base().t;
  for (const auto& [f, fd] : E.one_cells) {
    if (!is_cartesian_1cell_weak(pr, f).cartesian) continue;
    for (const auto& [g, gd] : E.one_cells) {
      if (gd.tgt != fd.tgt) continue;
      for (const auto& [h, hd] : B.one_cells) {
        if (hd.src != pr.obj(gd.src) || hd.tgt != pr.obj(fd.src)) continue;
        for (const auto& alpha : B.two_cells_between(B.comp1(pr.one(f), h), pr.one(g))) {
          if (!is_invertible_2cell(B, alpha)) continue;
          auto lifts = detail::weak_lifts(pr, f, g, h, alpha);
          for (std::size_t i = 0; i + 1 < lifts.size(); ++i)
            for (std::size_t j = i + 1; j < lifts.size(); ++j) {
              int count = 0;
              for (const auto& kappa : E.two_cells_between(lifts[i].hat, lifts[j].hat)) {
                if (!is_invertible_2cell(E, kappa)) continue;
                if (E.comp2v(lifts[j].comp, E.comp2h(E.id_2(f), kappa)) != lifts[i].comp)
                  continue;
                if (B.comp2v(lifts[j].basecmp, pr.two(kappa)) != lifts[i].basecmp)
                  continue;
                ++count;
              }
              if (count != 1) {
                rep.add("weak-lift-uniqueness", {f, g, h, alpha});
                if (rep.violations.size() >= witness_limit) return rep;
              }
            }
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Cartesian homomorphisms between weak fibrations, possibly over a base map.

inline ValidationReport check_cartesian_homomorphism(const WeakProjection& P,
                                                     const WeakProjection& Q,
                                                     const Homomorphism& F,
                                                     const FunctorData* base_map = nullptr,
                                                     bool check_reflection = false,
                                                     std::size_t witness_limit = 100) {
  ValidationReport rep;
  // Square on actions: Q . F = G . P (G the base map, identity if absent).
  for (const auto& [x, y] : F.m.on_obj) {
    CellName lhs = Q.obj(y);
    CellName rhs = base_map ? base_map->obj(P.obj(x)) : P.obj(x);
    if (lhs != rhs) rep.add("cartesian-hom/square-obj", {x});
  }
  for (const auto& [f, g] : F.m.on_1) {
    CellName lhs = Q.one(g);
    CellName rhs = base_map ? base_map->one(P.one(f)) : P.one(f);
    if (lhs != rhs) rep.add("cartesian-hom/square-1", {f});
  }
  for (const auto& [a, b] : F.m.on_2) {
    CellName lhs = Q.two(b);
    CellName rhs = base_map ? base_map->two(P.two(a)) : P.two(a);
    if (lhs != rhs) rep.add("cartesian-hom/square-2", {a});
  }
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }

  CartesianTables ctP = cartesian_tables_weak(P);
  for (const auto& [f, d] : P.total().t.one_cells) {
    bool img = is_cartesian_1cell_weak(Q, F.m.one(f)).cartesian;
    if (ctP.one.at(f) && !img) rep.add("cartesian-hom/1-not-preserved", {f, F.m.one(f)});
    if (check_reflection && img && !ctP.one.at(f))
      rep.add("cartesian-hom/1-not-reflected", {f, F.m.one(f)});
  }
  for (const auto& [a, d] : P.total().t.two_cells) {
    bool img = is_cartesian_2cell_weak(Q, F.m.two(a)).cartesian;
    if (ctP.two.at(a) && !img) rep.add("cartesian-hom/2-not-preserved", {a, F.m.two(a)});
    if (check_reflection && img && !ctP.two.at(a))
      rep.add("cartesian-hom/2-not-reflected", {a, F.m.two(a)});
  }
  rep.truncate(witness_limit);
  return rep;
}

}  // namespace fibcat
