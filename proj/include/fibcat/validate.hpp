#pragma once

// Exhaustive axiom validation for FinTwoCategory and FinBicategory.
//
// Malformed tables (dangling names, missing or extra composition entries)
// are reported with a "malformed/..." law tag and short-circuit the law
// phase; law violations carry the witnessing cell tuple in enumeration
// order.  Reports are deterministic.

#include "fibcat/core.hpp"

namespace fibcat {

namespace detail {

inline void check_well_formed(const CellTables& t, ValidationReport& rep) {
  for (const auto& [f, d] : t.one_cells) {
    if (!t.has_object(d.src)) rep.add("malformed/dangling-object", {f, d.src});
    if (!t.has_object(d.tgt)) rep.add("malformed/dangling-object", {f, d.tgt});
  }
  for (const auto& [a, d] : t.two_cells) {
    if (!t.has_one(d.src)) rep.add("malformed/dangling-1-cell", {a, d.src});
    if (!t.has_one(d.tgt)) rep.add("malformed/dangling-1-cell", {a, d.tgt});
  }
  // Identities: present and endo.
  for (const auto& x : t.objects) {
    auto it = t.id1.find(x);
    if (it == t.id1.end()) {
      rep.add("malformed/missing-id1", {x});
      continue;
    }
    if (!t.has_one(it->second)) {
      rep.add("malformed/dangling-1-cell", {it->second});
    } else {
      const auto& d = t.one_cells.at(it->second);
      if (d.src != x || d.tgt != x) rep.add("malformed/id1-not-endo", {x, it->second});
    }
  }
  for (const auto& [x, f] : t.id1)
    if (!t.has_object(x)) rep.add("malformed/dangling-object", {x, f});
  for (const auto& [f, d] : t.one_cells) {
    auto it = t.id2.find(f);
    if (it == t.id2.end()) {
      rep.add("malformed/missing-id2", {f});
      continue;
    }
    if (!t.has_two(it->second)) {
      rep.add("malformed/dangling-2-cell", {it->second});
    } else {
      const auto& d2 = t.two_cells.at(it->second);
      if (d2.src != f || d2.tgt != f) rep.add("malformed/id2-not-endo", {f, it->second});
    }
  }
  for (const auto& [f, a] : t.id2)
    if (!t.has_one(f)) rep.add("malformed/dangling-1-cell", {f, a});

  // hcomp1: total over composable pairs, defined nowhere else, boundary-compatible.
  for (const auto& [g, gd] : t.one_cells)
    for (const auto& [f, fd] : t.one_cells) {
      bool comp = fd.tgt == gd.src;
      auto it = t.hcomp1.find({g, f});
      if (comp && it == t.hcomp1.end()) rep.add("malformed/hcomp1-not-total", {g, f});
      if (!comp && it != t.hcomp1.end()) rep.add("malformed/hcomp1-non-composable", {g, f});
      if (comp && it != t.hcomp1.end() && !t.has_one(it->second))
        rep.add("malformed/dangling-1-cell", {it->second});
    }
  for (const auto& [k, v] : t.hcomp1)
    if (!t.has_one(k.first) || !t.has_one(k.second) || !t.has_one(v))
      rep.add("malformed/dangling-1-cell", {k.first, k.second, v});

  // vcomp2.
  for (const auto& [b, bd] : t.two_cells)
    for (const auto& [a, ad] : t.two_cells) {
      bool comp = ad.tgt == bd.src;
      auto it = t.vcomp2.find({b, a});
      if (comp && it == t.vcomp2.end()) rep.add("malformed/vcomp2-not-total", {b, a});
      if (!comp && it != t.vcomp2.end()) rep.add("malformed/vcomp2-non-composable", {b, a});
      if (comp && it != t.vcomp2.end() && !t.has_two(it->second))
        rep.add("malformed/dangling-2-cell", {it->second});
    }

  // hcomp2: keyed (s,t), s over the g-side; result boundary is the
  // hcomp1-composite of the boundaries.
  for (const auto& [s, sd] : t.two_cells)
    for (const auto& [u, ud] : t.two_cells) {
      bool comp = t.has_one(ud.src) && t.has_one(sd.src) &&
                  t.one_cells.at(ud.src).tgt == t.one_cells.at(sd.src).src;
      auto it = t.hcomp2.find({s, u});
      if (comp && it == t.hcomp2.end()) rep.add("malformed/hcomp2-not-total", {s, u});
      if (!comp && it != t.hcomp2.end()) rep.add("malformed/hcomp2-non-composable", {s, u});
      if (comp && it != t.hcomp2.end() && !t.has_two(it->second))
        rep.add("malformed/dangling-2-cell", {it->second});
    }
}

// Boundary compatibility of every table entry; a law phase, not a
// malformedness phase, so later law groups still run and report.
inline void check_boundaries(const CellTables& t, ValidationReport& rep) {
  for (const auto& [a, d] : t.two_cells) {
    const auto& s = t.one_cells.at(d.src);
    const auto& g = t.one_cells.at(d.tgt);
    if (s.src != g.src || s.tgt != g.tgt)
      rep.add("boundary/two-cell-parallel", {a, d.src, d.tgt});
  }
  for (const auto& [k, v] : t.hcomp1) {
    const auto& rd = t.one_cells.at(v);
    if (rd.src != t.one(k.second).src || rd.tgt != t.one(k.first).tgt)
      rep.add("boundary/hcomp1", {k.first, k.second, v});
  }
  for (const auto& [k, v] : t.vcomp2) {
    const auto& rd = t.two_cells.at(v);
    if (rd.src != t.two(k.second).src || rd.tgt != t.two(k.first).tgt)
      rep.add("boundary/vcomp2", {k.first, k.second, v});
  }
  for (const auto& [k, v] : t.hcomp2) {
    const auto& rd = t.two_cells.at(v);
    auto src = t.hcomp1.find({t.two(k.first).src, t.two(k.second).src});
    auto tgt = t.hcomp1.find({t.two(k.first).tgt, t.two(k.second).tgt});
    if (src == t.hcomp1.end() || tgt == t.hcomp1.end() || rd.src != src->second ||
        rd.tgt != tgt->second)
      rep.add("boundary/hcomp2", {k.first, k.second, v});
  }
}

// Runs a law-check group, converting a lookup blow-up caused by earlier
// boundary damage into a single violation instead of an exception.
template <typename Fn>
inline void guarded(const char* law, ValidationReport& rep, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    rep.add(std::string("internal/aborted-") + law, {e.what()});
  }
}

// Laws shared by the hom-categories: vertical associativity and units.
inline void check_hom_category_laws(const CellTables& t, ValidationReport& rep) {
  for (const auto& [a, ad] : t.two_cells) {
    if (t.comp2v(a, t.id_2(ad.src)) != a) rep.add("unit/vcomp2-right", {a, t.id_2(ad.src)});
    if (t.comp2v(t.id_2(ad.tgt), a) != a) rep.add("unit/vcomp2-left", {t.id_2(ad.tgt), a});
  }
  for (const auto& triple : enumerate_composable(t, 3, 2)) {
    const auto& c = triple[0];
    const auto& b = triple[1];
    const auto& a = triple[2];
    if (t.comp2v(c, t.comp2v(b, a)) != t.comp2v(t.comp2v(c, b), a))
      rep.add("assoc/vcomp2", {c, b, a});
  }
}

// Functoriality of horizontal composition: interchange plus identities.
inline void check_interchange(const CellTables& t, ValidationReport& rep) {
  for (const auto& pair : enumerate_composable(t, 2, 1)) {
    const auto& g = pair[0];
    const auto& f = pair[1];
    if (t.comp2h(t.id_2(g), t.id_2(f)) != t.id_2(t.comp1(g, f)))
      rep.add("unit/hcomp2-id2", {g, f});
  }
  // (b'.b)*(a'.a) = (b'*a').(b*a) for vertically composable b',b and a',a
  // sitting over composable 1-cells.
  for (const auto& [bp, bpd] : t.two_cells)
    for (const auto& [b, bd] : t.two_cells) {
      if (bd.tgt != bpd.src) continue;
      for (const auto& [ap, apd] : t.two_cells)
        for (const auto& [a, ad] : t.two_cells) {
          if (ad.tgt != apd.src) continue;
          if (!t.composable2h(b, a)) continue;
          CellName lhs = t.comp2h(t.comp2v(bp, b), t.comp2v(ap, a));
          CellName rhs = t.comp2v(t.comp2h(bp, ap), t.comp2h(b, a));
          if (lhs != rhs) rep.add("interchange/middle-four", {bp, b, ap, a});
        }
    }
}

}  // namespace detail

inline ValidationReport validate_two_category(const FinTwoCategory& c,
                                              std::size_t witness_limit = 100) {
  const CellTables& t = c.t;
  ValidationReport rep;
  detail::check_well_formed(t, rep);
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }
  detail::check_boundaries(t, rep);

  detail::guarded("hcomp1-laws", rep, [&] {
    for (const auto& [f, d] : t.one_cells) {
      if (t.comp1(f, t.id_1(d.src)) != f) rep.add("unit/hcomp1-right", {f});
      if (t.comp1(t.id_1(d.tgt), f) != f) rep.add("unit/hcomp1-left", {f});
    }
    for (const auto& triple : enumerate_composable(t, 3, 1)) {
      const auto& h = triple[0];
      const auto& g = triple[1];
      const auto& f = triple[2];
      if (t.comp1(t.comp1(h, g), f) != t.comp1(h, t.comp1(g, f)))
        rep.add("assoc/hcomp1", {h, g, f});
    }
  });

  detail::guarded("hom-category-laws", rep,
                  [&] { detail::check_hom_category_laws(t, rep); });

  detail::guarded("hcomp2-laws", rep, [&] {
    for (const auto& [a, ad] : t.two_cells) {
      const auto& x = t.src0_of2(a);
      const auto& y = t.tgt0_of2(a);
      if (t.comp2h(a, t.id_2(t.id_1(x))) != a) rep.add("unit/hcomp2-right", {a});
      if (t.comp2h(t.id_2(t.id_1(y)), a) != a) rep.add("unit/hcomp2-left", {a});
    }
    for (const auto& [c2, cd] : t.two_cells)
      for (const auto& [b, bd] : t.two_cells) {
        if (!t.composable2h(c2, b)) continue;
        for (const auto& [a, ad] : t.two_cells) {
          if (!t.composable2h(b, a)) continue;
          if (t.comp2h(t.comp2h(c2, b), a) != t.comp2h(c2, t.comp2h(b, a)))
            rep.add("assoc/hcomp2", {c2, b, a});
        }
      }
  });

  detail::guarded("interchange", rep, [&] { detail::check_interchange(t, rep); });
  rep.truncate(witness_limit);
  return rep;
}

inline ValidationReport validate_bicategory(const FinBicategory& b,
                                            std::size_t witness_limit = 100) {
  const CellTables& t = b.t;
  ValidationReport rep;
  detail::check_well_formed(t, rep);

  // Coherence tables: totality and dangling references.
  for (const auto& triple : enumerate_composable(t, 3, 1)) {
    auto it = b.assoc.find({triple[0], triple[1], triple[2]});
    if (it == b.assoc.end())
      rep.add("malformed/assoc-not-total", triple);
    else if (!t.has_two(it->second))
      rep.add("malformed/dangling-2-cell", {it->second});
  }
  for (const auto& [f, d] : t.one_cells) {
    auto lit = b.lunit.find(f);
    if (lit == b.lunit.end())
      rep.add("malformed/lunit-not-total", {f});
    else if (!t.has_two(lit->second))
      rep.add("malformed/dangling-2-cell", {lit->second});
    auto rit = b.runit.find(f);
    if (rit == b.runit.end())
      rep.add("malformed/runit-not-total", {f});
    else if (!t.has_two(rit->second))
      rep.add("malformed/dangling-2-cell", {rit->second});
  }
  for (const auto& [c, i] : b.inv2)
    if (!t.has_two(c) || !t.has_two(i)) rep.add("malformed/dangling-2-cell", {c, i});
  if (!rep.passed) {
    rep.truncate(witness_limit);
    return rep;
  }
  detail::check_boundaries(t, rep);
  for (const auto& [k, v] : b.assoc) {
    const auto& d = t.two_cells.at(v);
    if (d.src != t.comp1(t.comp1(std::get<0>(k), std::get<1>(k)), std::get<2>(k)) ||
        d.tgt != t.comp1(std::get<0>(k), t.comp1(std::get<1>(k), std::get<2>(k))))
      rep.add("boundary/assoc", {std::get<0>(k), std::get<1>(k), std::get<2>(k), v});
  }
  for (const auto& [f, v] : b.lunit) {
    const auto& d = t.two_cells.at(v);
    if (d.src != t.comp1(t.id_1(t.one(f).tgt), f) || d.tgt != f)
      rep.add("boundary/lunit", {f, v});
  }
  for (const auto& [f, v] : b.runit) {
    const auto& d = t.two_cells.at(v);
    if (d.src != t.comp1(f, t.id_1(t.one(f).src)) || d.tgt != f)
      rep.add("boundary/runit", {f, v});
  }

  // Declared inverses compose to identities both ways.
  auto check_declared_inverse = [&](const CellName& c, const char* law) {
    auto inv = b.declared_inverse(c);
    if (!inv) {
      rep.add(std::string(law) + "/no-declared-inverse", {c});
      return;
    }
    const auto& d = t.two_cells.at(c);
    const auto& di = t.two_cells.at(*inv);
    if (di.src != d.tgt || di.tgt != d.src) {
      rep.add(std::string(law) + "/inverse-boundary", {c, *inv});
      return;
    }
    if (t.comp2v(*inv, c) != t.id_2(d.src) || t.comp2v(c, *inv) != t.id_2(d.tgt))
      rep.add(std::string(law) + "/inverse-law", {c, *inv});
  };
  detail::guarded("declared-inverses", rep, [&] {
    for (const auto& [k, v] : b.assoc) check_declared_inverse(v, "coherence/assoc");
    for (const auto& [k, v] : b.lunit) check_declared_inverse(v, "coherence/lunit");
    for (const auto& [k, v] : b.runit) check_declared_inverse(v, "coherence/runit");
    for (const auto& [c, i] : b.inv2) {
      const auto& d = t.two_cells.at(c);
      const auto& di = t.two_cells.at(i);
      if (di.src != d.tgt || di.tgt != d.src)
        rep.add("inv2/boundary", {c, i});
      else if (t.comp2v(i, c) != t.id_2(d.src) || t.comp2v(c, i) != t.id_2(d.tgt))
        rep.add("inv2/law", {c, i});
    }
  });

  detail::guarded("hom-category-laws", rep,
                  [&] { detail::check_hom_category_laws(t, rep); });
  detail::guarded("interchange", rep, [&] { detail::check_interchange(t, rep); });

  // Naturality of a in all three arguments.
  detail::guarded("coherence-laws", rep, [&] {
  for (const auto& [s, sd] : t.two_cells)
    for (const auto& [u, ud] : t.two_cells) {
      if (!t.composable2h(s, u)) continue;
      for (const auto& [v, vd] : t.two_cells) {
        if (!t.composable2h(u, v)) continue;
        // a_{h',g',f'} . ((s*u)*v) = (s*(u*v)) . a_{h,g,f}
        CellName lhs = t.comp2v(b.a(sd.tgt, ud.tgt, vd.tgt),
                                t.comp2h(t.comp2h(s, u), v));
        CellName rhs = t.comp2v(t.comp2h(s, t.comp2h(u, v)),
                                b.a(sd.src, ud.src, vd.src));
        if (lhs != rhs) rep.add("naturality/assoc", {s, u, v});
      }
    }
  // Naturality of l and r.
  for (const auto& [s, sd] : t.two_cells) {
    const auto& y = t.tgt0_of2(s);
    const auto& x = t.src0_of2(s);
    CellName lhs = t.comp2v(b.l(sd.tgt), t.comp2h(t.id_2(t.id_1(y)), s));
    CellName rhs = t.comp2v(s, b.l(sd.src));
    if (lhs != rhs) rep.add("naturality/lunit", {s});
    lhs = t.comp2v(b.r(sd.tgt), t.comp2h(s, t.id_2(t.id_1(x))));
    rhs = t.comp2v(s, b.r(sd.src));
    if (lhs != rhs) rep.add("naturality/runit", {s});
  }

  // Pentagon.
  for (const auto& [k, kd] : t.one_cells)
    for (const auto& [h, hd] : t.one_cells) {
      if (hd.tgt != kd.src) continue;
      for (const auto& [g, gd] : t.one_cells) {
        if (gd.tgt != hd.src) continue;
        for (const auto& [f, fd] : t.one_cells) {
          if (fd.tgt != gd.src) continue;
          CellName lhs = t.comp2v(
              t.comp2h(t.id_2(k), b.a(h, g, f)),
              t.comp2v(b.a(k, t.comp1(h, g), f), t.comp2h(b.a(k, h, g), t.id_2(f))));
          CellName rhs = t.comp2v(b.a(k, h, t.comp1(g, f)), b.a(t.comp1(k, h), g, f));
          if (lhs != rhs) rep.add("pentagon", {k, h, g, f});
        }
      }
    }

  // Triangle.
  for (const auto& pair : enumerate_composable(t, 2, 1)) {
    const auto& g = pair[0];
    const auto& f = pair[1];
    const auto& y = t.one(f).tgt;
    CellName lhs = t.comp2v(t.comp2h(t.id_2(g), b.l(f)), b.a(g, t.id_1(y), f));
    CellName rhs = t.comp2h(b.r(g), t.id_2(f));
    if (lhs != rhs) rep.add("triangle", {g, f});
  }
  });

  rep.truncate(witness_limit);
  return rep;
}

// Embed a strict 2-category as a bicategory with identity coherence cells.
inline FinBicategory embed_bicategory(const FinTwoCategory& c) {
  FinBicategory b;
  b.t = c.t;
  for (const auto& triple : enumerate_composable(c.t, 3, 1))
    b.assoc[{triple[0], triple[1], triple[2]}] =
        c.t.id_2(c.t.comp1(c.t.comp1(triple[0], triple[1]), triple[2]));
  for (const auto& [f, d] : c.t.one_cells) {
    b.lunit[f] = c.t.id_2(f);
    b.runit[f] = c.t.id_2(f);
    b.inv2[c.t.id_2(f)] = c.t.id_2(f);
  }
  for (const auto& [x, f] : c.t.id1) b.inv2[c.t.id_2(f)] = c.t.id_2(f);
  return b;
}

// Strip a bicategory back to a strict 2-category when all coherence cells
// are identities and the tables satisfy the strict laws on the nose.
inline std::optional<FinTwoCategory> to_strict(const FinBicategory& b) {
  for (const auto& [k, v] : b.assoc)
    if (v != b.t.id_2(b.t.two(v).src)) return std::nullopt;
  for (const auto& [k, v] : b.lunit)
    if (v != b.t.id_2(b.t.two(v).src)) return std::nullopt;
  for (const auto& [k, v] : b.runit)
    if (v != b.t.id_2(b.t.two(v).src)) return std::nullopt;
  FinTwoCategory c{b.t};
  if (!validate_two_category(c).passed) return std::nullopt;
  return c;
}

}  // namespace fibcat
