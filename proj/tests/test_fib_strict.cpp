#include <catch2/catch_amalgamated.hpp>

#include "fibcat/fib_strict.hpp"
#include "fibcat/groth_strict.hpp"
#include "fibcat/samples.hpp"
#include "support.hpp"

using namespace fibcat;

namespace {

Projection sigma2_to_point() {
  auto s2 = samples::walking_two_cell();
  auto one = samples::terminal();
  TwoFunctor P{s2, one, {}};
  for (const auto& x : s2.t.objects) P.m.on_obj[x] = "pt";
  for (const auto& [f, d] : s2.t.one_cells) P.m.on_1[f] = "id_pt";
  for (const auto& [a, d] : s2.t.two_cells) P.m.on_2[a] = "ii_id_pt";
  return Projection{P};
}

// Keep only the cells whose boundary objects survive.
FinTwoCategory restrict_to_objects(const FinTwoCategory& c,
                                   const std::set<CellName>& keep) {
  FinTwoCategory out;
  CellTables& t = out.t;
  const CellTables& s = c.t;
  t.objects = keep;
  for (const auto& [f, d] : s.one_cells)
    if (keep.count(d.src) && keep.count(d.tgt)) t.one_cells[f] = d;
  for (const auto& [a, d] : s.two_cells)
    if (t.one_cells.count(d.src) && t.one_cells.count(d.tgt)) t.two_cells[a] = d;
  for (const auto& x : keep) t.id1[x] = s.id1.at(x);
  for (const auto& [f, d] : t.one_cells) t.id2[f] = s.id2.at(f);
  for (const auto& [k, v] : s.hcomp1)
    if (t.one_cells.count(k.first) && t.one_cells.count(k.second)) t.hcomp1[k] = v;
  for (const auto& [k, v] : s.vcomp2)
    if (t.two_cells.count(k.first) && t.two_cells.count(k.second)) t.vcomp2[k] = v;
  for (const auto& [k, v] : s.hcomp2)
    if (t.two_cells.count(k.first) && t.two_cells.count(k.second)) t.hcomp2[k] = v;
  return out;
}

}  // namespace

TEST_CASE("identity 1-cells are cartesian for any projection") {
  auto pr = identity_projection(samples::walking_two_cell());
  for (const auto& x : pr.total().t.objects)
    REQUIRE(is_cartesian_1cell_strict(pr, pr.total().t.id_1(x)).cartesian);
  auto pt = sigma2_to_point();
  for (const auto& x : pt.total().t.objects)
    REQUIRE(is_cartesian_1cell_strict(pt, pt.total().t.id_1(x)).cartesian);
}

TEST_CASE("cartesianness over the point is decided by brute force") {
  auto pt = sigma2_to_point();
  // Neither f nor g is cartesian over the point: each needs a unique
  // factorization of the other parallel 1-cell through it, and the walking
  // 2-cell has no such vertical 1-cells.
  auto cf = is_cartesian_1cell_strict(pt, "f");
  REQUIRE_FALSE(cf.cartesian);
  REQUIRE(cf.witness.law == "cartesian-1/lift-count");
  REQUIRE_FALSE(is_cartesian_1cell_strict(pt, "g").cartesian);
}

TEST_CASE("invertible 2-cells are cartesian, one-way 2-cells are not") {
  auto pr = identity_projection(samples::walking_two_cell());
  for (const auto& [a, d] : pr.total().t.two_cells)
    REQUIRE(is_cartesian_2cell_strict(pr, a).cartesian);

  auto pt = sigma2_to_point();
  REQUIRE(is_cartesian_2cell_strict(pt, "ii_f").cartesian);
  auto c = is_cartesian_2cell_strict(pt, "al");
  REQUIRE_FALSE(c.cartesian);
  REQUIRE(c.witness.law == "cartesian-2/lift-count");
}

TEST_CASE("identity projection is a split 2-fibration with its only cleavage") {
  auto pr = identity_projection(samples::walking_two_cell());
  auto rep = check_two_fibration(pr);
  REQUIRE(rep.is_fibration());
  REQUIRE(rep.precomp_closed);
  REQUIRE(rep.postcomp_closed);
  auto C = default_cleavage(pr);
  REQUIRE(check_cleavage(pr, C).fully_split());
}

TEST_CASE("grothendieck projections are split 2-fibrations") {
  for (const auto& D :
       {samples::constant_diagram(samples::walking_arrow(), samples::walking_two_cell()),
        samples::diagram_over_interval(), samples::diagram_over_sigma2()}) {
    auto G = grothendieck_strict(D);
    auto rep = check_two_fibration(G.proj);
    REQUIRE(rep.is_fibration());
    REQUIRE(rep.precomp_closed);
    REQUIRE(rep.postcomp_closed);
    REQUIRE(check_cleavage(G.proj, G.cleavage).fully_split());
  }
}

TEST_CASE("chosen lifts in a grothendieck total category are cartesian") {
  auto G = grothendieck_strict(samples::diagram_over_interval());
  for (const auto& [k, h] : G.cleavage.lift1)
    REQUIRE(is_cartesian_1cell_strict(G.proj, h).cartesian);
  for (const auto& [k, s] : G.cleavage.lift2)
    REQUIRE(is_cartesian_2cell_strict(G.proj, s).cartesian);
}

TEST_CASE("deleting a fibre breaks 1-cell lifting with witness (f,e)") {
  auto G = grothendieck_strict(samples::diagram_over_interval());
  FinTwoCategory mutil = restrict_to_objects(G.total, {"(1|0)", "(1|1)"});
  REQUIRE_PASSED(validate_two_category(mutil));
  FunctorData pm;
  for (const auto& x : mutil.t.objects) pm.on_obj[x] = G.proj.P.m.on_obj.at(x);
  for (const auto& [f, d] : mutil.t.one_cells) pm.on_1[f] = G.proj.P.m.on_1.at(f);
  for (const auto& [a, d] : mutil.t.two_cells) pm.on_2[a] = G.proj.P.m.on_2.at(a);
  Projection mut{TwoFunctor{mutil, G.proj.base(), pm}};

  auto rep = check_two_fibration(mut);
  REQUIRE_FALSE(rep.has_cart_1_lifts);
  bool witnessed = false;
  for (const auto& w : rep.witnesses)
    if (w.law == "fibration/no-1-cell-lift" && w.cells.at(0) == "u") witnessed = true;
  REQUIRE(witnessed);
}

TEST_CASE("rechoosing a lift through a nonidentity iso keeps cartesianness, breaks splitness") {
  auto G = grothendieck_strict(
      samples::constant_diagram(samples::walking_composable_pair(), samples::chaotic_z2()));
  auto C = G.cleavage;
  REQUIRE(C.lift1.at({"w", "(2|o)"}) == "(w|e|o)");
  REQUIRE(G.total.t.has_one("(w|u|o)"));
  C.lift1[{"w", "(2|o)"}] = "(w|u|o)";
  auto cr = check_cleavage(G.proj, C);
  REQUIRE(cr.lifts_cartesian);
  REQUIRE_FALSE(cr.fully_split());
  bool split1 = false;
  for (const auto& w : cr.witnesses)
    if (w.law == "cleavage/split-1cells") split1 = true;
  REQUIRE(split1);
}

TEST_CASE("vertical and chosen 1-cells factor trivially") {
  auto G = grothendieck_strict(samples::diagram_over_sigma2());
  auto C = G.cleavage;
  const CellTables& E = G.total.t;
  for (const auto& [f, d] : E.one_cells) {
    auto F = factor_1cell_strict(G.proj, C, f);
    REQUIRE(E.comp1(F.chosen, F.hat) == f);
    REQUIRE(G.proj.one(F.hat) == G.proj.base().t.id_1(G.proj.obj(E.one(f).src)));
    if (f == C.l1(G.proj.one(f), d.tgt)) REQUIRE(F.hat == E.id_1(d.src));
    if (G.proj.one(f) == G.proj.base().t.id_1(G.proj.obj(d.src))) {
      // Vertical cells: the chosen part is the identity lift (split cleavage).
      REQUIRE(F.chosen == C.l1(G.proj.one(f), d.tgt));
    }
  }
}

TEST_CASE("2-cell factorization satisfies its pasting equation everywhere") {
  auto G = grothendieck_strict(samples::diagram_over_sigma2());
  auto C = G.cleavage;
  const CellTables& E = G.total.t;
  for (const auto& [a, d] : E.two_cells) {
    auto F = factor_2cell_strict(G.proj, C, a);
    CellName chosen1 = C.l1(G.proj.one(d.src), E.one(d.src).tgt);
    CellName recomposed = E.comp2v(E.comp2h(F.chosen, E.id_2(F.hat_g)),
                                   E.comp2h(E.id_2(chosen1), F.hat_alpha));
    REQUIRE(recomposed == a);
    REQUIRE(G.proj.two(F.hat_alpha) ==
            G.proj.base().t.id_2(G.proj.base().t.id_1(G.proj.obj(E.src0_of2(a)))));
  }
}

TEST_CASE("identity functor is split cartesian") {
  auto G = grothendieck_strict(samples::diagram_over_interval());
  auto F = identity_two_functor(G.total);
  REQUIRE_PASSED(check_cartesian_functor(G.proj, G.proj, F, &G.cleavage, &G.cleavage));
}

TEST_CASE("a functor landing a cartesian cell on a non-cartesian one is caught") {
  // P = identity on the walking arrow; Q doubles the arrow so that neither
  // copy is cartesian; F sends the cartesian u to u1.
  auto two = samples::walking_arrow();
  Projection P = identity_projection(two);

  samples::StrictBuilder b;
  b.object("0");
  b.object("1");
  b.one("u1", "0", "1");
  b.one("u2", "0", "1");
  auto dbl = b.done();
  TwoFunctor Q{dbl, two, {}};
  for (const auto& x : dbl.t.objects) Q.m.on_obj[x] = x;
  Q.m.on_1["id_0"] = "id_0";
  Q.m.on_1["id_1"] = "id_1";
  Q.m.on_1["u1"] = "u";
  Q.m.on_1["u2"] = "u";
  for (const auto& [a, d] : dbl.t.two_cells)
    Q.m.on_2[a] = two.t.id_2(Q.m.on_1.at(dbl.t.two(a).src));
  Projection Qp{Q};
  REQUIRE_PASSED(validate_two_functor(Q));
  REQUIRE_FALSE(is_cartesian_1cell_strict(Qp, "u1").cartesian);

  TwoFunctor F{two, dbl, {}};
  for (const auto& x : two.t.objects) F.m.on_obj[x] = x;
  F.m.on_1["id_0"] = "id_0";
  F.m.on_1["id_1"] = "id_1";
  F.m.on_1["u"] = "u1";
  for (const auto& [a, d] : two.t.two_cells)
    F.m.on_2[a] = dbl.t.id_2(F.m.on_1.at(two.t.two(a).src));
  REQUIRE_PASSED(validate_two_functor(F));

  auto rep = check_cartesian_functor(P, Qp, F);
  REQUIRE_FALSE(rep.passed);
  bool witnessed = false;
  for (const auto& v : rep.violations)
    if (v.law == "cartesian-functor/1-cell-not-preserved" &&
        v.cells == std::vector<CellName>{"u", "u1"})
      witnessed = true;
  REQUIRE(witnessed);
}

TEST_CASE("closure, cancellation, iso-detection, whisker-reflection hold on fixtures") {
  for (const auto& D :
       {samples::diagram_over_interval(), samples::diagram_over_sigma2()}) {
    auto G = grothendieck_strict(D);
    REQUIRE_PASSED(check_cartesian_closure_strict(G.proj));
  }
  REQUIRE_PASSED(
      check_cartesian_closure_strict(identity_projection(samples::walking_two_cell())));
  REQUIRE_PASSED(check_cartesian_closure_strict(sigma2_to_point()));
}

TEST_CASE("chosen-lifts-suffice: fast path agrees with the exhaustive flag") {
  for (const auto& D :
       {samples::diagram_over_interval(), samples::diagram_over_sigma2()}) {
    auto G = grothendieck_strict(D);
    auto rep = check_two_fibration(G.proj);
    REQUIRE(rep.hcomp_closed == hcomp_closed_on_chosen(G.proj, G.cleavage));
  }
}
