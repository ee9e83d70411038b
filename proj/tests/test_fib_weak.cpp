#include <catch2/catch_amalgamated.hpp>

#include "fibcat/fib_weak.hpp"
#include "fibcat/groth_strict.hpp"
#include "fibcat/samples.hpp"
#include "support.hpp"

using namespace fibcat;

TEST_CASE("equivalences are weak-cartesian; identities in particular") {
  auto pr = identity_weak_projection(samples::susp_z4());
  for (const auto& [f, d] : pr.total().t.one_cells)
    REQUIRE(is_cartesian_1cell_weak(pr, f).cartesian);

  auto tp = samples::twisted_phi_projection();
  WeakProjection wp{tp.P};
  for (const auto& [f, d] : wp.total().t.one_cells)
    REQUIRE(is_cartesian_1cell_weak(wp, f).cartesian);
}

TEST_CASE("a non-equivalence 1-cell lacking lifts is not weak-cartesian") {
  // The walking arrow over the point: u cannot lift the isomorphism class
  // of parallel cells (no inverse present).
  auto two = samples::walking_arrow();
  auto one = samples::terminal();
  TwoFunctor P{two, one, {}};
  for (const auto& x : two.t.objects) P.m.on_obj[x] = "pt";
  for (const auto& [f, d] : two.t.one_cells) P.m.on_1[f] = "id_pt";
  for (const auto& [a, d] : two.t.two_cells) P.m.on_2[a] = "ii_id_pt";
  WeakProjection wp = as_weak(Projection{P});
  auto c = is_cartesian_1cell_weak(wp, "u");
  REQUIRE_FALSE(c.cartesian);
  REQUIRE(c.witness.law == "cartesian-1-weak/no-lift");
}

TEST_CASE("strict 2-fibrations viewed weakly still pass all weak flags") {
  for (const auto& D :
       {samples::diagram_over_interval(), samples::diagram_over_sigma2()}) {
    auto G = grothendieck_strict(D);
    auto wp = as_weak(G.proj);
    auto rep = check_fibration_weak(wp);
    INFO(describe(ValidationReport{rep.witnesses.empty(), rep.witnesses}));
    REQUIRE(rep.is_fibration());
    REQUIRE(rep.precomp_closed);
    REQUIRE(rep.postcomp_closed);
  }
}

TEST_CASE("identity homomorphism is a weak fibration") {
  auto wp = identity_weak_projection(samples::susp_z4());
  auto rep = check_fibration_weak(wp);
  REQUIRE(rep.is_fibration());
}

TEST_CASE("the twisted-phi projection is a weak fibration") {
  auto tp = samples::twisted_phi_projection();
  WeakProjection wp{tp.P};
  auto rep = check_fibration_weak(wp);
  REQUIRE(rep.is_fibration());
  REQUIRE_FALSE(strictly_preserving(wp));
}

TEST_CASE("breaking a hom-fibration is caught with the hom pair as witness") {
  // Doubled arrow over the walking arrow: no 2-cell lift of the identity of
  // u exists at... actually the identity always lifts; break local lifting
  // by removing the would-be lift: use the walking 2-cell mapped to the
  // walking arrow, sending al to ii_u; then ii_u has two preimage 1-cells
  // and the hom-functor E(a,b) -> B(0,1) is not a fibration (f cannot lift
  // the identity cartesianly? it can, by ii_f). Instead: project the
  // *discrete* parallel pair onto the walking 2-cell; al has no lift at g.
  samples::StrictBuilder b;
  b.object("a");
  b.object("b");
  b.one("f", "a", "b");
  b.one("g", "a", "b");
  auto pp = b.done();  // parallel pair, no nonidentity 2-cells
  auto s2 = samples::walking_two_cell();
  TwoFunctor P{pp, s2, {}};
  for (const auto& x : pp.t.objects) P.m.on_obj[x] = x;
  for (const auto& [f, d] : pp.t.one_cells) P.m.on_1[f] = f;
  for (const auto& [a, d] : pp.t.two_cells) P.m.on_2[a] = s2.t.id_2(P.m.on_1.at(pp.t.two(a).src));
  WeakProjection wp = as_weak(Projection{P});
  auto rep = check_fibration_weak(wp);
  REQUIRE_FALSE(rep.locally_fibred);
  bool witnessed = false;
  for (const auto& w : rep.witnesses)
    if (w.law == "fibration/no-2-cell-lift" && w.cells == std::vector<CellName>{"al", "g"})
      witnessed = true;
  REQUIRE(witnessed);
}

TEST_CASE("equivalence lifting holds for identity and fibration fixtures") {
  REQUIRE_PASSED(check_equivalence_lifting(identity_weak_projection(samples::susp_z4())));
  auto tp = samples::twisted_phi_projection();
  REQUIRE_PASSED(check_equivalence_lifting(WeakProjection{tp.P}));
  auto G = grothendieck_strict(samples::diagram_over_interval());
  REQUIRE_PASSED(check_equivalence_lifting(as_weak(G.proj)));
}

TEST_CASE("on bigroupoids, equivalence lifting implies fibration") {
  // Both fixtures are bigroupoids (all 1-cells equivalences, all 2-cells isos).
  auto tp = samples::twisted_phi_projection();
  WeakProjection wp{tp.P};
  for (const auto& [f, d] : wp.total().t.one_cells)
    REQUIRE(is_equivalence_1cell(wp.total().t, f));
  for (const auto& [a, d] : wp.total().t.two_cells)
    REQUIRE(is_invertible_2cell(wp.total().t, a));
  if (check_equivalence_lifting(wp).passed)
    REQUIRE(check_fibration_weak(wp).is_fibration());
}

TEST_CASE("strictify on an already strict projection is idempotent") {
  auto G = grothendieck_strict(samples::diagram_over_sigma2());
  auto wp = as_weak(G.proj);
  auto st = strictify(wp);
  REQUIRE(structurally_equal(st.total, wp.total()));
  REQUIRE(same_action(st.proj.P.m, wp.P.m));
  // S is the identity with identity comparison cells.
  for (const auto& [k, v] : st.inclusion.phi_comp)
    REQUIRE(v == wp.total().t.id_2(wp.total().t.two(v).src));
}

TEST_CASE("strictify straightens the twisted-phi fibration") {
  auto tp = samples::twisted_phi_projection();
  WeakProjection wp{tp.P};
  auto st = strictify(wp);

  REQUIRE_PASSED(validate_bicategory(st.total));
  REQUIRE(strictly_preserving(st.proj));
  REQUIRE_PASSED(validate_homomorphism(st.proj.P));
  REQUIRE_PASSED(validate_homomorphism(st.inclusion));

  // P' . S = P on the nose (actions and comparison cells).
  Homomorphism comp = compose_homomorphism(st.proj.P, st.inclusion);
  REQUIRE(same_action(comp.m, wp.P.m));
  REQUIRE(comp.phi_comp == wp.P.phi_comp);
  REQUIRE(comp.phi_id == wp.P.phi_id);

  // S is an isomorphism on all cell dimensions (identity on cells).
  for (const auto& x : wp.total().t.objects) REQUIRE(st.inclusion.m.obj(x) == x);

  // P' is again a fibration and S is cartesian.
  REQUIRE(check_fibration_weak(st.proj).is_fibration());
  REQUIRE_PASSED(check_cartesian_homomorphism(wp, st.proj, st.inclusion));
}

TEST_CASE("weak closure suite on fixtures") {
  auto tp = samples::twisted_phi_projection();
  REQUIRE_PASSED(check_cartesian_closure_weak(WeakProjection{tp.P}));
  REQUIRE_PASSED(check_cartesian_closure_weak(identity_weak_projection(samples::susp_z4())));
  auto G = grothendieck_strict(samples::diagram_over_sigma2());
  REQUIRE_PASSED(check_cartesian_closure_weak(as_weak(G.proj)));
}

TEST_CASE("weak lift uniqueness up to a unique invertible 2-cell") {
  auto tp = samples::twisted_phi_projection();
  REQUIRE_PASSED(check_weak_lift_uniqueness(WeakProjection{tp.P}));
  auto G = grothendieck_strict(samples::diagram_over_interval());
  REQUIRE_PASSED(check_weak_lift_uniqueness(as_weak(G.proj)));
}

TEST_CASE("weak 1-cell factorization with comparison iso and uniqueness") {
  auto tp = samples::twisted_phi_projection();
  WeakProjection wp{tp.P};
  auto C = default_cleavage_weak(wp);
  REQUIRE_PASSED(check_weak_cleavage(wp, C));
  const CellTables& E = wp.total().t;
  for (const auto& [f, d] : E.one_cells) {
    auto F = factor_1cell_weak(wp, C, f);
    REQUIRE(E.two(F.comparison).src == E.comp1(F.chosen, F.hat));
    REQUIRE(E.two(F.comparison).tgt == f);
    REQUIRE(is_invertible_2cell(E, F.comparison));
    REQUIRE(wp.one(F.hat) == wp.base().t.id_1(wp.obj(E.one(f).src)));
  }
}

TEST_CASE("weak 2-cell factorization on a strictly preserving fibration") {
  auto G = grothendieck_strict(samples::diagram_over_sigma2());
  auto wp = as_weak(G.proj);
  auto C = default_cleavage_weak(wp);
  const CellTables& E = wp.total().t;
  for (const auto& [a, d] : E.two_cells) {
    auto F = factor_2cell_weak(wp, C, a);
    REQUIRE(E.two(F.hat_alpha).src == F.hat_f);
    REQUIRE(E.two(F.hat_alpha).tgt == F.fibre_composite);
    REQUIRE(wp.two(F.hat_alpha) ==
            wp.base().t.id_2(wp.base().t.id_1(wp.obj(E.src0_of2(a)))));
  }
}
