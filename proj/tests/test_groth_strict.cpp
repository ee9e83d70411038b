#include <catch2/catch_amalgamated.hpp>

#include "fibcat/groth_strict.hpp"
#include "fibcat/samples.hpp"
#include "support.hpp"

using namespace fibcat;

TEST_CASE("constant diagrams produce products: cell counts multiply") {
  auto base = samples::walking_arrow();
  auto fib = samples::walking_two_cell();
  auto G = grothendieck_strict(samples::constant_diagram(base, fib));
  REQUIRE_PASSED(validate_two_category(G.total));
  REQUIRE(G.total.t.objects.size() == base.t.objects.size() * fib.t.objects.size());
  REQUIRE(G.total.t.one_cells.size() == base.t.one_cells.size() * fib.t.one_cells.size());
  REQUIRE(G.total.t.two_cells.size() == base.t.two_cells.size() * fib.t.two_cells.size());
}

TEST_CASE("interval diagram: cell counts match the independent enumeration") {
  auto D = samples::diagram_over_interval();
  auto G = grothendieck_strict(D);
  REQUIRE_PASSED(validate_two_category(G.total));
  // Independent brute-force construction of the cell sets from the
  // definition: pairs (f, fb) with fb : xb -> F f(yb).
  const CellTables& B = D.base.t;
  std::size_t objs = 0, ones = 0, twos = 0;
  for (const auto& x : B.objects) objs += D.fibre(x).t.objects.size();
  for (const auto& [f, fd] : B.one_cells) {
    const CellTables& Fx = D.fibre(fd.src).t;
    for (const auto& yb : D.fibre(fd.tgt).t.objects)
      for (const auto& [fb, fbd] : Fx.one_cells)
        if (fbd.tgt == D.reindex(f).obj(yb)) ++ones;
  }
  for (const auto& [a, ad] : B.two_cells) {
    const auto& fc = B.one(B.two(a).src);
    const CellTables& Fx = D.fibre(fc.src).t;
    for (const auto& yb : D.fibre(fc.tgt).t.objects)
      for (const auto& [gb, gbd] : Fx.one_cells) {
        if (gbd.tgt != D.reindex(ad.tgt).obj(yb)) continue;
        for (const auto& [ab, abd] : Fx.two_cells)
          if (abd.tgt == Fx.comp1(D.two_nat(a).at(yb), gb)) ++twos;
      }
  }
  REQUIRE(G.total.t.objects.size() == objs);
  REQUIRE(objs == 3);
  REQUIRE(G.total.t.one_cells.size() == ones);
  REQUIRE(G.total.t.two_cells.size() == twos);
}

TEST_CASE("chosen cartesian lift over f has an identity second component") {
  auto G = grothendieck_strict(samples::diagram_over_interval());
  REQUIRE(G.cleavage.l1("u", "(1|1)") == "(u|id_pt|1)");
  REQUIRE(is_cartesian_1cell_strict(G.proj, "(u|id_pt|1)").cartesian);
}

TEST_CASE("invert of the identity projection gives one-object fibres") {
  auto B = samples::walking_two_cell();
  auto pr = identity_projection(B);
  auto C = default_cleavage(pr);
  auto D = invert_strict(pr, C);
  REQUIRE_PASSED(validate_indexed_diagram(D));
  for (const auto& b : B.t.objects) {
    REQUIRE(D.fibre(b).t.objects.size() == 1);
    REQUIRE(D.fibre(b).t.objects.count(b) == 1);
  }
}

TEST_CASE("invert refuses a non-split cleavage with the failing equation") {
  auto G = grothendieck_strict(
      samples::constant_diagram(samples::walking_composable_pair(), samples::chaotic_z2()));
  auto C = G.cleavage;
  C.lift1[{"w", "(2|o)"}] = "(w|u|o)";  // still cartesian, no longer split
  REQUIRE_THROWS_WITH(invert_strict(G.proj, C),
                      Catch::Matchers::ContainsSubstring("split"));
}

TEST_CASE("round trip on fibrations: invert then rebuild is isomorphic") {
  for (const auto& D :
       {samples::constant_diagram(samples::walking_arrow(), samples::walking_two_cell()),
        samples::diagram_over_interval(), samples::diagram_over_sigma2()}) {
    auto G = grothendieck_strict(D);
    auto rt = roundtrip_iso_strict(G.proj, G.cleavage);
    REQUIRE_PASSED(rt.report);
  }
}

TEST_CASE("round trip on the identity projection is an isomorphism") {
  auto pr = identity_projection(samples::walking_two_cell());
  auto C = default_cleavage(pr);
  auto rt = roundtrip_iso_strict(pr, C);
  REQUIRE_PASSED(rt.report);
  REQUIRE(rt.rebuilt.total.t.objects.size() == pr.total().t.objects.size());
}

TEST_CASE("invert of a grothendieck projection recovers the diagram componentwise") {
  auto D = samples::diagram_over_sigma2();
  auto G = grothendieck_strict(D);
  auto D2 = invert_strict(G.proj, G.cleavage);
  REQUIRE_PASSED(validate_indexed_diagram(D2));
  // Component-wise isomorphism under the canonical relabeling xb -> (x|xb).
  for (const auto& b : D.base.t.objects) {
    const auto& orig = D.fibre(b).t;
    const auto& got = D2.fibre(b).t;
    REQUIRE(orig.objects.size() == got.objects.size());
    REQUIRE(orig.one_cells.size() == got.one_cells.size());
    REQUIRE(orig.two_cells.size() == got.two_cells.size());
    for (const auto& xb : orig.objects)
      REQUIRE(got.objects.count(detail::tup({b, xb})) == 1);
  }
  // Fibre of P_F over b is the full sub-2-category over (b, id_b, id).
  auto fib = fibre_two_category(G.proj, "a");
  for (const auto& e : fib.t.objects) REQUIRE(G.proj.obj(e) == "a");
  for (const auto& [f, d] : fib.t.one_cells) REQUIRE(G.proj.one(f) == "id_a");
}

TEST_CASE("grothendieck_map on the identity transformation is the identity functor") {
  auto D = samples::diagram_over_sigma2();
  DiagramTransformation eta;
  for (const auto& b : D.base.t.objects)
    eta.comp[b] = samples::constant_functor_data(D.fibre(b));
  auto F = grothendieck_map_transformation(D, D, eta);
  auto G = grothendieck_strict(D);
  REQUIRE(same_action(F.m, identity_two_functor(G.total).m));
}

TEST_CASE("grothendieck_map sends the terminal transformation to a collapse functor") {
  auto base = samples::walking_arrow();
  auto D1 = samples::constant_diagram(base, samples::walking_two_cell());
  auto D2 = samples::constant_diagram(base, samples::terminal());
  DiagramTransformation eta;
  FunctorData term;
  for (const auto& x : samples::walking_two_cell().t.objects) term.on_obj[x] = "pt";
  for (const auto& [f, d] : samples::walking_two_cell().t.one_cells)
    term.on_1[f] = "id_pt";
  for (const auto& [a, d] : samples::walking_two_cell().t.two_cells)
    term.on_2[a] = "ii_id_pt";
  for (const auto& b : base.t.objects) eta.comp[b] = term;
  auto F = grothendieck_map_transformation(D1, D2, eta);
  auto G1 = grothendieck_strict(D1);
  auto G2 = grothendieck_strict(D2);
  // Verified split cartesian over the base.
  REQUIRE_PASSED(
      check_cartesian_functor(G1.proj, G2.proj, F, &G1.cleavage, &G2.cleavage));
}

TEST_CASE("grothendieck_map on a modification with identity components is the identity") {
  auto D = samples::diagram_over_sigma2();
  DiagramTransformation eta;
  for (const auto& b : D.base.t.objects)
    eta.comp[b] = samples::constant_functor_data(D.fibre(b));
  DiagramModification m;
  for (const auto& b : D.base.t.objects) {
    std::map<CellName, CellName> c;
    for (const auto& x : D.fibre(b).t.objects) c[x] = D.fibre(b).t.id_1(x);
    m.comp[b] = c;
  }
  auto V = grothendieck_map_modification(D, D, eta, eta, m);
  auto G = grothendieck_strict(D);
  auto F = grothendieck_map_transformation(D, D, eta);
  REQUIRE_PASSED(check_vertical_transformation(G, F, F, V));
  for (const auto& [n, c] : V.comp) REQUIRE(c == G.total.t.id_1(n));
}

TEST_CASE("grothendieck functoriality: the map of a composite is the composite of maps") {
  auto base = samples::walking_arrow();
  auto s2 = samples::walking_two_cell();
  auto D1 = samples::constant_diagram(base, s2);
  auto D2 = samples::constant_diagram(base, samples::terminal());
  // eta : D1 => D1 identity, eps : D1 => D2 terminal; eps . eta = eps.
  DiagramTransformation eta, eps;
  FunctorData term;
  for (const auto& x : s2.t.objects) term.on_obj[x] = "pt";
  for (const auto& [f, d] : s2.t.one_cells) term.on_1[f] = "id_pt";
  for (const auto& [a, d] : s2.t.two_cells) term.on_2[a] = "ii_id_pt";
  for (const auto& b : base.t.objects) {
    eta.comp[b] = samples::constant_functor_data(s2);
    eps.comp[b] = term;
  }
  auto Feta = grothendieck_map_transformation(D1, D1, eta);
  auto Feps = grothendieck_map_transformation(D1, D2, eps);
  DiagramTransformation comp;
  for (const auto& b : base.t.objects) {
    FunctorData c;
    for (const auto& [x, y] : eta.comp.at(b).on_obj) c.on_obj[x] = eps.comp.at(b).obj(y);
    for (const auto& [f, g] : eta.comp.at(b).on_1) c.on_1[f] = eps.comp.at(b).one(g);
    for (const auto& [a, b2] : eta.comp.at(b).on_2) c.on_2[a] = eps.comp.at(b).two(b2);
    comp.comp[b] = c;
  }
  auto Fcomp = grothendieck_map_transformation(D1, D2, comp);
  REQUIRE(same_action(Fcomp.m, compose_two_functor(Feps, Feta).m));
}
