#include <catch2/catch_amalgamated.hpp>

#include "fibcat/maps.hpp"
#include "fibcat/samples.hpp"
#include "support.hpp"

using namespace fibcat;

TEST_CASE("identity and terminal 2-functors validate") {
  auto s2 = samples::walking_two_cell();
  REQUIRE_PASSED(validate_two_functor(identity_two_functor(s2)));

  TwoFunctor to_pt{s2, samples::terminal(), {}};
  for (const auto& x : s2.t.objects) to_pt.m.on_obj[x] = "pt";
  for (const auto& [f, d] : s2.t.one_cells) to_pt.m.on_1[f] = "id_pt";
  for (const auto& [a, d] : s2.t.two_cells) to_pt.m.on_2[a] = "ii_id_pt";
  REQUIRE_PASSED(validate_two_functor(to_pt));
}

TEST_CASE("swap map on the walking 2-cell breaks boundary preservation") {
  auto s2 = samples::walking_two_cell();
  auto F = identity_two_functor(s2);
  F.m.on_1["f"] = "g";
  F.m.on_1["g"] = "f";
  auto rep = validate_two_functor(F);
  REQUIRE_FALSE(rep.passed);
  bool boundary = false;
  for (const auto& v : rep.violations)
    if (v.law == "boundary/on_2" && v.cells.at(0) == "al") boundary = true;
  REQUIRE(boundary);
}

TEST_CASE("composition of valid 2-functors is valid") {
  auto s2 = samples::walking_two_cell();
  auto pt = samples::point_two_functor(s2, "a");
  REQUIRE_PASSED(validate_two_functor(pt));
  TwoFunctor to_pt{s2, samples::terminal(), {}};
  for (const auto& x : s2.t.objects) to_pt.m.on_obj[x] = "pt";
  for (const auto& [f, d] : s2.t.one_cells) to_pt.m.on_1[f] = "id_pt";
  for (const auto& [a, d] : s2.t.two_cells) to_pt.m.on_2[a] = "ii_id_pt";
  REQUIRE_PASSED(validate_two_functor(compose_two_functor(to_pt, pt)));
}

TEST_CASE("strict 2-functors embed as homomorphisms with identity phi") {
  auto s2 = samples::walking_two_cell();
  REQUIRE_PASSED(validate_homomorphism(embed_homomorphism(identity_two_functor(s2))));
  REQUIRE_PASSED(validate_homomorphism(identity_homomorphism(samples::susp_z4())));
}

TEST_CASE("twisted endo-homomorphism with nonidentity phi_id validates") {
  auto H = samples::twisted_endo_homomorphism(4, 4, 1);
  REQUIRE(H.phi_at("o") != "t0_0");
  REQUIRE(H.phi("m1", "m2") == "t3_1");
  REQUIRE_PASSED(validate_homomorphism(H));
  REQUIRE_PASSED(validate_homomorphism(compose_homomorphism(H, H)));
}

TEST_CASE("non-invertible phi entry is reported as an invertibility witness") {
  auto c = samples::walking_two_cell_idem();
  REQUIRE_PASSED(validate_two_category(c));
  auto H = embed_homomorphism(identity_two_functor(c));
  H.phi_comp[{"g", "id_a"}] = "ee";  // right boundary, not invertible
  auto rep = validate_homomorphism(H);
  REQUIRE_FALSE(rep.passed);
  bool inv = false;
  for (const auto& v : rep.violations)
    if (v.law == "phi/comp-not-invertible") inv = true;
  REQUIRE(inv);
}

TEST_CASE("twisted phi projection fixture is a valid homomorphism") {
  auto tp = samples::twisted_phi_projection();
  REQUIRE_PASSED(validate_bicategory(tp.total));
  REQUIRE_PASSED(validate_bicategory(tp.base));
  REQUIRE_PASSED(validate_homomorphism(tp.P));
  REQUIRE(tp.P.phi("m1", "m1") != "t0_0");
}

TEST_CASE("identity transformation validates, strict flag honoured") {
  auto id = identity_homomorphism(samples::susp_z4());
  auto s = identity_transformation(id);
  REQUIRE(s.strict);
  REQUIRE_PASSED(validate_transformation(s));
}

TEST_CASE("vertical twist transformations validate for every twist") {
  for (int c = 0; c < 4; ++c) {
    auto s = samples::vertical_twist_transformation(4, 4, c);
    REQUIRE_PASSED(validate_transformation(s));
  }
}

TEST_CASE("nonidentity component transformation on a chaotic fibre validates") {
  auto K = embed_bicategory(samples::chaotic_z2());
  auto id = identity_homomorphism(K);
  Transformation s{id, id, {}, {}, false};
  s.comp1["o"] = "u";
  for (const auto& [k, d] : K.t.one_cells)
    s.comp2[k] = K.t.two_cells_between(K.t.comp1("u", k), K.t.comp1(k, "u")).at(0);
  REQUIRE_PASSED(validate_transformation(s));
}

TEST_CASE("a component choice violating pseudo-naturality is rejected") {
  auto id = identity_homomorphism(samples::susp_z4());
  Transformation s{id, id, {}, {}, false};
  s.comp1["o"] = "m2";
  for (int k = 0; k < 4; ++k) {
    std::string mk = "m" + std::to_string(k);
    s.comp2[mk] = id.cod.t.id_2(id.cod.t.comp1("m2", mk));
  }
  auto rep = validate_transformation(s);
  REQUIRE_FALSE(rep.passed);
  bool nat = false;
  for (const auto& v : rep.violations)
    if (v.law.rfind("pseudo-naturality", 0) == 0) nat = true;
  REQUIRE(nat);
}

TEST_CASE("whiskering a valid transformation stays valid") {
  auto s = samples::vertical_twist_transformation(4, 4, 2);
  auto H = samples::twisted_endo_homomorphism(4, 4, 1);
  REQUIRE_PASSED(validate_transformation(whisker_post(H, s)));
  REQUIRE_PASSED(validate_transformation(whisker_pre(s, H)));
  REQUIRE_PASSED(validate_transformation(vcomp_transformation(s, s)));
}

TEST_CASE("modifications: identity passes, cross-twist fails") {
  auto s1 = samples::vertical_twist_transformation(4, 4, 1);
  Modification ok{s1, s1, {}};
  ok.comp["o"] = "t0_2";
  REQUIRE_PASSED(validate_modification(ok));

  auto s2 = samples::vertical_twist_transformation(4, 4, 2);
  Modification bad{s1, s2, {}};
  bad.comp["o"] = "t0_0";
  auto rep = validate_modification(bad);
  REQUIRE_FALSE(rep.passed);
  REQUIRE(rep.violations.at(0).law == "modification-axiom");
}
