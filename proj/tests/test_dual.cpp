#include <catch2/catch_amalgamated.hpp>

#include "fibcat/dual.hpp"
#include "fibcat/samples.hpp"
#include "support.hpp"

using namespace fibcat;

TEST_CASE("coop dual of the terminal category is itself") {
  auto one = embed_bicategory(samples::terminal());
  REQUIRE(structurally_equal(dualize(one, DualMode::coop), one));
}

TEST_CASE("op dual reverses 1-cell boundaries") {
  auto s2 = samples::walking_two_cell();
  auto d = dualize(s2, DualMode::op);
  REQUIRE(d.t.one("f").src == "b");
  REQUIRE(d.t.one("f").tgt == "a");
  REQUIRE(d.t.one("g").src == "b");
  REQUIRE(d.t.two("al").src == "f");  // 2-cells untouched by op
  REQUIRE_PASSED(validate_two_category(d));
}

TEST_CASE("co dual reverses 2-cell boundaries") {
  auto s2 = samples::walking_two_cell();
  auto d = dualize(s2, DualMode::co);
  REQUIRE(d.t.two("al").src == "g");
  REQUIRE(d.t.two("al").tgt == "f");
  REQUIRE(d.t.one("f").src == "a");
  REQUIRE_PASSED(validate_two_category(d));
}

TEST_CASE("each dual mode is an involution (structural equality of all tables)") {
  auto fixtures = std::vector<FinBicategory>{
      embed_bicategory(samples::walking_two_cell()),
      embed_bicategory(samples::chaotic_z2()),
      samples::susp_z4(),
  };
  for (const auto& b : fixtures)
    for (auto mode : {DualMode::op, DualMode::co, DualMode::coop})
      REQUIRE(structurally_equal(dualize(dualize(b, mode), mode), b));
}

TEST_CASE("duals of valid bicategories are valid") {
  auto b = samples::susp_z4();
  for (auto mode : {DualMode::op, DualMode::co, DualMode::coop})
    REQUIRE_PASSED(validate_bicategory(dualize(b, mode)));
}

TEST_CASE("coop = op then co, in either order") {
  auto b = samples::susp_z4();
  auto coop = dualize(b, DualMode::coop);
  REQUIRE(structurally_equal(dualize(dualize(b, DualMode::op), DualMode::co), coop));
  REQUIRE(structurally_equal(dualize(dualize(b, DualMode::co), DualMode::op), coop));
}
