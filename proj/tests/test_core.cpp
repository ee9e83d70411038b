#include <catch2/catch_amalgamated.hpp>

#include "fibcat/core.hpp"
#include "fibcat/samples.hpp"
#include "fibcat/validate.hpp"
#include "support.hpp"

using namespace fibcat;

namespace {

// Brute-force composable-pair counter written directly against the tables;
// independent of enumerate_composable.
int count_pairs_1(const CellTables& t) {
  int n = 0;
  for (const auto& [g, gd] : t.one_cells)
    for (const auto& [f, fd] : t.one_cells)
      if (fd.tgt == gd.src) ++n;
  return n;
}
int count_pairs_2v(const CellTables& t) {
  int n = 0;
  for (const auto& [b, bd] : t.two_cells)
    for (const auto& [a, ad] : t.two_cells)
      if (ad.tgt == bd.src) ++n;
  return n;
}

}  // namespace

TEST_CASE("terminal 2-category validates") {
  auto one = samples::terminal();
  auto rep = validate_two_category(one);
  REQUIRE_PASSED(rep);
  REQUIRE(rep.violations.empty());
}

TEST_CASE("walking arrow and walking 2-cell validate") {
  REQUIRE(validate_two_category(samples::walking_arrow()).passed);
  REQUIRE_PASSED(validate_two_category(samples::walking_two_cell()));
}

TEST_CASE("rebinding a vcomp2 unit entry is caught with a unit-law witness") {
  auto s2 = samples::walking_two_cell();
  // al . ii_f rebound to ii_g.
  s2.t.vcomp2[{"al", "ii_f"}] = "ii_g";
  auto rep = validate_two_category(s2);
  REQUIRE_FALSE(rep.passed);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.law == "unit/vcomp2-right" && v.cells == std::vector<CellName>{"al", "ii_f"})
      found = true;
  REQUIRE(found);
}

TEST_CASE("malformed tables are reported distinctly from law violations") {
  auto s2 = samples::walking_two_cell();
  s2.t.hcomp1.erase({"id_b", "f"});
  auto rep = validate_two_category(s2);
  REQUIRE_FALSE(rep.passed);
  REQUIRE(rep.violations.at(0).law.substr(0, 9) == "malformed");
}

TEST_CASE("dangling cell reference is malformed") {
  auto s2 = samples::walking_two_cell();
  s2.t.two_cells["bad"] = {"f", "ghost"};
  auto rep = validate_two_category(s2);
  REQUIRE_FALSE(rep.passed);
  bool dangling = false;
  for (const auto& v : rep.violations)
    if (v.law == "malformed/dangling-1-cell") dangling = true;
  REQUIRE(dangling);
}

TEST_CASE("enumerate_composable is deterministic, duplicate-free, and matches brute force") {
  auto one = samples::terminal();
  auto p = enumerate_composable(one, 2, 1);
  REQUIRE(p == std::vector<std::vector<CellName>>{{"id_pt", "id_pt"}});

  auto s2 = samples::walking_two_cell();
  auto p1 = enumerate_composable(s2, 2, 1);
  REQUIRE(static_cast<int>(p1.size()) == count_pairs_1(s2.t));
  REQUIRE(p1.size() == 6);
  auto p2 = enumerate_composable(s2, 2, 2);
  REQUIRE(static_cast<int>(p2.size()) == count_pairs_2v(s2.t));
  REQUIRE(p2.size() == 6);

  auto again = enumerate_composable(s2, 2, 1);
  REQUIRE(p1 == again);
  REQUIRE(std::is_sorted(p1.begin(), p1.end()));
  REQUIRE(std::adjacent_find(p1.begin(), p1.end()) == p1.end());

  auto t1 = enumerate_composable(s2, 3, 1);
  int triples = 0;
  for (const auto& [h, hd] : s2.t.one_cells)
    for (const auto& [g, gd] : s2.t.one_cells)
      for (const auto& [f, fd] : s2.t.one_cells)
        if (fd.tgt == gd.src && gd.tgt == hd.src) ++triples;
  REQUIRE(static_cast<int>(t1.size()) == triples);
}

TEST_CASE("strict 2-categories embed as bicategories") {
  for (const auto& fx :
       {samples::terminal(), samples::walking_arrow(), samples::walking_two_cell(),
        samples::chaotic_z2()}) {
    REQUIRE_PASSED(validate_bicategory(embed_bicategory(fx)));
  }
}

TEST_CASE("suspension with twisted associator is a coherent bicategory") {
  auto b = samples::susp_z4();
  REQUIRE_PASSED(validate_bicategory(b));
  // Pentagon certified independently: the cocycle identity of the twist.
  auto carry = [](int g, int f) { return (g + f) / 4; };
  auto w = [&](int h, int g, int f) { return (h * carry(g, f)) % 4; };
  for (int k = 0; k < 4; ++k)
    for (int h = 0; h < 4; ++h)
      for (int g = 0; g < 4; ++g)
        for (int f = 0; f < 4; ++f)
          REQUIRE((w(h, g, f) + w(k, (h + g) % 4, f) + w(k, h, g)) % 4 ==
                  (w(k, h, (g + f) % 4) + w((k + h) % 4, g, f)) % 4);
  // Nontrivial associator.
  REQUIRE(b.assoc.at({"m1", "m2", "m2"}) != "t1_0");
}

TEST_CASE("flipping one associator entry breaks the pentagon with a witness") {
  auto b = samples::susp_z4();
  auto inv = b.declared_inverse(b.assoc.at({"m1", "m2", "m2"}));
  REQUIRE(inv.has_value());
  REQUIRE(*inv != b.assoc.at({"m1", "m2", "m2"}));
  b.assoc[{"m1", "m2", "m2"}] = *inv;
  auto rep = validate_bicategory(b);
  REQUIRE_FALSE(rep.passed);
  bool pentagon = false;
  for (const auto& v : rep.violations)
    if (v.law == "pentagon") pentagon = true;
  REQUIRE(pentagon);
}

TEST_CASE("validation is deterministic including witness order") {
  auto s2 = samples::walking_two_cell();
  s2.t.vcomp2[{"al", "ii_f"}] = "ii_g";
  s2.t.vcomp2[{"ii_g", "al"}] = "ii_f";
  auto r1 = validate_two_category(s2);
  auto r2 = validate_two_category(s2);
  REQUIRE(r1.violations.size() == r2.violations.size());
  for (std::size_t i = 0; i < r1.violations.size(); ++i)
    REQUIRE(r1.violations[i] == r2.violations[i]);
}

TEST_CASE("witness list is capped but scanning continues") {
  auto b = samples::susp_z4();
  for (auto& [k, v] : b.assoc) v = "t" + std::to_string((0)) + "_1";  // garbage rebinding
  auto rep = validate_bicategory(b, 5);
  REQUIRE_FALSE(rep.passed);
  REQUIRE(rep.violations.size() == 5);
}
