#include <doctest.h>

#include <map>
#include <stdexcept>

#include "tetra/assignment.hpp"
#include "tetra/presentation.hpp"

using namespace tetra;

TEST_CASE("parse_symbol") {
  CHECK(parse_symbol("3,3,6,2,2,2").entries == std::array<int, 6>{3, 3, 6, 2, 2, 2});
  CHECK(parse_symbol("2,2,2,2,2,2").entries == std::array<int, 6>{2, 2, 2, 2, 2, 2});
  CHECK(parse_symbol("[3, 5, 2, 3, 2, 2]").entries == std::array<int, 6>{3, 5, 2, 3, 2, 2});
  CHECK_THROWS_AS(parse_symbol("3,3,1,2,2,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("3,3,6,2,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("3,3,x,2,2,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("3,,6,2,2,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("3,-3,6,2,2,2"), std::invalid_argument);
}

TEST_CASE("symbol text form round-trips for every catalog entry") {
  for (const auto& e : catalog()) CHECK(parse_symbol(e.symbol.to_string()) == e.symbol);
}

TEST_CASE("full presentation relators") {
  Presentation h = full_presentation(parse_symbol("3,3,6,2,2,2"));
  REQUIRE(h.generator_count() == 4);
  REQUIRE(h.relators().size() == 10);
  std::vector<std::string> text;
  for (const Word& r : h.relators()) text.push_back(h.format(r));
  CHECK(text == std::vector<std::string>{"PP", "QQ", "RR", "SS", "PQPQPQ", "QRQRQR",
                                         "RSRSRSRSRSRS", "PRPR", "PSPS", "QSQS"});

  Presentation t1 = full_presentation(parse_symbol("3,5,2,3,2,2"));
  std::vector<int> exps;
  for (const auto& o : t1.element_orders()) exps.push_back(o.exponent);
  CHECK(exps == std::vector<int>{2, 2, 2, 2, 3, 5, 2, 3, 2, 2});
  for (int g = 0; g < 4; ++g) CHECK(t1.is_involution(g));

  Presentation all2 = full_presentation(parse_symbol("2,2,2,2,2,2"));
  for (std::size_t i = 4; i < 10; ++i) CHECK(all2.element_orders()[i].exponent == 2);
}

TEST_CASE("kleinian presentation relators") {
  Presentation k = kleinian_presentation(parse_symbol("3,3,6,2,2,2"));
  REQUIRE(k.generator_count() == 3);
  REQUIRE(k.relators().size() == 6);
  std::vector<std::string> text;
  for (const Word& r : k.relators()) text.push_back(k.format(r));
  CHECK(text == std::vector<std::string>{"aaa", "bbb", "cccccc", "abab", "abcabc", "bcbc"});
  CHECK_FALSE(k.is_involution(0));

  Presentation k32 = kleinian_presentation(parse_symbol("3,3,3,3,3,3"));
  for (const auto& o : k32.element_orders()) CHECK(o.exponent == 3);

  Presentation k2 = kleinian_presentation(parse_symbol("2,2,2,2,2,2"));
  for (int g = 0; g < 3; ++g) CHECK(k2.is_involution(g));
}

TEST_CASE("relators are killed by the trivial representation") {
  for (const auto& e : catalog()) {
    for (GroupKind kind : {GroupKind::full, GroupKind::kleinian}) {
      Presentation pres = make_presentation(e.symbol, kind);
      CHECK(satisfies_relators(pres, Assignment(pres.generator_count(), 1)));
    }
  }
}

TEST_CASE("catalog") {
  const auto& cat = catalog();
  CHECK(cat.size() == 40);
  std::map<Geometry, int> sizes;
  for (const auto& e : cat) ++sizes[e.geometry];
  CHECK(sizes[Geometry::spherical] == 5);
  CHECK(sizes[Geometry::euclidean] == 3);
  CHECK(sizes[Geometry::hyperbolic_compact] == 9);
  CHECK(sizes[Geometry::hyperbolic_noncompact] == 23);

  auto t10 = find_entry("t10");
  REQUIRE(t10);
  CHECK(t10->symbol == parse_symbol("3,3,6,2,2,2"));
  CHECK(t10->geometry == Geometry::hyperbolic_noncompact);
  CHECK(t10->ideal_vertices == 1);

  auto t19 = find_entry("t19");
  REQUIRE(t19);
  CHECK(t19->symbol == parse_symbol("4,4,4,2,2,2"));
  CHECK(t19->ideal_vertices == 3);

  for (const auto& e : cat) {
    if (e.geometry == Geometry::hyperbolic_noncompact) {
      CHECK(e.ideal_vertices >= 1);
    } else {
      CHECK(e.ideal_vertices == 0);
    }
  }
  CHECK_FALSE(find_entry("t33"));
}

TEST_CASE("word parsing and formatting") {
  Presentation k = kleinian_presentation(parse_symbol("3,3,6,2,2,2"));
  Word w = k.parse_word("a b^-1 c⁻¹ a'");
  CHECK(k.format(w) == "ab⁻¹c⁻¹a⁻¹");
  CHECK(k.parse_word(k.format(w)) == w);
  CHECK(k.parse_word("aa^-1").empty());
  CHECK_THROWS(k.parse_word("ad"));
  CHECK_THROWS(k.parse_word("^-1"));

  Presentation h = full_presentation(parse_symbol("3,3,6,2,2,2"));
  CHECK(h.format(h.normalize(h.parse_word("S^-1 P S"))) == "SPS");
  CHECK(h.normalize(h.parse_word("SS")).empty());
  CHECK(h.format(h.normalize(h.parse_word("P S S Q"))) == "PQ");
}

TEST_CASE("group kind and geometry names") {
  CHECK(parse_group_kind("full") == GroupKind::full);
  CHECK(parse_group_kind("kleinian") == GroupKind::kleinian);
  CHECK_THROWS(parse_group_kind("other"));
  CHECK(parse_geometry("hyperbolic-noncompact") == Geometry::hyperbolic_noncompact);
  CHECK_THROWS(parse_geometry("flat"));
}
