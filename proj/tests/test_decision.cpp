#include <doctest.h>

#include "convexa/decision.hpp"
#include "convexa/text_format.hpp"
#include "support.hpp"

using namespace convexa;
using testing::code;
using testing::labels;
using testing::W;
using V = std::vector<std::string>;

TEST_CASE("decide on the reference codes") {
  const auto cmin = decide(code(6, {"1356", "123", "124", "12", "13"}));
  CHECK(cmin.outcome == Outcome::Convex);
  CHECK(cmin.dim == DimReport::Exactly1);
  REQUIRE(cmin.plan);
  CHECK(cmin.plan->strategy == Strategy::PathCase);
  CHECK(cmin.plan->extras.empty());
  CHECK(labels(cmin.plan->base_code) == V{"1356", "123", "124", "12", "13", "{}"});

  const auto missing13 = decide(code(6, {"1356", "123", "124", "12"}));
  CHECK(missing13.outcome == Outcome::NotConvex);
  REQUIRE(missing13.obstructions.size() == 1);
  CHECK(missing13.obstructions[0].sigma == W("13"));
  CHECK_FALSE(missing13.plan);

  const auto d = decide(code(6, {"1356", "123", "124", "12", "13", "23", "24", "5", "6"}));
  CHECK(d.outcome == Outcome::Convex);
  CHECK(d.dim == DimReport::AtMost2);
  REQUIRE(d.plan);
  CHECK(d.plan->strategy == Strategy::PathCase);
  CHECK(d.plan->extras == std::vector<Extra>{{W("23"), W("123")}, {W("24"), W("124")}, {W("5"), W("1356")},
                                             {W("6"), W("1356")}});

  const auto tri = decide(code(3, {"12", "13", "23", "1", "2", "3"}));
  CHECK(tri.outcome == Outcome::Convex);
  CHECK(tri.plan->strategy == Strategy::MaxIntersectionCase);
  CHECK(tri.dim == DimReport::Exactly2);

  CHECK(decide(code(4, {"12", "13", "14", "234"})).outcome == Outcome::Unsupported);
}

TEST_CASE("decide on small facet counts") {
  CHECK(decide(code(3, {})).outcome == Outcome::Convex);
  CHECK(decide(code(3, {})).dim == DimReport::Exactly1);
  const auto one = decide(code(3, {"123", "1", "23"}));
  CHECK(one.outcome == Outcome::Convex);
  CHECK(one.dim == DimReport::Exactly1);
  const auto two = decide(code(3, {"12", "23"}));
  CHECK(two.outcome == Outcome::NotConvex);
  CHECK(two.obstructions[0].sigma == W("2"));
  CHECK(decide(code(4, {"12", "34"})).outcome == Outcome::Convex);
}

TEST_CASE("choose_parents") {
  const auto d = code(6, {"1356", "123", "124", "12", "13", "23", "24", "5", "6"});
  const auto base = code(6, {"1356", "123", "124", "12", "13"});
  CHECK(choose_parents(d, base).size() == 4);
  CHECK(choose_parents(base, base).empty());
  const auto extras = choose_parents(code(3, {"12", "13", "1"}), code(3, {"12", "13"}));
  REQUIRE(extras.size() == 1);
  CHECK(extras[0] == Extra{W("1"), W("12")});
}

TEST_CASE("1-D oracle") {
  CHECK(brute_force_1d_realizable(code(1, {"1"})) == true);
  const auto two = code(2, {"1", "2", "12"});
  CHECK(brute_force_1d_realizable(two) == true);
  const auto r = search_1d_realization(two);
  REQUIRE(r);
  CHECK(realized_code_1d(*r) == two);
  CHECK(brute_force_1d_realizable(code(3, {"12", "13", "23", "1", "2", "3"})) ==
        testing::derived()["triangle_code_1d"].get<bool>());
  CHECK_FALSE(brute_force_1d_realizable(code(5, {"1", "2", "3", "4", "5"})).has_value());
}

TEST_CASE("1-D oracle agrees with the independent brute force") {
  int checked = 0;
  for (const auto& [key, expected] : testing::derived()["realizable_1d"].items()) {
    CAPTURE(key);
    const unsigned n = static_cast<unsigned>(key[0] - '0');
    const auto c = NeuralCode(n, testing::split_words(key.substr(2), n));
    const auto found = search_1d_realization(c);
    CHECK(found.has_value() == expected.get<bool>());
    if (found) CHECK(realized_code_1d(*found) == c);
    ++checked;
  }
  CHECK(checked == 115);
}
