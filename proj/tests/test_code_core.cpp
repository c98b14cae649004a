#include <doctest.h>

#include <random>

#include "convexa/code.hpp"
#include "convexa/error.hpp"
#include "convexa/text_format.hpp"
#include "support.hpp"

using namespace convexa;
using testing::code;
using testing::cpx;
using testing::labels;
using testing::W;
using V = std::vector<std::string>;

TEST_CASE("codeword display and parsing") {
  CHECK(to_string(W("1356"), 6) == "1356");
  CHECK(to_string(Codeword{}, 6) == "{}");
  CHECK(to_string(Codeword::of({0, 2, 9}), 10) == "1,3,10");
  CHECK(parse_codeword("1,3,10", 10) == Codeword::of({0, 2, 9}));
  CHECK(parse_codeword("{}", 3).empty());
  CHECK_THROWS_AS(parse_codeword("7", 6), Error);
  CHECK_THROWS_AS(parse_codeword("1x", 6), Error);
  CHECK(display_less(W("123"), W("12")));
  CHECK(display_less(W("12"), W("13")));
  CHECK_FALSE(display_less(W("13"), W("13")));
  CHECK(W("13").subset_of(W("1356")));
  CHECK(W("13").proper_subset_of(W("1356")));
  CHECK(W("1356").span() == 6);
}

TEST_CASE("neural code keeps the empty codeword and display order") {
  const auto c = code(6, {"12", "1356", "13", "124", "123", "12"});
  CHECK(labels(c) == V{"1356", "123", "124", "12", "13", "{}"});
  CHECK(c.contains(Codeword{}));
  CHECK_FALSE(c.contains(W("1")));
  CHECK_THROWS_AS(NeuralCode(3, {W("14")}), Error);
  CHECK(NeuralCode::infer({W("25")}).n() == 5);
}

TEST_CASE("maximal_codewords") {
  CHECK(labels(maximal_codewords(code(6, {"1356", "123", "124", "12", "13", "3"})), 6) == V{"1356", "123", "124"});
  CHECK(labels(maximal_codewords(code(3, {})), 3) == V{"{}"});
  CHECK(labels(maximal_codewords(code(4, {"1234", "12", "3", "4"})), 4) == V{"1234"});
}

TEST_CASE("closure") {
  CHECK(labels(closure(code(6, {"1356", "123", "124", "12", "13", "3"}))) == V{"1356", "123", "124"});
  CHECK(closure(code(3, {})).is_void_plus_empty());
  CHECK(labels(closure(code(2, {"12", "1"}))) == V{"12"});
  CHECK_THROWS_AS(cpx(3, {"12", "1"}), Error);
}

TEST_CASE("faces and membership") {
  const auto d = cpx(3, {"12", "3"});
  CHECK(labels(d.faces(), 3) == V{"12", "1", "2", "3", "{}"});
  CHECK(d.is_face(W("1")));
  CHECK_FALSE(d.is_face(W("13")));
}

TEST_CASE("link") {
  const auto d = cpx(6, {"1356", "123", "124"});
  CHECK(labels(link(d, W("1"))) == V{"356", "23", "24"});
  CHECK(labels(link(d, Codeword{})) == V{"1356", "123", "124"});
  CHECK(labels(link(cpx(3, {"12", "13"}), W("1"))) == V{"2", "3"});
  CHECK(link(d, W("1356")).is_void_plus_empty());
  CHECK_THROWS_AS(link(d, W("56", 6) | W("2", 6)), Error);
}

TEST_CASE("link matches its definition on random complexes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 5;
    std::vector<Codeword> raw;
    for (int i = 0; i < 3; ++i) raw.push_back(Codeword(rng() % 32));
    const auto d = SimplicialComplex::from_faces(n, raw);
    for (Codeword sigma : d.faces()) {
      const auto lk = link(d, sigma);
      for (Codeword::Mask m = 0; m < 32; ++m) {
        const Codeword w(m);
        const bool by_definition = (w & sigma).empty() && d.is_face(w | sigma);
        REQUIRE(lk.is_face(w) == by_definition);
      }
    }
  }
}

TEST_CASE("nerve") {
  const std::vector<Codeword> path{W("356"), W("23"), W("24")};
  CHECK(labels(nerve(path)) == V{"12", "23"});
  const std::vector<Codeword> same{W("1"), W("1"), W("1")};
  CHECK(labels(nerve(same)) == V{"123"});
  const std::vector<Codeword> apart{W("1"), W("2"), W("3")};
  CHECK(labels(nerve(apart)) == V{"1", "2", "3"});
}

TEST_CASE("facet_intersections") {
  CHECK(labels(facet_intersections(cpx(6, {"1356", "123", "124"})), 6) == V{"12", "13", "1"});
  CHECK(facet_intersections(cpx(2, {"12"})).empty());
  CHECK(labels(facet_intersections(cpx(4, {"12", "34"})), 4) == V{"{}"});
}

TEST_CASE("is_max_intersection_complete") {
  CHECK_FALSE(is_max_intersection_complete(code(6, {"1356", "123", "124", "12", "13", "3"})));
  CHECK(is_max_intersection_complete(code(4, {"1234", "12", "3", "4"})));
  CHECK(is_max_intersection_complete(code(3, {"12", "13", "23", "1", "2", "3"})));
}

TEST_CASE("text format") {
  const auto c = parse_code_text("# figure 3\n1356\n123\n124\n\n12\n13 # pair\n");
  CHECK(labels(c) == V{"1356", "123", "124", "12", "13", "{}"});
  CHECK(c.n() == 6);
  CHECK(parse_code_text("1 2\n12,\n").n() == 12);
  CHECK(parse_code_text("1,12\n").contains(Codeword::of({0, 11})));
  CHECK(parse_code_text("{}\n", 3u).n() == 3);
  try {
    parse_code_text("12\n1 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_code_text("12\n", 1u), ParseError);
  CHECK_THROWS_AS(parse_code_text("1a\n"), ParseError);
}
