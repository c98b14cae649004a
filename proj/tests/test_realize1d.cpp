#include <doctest.h>

#include <random>

#include "convexa/error.hpp"
#include "convexa/realize1d.hpp"
#include "convexa/topology.hpp"
#include "support.hpp"

using namespace convexa;
using testing::code;
using testing::cpx;
using testing::labels;
using testing::W;
using V = std::vector<std::string>;

namespace {

RationalInterval iv(long lo, long hi) { return RationalInterval(Rational(lo), Rational(hi)); }

}  // namespace

TEST_CASE("Figure 3 intervals") {
  const auto d = cpx(6, {"1356", "123", "124"});
  const auto r = construct_min_code_1d(d, *path_of_facets(d));
  REQUIRE(r.intervals.size() == 6);
  CHECK(r.intervals[0] == iv(0, 5));
  CHECK(r.intervals[1] == iv(0, 3));
  CHECK(r.intervals[2] == iv(2, 5));
  CHECK(r.intervals[3] == iv(0, 1));
  CHECK(r.intervals[4] == iv(4, 5));
  CHECK(r.intervals[5] == iv(4, 5));
  CHECK(labels(realized_code_1d(r)) == V{"1356", "123", "124", "12", "13", "{}"});
  CHECK(labels(region_sequence_1d(r), 6) == V{"{}", "124", "12", "123", "13", "1356", "{}"});
}

TEST_CASE("realized_code_1d basics") {
  CHECK(labels(realized_code_1d({3, std::vector<RationalInterval>(3)})) == V{"{}"});
  CHECK(labels(realized_code_1d({2, {iv(0, 2), iv(1, 3)}})) == V{"12", "1", "2", "{}"});
  CHECK(RationalInterval(Rational(2), Rational(2)).empty());
  CHECK(RationalInterval(Rational(3), Rational(1)).empty());
  CHECK_FALSE(iv(0, 1).contains(Rational(1)));
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(construct_min_code_1d(cpx(3, {"12", "23"}), {0, 1, 0}), Error);
  const auto d = cpx(6, {"1356", "123", "124"});
  CHECK_THROWS_AS(construct_min_code_1d(d, {0, 2, 1}), Error);
}

TEST_CASE("witnesses re-evaluate to their codeword") {
  const auto d = cpx(6, {"1356", "123", "124"});
  const auto r = construct_min_code_1d(d, *path_of_facets(d));
  const auto ws = witnesses_1d(r);
  CHECK(ws.size() == 6);
  for (const auto& [w, x] : ws) {
    Codeword m;
    for (unsigned i = 0; i < 6; ++i) {
      if (r.intervals[i].contains(x)) m = m | Codeword::of({i});
    }
    CHECK(m == w);
  }
}

TEST_CASE("interval_samples agrees with a dense scan") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::optional<IntervalOf<int>>> sets(4);
    for (auto& s : sets) {
      const int a = static_cast<int>(rng() % 20), b = static_cast<int>(rng() % 20);
      if (a != b) s = IntervalOf<int>{2 * std::min(a, b), 2 * std::max(a, b)};
    }
    auto got = interval_samples<int>(sets);
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    std::vector<Codeword::Mask> scan;
    for (int x = -4; x <= 44; ++x) {
      Codeword::Mask m = 0;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i] && sets[i]->lo < x && x < sets[i]->hi) m |= Codeword::Mask{1} << i;
      }
      scan.push_back(m);
    }
    std::sort(scan.begin(), scan.end());
    scan.erase(std::unique(scan.begin(), scan.end()), scan.end());
    CHECK(got == scan);
  }
}

TEST_CASE("path layout realizes the minimal code of every path complex") {
  for (const auto& [facets, acyclic] : testing::derived()["triple_link_acyclic"].items()) {
    if (!acyclic.get<bool>()) continue;
    const auto d = SimplicialComplex::from_facets(6, testing::split_words(facets, 6));
    const auto r = construct_min_code_1d(d, *path_of_facets(d));
    CAPTURE(facets);
    CHECK(realized_code_1d(r) == minimal_code(d));
  }
}
