#include <doctest.h>

#include "convexa/error.hpp"
#include "convexa/topology.hpp"
#include "support.hpp"

using namespace convexa;
using testing::code;
using testing::cpx;
using testing::labels;
using testing::W;
using V = std::vector<std::string>;

namespace {

V sorted_labels(const NeuralCode& c) {
  V out = labels(c);
  std::sort(out.begin(), out.end());
  return out;
}

const ObstructionReport& report_at(const std::vector<ObstructionReport>& rs, Codeword sigma) {
  for (const auto& r : rs) {
    if (r.sigma == sigma) return r;
  }
  FAIL("no report for sigma");
  return rs.front();
}

}  // namespace

TEST_CASE("path_of_facets") {
  const auto d = cpx(6, {"1356", "123", "124"});
  const auto w = path_of_facets(d);
  REQUIRE(w);
  CHECK(to_string(d.facets()[w->a], 6) == "124");
  CHECK(to_string(d.facets()[w->b], 6) == "123");
  CHECK(to_string(d.facets()[w->c], 6) == "1356");
  CHECK(is_valid_witness(d, *w));
  // a and c play symmetric roles.
  CHECK(is_valid_witness(d, {0, 1, 2}));
  CHECK_FALSE(is_valid_witness(d, {0, 2, 1}));
  CHECK_FALSE(path_of_facets(cpx(3, {"12", "13", "23"})));
  CHECK_FALSE(path_of_facets(cpx(6, {"12", "34", "56"})));
  CHECK_THROWS_AS(path_of_facets(cpx(3, {"12", "13"})), Error);
}

TEST_CASE("link_contractible_3max") {
  const auto d = cpx(6, {"1356", "123", "124"});
  CHECK(link_contractible_3max(d, W("1")));
  CHECK_FALSE(link_contractible_3max(d, W("13")));
  CHECK_FALSE(link_contractible_3max(cpx(3, {"12", "13", "23"}), Codeword{}));
  CHECK(link_contractible_3max(cpx(4, {"1234"}), W("12")));
  CHECK_THROWS_AS(link_contractible_3max(cpx(4, {"1", "2", "3", "4"}), Codeword{}), Error);
}

TEST_CASE("small nerves") {
  CHECK(small_nerve_contractible(cpx(3, {"123"})));
  CHECK(small_nerve_contractible(cpx(3, {"12", "23"})));
  CHECK_FALSE(small_nerve_contractible(cpx(3, {"12", "13", "23"})));
  CHECK_FALSE(small_nerve_contractible(cpx(3, {"12", "3"})));
  CHECK(small_nerve_contractible(cpx(1, {"1"})));
  CHECK_FALSE(small_nerve_contractible(SimplicialComplex{}));
}

TEST_CASE("local_obstructions") {
  const auto rs = local_obstructions(code(6, {"1356", "123", "124", "3"}));
  CHECK(report_at(rs, W("12")).status == ObstructionStatus::Obstruction);
  CHECK(report_at(rs, W("12")).reason == ObstructionReason::TwoFacetLemma);
  CHECK(report_at(rs, W("13")).status == ObstructionStatus::Obstruction);
  CHECK(report_at(rs, W("1")).status == ObstructionStatus::Satisfied);
  CHECK(report_at(rs, W("1")).reason == ObstructionReason::NerveContractible);

  CHECK_FALSE(has_obstruction(local_obstructions(code(6, {"1356", "123", "124", "12", "13"}))));
  CHECK(report_at(local_obstructions(code(6, {"1356", "123", "124", "12", "13"})), W("12")).reason ==
        ObstructionReason::PresentInCode);

  const auto tri = local_obstructions(code(3, {"12", "13", "23"}));
  CHECK(tri.size() == 3);
  for (const auto& r : tri) CHECK(r.status == ObstructionStatus::Obstruction);

  // σ in four facets is left undetermined.
  const auto four = local_obstructions(code(5, {"12", "13", "14", "15"}));
  CHECK(report_at(four, W("1")).status == ObstructionStatus::Undetermined);
  CHECK(report_at(four, W("1")).reason == ObstructionReason::BeyondThreeFacets);
}

TEST_CASE("minimal_code") {
  CHECK(labels(minimal_code(cpx(6, {"1356", "123", "124"}))) == V{"1356", "123", "124", "12", "13", "{}"});
  CHECK(labels(minimal_code(cpx(4, {"1234"}))) == V{"1234", "{}"});
  CHECK(labels(minimal_code(cpx(3, {"12", "13", "23"}))) == V{"12", "13", "23", "1", "2", "3", "{}"});
  CHECK(labels(minimal_code(SimplicialComplex{})) == V{"{}"});
  CHECK_THROWS_AS(minimal_code(cpx(4, {"1", "2", "3", "4"})), Error);
}

TEST_CASE("minimal codes agree with the homology oracle") {
  for (const auto& [facets, expected] : testing::derived()["minimal_codes"].items()) {
    CAPTURE(facets);
    const auto d = SimplicialComplex::from_facets(6, testing::split_words(facets, 6));
    CHECK(sorted_labels(minimal_code(d)) == expected.get<V>());
  }
  for (const auto& [facets, expected] : testing::derived()["minimal_codes_k3"].items()) {
    CAPTURE(facets);
    const auto d = SimplicialComplex::from_facets(6, testing::split_words(facets, 6));
    CHECK(sorted_labels(minimal_code(d)) == expected.get<V>());
    if (auto w = path_of_facets(d)) CHECK(minimal_code_from_path(d, *w) == minimal_code(d));
  }
}

TEST_CASE("Lemma 6 against the homology oracle") {
  for (const auto& [facets, acyclic] : testing::derived()["triple_link_acyclic"].items()) {
    CAPTURE(facets);
    const auto d = SimplicialComplex::from_facets(6, testing::split_words(facets, 6));
    const auto& f = d.facets();
    CHECK(link_contractible_3max(d, f[0] & f[1] & f[2]) == acyclic.get<bool>());
    CHECK(path_of_facets(d).has_value() == acyclic.get<bool>());
  }
}
