#include "convexa/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>

#include "convexa/decision.hpp"
#include "convexa/error.hpp"
#include "convexa/realize2d.hpp"
#include "convexa/topology.hpp"

namespace convexa {

std::vector<SimplicialComplex> labeled_complexes(unsigned n, unsigned k) {
  if (n > 8 || k == 0 || k > 4) throw Error(Errc::OutOfRange, "enumeration supports n <= 8 and 1 <= k <= 4");
  const Codeword::Mask limit = Codeword::Mask{1} << n;
  std::vector<SimplicialComplex> out;
  std::vector<Codeword::Mask> chosen;
  auto incomparable = [](Codeword::Mask a, Codeword::Mask b) { return (a & ~b) != 0 && (b & ~a) != 0; };
  auto rec = [&](auto&& self, Codeword::Mask start) -> void {
    if (chosen.size() == k) {
      std::vector<Codeword> facets;
      for (auto m : chosen) facets.push_back(Codeword(m));
      out.push_back(SimplicialComplex::from_facets(n, std::move(facets)));
      return;
    }
    for (Codeword::Mask m = start; m < limit; ++m) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](auto c) { return incomparable(c, m); })) {
        chosen.push_back(m);
        self(self, m + 1);
        chosen.pop_back();
      }
    }
  };
  // Starting at 0 admits {∅} as the single facet when k = 1; for k >= 2 the
  // empty set is comparable with everything.
  rec(rec, 0);
  return out;
}

std::vector<Codeword::Mask> canonical_form(const SimplicialComplex& cpx) {
  const unsigned n = cpx.n();
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<Codeword::Mask> best;
  std::vector<Codeword::Mask> cur(cpx.facets().size());
  do {
    for (std::size_t f = 0; f < cur.size(); ++f) {
      Codeword::Mask m = 0;
      for (NeuronId id : cpx.facets()[f].members()) m |= Codeword::Mask{1} << perm[index_of(id)];
      cur[f] = m;
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<SimplicialComplex> complexes_up_to_symmetry(unsigned n, unsigned k) {
  std::set<std::vector<Codeword::Mask>> seen;
  for (const auto& cpx : labeled_complexes(n, k)) seen.insert(canonical_form(cpx));
  std::vector<SimplicialComplex> out;
  for (const auto& form : seen) {
    std::vector<Codeword> facets;
    for (auto m : form) facets.push_back(Codeword(m));
    out.push_back(SimplicialComplex::from_facets(n, std::move(facets)));
  }
  return out;
}

std::string complex_hash(const SimplicialComplex& cpx) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(cpx.n());
  for (auto m : canonical_form(cpx)) mix(m);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

constexpr unsigned kExhaustiveFreeFaces = 16;

void tally(ComplexSummary& s, const NeuralCode& code, const EnumerationOptions& opts) {
  ++s.codes;
  const Verdict v = decide(code);
  if (v.outcome == Outcome::Convex) {
    ++s.convex;
    if (opts.certify) {
      const auto real = realize_plan_2d(code, *v.plan);
      if (certify(real).code == code) ++s.certified;
    }
  } else if (v.outcome == Outcome::NotConvex) {
    ++s.not_convex;
  }
  const auto& mw = s.minimal.words();
  if (std::all_of(mw.begin(), mw.end(), [&](Codeword w) { return code.contains(w); })) ++s.containing_minimal;
}

}  // namespace

ComplexSummary summarize_complex(const SimplicialComplex& cpx, const EnumerationOptions& opts) {
  ComplexSummary s{cpx, complex_hash(cpx), minimal_code(cpx)};
  s.path_of_facets = cpx.facet_count() == 3 && path_of_facets(cpx).has_value();
  const NeuralCode none(cpx.n(), {});
  if (for_each_code_between(cpx, none, kExhaustiveFreeFaces, [&](const NeuralCode& c) { tally(s, c, opts); }))
    return s;

  s.exhaustive = false;
  std::vector<Codeword> free;
  for (Codeword w : cpx.faces()) {
    if (!w.empty() && std::find(cpx.facets().begin(), cpx.facets().end(), w) == cpx.facets().end()) free.push_back(w);
  }
  std::seed_seq seq{opts.seed, static_cast<std::uint64_t>(std::stoull(s.hash, nullptr, 16))};
  std::mt19937_64 rng(seq);
  std::bernoulli_distribution coin(0.5);
  for (unsigned i = 0; i < opts.samples; ++i) {
    std::vector<Codeword> words = cpx.facets();
    for (Codeword w : free) {
      if (coin(rng)) words.push_back(w);
    }
    tally(s, NeuralCode(cpx.n(), std::move(words)), opts);
  }
  return s;
}

std::vector<ComplexSummary> run_enumeration(const EnumerationOptions& opts) {
  if (opts.neurons > 6 || opts.facets == 0 || opts.facets > 3)
    throw Error(Errc::OutOfRange, "enumeration supports n <= 6 and 1 <= k <= 3");
  const auto complexes = complexes_up_to_symmetry(opts.neurons, opts.facets);
  std::vector<std::optional<ComplexSummary>> results(complexes.size());
  const auto count = static_cast<std::ptrdiff_t>(complexes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    results[ui] = summarize_complex(complexes[ui], opts);
  }
  std::vector<ComplexSummary> out;
  for (auto& r : results) out.push_back(std::move(*r));
  std::sort(out.begin(), out.end(), [](const ComplexSummary& a, const ComplexSummary& b) { return a.hash < b.hash; });
  return out;
}

}  // namespace convexa
