#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "convexa/code.hpp"

namespace convexa {

/// Every antichain of k nonempty subsets of [n], as complexes.
std::vector<SimplicialComplex> labeled_complexes(unsigned n, unsigned k);

/// One representative (the canonical form) per orbit under permutations of [n].
std::vector<SimplicialComplex> complexes_up_to_symmetry(unsigned n, unsigned k);

/// Lexicographically least sorted facet-mask list over all relabelings.
std::vector<Codeword::Mask> canonical_form(const SimplicialComplex& cpx);

/// FNV-1a of the canonical form, as 16 hex digits.
std::string complex_hash(const SimplicialComplex& cpx);

/// Calls `fn` on every code C with facets ∪ {∅} ⊆ C ⊆ faces(Δ) and C ⊇ lower.
/// Returns false without calling when there are more than max_free free faces.
template <class Fn>
bool for_each_code_between(const SimplicialComplex& cpx, const NeuralCode& lower, unsigned max_free, Fn&& fn) {
  std::vector<Codeword> fixed = cpx.facets();
  fixed.insert(fixed.end(), lower.words().begin(), lower.words().end());
  std::vector<Codeword> free;
  for (Codeword w : cpx.faces()) {
    if (!lower.contains(w) && std::find(fixed.begin(), fixed.end(), w) == fixed.end()) free.push_back(w);
  }
  if (free.size() > max_free) return false;
  const std::uint64_t total = std::uint64_t{1} << free.size();
  for (std::uint64_t s = 0; s < total; ++s) {
    std::vector<Codeword> words = fixed;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if ((s >> i) & 1u) words.push_back(free[i]);
    }
    fn(NeuralCode(cpx.n(), std::move(words)));
  }
  return true;
}

struct EnumerationOptions {
  unsigned neurons = 3;
  unsigned facets = 3;
  std::uint64_t seed = 1;
  unsigned samples = 64;      // per complex, when n >= 5
  bool certify = false;       // realize and verify every Convex code
};

struct ComplexSummary {
  SimplicialComplex complex;
  std::string hash;
  NeuralCode minimal;
  bool path_of_facets = false;
  bool exhaustive = true;
  std::size_t codes = 0;
  std::size_t convex = 0;
  std::size_t not_convex = 0;
  std::size_t containing_minimal = 0;  // equals `convex` when the theory holds
  std::size_t certified = 0;
};

ComplexSummary summarize_complex(const SimplicialComplex& cpx, const EnumerationOptions& opts);

/// Summaries for every complex up to symmetry, sorted by hash. Complexes are
/// processed in parallel when built with OpenMP.
std::vector<ComplexSummary> run_enumeration(const EnumerationOptions& opts);

}  // namespace convexa
