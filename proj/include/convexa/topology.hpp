#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "convexa/code.hpp"

namespace convexa {

/// Relabeling F_a, F_b, F_c of the three facets (indices into facets()) such that
/// (F_a∩F_c)\F_b = ∅ while (F_a∩F_b)\F_c and (F_b∩F_c)\F_a are nonempty.
struct PathOfFacetsWitness {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  friend bool operator==(const PathOfFacetsWitness&, const PathOfFacetsWitness&) = default;
};

/// Returns a witness iff exactly one of the three "pair minus third" sets is
/// empty. Of the empty pair, F_a is the facet that sorts later in display
/// order (fewer members, then lexicographically larger). Throws WrongFacetCount.
std::optional<PathOfFacetsWitness> path_of_facets(const SimplicialComplex& cpx);

bool is_valid_witness(const SimplicialComplex& cpx, const PathOfFacetsWitness& w);

/// Contractibility of a nerve on at most three vertices: a full simplex or a tree.
bool small_nerve_contractible(const SimplicialComplex& nerve_cpx);

/// Contractibility of Lk_σ(Δ) for Δ with at most three facets, via the nerve of
/// {F\σ : σ ⊆ F}. Throws TooManyFacets or NotAFace.
bool link_contractible_3max(const SimplicialComplex& cpx, Codeword sigma);

enum class ObstructionStatus { Obstruction, Satisfied, Undetermined };

enum class ObstructionReason {
  PresentInCode,      // σ ∈ C
  TwoFacetLemma,      // σ lies in exactly two facets: link never contractible
  NerveContractible,  // nerve of the link facets is a tree or a simplex
  NerveNotContractible,
  BeyondThreeFacets,  // σ lies in four or more facets
};

struct ObstructionReport {
  Codeword sigma;
  ObstructionStatus status = ObstructionStatus::Undetermined;
  ObstructionReason reason = ObstructionReason::BeyondThreeFacets;
};

const char* to_string(ObstructionStatus s);
const char* to_string(ObstructionReason r);

/// One report per nonempty intersection of two or more facets of Δ(C), in
/// display order.
std::vector<ObstructionReport> local_obstructions(const NeuralCode& code);

bool has_obstruction(const std::vector<ObstructionReport>& reports);

/// C_min(Δ) by scanning facet intersections. Throws TooManyFacets for > 3 facets.
NeuralCode minimal_code(const SimplicialComplex& cpx);

/// {F_a, F_b, F_c, F_a∩F_b, F_b∩F_c, ∅} for a path-condition complex.
NeuralCode minimal_code_from_path(const SimplicialComplex& cpx, const PathOfFacetsWitness& w);

}  // namespace convexa
