#include "convexa/topology.hpp"

#include <algorithm>

#include "convexa/error.hpp"

namespace convexa {

namespace {

void require_three(const SimplicialComplex& cpx) {
  if (cpx.facet_count() != 3 || cpx.is_void_plus_empty())
    throw Error(Errc::WrongFacetCount, "expected exactly 3 facets, got " + std::to_string(cpx.facet_count()));
}

}  // namespace

std::optional<PathOfFacetsWitness> path_of_facets(const SimplicialComplex& cpx) {
  require_three(cpx);
  const auto& f = cpx.facets();
  // Pair (i, j) with third facet t.
  struct Pair {
    std::size_t i, j, t;
  };
  const Pair pairs[3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
  int empties = 0;
  const Pair* empty_pair = nullptr;
  for (const Pair& p : pairs) {
    if (((f[p.i] & f[p.j]) - f[p.t]).empty()) {
      ++empties;
      empty_pair = &p;
    }
  }
  if (empties != 1) return std::nullopt;
  // Facets are stored in display order, so j sorts later than i.
  return PathOfFacetsWitness{empty_pair->j, empty_pair->t, empty_pair->i};
}

bool is_valid_witness(const SimplicialComplex& cpx, const PathOfFacetsWitness& w) {
  if (cpx.facet_count() != 3 || cpx.is_void_plus_empty()) return false;
  if (w.a > 2 || w.b > 2 || w.c > 2 || w.a == w.b || w.b == w.c || w.a == w.c) return false;
  const auto& f = cpx.facets();
  return ((f[w.a] & f[w.c]) - f[w.b]).empty() && !((f[w.a] & f[w.b]) - f[w.c]).empty() &&
         !((f[w.b] & f[w.c]) - f[w.a]).empty();
}

bool small_nerve_contractible(const SimplicialComplex& nerve_cpx) {
  if (nerve_cpx.is_void_plus_empty()) return false;
  // One facet means the nerve is a single simplex.
  if (nerve_cpx.facet_count() == 1) return true;
  Codeword::Mask vertices = 0;
  std::size_t edges = 0;
  for (Codeword f : nerve_cpx.facets()) {
    if (f.size() > 2) throw Error(Errc::OutOfRange, "nerve is not a graph");
    vertices |= f.mask();
    if (f.size() == 2) ++edges;
  }
  const int vertex_count = std::popcount(vertices);
  if (edges + 1 != static_cast<std::size_t>(vertex_count)) return false;
  // Connectivity by repeated relaxation; the graphs here have at most three vertices.
  Codeword::Mask reached = vertices & (~vertices + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (Codeword f : nerve_cpx.facets()) {
      if ((f.mask() & reached) != 0 && (f.mask() & ~reached) != 0) {
        reached |= f.mask();
        grew = true;
      }
    }
  }
  return reached == vertices;
}

bool link_contractible_3max(const SimplicialComplex& cpx, Codeword sigma) {
  if (cpx.facet_count() > 3) throw Error(Errc::TooManyFacets, "link analysis supports at most 3 facets");
  const SimplicialComplex lk = link(cpx, sigma);
  return small_nerve_contractible(nerve(lk.facets()));
}

const char* to_string(ObstructionStatus s) {
  switch (s) {
    case ObstructionStatus::Obstruction: return "Obstruction";
    case ObstructionStatus::Satisfied: return "Satisfied";
    case ObstructionStatus::Undetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(ObstructionReason r) {
  switch (r) {
    case ObstructionReason::PresentInCode: return "present-in-code";
    case ObstructionReason::TwoFacetLemma: return "two-facet-intersection";
    case ObstructionReason::NerveContractible: return "link-nerve-contractible";
    case ObstructionReason::NerveNotContractible: return "link-nerve-not-contractible";
    case ObstructionReason::BeyondThreeFacets: return "more-than-three-facets";
  }
  return "?";
}

std::vector<ObstructionReport> local_obstructions(const NeuralCode& code) {
  const SimplicialComplex cpx = closure(code);
  std::vector<ObstructionReport> out;
  for (Codeword sigma : facet_intersections(cpx)) {
    if (sigma.empty()) continue;
    ObstructionReport rep{sigma};
    std::vector<Codeword> containing;
    for (Codeword f : cpx.facets()) {
      if (sigma.subset_of(f)) containing.push_back(f);
    }
    if (code.contains(sigma)) {
      rep.status = ObstructionStatus::Satisfied;
      rep.reason = ObstructionReason::PresentInCode;
    } else if (containing.size() == 2) {
      rep.status = ObstructionStatus::Obstruction;
      rep.reason = ObstructionReason::TwoFacetLemma;
    } else if (containing.size() == 3) {
      // The link depends only on the facets containing σ.
      const auto local = SimplicialComplex::from_facets(cpx.n(), containing);
      if (link_contractible_3max(local, sigma)) {
        rep.status = ObstructionStatus::Satisfied;
        rep.reason = ObstructionReason::NerveContractible;
      } else {
        rep.status = ObstructionStatus::Obstruction;
        rep.reason = ObstructionReason::NerveNotContractible;
      }
    }
    out.push_back(rep);
  }
  return out;
}

bool has_obstruction(const std::vector<ObstructionReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const ObstructionReport& r) { return r.status == ObstructionStatus::Obstruction; });
}

NeuralCode minimal_code(const SimplicialComplex& cpx) {
  if (cpx.facet_count() > 3) throw Error(Errc::TooManyFacets, "minimal code supports at most 3 facets");
  std::vector<Codeword> words = cpx.facets();
  for (Codeword sigma : facet_intersections(cpx)) {
    if (!sigma.empty() && !link_contractible_3max(cpx, sigma)) words.push_back(sigma);
  }
  return NeuralCode(cpx.n(), std::move(words));
}

NeuralCode minimal_code_from_path(const SimplicialComplex& cpx, const PathOfFacetsWitness& w) {
  if (!is_valid_witness(cpx, w)) throw Error(Errc::InvalidWitness, "not a Path-of-Facets witness");
  const auto& f = cpx.facets();
  return NeuralCode(cpx.n(), {f[w.a], f[w.b], f[w.c], f[w.a] & f[w.b], f[w.b] & f[w.c]});
}

}  // namespace convexa
