#pragma once

#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "convexa/decision.hpp"
#include "convexa/geometry.hpp"
#include "convexa/realize1d.hpp"
#include "convexa/verifier2d.hpp"

namespace convexa {

/// A universe vertex reserved for carving one extra codeword out of `parent`'s region.
struct Anchor {
  Codeword parent;
  std::size_t vertex = 0;  // index into universe.vertices()
  bool used = false;
};

struct Cut {
  Codeword tau;
  Codeword parent;
  HalfPlane plane;    // kept side
  Codeword affected;  // parent \ tau
};

struct Realization2D {
  unsigned n = 0;
  std::vector<ConvexPolygon> polygons;  // indexed by neuron
  ConvexPolygon universe;
  std::vector<Cut> cuts;
  std::vector<Anchor> anchors;
  /// Code certified by the verifier for exactly these polygons.
  std::optional<NeuralCode> certified;
};

using Realization = std::variant<Realization1D, Realization2D>;

struct RefineOptions {
  int budget = 32;
};

/// Extends each interval to a vertical strip inside a convex "tent" whose top
/// chain carries parents_needed[τ̃] dedicated vertices over an open piece of
/// τ̃'s region. Certified to realize the base's 1-D code.
Realization2D fatten(const Realization1D& base, const std::map<Codeword, int>& parents_needed,
                     const RefineOptions& opts = {});

/// Carves each extra τ out of its parent's region with one half-plane cut near
/// an unused anchor of that parent, applied to every neuron in parent \ τ.
/// The cap size is halved until the verifier certifies base ∪ {τ}.
Realization2D slice(const Realization2D& real, std::span<const Extra> extras, const RefineOptions& opts = {});

/// Three-corridor construction for a three-facet complex without a
/// Path-of-Facets witness, followed by slicing of the remaining codewords.
/// Throws NotMaxIntersectionComplete.
Realization2D triangle_construction(const SimplicialComplex& cpx, const NeuralCode& code,
                                    const RefineOptions& opts = {});

/// Runs a Convex verdict's plan in the plane.
Realization2D realize_plan_2d(const NeuralCode& code, const RealizationPlan& plan, const RefineOptions& opts = {});

/// The interval realization of a PathCase plan's base.
Realization1D realize_plan_1d(const NeuralCode& code, const RealizationPlan& plan);

WitnessedCode certify(const Realization2D& r);

}  // namespace convexa
