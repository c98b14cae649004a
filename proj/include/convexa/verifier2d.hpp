#pragma once

#include <map>
#include <span>
#include <vector>

#include "convexa/code.hpp"
#include "convexa/geometry.hpp"

namespace convexa {

/// Vertex ring of an open convex polygon; orientation is normalized on input.
using Ring = std::vector<RationalPoint>;

struct WitnessedCode {
  NeuralCode code;
  std::map<Codeword, RationalPoint> witnesses;
};

/// Extra sample coordinates merged into the arrangement samples. Used to check
/// that refining the sample set never changes the result.
struct SampleRefinement {
  std::vector<Rational> abscissae;
  std::vector<Rational> ordinates;
};

/// Exact code realized by open convex polygons (polygon i is neuron i).
///
/// Samples every vertical line through an arrangement vertex and one between
/// each consecutive pair, and on each such line every crossing with a
/// supporting line plus one point between consecutive crossings. Every face,
/// edge and vertex of the line arrangement gets a sample, so lower-dimensional
/// atoms are found too. Each returned witness is re-checked against the rings.
///
/// Columns are evaluated in parallel when built with OpenMP; the result and
/// the witnesses chosen are identical to realized_code_2d_serial.
WitnessedCode realized_code_2d(std::span<const Ring> polygons, unsigned n, const SampleRefinement* refine = nullptr);
WitnessedCode realized_code_2d_serial(std::span<const Ring> polygons, unsigned n,
                                      const SampleRefinement* refine = nullptr);

/// Membership sets on a uniform (resolution+1)² grid over the bounding box.
NeuralCode grid_sample_code(std::span<const Ring> polygons, unsigned n, unsigned resolution);

/// Strict point-in-polygon for a convex ring of either orientation.
bool ring_contains(const Ring& ring, const RationalPoint& p);
Codeword membership(std::span<const Ring> polygons, const RationalPoint& p);

std::vector<Ring> rings_of(std::span<const ConvexPolygon> polygons);

}  // namespace convexa
