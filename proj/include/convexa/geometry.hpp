#pragma once

#include <span>
#include <vector>

#include "convexa/rational.hpp"

namespace convexa {

struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Open half-plane a·x + b·y < c, with (a, b) ≠ (0, 0).
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;

  Rational value(const RationalPoint& p) const { return a * p.x + b * p.y - c; }
  bool contains(const RationalPoint& p) const { return a * p.x + b * p.y < c; }

  /// Open side of the line through p and q lying to the left of p → q.
  static HalfPlane left_of(const RationalPoint& p, const RationalPoint& q);
};

/// Twice the signed area of triangle (o, a, b); positive for a left turn.
Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b);

/// Strict convex hull, counterclockwise, no collinear vertices.
std::vector<RationalPoint> convex_hull(std::vector<RationalPoint> points);

/// Open convex polygon: the intersection of its constraints, with the vertex
/// ring of its closure cached in counterclockwise order. A polygon without
/// interior is empty.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  /// Either orientation; collinear and repeated vertices are dropped, and a
  /// ring without area gives the empty polygon. Throws NotConvexPolygon.
  static ConvexPolygon from_ring(std::vector<RationalPoint> ring);

  ConvexPolygon clipped(const HalfPlane& h) const;

  bool empty() const { return ring_.empty(); }
  const std::vector<RationalPoint>& vertices() const { return ring_; }
  const std::vector<HalfPlane>& constraints() const { return constraints_; }
  bool contains(const RationalPoint& p) const;

  /// Ring is strictly convex and counterclockwise, and every vertex satisfies
  /// every constraint non-strictly.
  bool check_invariants() const;

 private:
  std::vector<HalfPlane> constraints_;
  std::vector<RationalPoint> ring_;
};

}  // namespace convexa
