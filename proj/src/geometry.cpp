#include "convexa/geometry.hpp"

#include <algorithm>

#include "convexa/error.hpp"

namespace convexa {

HalfPlane HalfPlane::left_of(const RationalPoint& p, const RationalPoint& q) {
  // cross(p, q, r) > 0  ⇔  (qy - py)·rx - (qx - px)·ry < (qy - py)·px - (qx - px)·py
  HalfPlane h{q.y - p.y, p.x - q.x, 0};
  h.c = h.a * p.x + h.b * p.y;
  return h;
}

Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<RationalPoint> convex_hull(std::vector<RationalPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RationalPoint& p, const RationalPoint& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<RationalPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && sgn(cross(hull[k - 2], hull[k - 1], p)) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && sgn(cross(hull[k - 2], hull[k - 1], pts[i])) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

namespace {

// Drops repeated and collinear vertices; returns an empty ring when nothing
// with positive area remains.
std::vector<RationalPoint> tidy_ring(std::vector<RationalPoint> ring) {
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto& prev = ring[(i + ring.size() - 1) % ring.size()];
      const auto& next = ring[(i + 1) % ring.size()];
      if (ring[i] == prev || sgn(cross(prev, ring[i], next)) == 0) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (ring.size() < 3) ring.clear();
  return ring;
}

}  // namespace

ConvexPolygon ConvexPolygon::from_ring(std::vector<RationalPoint> ring) {
  ConvexPolygon out;
  out.ring_ = tidy_ring(std::move(ring));
  const std::size_t m = out.ring_.size();
  Rational area = 0;
  for (std::size_t i = 0; i < m; ++i) area += cross({0, 0}, out.ring_[i], out.ring_[(i + 1) % m]);
  if (sgn(area) < 0) std::reverse(out.ring_.begin(), out.ring_.end());
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(cross(out.ring_[i], out.ring_[(i + 1) % m], out.ring_[(i + 2) % m])) < 0)
      throw Error(Errc::NotConvexPolygon, "ring is not convex");
  }
  for (std::size_t i = 0; i < out.ring_.size(); ++i)
    out.constraints_.push_back(HalfPlane::left_of(out.ring_[i], out.ring_[(i + 1) % out.ring_.size()]));
  return out;
}

ConvexPolygon ConvexPolygon::clipped(const HalfPlane& h) const {
  if (empty()) return {};
  std::vector<RationalPoint> out;
  const std::size_t m = ring_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = ring_[i];
    const auto& q = ring_[(i + 1) % m];
    const Rational vp = h.value(p);
    const Rational vq = h.value(q);
    if (sgn(vp) <= 0) out.push_back(p);
    if ((sgn(vp) < 0 && sgn(vq) > 0) || (sgn(vp) > 0 && sgn(vq) < 0)) {
      const Rational t = vp / (vp - vq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  ConvexPolygon res;
  res.ring_ = tidy_ring(std::move(out));
  if (!res.ring_.empty()) {
    res.constraints_ = constraints_;
    res.constraints_.push_back(h);
  }
  return res;
}

bool ConvexPolygon::contains(const RationalPoint& p) const {
  if (empty()) return false;
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const HalfPlane& h) { return h.contains(p); });
}

bool ConvexPolygon::check_invariants() const {
  if (ring_.empty()) return constraints_.empty();
  const std::size_t m = ring_.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(cross(ring_[i], ring_[(i + 1) % m], ring_[(i + 2) % m])) <= 0) return false;
  }
  for (const auto& h : constraints_) {
    if (sgn(h.a) == 0 && sgn(h.b) == 0) return false;
    for (const auto& v : ring_) {
      if (sgn(h.value(v)) > 0) return false;
    }
  }
  return true;
}

}  // namespace convexa
