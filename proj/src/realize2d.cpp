#include "convexa/realize2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "convexa/error.hpp"

namespace convexa {

WitnessedCode certify(const Realization2D& r) {
  const auto rings = rings_of(r.polygons);
  return realized_code_2d(rings, r.n);
}

namespace {

NeuralCode certified_code(const Realization2D& r) { return r.certified ? *r.certified : certify(r).code; }

// Height of the tent's top chain above the base segment [x0, x1].
Rational tent_height(const Rational& x, const Rational& x0, const Rational& x1, const Rational& bulge) {
  return 1 + bulge * (x - x0) * (x1 - x) / (x1 - x0);
}

}  // namespace

Realization2D fatten(const Realization1D& base, const std::map<Codeword, int>& parents_needed,
                     const RefineOptions& opts) {
  Realization2D out;
  out.n = base.n;
  out.polygons.assign(base.n, ConvexPolygon{});

  std::vector<Rational> ends;
  for (const auto& iv : base.intervals) {
    if (!iv.empty()) {
      ends.push_back(iv.lo());
      ends.push_back(iv.hi());
    }
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

  const NeuralCode target = realized_code_1d(base);
  if (ends.empty()) {
    for (const auto& [parent, count] : parents_needed) {
      if (count > 0) throw Error(Errc::NoDedicatedVertex, "empty base has no regions");
    }
    out.universe = ConvexPolygon::from_ring({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    out.certified = target;
    return out;
  }

  // Membership of each open piece between consecutive endpoints.
  auto piece_mask = [&](std::size_t t) {
    const Rational mid = (ends[t] + ends[t + 1]) / 2;
    Codeword::Mask m = 0;
    for (unsigned i = 0; i < base.n; ++i) {
      if (base.intervals[i].contains(mid)) m |= Codeword::Mask{1} << i;
    }
    return Codeword(m);
  };
  std::vector<int> per_piece(ends.size() - 1, 1);
  std::vector<Codeword> piece_owner(ends.size() - 1);
  for (const auto& [parent, count] : parents_needed) {
    if (count <= 0) continue;
    std::optional<std::size_t> piece;
    for (std::size_t t = 0; t + 1 < ends.size() && !piece; ++t) {
      if (piece_mask(t) == parent) piece = t;
    }
    if (!piece) throw Error(Errc::NoDedicatedVertex, "no open region for " + to_string(parent, base.n));
    per_piece[*piece] = std::max(per_piece[*piece], count);
    piece_owner[*piece] = parent;
  }

  const Rational& x0 = ends.front();
  const Rational& x1 = ends.back();
  Rational bulge = 1;
  for (int attempt = 0; attempt < opts.budget; ++attempt, bulge /= 2) {
    std::vector<RationalPoint> ring{{x0, 0}, {x1, 0}};
    std::vector<std::pair<Codeword, std::size_t>> dedicated;
    // Top chain runs right to left to keep the ring counterclockwise.
    for (std::size_t t = ends.size() - 1; t-- > 0;) {
      const int k = per_piece[t];
      for (int s = k; s >= 1; --s) {
        Rational x = ends[t] + (ends[t + 1] - ends[t]) * s / (k + 1);
        Rational y = tent_height(x, x0, x1, bulge);
        if (!piece_owner[t].empty()) dedicated.emplace_back(piece_owner[t], ring.size());
        ring.push_back({std::move(x), std::move(y)});
      }
    }
    out.universe = ConvexPolygon::from_ring(ring);
    if (out.universe.vertices().size() != ring.size()) continue;  // lost strict convexity

    for (unsigned i = 0; i < base.n; ++i) {
      const auto& iv = base.intervals[i];
      if (iv.empty()) {
        out.polygons[i] = ConvexPolygon{};
        continue;
      }
      out.polygons[i] = out.universe.clipped({-1, 0, -iv.lo()}).clipped({1, 0, iv.hi()});
    }
    out.anchors.clear();
    for (const auto& [parent, vertex] : dedicated) out.anchors.push_back({parent, vertex, false});

    if (certify(out).code == target) {
      out.certified = target;
      return out;
    }
  }
  throw Error(Errc::RefineExhausted, "tent construction did not reproduce the interval code");
}

Realization2D slice(const Realization2D& real, std::span<const Extra> extras, const RefineOptions& opts) {
  if (extras.empty()) return real;
  const NeuralCode before = certified_code(real);
  std::vector<Codeword> added;
  for (const Extra& e : extras) {
    if (before.contains(e.tau) || std::find(added.begin(), added.end(), e.tau) != added.end())
      throw Error(Errc::AlreadyRealized, to_string(e.tau, real.n) + " is already realized");
    if (!e.tau.proper_subset_of(e.parent))
      throw Error(Errc::NoParent, to_string(e.parent, real.n) + " does not strictly contain " + to_string(e.tau, real.n));
    added.push_back(e.tau);
  }
  const NeuralCode target = before.with(added);

  // Pick anchors up front; they do not depend on the cap size.
  Realization2D proto = real;
  std::vector<std::size_t> anchor_of;
  for (const Extra& e : extras) {
    auto it = std::find_if(proto.anchors.begin(), proto.anchors.end(),
                           [&](const Anchor& a) { return !a.used && a.parent == e.parent; });
    if (it == proto.anchors.end())
      throw Error(Errc::NoDedicatedVertex, "no free vertex for parent " + to_string(e.parent, real.n));
    it->used = true;
    anchor_of.push_back(static_cast<std::size_t>(it - proto.anchors.begin()));
  }

  const auto& ring = real.universe.vertices();
  const std::size_t m = ring.size();
  Rational delta = ratio(1, 4);
  for (int attempt = 0; attempt < opts.budget; ++attempt, delta /= 2) {
    Realization2D out = proto;
    out.certified.reset();
    for (std::size_t k = 0; k < extras.size(); ++k) {
      const Extra& e = extras[k];
      const std::size_t vi = out.anchors[anchor_of[k]].vertex;
      const RationalPoint& v = ring[vi];
      const RationalPoint& prev = ring[(vi + m - 1) % m];
      const RationalPoint& next = ring[(vi + 1) % m];
      const RationalPoint a{v.x + delta * (prev.x - v.x), v.y + delta * (prev.y - v.y)};
      const RationalPoint b{v.x + delta * (next.x - v.x), v.y + delta * (next.y - v.y)};
      // v lies to the right of a → b, so the left side keeps everything but the cap.
      const HalfPlane keep = HalfPlane::left_of(a, b);
      const Codeword affected = e.parent - e.tau;
      for (NeuronId id : affected.members()) {
        auto& poly = out.polygons[index_of(id)];
        poly = poly.clipped(keep);
      }
      out.cuts.push_back({e.tau, e.parent, keep, affected});
    }
    if (certify(out).code == target) {
      out.certified = target;
      return out;
    }
  }
  throw Error(Errc::RefineExhausted, "cap cuts did not certify after " + std::to_string(opts.budget) + " attempts");
}

namespace {

// Exact unit vector close to angle theta, from the rational parametrization of
// the circle.
RationalPoint unit_direction(double theta) {
  const bool flip = std::cos(theta) < 0;
  const double phi = flip ? theta - std::numbers::pi : theta;
  const Rational t = ratio(std::lround(std::tan(phi / 2) * 4096), 4096);
  const Rational d = 1 + t * t;
  RationalPoint u{(1 - t * t) / d, 2 * t / d};
  if (flip) {
    u.x = -u.x;
    u.y = -u.y;
  }
  return u;
}

}  // namespace

Realization2D triangle_construction(const SimplicialComplex& cpx, const NeuralCode& code, const RefineOptions& opts) {
  if (cpx.facet_count() != 3 || cpx.is_void_plus_empty())
    throw Error(Errc::WrongFacetCount, "corridor construction needs exactly 3 facets");
  if (!is_max_intersection_complete(code) || !(closure(code) == cpx))
    throw Error(Errc::NotMaxIntersectionComplete, "code must be max-intersection-complete with complex " + to_string(cpx));
  const auto& f = cpx.facets();

  std::vector<Codeword> base_words = f;
  for (Codeword w : facet_intersections(cpx)) base_words.push_back(w);
  const NeuralCode base(code.n(), std::move(base_words));
  const auto extras = choose_parents(code, base, f);

  const RationalPoint corner[3] = {{0, 0}, {8, 0}, {4, 7}};
  // Corridor along edge (j, k): the side of the edge-parallel line a quarter of
  // the way towards the opposite corner.
  auto corridor = [&](int j, int k) {
    const int l = 3 - j - k;
    HalfPlane h = HalfPlane::left_of(corner[j], corner[k]);
    // Flip so the opposite corner is outside, then shift the boundary inward.
    if (sgn(h.value(corner[l])) < 0) h = {-h.a, -h.b, -h.c};
    const RationalPoint p{corner[j].x + (corner[l].x - corner[j].x) / 4, corner[j].y + (corner[l].y - corner[j].y) / 4};
    h.c = h.a * p.x + h.b * p.y;
    return h;
  };
  const HalfPlane corridors[3] = {corridor(1, 2), corridor(0, 2), corridor(0, 1)};  // indexed by opposite corner
  auto corridor_between = [&](int j, int k) -> const HalfPlane& { return corridors[3 - j - k]; };

  std::map<int, int> anchors_needed;
  for (const Extra& e : extras) {
    const int j = static_cast<int>(std::find(f.begin(), f.end(), e.parent) - f.begin());
    ++anchors_needed[j];
  }

  Rational radius = 1;
  for (int attempt = 0; attempt < opts.budget; ++attempt, radius /= 2) {
    std::vector<RationalPoint> points;
    std::vector<int> owner;
    for (int j = 0; j < 3; ++j) {
      const auto& p = corner[(j + 2) % 3];
      const auto& c = corner[j];
      const auto& q = corner[(j + 1) % 3];
      // Outward normals of the two edges at corner j bound the directions in
      // which c is extreme.
      const double in_angle = std::atan2(-to_double(c.x - p.x), to_double(c.y - p.y));
      double out_angle = std::atan2(-to_double(q.x - c.x), to_double(q.y - c.y));
      while (out_angle < in_angle) out_angle += 2 * std::numbers::pi;
      const int count = std::max(1, anchors_needed[j]);
      for (int s = 1; s <= count; ++s) {
        const double theta = in_angle + (out_angle - in_angle) * s / (count + 1);
        const RationalPoint u = unit_direction(theta);
        points.push_back({c.x + radius * u.x, c.y + radius * u.y});
        owner.push_back(j);
      }
    }
    const auto hull = convex_hull(points);
    if (hull.size() != points.size()) continue;

    Realization2D out;
    out.n = code.n();
    out.universe = ConvexPolygon::from_ring(hull);
    for (std::size_t v = 0; v < hull.size(); ++v) {
      const auto it = std::find(points.begin(), points.end(), hull[v]);
      const int j = owner[static_cast<std::size_t>(it - points.begin())];
      out.anchors.push_back({f[static_cast<std::size_t>(j)], v, false});
    }
    out.polygons.assign(code.n(), ConvexPolygon{});
    for (unsigned i = 0; i < code.n(); ++i) {
      std::vector<int> sig;
      for (int j = 0; j < 3; ++j) {
        if (f[static_cast<std::size_t>(j)].contains(i)) sig.push_back(j);
      }
      ConvexPolygon poly;
      if (sig.size() == 3) {
        poly = out.universe;
      } else if (sig.size() == 2) {
        poly = out.universe.clipped(corridor_between(sig[0], sig[1]));
      } else if (sig.size() == 1) {
        const int j = sig[0];
        poly = out.universe.clipped(corridor_between(j, (j + 1) % 3)).clipped(corridor_between(j, (j + 2) % 3));
      }
      out.polygons[i] = std::move(poly);
    }
    if (certify(out).code != base) continue;
    out.certified = base;
    try {
      auto sliced = slice(out, extras, opts);
      return sliced;
    } catch (const Error& e) {
      if (e.code() != Errc::RefineExhausted) throw;
    }
  }
  throw Error(Errc::RefineExhausted, "corridor construction did not certify");
}

Realization1D realize_plan_1d(const NeuralCode& code, const RealizationPlan& plan) {
  if (plan.strategy != Strategy::PathCase) throw Error(Errc::OutOfRange, "interval layout needs a PathCase plan");
  return path_layout_1d(code.n(), plan.path[0], plan.path[1], plan.path[2]);
}

Realization2D realize_plan_2d(const NeuralCode& code, const RealizationPlan& plan, const RefineOptions& opts) {
  if (plan.strategy == Strategy::MaxIntersectionCase) return triangle_construction(closure(code), code, opts);
  std::map<Codeword, int> needed;
  for (const Extra& e : plan.extras) ++needed[e.parent];
  const Realization2D base = fatten(realize_plan_1d(code, plan), needed, opts);
  return slice(base, plan.extras, opts);
}

}  // namespace convexa
