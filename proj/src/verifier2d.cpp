#include "convexa/verifier2d.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace convexa {

namespace {

// Non-vertical line y = slope·x + offset.
struct Line {
  Rational slope;
  Rational offset;

  Rational at(const Rational& x) const { return slope * x + offset; }
  friend bool operator==(const Line&, const Line&) = default;
};

// A non-vertical polygon edge over the closed x-range [x0, x1].
struct Segment {
  Line line;
  Rational x0, x1;

  friend bool operator==(const Segment&, const Segment&) = default;
};

bool segment_less(const Segment& a, const Segment& b) {
  if (a.line.slope != b.line.slope) return a.line.slope < b.line.slope;
  if (a.line.offset != b.line.offset) return a.line.offset < b.line.offset;
  if (a.x0 != b.x0) return a.x0 < b.x0;
  return a.x1 < b.x1;
}

struct Shape {
  bool empty = true;
  Rational xmin, xmax;
  std::vector<Line> lower, upper;
};

Ring normalized(const Ring& in) {
  Ring ring = in;
  // Signed area decides orientation.
  Rational area = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& p = ring[i];
    const auto& q = ring[(i + 1) % ring.size()];
    area += p.x * q.y - q.x * p.y;
  }
  if (sgn(area) < 0) std::reverse(ring.begin(), ring.end());
  if (sgn(area) == 0) ring.clear();
  return ring;
}

// Vertical decomposition of the polygons' edge arrangement. Between two
// consecutive events (vertex abscissae and edge crossings) the edges over a
// column and their vertical order do not change, so event columns and one
// column between each pair meet every face of the arrangement.
// `ring` must be counterclockwise (or empty).
bool ccw_contains(const Ring& ring, const RationalPoint& p) {
  if (ring.size() < 3) return false;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (sgn(cross(ring[i], ring[(i + 1) % ring.size()], p)) <= 0) return false;
  }
  return true;
}

class Arrangement {
 public:
  Arrangement(std::span<const Ring> polygons, const SampleRefinement* refine) {
    std::vector<Rational> events;
    for (const Ring& raw : polygons) {
      Shape s;
      const Ring ring = normalized(raw);
      if (!ring.empty()) {
        s.empty = false;
        s.xmin = s.xmax = ring[0].x;
        for (std::size_t i = 0; i < ring.size(); ++i) {
          const auto& p = ring[i];
          const auto& q = ring[(i + 1) % ring.size()];
          s.xmin = std::min(s.xmin, p.x);
          s.xmax = std::max(s.xmax, p.x);
          events.push_back(p.x);
          if (p.x == q.x) continue;
          Line l{(q.y - p.y) / (q.x - p.x), 0};
          l.offset = p.y - l.slope * p.x;
          (q.x > p.x ? s.lower : s.upper).push_back(l);
          segments_.push_back({l, std::min(p.x, q.x), std::max(p.x, q.x)});
        }
      }
      shapes_.push_back(std::move(s));
    }
    std::sort(segments_.begin(), segments_.end(), segment_less);
    segments_.erase(std::unique(segments_.begin(), segments_.end()), segments_.end());

    for (std::size_t i = 0; i < segments_.size(); ++i) {
      const Segment& a = segments_[i];
      for (std::size_t j = i + 1; j < segments_.size(); ++j) {
        const Segment& b = segments_[j];
        if (a.line.slope == b.line.slope || b.x0 > a.x1 || a.x0 > b.x1) continue;
        Rational x = (b.line.offset - a.line.offset) / (a.line.slope - b.line.slope);
        if (a.x0 <= x && x <= a.x1 && b.x0 <= x && x <= b.x1) events.push_back(std::move(x));
      }
    }
    xs_ = with_midpoints(std::move(events));
    if (refine) {
      extra_ys_ = refine->ordinates;
      xs_.insert(xs_.end(), refine->abscissae.begin(), refine->abscissae.end());
      sort_unique(xs_);
    }
  }

  const std::vector<Rational>& abscissae() const { return xs_; }

  struct Hit {
    Codeword::Mask mask;
    std::size_t yi;
    RationalPoint point;
  };

  // First sample (in increasing y) of each membership set on column x.
  std::vector<Hit> column(const Rational& x) const {
    struct Slice {
      bool open = false;
      Rational lo, hi;
    };
    std::vector<Slice> slices(shapes_.size());
    for (std::size_t i = 0; i < shapes_.size(); ++i) {
      const Shape& s = shapes_[i];
      if (s.empty || !(s.xmin < x && x < s.xmax)) continue;
      Slice& sl = slices[i];
      sl.open = true;
      sl.lo = s.lower.front().at(x);
      for (std::size_t k = 1; k < s.lower.size(); ++k) sl.lo = std::max(sl.lo, Rational(s.lower[k].at(x)));
      sl.hi = s.upper.front().at(x);
      for (std::size_t k = 1; k < s.upper.size(); ++k) sl.hi = std::min(sl.hi, Rational(s.upper[k].at(x)));
    }
    std::vector<Rational> crossings;
    for (const Segment& g : segments_) {
      if (g.x0 <= x && x <= g.x1) crossings.push_back(g.line.at(x));
    }
    std::vector<Rational> ys = with_midpoints(std::move(crossings));
    if (!extra_ys_.empty()) {
      ys.insert(ys.end(), extra_ys_.begin(), extra_ys_.end());
      sort_unique(ys);
    }
    std::vector<Hit> hits;
    for (std::size_t yi = 0; yi < ys.size(); ++yi) {
      Codeword::Mask m = 0;
      for (std::size_t i = 0; i < slices.size(); ++i) {
        const Slice& sl = slices[i];
        if (sl.open && sl.lo < ys[yi] && ys[yi] < sl.hi) m |= Codeword::Mask{1} << i;
      }
      if (std::none_of(hits.begin(), hits.end(), [m](const Hit& h) { return h.mask == m; }))
        hits.push_back({m, yi, {x, ys[yi]}});
    }
    return hits;
  }

 private:
  static void sort_unique(std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  static std::vector<Rational> with_midpoints(std::vector<Rational> v) {
    sort_unique(v);
    if (v.empty()) return {Rational(0)};
    std::vector<Rational> out;
    out.reserve(2 * v.size() + 1);
    out.push_back(v.front() - 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(v[i]);
      if (i + 1 < v.size()) out.push_back((v[i] + v[i + 1]) / 2);
    }
    out.push_back(v.back() + 1);
    return out;
  }

  std::vector<Shape> shapes_;
  std::vector<Segment> segments_;
  std::vector<Rational> xs_;
  std::vector<Rational> extra_ys_;
};

struct Found {
  std::size_t xi;
  std::size_t yi;
  RationalPoint point;
};

void record(std::map<Codeword::Mask, Found>& found, const Arrangement::Hit& h, std::size_t xi) {
  auto it = found.find(h.mask);
  if (it == found.end()) {
    found.emplace(h.mask, Found{xi, h.yi, h.point});
  } else if (xi < it->second.xi || (xi == it->second.xi && h.yi < it->second.yi)) {
    it->second = Found{xi, h.yi, h.point};
  }
}

WitnessedCode finish(std::span<const Ring> polygons, unsigned n, const std::map<Codeword::Mask, Found>& found) {
  std::vector<Ring> rings;
  for (const Ring& r : polygons) rings.push_back(normalized(r));
  WitnessedCode out;
  std::vector<Codeword> words;
  for (const auto& [mask, f] : found) {
    const Codeword w(mask);
    if (membership(rings, f.point) != w) throw std::logic_error("verifier witness failed re-evaluation");
    words.push_back(w);
    out.witnesses.emplace(w, f.point);
  }
  out.code = NeuralCode(n, std::move(words));
  if (!out.witnesses.count(Codeword{})) {
    // ∅ is witnessed far outside every polygon.
    Rational far = 1;
    for (const Ring& r : rings)
      for (const auto& p : r) far = std::max(far, Rational(abs(p.x) + 1));
    out.witnesses.emplace(Codeword{}, RationalPoint{far, 0});
  }
  return out;
}

}  // namespace

bool ring_contains(const Ring& ring, const RationalPoint& p) { return ccw_contains(normalized(ring), p); }

Codeword membership(std::span<const Ring> polygons, const RationalPoint& p) {
  Codeword::Mask m = 0;
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    if (ccw_contains(normalized(polygons[i]), p)) m |= Codeword::Mask{1} << i;
  }
  return Codeword(m);
}

std::vector<Ring> rings_of(std::span<const ConvexPolygon> polygons) {
  std::vector<Ring> out;
  out.reserve(polygons.size());
  for (const auto& p : polygons) out.push_back(p.vertices());
  return out;
}

WitnessedCode realized_code_2d_serial(std::span<const Ring> polygons, unsigned n, const SampleRefinement* refine) {
  const Arrangement arr(polygons, refine);
  std::map<Codeword::Mask, Found> found;
  const auto& xs = arr.abscissae();
  for (std::size_t xi = 0; xi < xs.size(); ++xi) {
    for (const auto& h : arr.column(xs[xi])) record(found, h, xi);
  }
  return finish(polygons, n, found);
}

WitnessedCode realized_code_2d(std::span<const Ring> polygons, unsigned n, const SampleRefinement* refine) {
#ifdef _OPENMP
  const Arrangement arr(polygons, refine);
  const auto& xs = arr.abscissae();
  const auto count = static_cast<std::ptrdiff_t>(xs.size());
  std::map<Codeword::Mask, Found> found;
#pragma omp parallel if (count > 64)
  {
    std::map<Codeword::Mask, Found> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::ptrdiff_t xi = 0; xi < count; ++xi) {
      const auto ux = static_cast<std::size_t>(xi);
      for (const auto& h : arr.column(xs[ux])) record(local, h, ux);
    }
#pragma omp critical(convexa_verifier_merge)
    for (const auto& [mask, f] : local) record(found, {mask, f.yi, f.point}, f.xi);
  }
  return finish(polygons, n, found);
#else
  return realized_code_2d_serial(polygons, n, refine);
#endif
}

NeuralCode grid_sample_code(std::span<const Ring> polygons, unsigned n, unsigned resolution) {
  std::vector<Ring> rings;
  std::optional<Rational> x0, x1, y0, y1;
  for (const Ring& r : polygons) {
    rings.push_back(normalized(r));
    for (const auto& p : r) {
      if (!x0 || p.x < *x0) x0 = p.x;
      if (!x1 || p.x > *x1) x1 = p.x;
      if (!y0 || p.y < *y0) y0 = p.y;
      if (!y1 || p.y > *y1) y1 = p.y;
    }
  }
  std::vector<Codeword> words;
  if (x0 && resolution > 0) {
    const Rational dx = (*x1 - *x0) / resolution;
    const Rational dy = (*y1 - *y0) / resolution;
    for (unsigned i = 0; i <= resolution; ++i) {
      const Rational x = *x0 + dx * i;
      for (unsigned j = 0; j <= resolution; ++j) {
        RationalPoint p{x, *y0 + dy * j};
        Codeword::Mask m = 0;
        for (std::size_t k = 0; k < rings.size(); ++k) {
          if (ccw_contains(rings[k], p)) m |= Codeword::Mask{1} << k;
        }
        words.push_back(Codeword(m));
      }
      std::sort(words.begin(), words.end());
      words.erase(std::unique(words.begin(), words.end()), words.end());
    }
  }
  return NeuralCode(n, std::move(words));
}

}  // namespace convexa
