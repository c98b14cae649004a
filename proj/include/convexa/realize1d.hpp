#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "convexa/code.hpp"
#include "convexa/rational.hpp"
#include "convexa/topology.hpp"

namespace convexa {

/// Open interval (lo, hi), or the empty set.
class RationalInterval {
 public:
  RationalInterval() = default;
  /// Degenerate bounds (lo >= hi) normalize to the empty interval.
  RationalInterval(Rational lo, Rational hi);

  bool empty() const { return empty_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool contains(const Rational& x) const { return !empty_ && lo_ < x && x < hi_; }

  friend bool operator==(const RationalInterval& a, const RationalInterval& b) {
    if (a.empty_ || b.empty_) return a.empty_ == b.empty_;
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_;
  Rational hi_;
  bool empty_ = true;
};

struct Realization1D {
  unsigned n = 0;
  std::vector<RationalInterval> intervals;  // indexed by neuron
};

/// The interval table for a path F_a, F_b, F_c. Missing facets may be passed
/// as ∅, which gives the one- and two-facet layouts.
Realization1D path_layout_1d(unsigned n, Codeword fa, Codeword fb, Codeword fc);

/// Interval realization of C_min(Δ) for a Path-of-Facets complex.
/// Throws WrongFacetCount or InvalidWitness.
Realization1D construct_min_code_1d(const SimplicialComplex& cpx, const PathOfFacetsWitness& w);

/// Exact code of an interval arrangement.
NeuralCode realized_code_1d(const Realization1D& r);

/// First sample point (left to right) of every realized codeword.
std::map<Codeword, Rational> witnesses_1d(const Realization1D& r);

/// Left-to-right sequence of membership sets over all samples, with
/// consecutive repeats collapsed. Starts and ends with ∅.
std::vector<Codeword> region_sequence_1d(const Realization1D& r);

/// An open interval evaluated with exact order comparisons.
template <class T>
struct IntervalOf {
  T lo;
  T hi;
};

/// Membership masks at every endpoint, at the midpoint of every consecutive
/// pair of distinct endpoints, and one point beyond each extreme, in
/// left-to-right order. `T` must be an ordered field, or an integer type whose
/// endpoints are all even.
template <class T>
std::vector<Codeword::Mask> interval_samples(std::span<const std::optional<IntervalOf<T>>> sets) {
  std::vector<T> ends;
  for (const auto& s : sets) {
    if (s && s->lo < s->hi) {
      ends.push_back(s->lo);
      ends.push_back(s->hi);
    }
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<T> points;
  if (ends.empty()) return {0};
  points.reserve(2 * ends.size() + 1);
  points.push_back(ends.front() - 1);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    points.push_back(ends[i]);
    if (i + 1 < ends.size()) points.push_back(T((ends[i] + ends[i + 1]) / 2));
  }
  points.push_back(ends.back() + 1);

  std::vector<Codeword::Mask> out;
  out.reserve(points.size());
  for (const T& x : points) {
    Codeword::Mask m = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto& s = sets[i];
      if (s && s->lo < x && x < s->hi) m |= Codeword::Mask{1} << i;
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace convexa
