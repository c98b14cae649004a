#include "convexa/realize1d.hpp"

#include "convexa/error.hpp"

namespace convexa {

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  empty_ = !(lo_ < hi_);
  if (empty_) lo_ = hi_ = 0;
}

Realization1D path_layout_1d(unsigned n, Codeword fa, Codeword fb, Codeword fc) {
  Realization1D r{n, std::vector<RationalInterval>(n)};
  const Codeword abc = fa & fb & fc;
  const Codeword ab = (fa & fb) - fc;
  const Codeword bc = (fb & fc) - fa;
  const Codeword a_only = fa - (fb | fc);
  const Codeword b_only = fb - (fa | fc);
  const Codeword c_only = fc - (fa | fb);
  for (unsigned i = 0; i < n; ++i) {
    int lo = 0, hi = 0;
    if (abc.contains(i)) lo = 0, hi = 5;
    else if (ab.contains(i)) lo = 0, hi = 3;
    else if (bc.contains(i)) lo = 2, hi = 5;
    else if (a_only.contains(i)) lo = 0, hi = 1;
    else if (b_only.contains(i)) lo = 2, hi = 3;
    else if (c_only.contains(i)) lo = 4, hi = 5;
    if (lo < hi) r.intervals[i] = RationalInterval(lo, hi);
  }
  return r;
}

Realization1D construct_min_code_1d(const SimplicialComplex& cpx, const PathOfFacetsWitness& w) {
  if (cpx.facet_count() != 3 || cpx.is_void_plus_empty())
    throw Error(Errc::WrongFacetCount, "interval construction needs exactly 3 facets");
  if (!is_valid_witness(cpx, w)) throw Error(Errc::InvalidWitness, "not a Path-of-Facets witness");
  const auto& f = cpx.facets();
  return path_layout_1d(cpx.n(), f[w.a], f[w.b], f[w.c]);
}

namespace {

std::vector<std::optional<IntervalOf<Rational>>> as_sets(const Realization1D& r) {
  std::vector<std::optional<IntervalOf<Rational>>> sets(r.intervals.size());
  for (std::size_t i = 0; i < r.intervals.size(); ++i) {
    if (!r.intervals[i].empty()) sets[i] = IntervalOf<Rational>{r.intervals[i].lo(), r.intervals[i].hi()};
  }
  return sets;
}

}  // namespace

NeuralCode realized_code_1d(const Realization1D& r) {
  const auto sets = as_sets(r);
  std::vector<Codeword> words;
  for (Codeword::Mask m : interval_samples<Rational>(sets)) words.push_back(Codeword(m));
  return NeuralCode(r.n, std::move(words));
}

std::map<Codeword, Rational> witnesses_1d(const Realization1D& r) {
  std::vector<Rational> ends;
  for (const auto& iv : r.intervals) {
    if (!iv.empty()) {
      ends.push_back(iv.lo());
      ends.push_back(iv.hi());
    }
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<Rational> points;
  if (ends.empty()) {
    points.push_back(0);
  } else {
    points.push_back(ends.front() - 1);
    for (std::size_t i = 0; i < ends.size(); ++i) {
      points.push_back(ends[i]);
      if (i + 1 < ends.size()) points.push_back((ends[i] + ends[i + 1]) / 2);
    }
    points.push_back(ends.back() + 1);
  }
  std::map<Codeword, Rational> out;
  for (const Rational& x : points) {
    Codeword::Mask m = 0;
    for (std::size_t i = 0; i < r.intervals.size(); ++i) {
      if (r.intervals[i].contains(x)) m |= Codeword::Mask{1} << i;
    }
    out.emplace(Codeword(m), x);
  }
  return out;
}

std::vector<Codeword> region_sequence_1d(const Realization1D& r) {
  const auto sets = as_sets(r);
  std::vector<Codeword> seq;
  for (Codeword::Mask m : interval_samples<Rational>(sets)) {
    if (seq.empty() || seq.back().mask() != m) seq.push_back(Codeword(m));
  }
  return seq;
}

}  // namespace convexa
