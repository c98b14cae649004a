#include "convexa/decision.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "convexa/error.hpp"

namespace convexa {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Convex: return "Convex";
    case Outcome::NotConvex: return "NotConvex";
    case Outcome::Unsupported: return "Unsupported";
  }
  return "?";
}

const char* to_string(DimReport d) {
  switch (d) {
    case DimReport::Exactly1: return "Exactly1";
    case DimReport::Exactly2: return "Exactly2";
    case DimReport::AtMost2: return "AtMost2";
  }
  return "?";
}

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::PathCase: return "PathCase";
    case Strategy::MaxIntersectionCase: return "MaxIntersectionCase";
  }
  return "?";
}

std::vector<Extra> choose_parents(const NeuralCode& code, const NeuralCode& base, std::span<const Codeword> pool) {
  std::vector<Extra> out;
  for (Codeword tau : code.words()) {
    if (base.contains(tau)) continue;
    std::optional<Codeword> best;
    for (Codeword p : pool) {
      if (!base.contains(p) || !tau.subset_of(p)) continue;
      if (!best || p.size() < best->size() || (p.size() == best->size() && display_less(p, *best))) best = p;
    }
    if (!best) throw Error(Errc::NoParent, "no base codeword contains " + to_string(tau, code.n()));
    out.push_back({tau, *best});
  }
  return out;
}

std::vector<Extra> choose_parents(const NeuralCode& code, const NeuralCode& base) {
  return choose_parents(code, base, base.words());
}

namespace {

// Backtracking over neurons; after each assignment the arrangement restricted
// to the assigned neurons must realize the target code restricted to them.
class IntervalSearch {
 public:
  explicit IntervalSearch(const NeuralCode& code) : code_(code), n_(code.n()) {
    for (unsigned lo = 1; lo <= 2 * n_; ++lo)
      for (unsigned hi = lo + 1; hi <= 2 * n_; ++hi) choices_.push_back({2 * static_cast<long long>(lo), 2 * static_cast<long long>(hi)});
    for (Codeword w : code.words()) used_ = used_ | w;
    // Neurons with identical columns must receive identical intervals.
    twin_.assign(n_, -1);
    for (unsigned i = 0; i < n_; ++i) {
      for (unsigned j = 0; j < i; ++j) {
        if (twin_[j] < 0 && same_column(i, j)) {
          twin_[i] = static_cast<int>(j);
          break;
        }
      }
    }
    sets_.assign(n_, std::nullopt);
  }

  std::optional<Realization1D> run() {
    if (!place(0)) return std::nullopt;
    Realization1D r{n_, std::vector<RationalInterval>(n_)};
    for (unsigned i = 0; i < n_; ++i) {
      if (sets_[i]) r.intervals[i] = RationalInterval(ratio(sets_[i]->lo, 2),
                                                     ratio(sets_[i]->hi, 2));
    }
    return r;
  }

 private:
  bool same_column(unsigned i, unsigned j) const {
    return std::all_of(code_.words().begin(), code_.words().end(),
                       [&](Codeword w) { return w.contains(i) == w.contains(j); });
  }

  bool consistent(unsigned upto) const {
    const Codeword::Mask scope = upto >= 64 ? ~Codeword::Mask{0} : (Codeword::Mask{1} << upto) - 1;
    std::vector<Codeword::Mask> want;
    for (Codeword w : code_.words()) want.push_back(w.mask() & scope);
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    std::span<const std::optional<IntervalOf<long long>>> prefix(sets_.data(), upto);
    auto got = interval_samples<long long>(prefix);
    got.push_back(0);
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    return got == want;
  }

  bool place(unsigned i) {
    if (i == n_) return true;
    if (!used_.contains(i)) {
      sets_[i] = std::nullopt;
      return consistent(i + 1) && place(i + 1);
    }
    if (twin_[i] >= 0) {
      sets_[i] = sets_[static_cast<unsigned>(twin_[i])];
      return consistent(i + 1) && place(i + 1);
    }
    for (const auto& c : choices_) {
      sets_[i] = c;
      if (consistent(i + 1) && place(i + 1)) return true;
    }
    sets_[i] = std::nullopt;
    return false;
  }

  const NeuralCode& code_;
  unsigned n_;
  Codeword used_;
  std::vector<int> twin_;
  std::vector<IntervalOf<long long>> choices_;
  std::vector<std::optional<IntervalOf<long long>>> sets_;
};

// Realizability is invariant under relabeling neurons, so searches are
// memoized by the lexicographically least relabeled code.
struct CanonicalCode {
  std::vector<Codeword::Mask> masks;
  std::vector<unsigned> perm;  // neuron i becomes perm[i]
};

CanonicalCode canonical_code(const NeuralCode& code) {
  std::vector<unsigned> perm(code.n());
  std::iota(perm.begin(), perm.end(), 0u);
  CanonicalCode best;
  std::vector<Codeword::Mask> cur;
  do {
    cur.clear();
    for (Codeword w : code.words()) {
      Codeword::Mask m = 0;
      for (NeuronId id : w.members()) m |= Codeword::Mask{1} << perm[index_of(id)];
      cur.push_back(m);
    }
    std::sort(cur.begin(), cur.end());
    if (best.perm.empty() || cur < best.masks) best = {cur, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::optional<Realization1D> search_1d_realization(const NeuralCode& code) {
  if (code.n() > kOracleMaxNeurons) throw Error(Errc::OutOfRange, "interval oracle supports n <= 4");
  if (code.n() == 0) return IntervalSearch(code).run();
  static std::mutex mutex;
  static std::map<std::pair<unsigned, std::vector<Codeword::Mask>>, std::optional<Realization1D>> memo;

  const CanonicalCode canon = canonical_code(code);
  const auto key = std::make_pair(code.n(), canon.masks);
  std::optional<Realization1D> found;
  bool cached = false;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) {
      found = it->second;
      cached = true;
    }
  }
  if (!cached) {
    std::vector<Codeword> words;
    for (auto m : canon.masks) words.push_back(Codeword(m));
    found = IntervalSearch(NeuralCode(code.n(), std::move(words))).run();
    std::lock_guard lock(mutex);
    memo.emplace(key, found);
  }
  if (!found) return std::nullopt;
  Realization1D out{code.n(), std::vector<RationalInterval>(code.n())};
  for (unsigned i = 0; i < code.n(); ++i) out.intervals[i] = found->intervals[canon.perm[i]];
  return out;
}

std::optional<bool> brute_force_1d_realizable(const NeuralCode& code) {
  if (code.n() > kOracleMaxNeurons) return std::nullopt;
  return search_1d_realization(code).has_value();
}

namespace {

RealizationPlan path_plan(const NeuralCode& code, Codeword fa, Codeword fb, Codeword fc) {
  RealizationPlan plan;
  plan.strategy = Strategy::PathCase;
  plan.path[0] = fa;
  plan.path[1] = fb;
  plan.path[2] = fc;
  plan.base_code = realized_code_1d(path_layout_1d(code.n(), fa, fb, fc));
  plan.extras = choose_parents(code, plan.base_code);
  return plan;
}

RealizationPlan max_intersection_plan(const NeuralCode& code, const SimplicialComplex& cpx) {
  RealizationPlan plan;
  plan.strategy = Strategy::MaxIntersectionCase;
  std::vector<Codeword> base = cpx.facets();
  for (Codeword w : facet_intersections(cpx)) base.push_back(w);
  plan.base_code = NeuralCode(code.n(), std::move(base));
  // Extras are carved next to the corner regions, which belong to facets.
  plan.extras = choose_parents(code, plan.base_code, cpx.facets());
  return plan;
}

}  // namespace

Verdict decide(const NeuralCode& code) {
  Verdict v;
  const SimplicialComplex cpx = closure(code);
  const auto& facets = cpx.facets();
  if (facets.size() >= 4) {
    v.outcome = Outcome::Unsupported;
    return v;
  }
  auto reports = local_obstructions(code);
  if (has_obstruction(reports)) {
    v.outcome = Outcome::NotConvex;
    for (const auto& r : reports) {
      if (r.status == ObstructionStatus::Obstruction) v.obstructions.push_back(r);
    }
    return v;
  }
  v.outcome = Outcome::Convex;

  if (cpx.is_void_plus_empty()) {
    v.plan = path_plan(code, {}, {}, {});
  } else if (facets.size() <= 2) {
    v.plan = path_plan(code, facets[0], facets.size() == 2 ? facets[1] : Codeword{}, {});
  } else if (auto w = path_of_facets(cpx)) {
    v.plan = path_plan(code, facets[w->a], facets[w->b], facets[w->c]);
  } else {
    v.plan = max_intersection_plan(code, cpx);
  }

  if (v.plan->strategy == Strategy::PathCase && v.plan->extras.empty()) {
    v.dim = DimReport::Exactly1;
  } else if (code.n() <= kOracleMaxNeurons) {
    v.interval_witness = search_1d_realization(code);
    v.dim = v.interval_witness ? DimReport::Exactly1 : DimReport::Exactly2;
  } else {
    v.dim = DimReport::AtMost2;
  }
  return v;
}

}  // namespace convexa
