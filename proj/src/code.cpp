#include "convexa/code.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "convexa/error.hpp"

namespace convexa {

const char* to_string(Errc e) {
  switch (e) {
    case Errc::InvalidCode: return "InvalidCode";
    case Errc::NotAntichain: return "NotAntichain";
    case Errc::NotAFace: return "NotAFace";
    case Errc::WrongFacetCount: return "WrongFacetCount";
    case Errc::TooManyFacets: return "TooManyFacets";
    case Errc::InvalidWitness: return "InvalidWitness";
    case Errc::NoParent: return "NoParent";
    case Errc::RefineExhausted: return "RefineExhausted";
    case Errc::NoDedicatedVertex: return "NoDedicatedVertex";
    case Errc::AlreadyRealized: return "AlreadyRealized";
    case Errc::NotMaxIntersectionComplete: return "NotMaxIntersectionComplete";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotConvexPolygon: return "NotConvexPolygon";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

std::vector<NeuronId> Codeword::members() const {
  std::vector<NeuronId> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = mask_; m != 0; m &= m - 1)
    out.push_back(static_cast<NeuronId>(std::countr_zero(m)));
  return out;
}

bool display_less(Codeword a, Codeword b) {
  if (a.size() != b.size()) return a.size() > b.size();
  // Equal sizes: lexicographic on ascending members is decided by the lowest
  // differing bit.
  Codeword::Mask diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  Codeword::Mask low = diff & (~diff + 1);
  return (a.mask() & low) != 0;
}

std::string to_string(Codeword w, unsigned n) {
  if (w.empty()) return "{}";
  std::string out;
  bool first = true;
  for (NeuronId id : w.members()) {
    if (n > 9 && !first) out += ',';
    out += std::to_string(index_of(id) + 1);
    first = false;
  }
  return out;
}

Codeword parse_codeword(const std::string& text, unsigned n) {
  if (text == "{}" || text.empty()) return Codeword{};
  Codeword::Mask mask = 0;
  auto add = [&](unsigned long label) {
    if (label == 0 || label > kMaxNeurons || label > n)
      throw Error(Errc::Parse, "neuron label out of range in '" + text + "'");
    mask |= Codeword::Mask{1} << (label - 1);
  };
  bool list = text.find(',') != std::string::npos || n > 9;
  if (!list) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error(Errc::Parse, "bad codeword '" + text + "'");
      add(static_cast<unsigned long>(ch - '0'));
    }
    return Codeword(mask);
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(Errc::Parse, "bad codeword '" + text + "'");
    add(std::stoul(tok));
  }
  return Codeword(mask);
}

namespace {

void sort_unique(std::vector<Codeword>& words) {
  std::sort(words.begin(), words.end(), display_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

}  // namespace

NeuralCode::NeuralCode(unsigned n, std::vector<Codeword> words) : n_(n), words_(std::move(words)) {
  if (n_ > kMaxNeurons) throw Error(Errc::InvalidCode, "more than 64 neurons");
  for (Codeword w : words_) {
    if (w.span() > n_)
      throw Error(Errc::InvalidCode, "codeword " + to_string(w, kMaxNeurons) + " exceeds n = " + std::to_string(n_));
  }
  words_.push_back(Codeword{});
  sort_unique(words_);
}

bool NeuralCode::contains(Codeword w) const {
  return std::binary_search(words_.begin(), words_.end(), w, display_less);
}

NeuralCode NeuralCode::infer(std::vector<Codeword> words) {
  unsigned n = 0;
  for (Codeword w : words) n = std::max(n, w.span());
  return NeuralCode(n, std::move(words));
}

NeuralCode NeuralCode::with(std::span<const Codeword> extra) const {
  std::vector<Codeword> all = words_;
  all.insert(all.end(), extra.begin(), extra.end());
  return NeuralCode(n_, std::move(all));
}

SimplicialComplex SimplicialComplex::from_facets(unsigned n, std::vector<Codeword> facets) {
  if (n > kMaxNeurons) throw Error(Errc::InvalidCode, "more than 64 vertices");
  sort_unique(facets);
  if (facets.empty()) facets.push_back(Codeword{});
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].span() > n) throw Error(Errc::InvalidCode, "facet exceeds vertex count");
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && facets[i].subset_of(facets[j]))
        throw Error(Errc::NotAntichain, to_string(facets[i], n) + " is contained in " + to_string(facets[j], n));
    }
  }
  SimplicialComplex out;
  out.n_ = n;
  out.facets_ = std::move(facets);
  return out;
}

SimplicialComplex SimplicialComplex::from_faces(unsigned n, std::span<const Codeword> faces) {
  std::vector<Codeword> maximal;
  for (Codeword w : faces) {
    bool dominated = std::any_of(faces.begin(), faces.end(), [w](Codeword v) { return w.proper_subset_of(v); });
    if (!dominated) maximal.push_back(w);
  }
  return from_facets(n, std::move(maximal));
}

bool SimplicialComplex::is_face(Codeword sigma) const {
  return std::any_of(facets_.begin(), facets_.end(), [sigma](Codeword f) { return sigma.subset_of(f); });
}

std::vector<Codeword> SimplicialComplex::faces() const {
  std::vector<Codeword> out;
  for (Codeword f : facets_) {
    // Walk all submasks of f.
    Codeword::Mask m = f.mask();
    for (Codeword::Mask s = m;; s = (s - 1) & m) {
      out.push_back(Codeword(s));
      if (s == 0) break;
    }
  }
  sort_unique(out);
  return out;
}

std::vector<Codeword> maximal_codewords(const NeuralCode& code) {
  const auto& words = code.words();
  std::vector<Codeword> out;
  for (Codeword w : words) {
    bool dominated = std::any_of(words.begin(), words.end(), [w](Codeword v) { return w.proper_subset_of(v); });
    if (!dominated) out.push_back(w);
  }
  return out;
}

SimplicialComplex closure(const NeuralCode& code) {
  return SimplicialComplex::from_facets(code.n(), maximal_codewords(code));
}

SimplicialComplex link(const SimplicialComplex& cpx, Codeword sigma) {
  if (!cpx.is_face(sigma))
    throw Error(Errc::NotAFace, to_string(sigma, cpx.n()) + " is not a face of " + to_string(cpx));
  std::vector<Codeword> facets;
  for (Codeword f : cpx.facets()) {
    if (sigma.subset_of(f)) facets.push_back(f - sigma);
  }
  return SimplicialComplex::from_facets(cpx.n(), std::move(facets));
}

SimplicialComplex nerve(std::span<const Codeword> sets) {
  const std::size_t k = sets.size();
  if (k > 20) throw Error(Errc::OutOfRange, "nerve of more than 20 sets");
  std::vector<Codeword> faces;
  const std::uint32_t subsets = std::uint32_t{1} << k;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    Codeword common(~Codeword::Mask{0});
    for (std::size_t i = 0; i < k; ++i) {
      if ((s >> i) & 1u) common = common & sets[i];
    }
    if (!common.empty()) faces.push_back(Codeword(s));
  }
  return SimplicialComplex::from_faces(static_cast<unsigned>(k), faces);
}

std::vector<Codeword> facet_intersections(const SimplicialComplex& cpx) {
  const auto& facets = cpx.facets();
  const std::size_t k = facets.size();
  if (k > 24) throw Error(Errc::OutOfRange, "too many facets to enumerate intersections");
  std::vector<Codeword> out;
  const std::uint32_t subsets = std::uint32_t{1} << k;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    if (std::popcount(s) < 2) continue;
    Codeword common(~Codeword::Mask{0});
    for (std::size_t i = 0; i < k; ++i) {
      if ((s >> i) & 1u) common = common & facets[i];
    }
    out.push_back(common);
  }
  sort_unique(out);
  return out;
}

bool is_max_intersection_complete(const NeuralCode& code) {
  auto inter = facet_intersections(closure(code));
  return std::all_of(inter.begin(), inter.end(), [&](Codeword w) { return code.contains(w); });
}

std::string to_string(const NeuralCode& code) {
  std::string out = "{";
  for (std::size_t i = 0; i < code.words().size(); ++i) {
    if (i) out += ", ";
    out += to_string(code.words()[i], code.n());
  }
  return out + "}";
}

std::string to_string(const SimplicialComplex& cpx) {
  std::string out = "facets{";
  for (std::size_t i = 0; i < cpx.facets().size(); ++i) {
    if (i) out += ", ";
    out += to_string(cpx.facets()[i], cpx.n());
  }
  return out + "}";
}

}  // namespace convexa
