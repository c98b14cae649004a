#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "convexa/codeword.hpp"

namespace convexa {

/// A set of codewords on n neurons. The empty codeword is always a member.
/// Codewords are kept unique and in display order.
class NeuralCode {
 public:
  NeuralCode() : words_{Codeword{}} {}
  NeuralCode(unsigned n, std::vector<Codeword> words);

  unsigned n() const { return n_; }
  const std::vector<Codeword>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(Codeword w) const;

  /// Smallest n covering every member; handy for codes read from text.
  static NeuralCode infer(std::vector<Codeword> words);

  NeuralCode with(std::span<const Codeword> extra) const;
  NeuralCode with_n(unsigned n) const { return NeuralCode(n, words_); }

  friend bool operator==(const NeuralCode& a, const NeuralCode& b) { return a.words_ == b.words_; }

 private:
  unsigned n_ = 0;
  std::vector<Codeword> words_;
};

/// A simplicial complex held by its facets (an antichain). The complex {∅}
/// has the single facet ∅.
class SimplicialComplex {
 public:
  SimplicialComplex() : facets_{Codeword{}} {}

  /// Throws Error(NotAntichain) when one facet contains another.
  static SimplicialComplex from_facets(unsigned n, std::vector<Codeword> facets);
  /// Keeps only the inclusion-maximal sets.
  static SimplicialComplex from_faces(unsigned n, std::span<const Codeword> faces);

  unsigned n() const { return n_; }
  const std::vector<Codeword>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  bool is_void_plus_empty() const { return facets_.size() == 1 && facets_[0].empty(); }

  bool is_face(Codeword sigma) const;
  /// Every face, ∅ included, in display order. Exponential in facet size.
  std::vector<Codeword> faces() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

 private:
  unsigned n_ = 0;
  std::vector<Codeword> facets_;
};

std::vector<Codeword> maximal_codewords(const NeuralCode& code);

/// Δ(C): the smallest complex containing every codeword.
SimplicialComplex closure(const NeuralCode& code);

/// Lk_σ(Δ) with facets {F \ σ : σ ⊆ F}. Throws Error(NotAFace).
SimplicialComplex link(const SimplicialComplex& cpx, Codeword sigma);

/// Nerve of a family of sets, on vertices 0..sets.size()-1. Empty sets never
/// become vertices. At most 20 sets.
SimplicialComplex nerve(std::span<const Codeword> sets);

/// All intersections of two or more facets, deduplicated, ∅ included when it occurs.
std::vector<Codeword> facet_intersections(const SimplicialComplex& cpx);

bool is_max_intersection_complete(const NeuralCode& code);

std::string to_string(const NeuralCode& code);
std::string to_string(const SimplicialComplex& cpx);

}  // namespace convexa
