#pragma once

#include <optional>
#include <span>
#include <vector>

#include "convexa/code.hpp"
#include "convexa/realize1d.hpp"
#include "convexa/topology.hpp"

namespace convexa {

enum class Outcome { Convex, NotConvex, Unsupported };
enum class DimReport { Exactly1, Exactly2, AtMost2 };
enum class Strategy { PathCase, MaxIntersectionCase };

const char* to_string(Outcome o);
const char* to_string(DimReport d);
const char* to_string(Strategy s);

/// A codeword added after the base realization, carved out of its parent's region.
struct Extra {
  Codeword tau;
  Codeword parent;

  friend bool operator==(const Extra&, const Extra&) = default;
};

struct RealizationPlan {
  Strategy strategy = Strategy::PathCase;
  /// Code realized before slicing.
  NeuralCode base_code;
  std::vector<Extra> extras;
  /// PathCase only: facets in layout order F_a, F_b, F_c; missing ones are ∅.
  Codeword path[3];
};

struct Verdict {
  Outcome outcome = Outcome::Unsupported;
  std::optional<DimReport> dim;                 // iff Convex
  std::vector<ObstructionReport> obstructions;  // Obstruction entries, iff NotConvex
  std::optional<RealizationPlan> plan;          // iff Convex
  /// An interval realization found by the exhaustive oracle (n <= 4), when one exists.
  std::optional<Realization1D> interval_witness;
};

inline constexpr unsigned kOracleMaxNeurons = 4;

Verdict decide(const NeuralCode& code);

/// Pairs every τ ∈ code \ base with a smallest member of `pool` containing it;
/// ties go to the lexicographically smaller parent. Throws NoParent.
std::vector<Extra> choose_parents(const NeuralCode& code, const NeuralCode& base, std::span<const Codeword> pool);
std::vector<Extra> choose_parents(const NeuralCode& code, const NeuralCode& base);

/// Exhaustive search for an interval realization with endpoints on a grid of
/// 2n points. Absent when n > 4.
std::optional<bool> brute_force_1d_realizable(const NeuralCode& code);

/// Same search, returning the realization found. Throws OutOfRange when n > 4.
std::optional<Realization1D> search_1d_realization(const NeuralCode& code);

}  // namespace convexa
