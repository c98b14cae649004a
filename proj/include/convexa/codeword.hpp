#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace convexa {

/// Neuron index into [0, n). Displayed 1-based ("neuron 1" is NeuronId{0}).
enum class NeuronId : std::uint8_t {};

constexpr unsigned index_of(NeuronId id) { return static_cast<unsigned>(id); }

inline constexpr unsigned kMaxNeurons = 64;

/// A set of neurons stored as a 64-bit mask.
class Codeword {
 public:
  using Mask = std::uint64_t;

  constexpr Codeword() = default;
  constexpr explicit Codeword(Mask mask) : mask_(mask) {}

  static Codeword of(std::initializer_list<unsigned> indices) {
    Mask m = 0;
    for (unsigned i : indices) m |= Mask{1} << i;
    return Codeword(m);
  }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(NeuronId id) const { return (mask_ >> index_of(id)) & 1u; }
  constexpr bool contains(unsigned index) const { return (mask_ >> index) & 1u; }
  constexpr bool subset_of(Codeword other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool proper_subset_of(Codeword other) const {
    return subset_of(other) && mask_ != other.mask_;
  }

  /// Highest member index + 1, or 0 for the empty codeword.
  constexpr unsigned span() const {
    return mask_ == 0 ? 0u : 64u - static_cast<unsigned>(std::countl_zero(mask_));
  }

  std::vector<NeuronId> members() const;

  friend constexpr Codeword operator&(Codeword a, Codeword b) { return Codeword(a.mask_ & b.mask_); }
  friend constexpr Codeword operator|(Codeword a, Codeword b) { return Codeword(a.mask_ | b.mask_); }
  friend constexpr Codeword operator-(Codeword a, Codeword b) { return Codeword(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(Codeword, Codeword) = default;
  friend constexpr auto operator<=>(Codeword, Codeword) = default;

 private:
  Mask mask_ = 0;
};

/// Display order: larger codewords first, then lexicographic on sorted members.
bool display_less(Codeword a, Codeword b);

/// "1356" when n <= 9, "1,3,10" otherwise; the empty codeword prints as "{}".
std::string to_string(Codeword w, unsigned n);

/// Inverse of to_string; throws Error(Parse) on malformed input.
Codeword parse_codeword(const std::string& text, unsigned n);

}  // namespace convexa
