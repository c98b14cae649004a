#pragma once

#include <optional>
#include <string_view>

#include "convexa/code.hpp"

namespace convexa {

/// Reads the line-oriented code format.
///
/// One codeword per line. Labels are 1-based neuron numbers. A line holding a
/// single multi-digit token with no separator is a digit string ("1356" is
/// {1,3,5,6}); otherwise tokens are separated by spaces or commas, so neuron
/// twelve alone is written "12,". "{}" denotes the empty codeword, which is
/// implied anyway. Blank lines and text after '#' are ignored.
///
/// When `neurons` is absent, n is the largest label seen.
NeuralCode parse_code_text(std::string_view text, std::optional<unsigned> neurons = std::nullopt);

}  // namespace convexa
