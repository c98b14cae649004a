#pragma once

#include <gmpxx.h>

#include <string>

namespace convexa {

using Rational = mpq_class;

/// Always "p/q", with q = 1 for integers.
/// p/q in lowest terms. mpq_class(p, q) alone leaves the fraction unreduced,
/// which breaks equality tests.
Rational ratio(long p, long q);

std::string to_string(const Rational& r);

/// Accepts "p/q" or an integer "p"; throws Error(Parse) otherwise.
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

}  // namespace convexa
