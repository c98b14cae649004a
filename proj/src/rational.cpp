#include "convexa/rational.hpp"

#include "convexa/error.hpp"

namespace convexa {

Rational ratio(long p, long q) {
  if (q == 0) throw Error(Errc::OutOfRange, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw Error(Errc::Parse, "bad rational '" + text + "'");
  if (r.get_den() == 0) throw Error(Errc::Parse, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace convexa
