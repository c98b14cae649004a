#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace convexa {

enum class Errc {
  InvalidCode,
  NotAntichain,
  NotAFace,
  WrongFacetCount,
  TooManyFacets,
  InvalidWitness,
  NoParent,
  RefineExhausted,
  NoDedicatedVertex,
  AlreadyRealized,
  NotMaxIntersectionComplete,
  NotConvexPolygon,
  OutOfRange,
  Parse,
};

const char* to_string(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure in the code text format; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(Errc::Parse, "line " + std::to_string(line) + ", column " +
                               std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace convexa
