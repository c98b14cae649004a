#pragma once

#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "convexa/code.hpp"
#include "convexa/codeword.hpp"

namespace testing {

inline convexa::Codeword W(const char* s, unsigned n = 9) { return convexa::parse_codeword(s, n); }

inline std::vector<convexa::Codeword> words(std::initializer_list<const char*> ws, unsigned n = 9) {
  std::vector<convexa::Codeword> out;
  for (const char* w : ws) out.push_back(W(w, n));
  return out;
}

inline convexa::NeuralCode code(unsigned n, std::initializer_list<const char*> ws) {
  return convexa::NeuralCode(n, words(ws, n));
}

inline convexa::SimplicialComplex cpx(unsigned n, std::initializer_list<const char*> ws) {
  return convexa::SimplicialComplex::from_facets(n, words(ws, n));
}

inline std::vector<std::string> labels(const std::vector<convexa::Codeword>& ws, unsigned n) {
  std::vector<std::string> out;
  for (auto w : ws) out.push_back(convexa::to_string(w, n));
  return out;
}

inline std::vector<std::string> labels(const convexa::NeuralCode& c) { return labels(c.words(), c.n()); }

inline std::vector<std::string> labels(const convexa::SimplicialComplex& c) { return labels(c.facets(), c.n()); }

// Parses space-separated labels such as "1356 123 124".
inline std::vector<convexa::Codeword> split_words(const std::string& s, unsigned n) {
  std::vector<convexa::Codeword> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t j = s.find(' ', i);
    out.push_back(convexa::parse_codeword(s.substr(i, j - i), n));
    if (j == std::string::npos) break;
    i = j + 1;
  }
  return out;
}

inline const nlohmann::json& derived() {
  static const nlohmann::json j = [] {
    std::ifstream in(CONVEXA_TEST_DATA "/derived.json");
    return nlohmann::json::parse(in);
  }();
  return j;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace testing
