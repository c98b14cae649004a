#include "convexa/text_format.hpp"

#include <cctype>
#include <string>

#include "convexa/error.hpp"

namespace convexa {

namespace {

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; }

}  // namespace

NeuralCode parse_code_text(std::string_view text, std::optional<unsigned> neurons) {
  std::vector<Codeword> words;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    struct Token {
      std::string_view text;
      std::size_t column;
    };
    std::vector<Token> tokens;
    bool saw_separator = false;
    std::size_t i = 0;
    while (i < line.size()) {
      if (is_separator(line[i])) {
        saw_separator |= line[i] == ',';
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && !is_separator(line[i])) ++i;
      tokens.push_back({line.substr(start, i - start), start + 1});
    }
    if (tokens.empty()) continue;
    saw_separator |= tokens.size() > 1;

    Codeword::Mask mask = 0;
    auto add = [&](unsigned long label, std::size_t column) {
      if (label == 0) throw ParseError(line_no, column, "neuron labels start at 1");
      if (label > kMaxNeurons) throw ParseError(line_no, column, "neuron label exceeds 64");
      if (neurons && label > *neurons)
        throw ParseError(line_no, column, "neuron label " + std::to_string(label) + " exceeds n = " + std::to_string(*neurons));
      mask |= Codeword::Mask{1} << (label - 1);
    };

    for (const Token& tok : tokens) {
      if (tok.text == "{}") {
        if (tokens.size() != 1) throw ParseError(line_no, tok.column, "'{}' must stand alone");
        continue;
      }
      for (std::size_t c = 0; c < tok.text.size(); ++c) {
        if (!std::isdigit(static_cast<unsigned char>(tok.text[c])))
          throw ParseError(line_no, tok.column + c, std::string("unexpected character '") + tok.text[c] + "'");
      }
      if (!saw_separator) {
        for (std::size_t c = 0; c < tok.text.size(); ++c)
          add(static_cast<unsigned long>(tok.text[c] - '0'), tok.column + c);
      } else {
        if (tok.text.size() > 2) throw ParseError(line_no, tok.column, "neuron label exceeds 64");
        add(std::stoul(std::string(tok.text)), tok.column);
      }
    }
    words.push_back(Codeword(mask));
  }
  if (neurons) return NeuralCode(*neurons, std::move(words));
  return NeuralCode::infer(std::move(words));
}

}  // namespace convexa
