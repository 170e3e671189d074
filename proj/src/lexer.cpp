#include <cctype>
#include <cstdlib>

#include "funcalg/parser.hpp"

namespace funcalg {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(std::string_view text, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line_start = 0;
  auto pos_of = [&](std::size_t at) { return SourcePos{line, static_cast<int>(at - line_start) + 1}; };

  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      line_start = ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }

    const std::size_t start = i;
    if (is_digit(c) || (c == '.' && i + 1 < text.size() && is_digit(text[i + 1]))) {
      while (i < text.size() && is_digit(text[i])) ++i;
      if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && is_digit(text[i])) ++i;
      }
      if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        if (i >= text.size() || !is_digit(text[i])) {
          throw Error(ErrorKind::LexError, "malformed exponent in number", pos_of(i < text.size() ? i : i - 1));
        }
        while (i < text.size() && is_digit(text[i])) ++i;
      }
      if (i < text.size() && (is_ident_char(text[i]) || text[i] == '.')) {
        throw Error(ErrorKind::LexError, "malformed number", pos_of(i));
      }
      std::string lexeme(text.substr(start, i - start));
      const double value = std::strtod(lexeme.c_str(), nullptr);
      out.push_back({TokenKind::Number, std::move(lexeme), pos_of(start), value});
      continue;
    }
    if (is_ident_start(c)) {
      while (i < text.size() && is_ident_char(text[i])) ++i;
      out.push_back({TokenKind::Identifier, std::string(text.substr(start, i - start)), pos_of(start)});
      continue;
    }

    TokenKind kind;
    switch (c) {
      case '+': case '-': case '*': case '/': case '^':
        kind = TokenKind::Operator;
        break;
      case '(': case ')': case '[': case ']': case ',': case ';':
        kind = TokenKind::Punct;
        break;
      case ':':
        kind = TokenKind::Colon;
        break;
      case '=':
        kind = TokenKind::Assign;
        break;
      default:
        throw Error(ErrorKind::LexError, "illegal character", pos_of(i));
    }
    out.push_back({kind, std::string(1, c), pos_of(start)});
    ++i;
  }
  out.push_back({TokenKind::End, "", pos_of(i)});
  return out;
}

}  // namespace funcalg
