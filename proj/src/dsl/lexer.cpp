#include <cctype>

#include "qhecke/dsl.hpp"

namespace qhecke::dsl {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

TokenKind punct(char c) {
  switch (c) {
    case '+': return TokenKind::plus;
    case '-': return TokenKind::minus;
    case '*': return TokenKind::star;
    case '/': return TokenKind::slash;
    case '^': return TokenKind::caret;
    case '(': return TokenKind::lparen;
    case ')': return TokenKind::rparen;
    case ';': return TokenKind::semicolon;
    case ',': return TokenKind::comma;
    default: return TokenKind::end;
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (digit(c)) {
      const std::size_t start = i;
      while (i < text.size() && digit(text[i])) ++i;
      out.push_back({TokenKind::integer, std::string(text.substr(start, i - start)), start});
    } else if (ident_start(c)) {
      const std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string word(text.substr(start, i - start));
      out.push_back({word == "q" ? TokenKind::q : TokenKind::identifier, std::move(word), start});
    } else if (const TokenKind k = punct(c); k != TokenKind::end) {
      out.push_back({k, std::string(1, c), i});
      ++i;
    } else {
      const auto byte = static_cast<unsigned>(static_cast<unsigned char>(c));
      std::string shown = std::isprint(static_cast<int>(byte)) ? std::string("'") + c + "'"
                                                               : "byte 0x" + std::string(1, "0123456789abcdef"[byte >> 4]) +
                                                                     "0123456789abcdef"[byte & 15];
      throw DslError("unexpected character " + shown, i);
    }
  }
  out.push_back({TokenKind::end, "", text.size()});
  return out;
}

}  // namespace qhecke::dsl
