#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qhecke/series.hpp"

namespace qhecke::dsl {

/// Any lexical, syntax or evaluation error; position is a byte offset into
/// the source text.
class DslError : public std::runtime_error {
 public:
  DslError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), message_(message),
        position_(position) {}

  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

enum class TokenKind { integer, q, identifier, plus, minus, star, slash, caret, lparen, rparen, semicolon, comma, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

/// Splits one expression line into tokens, ending with TokenKind::end.
std::vector<Token> tokenize(std::string_view text);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Number {
  Rational value;  // a nonnegative integer literal
};
struct Symbol {};  // q
struct Keyword {
  std::string name;  // a bare identifier used as a call option, e.g. alt
};
struct Negate {
  ExprPtr operand;
};
struct Binary {
  char op;  // + - * /
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Power {
  ExprPtr base;
  std::int64_t exponent;
};
struct Call {
  std::string name;
  std::vector<std::vector<ExprPtr>> groups;  // ';'-separated groups of ','-separated items
};
/// subst(E; base): E with q replaced by the base.
struct Substitute {
  ExprPtr operand;
  ExprPtr base;
};

struct Expr {
  std::variant<Number, Symbol, Keyword, Negate, Binary, Power, Call, Substitute> node;
  std::size_t position = 0;
};

/// Structural equality; positions are ignored.
bool equal(const Expr& a, const Expr& b);

ExprPtr parse(const std::vector<Token>& tokens);
ExprPtr parse(std::string_view text);

/// Canonical text: minimal parentheses, ", " inside groups, "; " between them.
std::string print(const Expr& e);

/// The series to order n. Throws DslError pointing at the offending
/// subexpression for unknown names, bad arguments, non-invertible divisors
/// and Appell poles.
LaurentSeries eval(const Expr& e, std::int64_t n);
LaurentSeries eval(std::string_view text, std::int64_t n);

}  // namespace qhecke::dsl
