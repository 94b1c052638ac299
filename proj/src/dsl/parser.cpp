#include <optional>

#include "qhecke/dsl.hpp"

namespace qhecke::dsl {

namespace {

constexpr int kMaxDepth = 200;
constexpr std::int64_t kMaxExponent = std::int64_t{1} << 40;

const char* describe(TokenKind k) {
  switch (k) {
    case TokenKind::integer: return "integer";
    case TokenKind::q: return "'q'";
    case TokenKind::identifier: return "identifier";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::star: return "'*'";
    case TokenKind::slash: return "'/'";
    case TokenKind::caret: return "'^'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::semicolon: return "';'";
    case TokenKind::comma: return "','";
    case TokenKind::end: return "end of input";
  }
  return "token";
}

ExprPtr make(std::size_t pos, auto node) { return std::make_shared<const Expr>(Expr{std::move(node), pos}); }

// Folds an exponent subtree to an integer.
std::optional<std::int64_t> fold_integer(const Expr& e) {
  if (const auto* n = std::get_if<Number>(&e.node)) {
    if (!n->value.get_num().fits_slong_p()) return std::nullopt;
    return n->value.get_num().get_si();
  }
  if (const auto* n = std::get_if<Negate>(&e.node)) {
    auto v = fold_integer(*n->operand);
    if (!v) return std::nullopt;
    return -*v;
  }
  if (const auto* p = std::get_if<Power>(&e.node)) {
    auto b = fold_integer(*p->base);
    if (!b || p->exponent < 0) return std::nullopt;
    if (*b == 0) return p->exponent == 0 ? 1 : 0;
    if (*b == 1) return 1;
    if (*b == -1) return (p->exponent & 1) ? -1 : 1;
    mpz_class acc = 1;
    for (std::int64_t i = 0; i < p->exponent; ++i) {
      acc *= *b;
      if (!acc.fits_slong_p()) return std::nullopt;
    }
    return acc.get_si();
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::end) throw DslError("token stream is not terminated", 0);
  }

  ExprPtr parse_all() {
    ExprPtr e = expression();
    if (peek().kind != TokenKind::end) fail("unexpected " + std::string(describe(peek().kind)));
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::end) ++pos_;
    return t;
  }
  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    advance();
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw DslError(msg, peek().position); }
  void expect(TokenKind k, const std::string& context) {
    if (!accept(k)) {
      fail(std::string("expected ") + describe(k) + " " + context + ", found " + describe(peek().kind));
    }
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.fail("expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  ExprPtr expression() {
    DepthGuard guard(*this);
    ExprPtr lhs = term();
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      const Token& op = advance();
      ExprPtr rhs = term();
      lhs = make(op.position, Binary{op.text[0], lhs, rhs});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (peek().kind == TokenKind::star || peek().kind == TokenKind::slash) {
      const Token& op = advance();
      ExprPtr rhs = unary();
      lhs = make(op.position, Binary{op.text[0], lhs, rhs});
    }
    return lhs;
  }

  ExprPtr unary() {
    DepthGuard guard(*this);
    if (peek().kind == TokenKind::minus) {
      const std::size_t at = advance().position;
      return make(at, Negate{unary()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek().kind != TokenKind::caret) return base;
    const std::size_t at = advance().position;
    const std::size_t exp_at = peek().position;
    ExprPtr exponent = unary();  // right associative
    const auto k = fold_integer(*exponent);
    if (!k) throw DslError("exponent must be an integer literal", exp_at);
    if (*k > kMaxExponent || *k < -kMaxExponent) throw DslError("exponent out of range", exp_at);
    return make(at, Power{base, *k});
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::integer:
        advance();
        return make(t.position, Number{Rational(mpz_class(t.text, 10))});
      case TokenKind::q:
        advance();
        return make(t.position, Symbol{});
      case TokenKind::identifier:
        advance();
        if (peek().kind == TokenKind::lparen) return call(t);
        return make(t.position, Keyword{t.text});
      case TokenKind::lparen: {
        advance();
        ExprPtr inner = expression();
        expect(TokenKind::rparen, "to close '('");
        return inner;
      }
      default:
        fail("expected an operand, found " + std::string(describe(t.kind)));
    }
  }

  ExprPtr call(const Token& name) {
    DepthGuard guard(*this);
    expect(TokenKind::lparen, "after function name");
    std::vector<std::vector<ExprPtr>> groups;
    if (!accept(TokenKind::rparen)) {
      groups.emplace_back();
      while (true) {
        if (peek().kind == TokenKind::semicolon || peek().kind == TokenKind::comma ||
            peek().kind == TokenKind::rparen) {
          fail("missing argument in call to " + name.text);
        }
        groups.back().push_back(expression());
        if (accept(TokenKind::comma)) continue;
        if (accept(TokenKind::semicolon)) {
          groups.emplace_back();
          continue;
        }
        expect(TokenKind::rparen, "to close the argument list of " + name.text);
        break;
      }
    }
    if (name.text == "subst") {
      if (groups.size() != 2 || groups[0].size() != 1 || groups[1].size() != 1) {
        throw DslError("subst expects (expression; base)", name.position);
      }
      return make(name.position, Substitute{groups[0][0], groups[1][0]});
    }
    return make(name.position, Call{name.text, std::move(groups)});
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

bool equal_ptr(const ExprPtr& a, const ExprPtr& b) { return equal(*a, *b); }

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).parse_all(); }

ExprPtr parse(std::string_view text) { return parse(tokenize(text)); }

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Number>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Symbol>) {
          return true;
        } else if constexpr (std::is_same_v<T, Keyword>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return equal_ptr(x.operand, y.operand);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return x.op == y.op && equal_ptr(x.lhs, y.lhs) && equal_ptr(x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<T, Power>) {
          return x.exponent == y.exponent && equal_ptr(x.base, y.base);
        } else if constexpr (std::is_same_v<T, Call>) {
          if (x.name != y.name || x.groups.size() != y.groups.size()) return false;
          for (std::size_t i = 0; i < x.groups.size(); ++i) {
            if (x.groups[i].size() != y.groups[i].size()) return false;
            for (std::size_t k = 0; k < x.groups[i].size(); ++k) {
              if (!equal_ptr(x.groups[i][k], y.groups[i][k])) return false;
            }
          }
          return true;
        } else {
          return equal_ptr(x.operand, y.operand) && equal_ptr(x.base, y.base);
        }
      },
      a.node);
}

}  // namespace qhecke::dsl
