#include "qhecke/dsl.hpp"

namespace qhecke::dsl {

namespace {

// Binding strength: + - < * / < unary - < ^ < atoms.
int precedence(const Expr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) return (b->op == '+' || b->op == '-') ? 1 : 2;
  if (std::holds_alternative<Negate>(e.node)) return 3;
  if (std::holds_alternative<Power>(e.node)) return 4;
  return 5;
}

void emit(const Expr& e, std::string& out);

void emit_wrapped(const Expr& e, bool parens, std::string& out) {
  if (parens) out += '(';
  emit(e, out);
  if (parens) out += ')';
}

void emit(const Expr& e, std::string& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Number>) {
          out += x.value.get_str();
        } else if constexpr (std::is_same_v<T, Symbol>) {
          out += 'q';
        } else if constexpr (std::is_same_v<T, Keyword>) {
          out += x.name;
        } else if constexpr (std::is_same_v<T, Negate>) {
          out += '-';
          emit_wrapped(*x.operand, precedence(*x.operand) < 3, out);
        } else if constexpr (std::is_same_v<T, Binary>) {
          const int p = precedence(e);
          emit_wrapped(*x.lhs, precedence(*x.lhs) < p, out);
          if (p == 1) {
            out += ' ';
            out += x.op;
            out += ' ';
          } else {
            out += x.op;
          }
          emit_wrapped(*x.rhs, precedence(*x.rhs) <= p, out);
        } else if constexpr (std::is_same_v<T, Power>) {
          emit_wrapped(*x.base, precedence(*x.base) <= 4, out);
          out += '^';
          out += std::to_string(x.exponent);
        } else if constexpr (std::is_same_v<T, Call>) {
          out += x.name;
          out += '(';
          for (std::size_t i = 0; i < x.groups.size(); ++i) {
            if (i) out += "; ";
            for (std::size_t k = 0; k < x.groups[i].size(); ++k) {
              if (k) out += ", ";
              emit(*x.groups[i][k], out);
            }
          }
          out += ')';
        } else {
          out += "subst(";
          emit(*x.operand, out);
          out += "; ";
          emit(*x.base, out);
          out += ')';
        }
      },
      e.node);
}

}  // namespace

std::string print(const Expr& e) {
  std::string out;
  emit(e, out);
  return out;
}

}  // namespace qhecke::dsl
