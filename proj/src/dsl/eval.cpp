#include <functional>
#include <map>
#include <optional>

#include "detail/quadratic.hpp"
#include "qhecke/appell.hpp"
#include "qhecke/dsl.hpp"
#include "qhecke/eulerian.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/theta.hpp"

namespace qhecke::dsl {

namespace {

constexpr int kMaxRetries = 48;
constexpr std::int64_t kMaxExtraOrder = 4096;
constexpr int kMaxZeroRetries = 4;
constexpr std::int64_t kMaxMonomialExponent = std::int64_t{1} << 50;

[[noreturn]] void fail(const Expr& e, const std::string& msg) {
  throw DslError(msg + " in `" + print(e) + "`", e.position);
}

std::optional<std::int64_t> as_integer(const Expr& e) {
  if (const auto* n = std::get_if<Number>(&e.node)) {
    if (!n->value.get_num().fits_slong_p()) return std::nullopt;
    return n->value.get_num().get_si();
  }
  if (const auto* n = std::get_if<Negate>(&e.node)) {
    if (auto v = as_integer(*n->operand)) return -*v;
  }
  return std::nullopt;
}

Monomial checked(const Expr& e, Monomial m) {
  if (m.exp > kMaxMonomialExponent || m.exp < -kMaxMonomialExponent) fail(e, "exponent out of range");
  return m;
}

// Folds products, quotients and powers of constants and q into c q^k.
std::optional<Monomial> as_monomial(const Expr& e) {
  return std::visit(
      [&](const auto& x) -> std::optional<Monomial> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Number>) {
          if (x.value == 0) return std::nullopt;
          return Monomial::make(x.value, 0);
        } else if constexpr (std::is_same_v<T, Symbol>) {
          return Monomial::q_power(1);
        } else if constexpr (std::is_same_v<T, Negate>) {
          auto m = as_monomial(*x.operand);
          if (!m) return std::nullopt;
          return -*m;
        } else if constexpr (std::is_same_v<T, Binary>) {
          if (x.op != '*' && x.op != '/') return std::nullopt;
          auto l = as_monomial(*x.lhs);
          auto r = as_monomial(*x.rhs);
          if (!l || !r) return std::nullopt;
          return checked(e, x.op == '*' ? *l * *r : *l / *r);
        } else if constexpr (std::is_same_v<T, Power>) {
          auto b = as_monomial(*x.base);
          if (!b) return std::nullopt;
          if (b->exp != 0 && (x.exponent > kMaxMonomialExponent / (b->exp < 0 ? -b->exp : b->exp) ||
                              x.exponent < -kMaxMonomialExponent / (b->exp < 0 ? -b->exp : b->exp))) {
            fail(e, "exponent out of range");
          }
          if (!is_unit_sign(b->coeff) && (x.exponent > 4096 || x.exponent < -4096)) fail(e, "exponent out of range");
          return b->pow(x.exponent);
        } else {
          return std::nullopt;
        }
      },
      e.node);
}

// Arguments of one call, with shape checks that report the whole call.
class CallArgs {
 public:
  CallArgs(const Expr& e, const Call& c) : expr_(e), call_(c) {}

  const Expr& expr() const { return expr_; }
  std::size_t group_count() const { return call_.groups.size(); }
  void shape(std::initializer_list<std::size_t> sizes, const char* usage) const {
    bool ok = call_.groups.size() == sizes.size();
    std::size_t i = 0;
    for (std::size_t s : sizes) {
      if (!ok) break;
      ok = call_.groups[i++].size() == s;
    }
    if (!ok) fail(expr_, std::string("arity mismatch: expected ") + usage);
  }

  std::size_t item_count(std::size_t g) const { return call_.groups[g].size(); }
  const Expr& item(std::size_t g, std::size_t i) const { return *call_.groups[g][i]; }
  std::int64_t integer(std::size_t g, std::size_t i) const {
    auto v = as_integer(item(g, i));
    if (!v) fail(item(g, i), "expected an integer");
    return *v;
  }
  Monomial monomial(std::size_t g, std::size_t i) const {
    auto m = as_monomial(item(g, i));
    if (!m) fail(item(g, i), "expected a monomial c*q^k");
    return *m;
  }
  SignedPower base(std::size_t g, std::size_t i) const {
    auto m = as_monomial(item(g, i));
    if (!m || !is_unit_sign(m->coeff) || m->exp < 1) fail(item(g, i), "expected a base +-q^t with t >= 1");
    return SignedPower(m->coeff > 0 ? 1 : -1, m->exp);
  }
  std::string keyword(std::size_t g, std::size_t i) const {
    const auto* k = std::get_if<Keyword>(&item(g, i).node);
    if (!k) fail(item(g, i), "expected an option name");
    return k->name;
  }
  // The option in a call of the form name() or name(option).
  std::optional<std::string> option(const char* usage) const {
    if (call_.groups.empty()) return std::nullopt;
    shape({1}, usage);
    return keyword(0, 0);
  }
  [[noreturn]] void bad_option(const std::string& name, const char* usage) const {
    fail(expr_, "unknown option '" + name + "', expected " + usage);
  }

 private:
  const Expr& expr_;
  const Call& call_;
};

using Builder = std::function<LaurentSeries(const CallArgs&, std::int64_t)>;

HeckeSpec hecke_args(const CallArgs& a, const char* usage) {
  a.shape({3, 2, 1}, usage);
  return HeckeSpec{QuadraticForm{a.integer(0, 0), a.integer(0, 1), a.integer(0, 2)}, a.monomial(1, 0),
                   a.monomial(1, 1), a.base(2, 0)};
}

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = {
      {"f",
       [](const CallArgs& a, std::int64_t n) { return hecke_f(hecke_args(a, "f(a, b, c; x, y; base)"), n); }},
      {"g",
       [](const CallArgs& a, std::int64_t n) { return hecke_g(hecke_args(a, "g(a, b, c; x, y; base)"), n); }},
      {"j",
       [](const CallArgs& a, std::int64_t n) {
         a.shape({1, 1}, "j(x; m) or j(x; base)");
         const Monomial x = a.monomial(0, 0);
         if (auto m = as_integer(a.item(1, 0))) return theta_product(ThetaSpec::make(x, *m), n);
         return theta_product(ThetaSpec::make(x, a.base(1, 0)), n);
       }},
      {"J",
       [](const CallArgs& a, std::int64_t n) {
         if (a.group_count() == 1 && a.item_count(0) == 1) return Jm(a.integer(0, 0), n);
         a.shape({2}, "J(m) or J(a, m)");
         return J(a.integer(0, 0), a.integer(0, 1), n);
       }},
      {"JB",
       [](const CallArgs& a, std::int64_t n) {
         a.shape({2}, "JB(a, m)");
         return Jbar(a.integer(0, 0), a.integer(0, 1), n);
       }},
      {"Jm",
       [](const CallArgs& a, std::int64_t n) {
         a.shape({1}, "Jm(m)");
         return Jm(a.integer(0, 0), n);
       }},
      {"m",
       [](const CallArgs& a, std::int64_t n) {
         a.shape({1, 1, 1}, "m(x; p; z)");
         return appell_m(AppellSpec{a.monomial(0, 0), a.integer(1, 0), a.monomial(2, 0)}, n);
       }},
      {"ft",
       [](const CallArgs& a, std::int64_t n) {
         const char* usage = "ft(A, B, C; plus|alt; nonneg|sg)";
         a.shape({3, 1, 1}, usage);
         FalseThetaSpec spec;
         spec.quad2 = a.integer(0, 0);
         spec.linear2 = a.integer(0, 1);
         spec.constant = a.integer(0, 2);
         const std::string sign = a.keyword(1, 0);
         if (sign == "plus") {
           spec.sign = SignMode::plus;
         } else if (sign == "alt") {
           spec.sign = SignMode::alternating;
         } else {
           a.bad_option(sign, usage);
         }
         const std::string support = a.keyword(2, 0);
         if (support == "nonneg") {
           spec.support = Support::nonneg;
         } else if (support == "sg") {
           spec.support = Support::sg_bilateral;
         } else {
           a.bad_option(support, usage);
         }
         return false_theta(spec, n);
       }},
      {"ftchar3",
       [](const CallArgs& a, std::int64_t n) {
         a.shape({}, "ftchar3()");
         return false_theta(legendre3_theta_spec(), n);
       }},
      {"phi",
       [](const CallArgs& a, std::int64_t n) {
         a.shape({}, "phi()");
         return phi6(n);
       }},
      {"V0",
       [](const CallArgs& a, std::int64_t n) {
         a.shape({}, "V0()");
         return V0(n);
       }},
      {"sigma",
       [](const CallArgs& a, std::int64_t n) {
         const char* usage = "sigma([eulerian|double|double_outer|g151|g133])";
         const std::string v = a.option(usage).value_or("eulerian");
         if (v == "eulerian") return sigma_eulerian(n);
         if (v == "double") return sigma_double(n, SigmaSign::inner_sum);
         if (v == "double_outer") return sigma_double(n, SigmaSign::outer_only);
         if (v == "g151") return sigma_g(n, SigmaGForm::g151);
         if (v == "g133") return sigma_g(n, SigmaGForm::g133);
         a.bad_option(v, usage);
       }},
      {"delta",
       [](const CallArgs& a, std::int64_t n) {
         const char* usage = "delta([double|g|euler])";
         const std::string v = a.option(usage).value_or("double");
         if (v == "double") return delta_gen(n, DeltaVariant::double_sum);
         if (v == "g") return delta_gen(n, DeltaVariant::g_form);
         if (v == "euler") return delta_gen(n, DeltaVariant::eulerian_at_minus_q);
         a.bad_option(v, usage);
       }},
      {"aw",
       [](const CallArgs& a, std::int64_t n) {
         const char* usage = "aw(e1_1a|e1_1c|e1_1d|e1_5|thm13|e1_7)";
         a.shape({1}, usage);
         const std::string tag = a.keyword(0, 0);
         static const std::map<std::string, AwSeries> tags = {
             {"e1_1a", AwSeries::e1_1a}, {"e1_1c", AwSeries::e1_1c}, {"e1_1d", AwSeries::e1_1d},
             {"e1_5", AwSeries::e1_5},   {"thm13", AwSeries::thm13}, {"e1_7", AwSeries::e1_7}};
         auto it = tags.find(tag);
         if (it == tags.end()) a.bad_option(tag, usage);
         return aw_lhs(it->second, n);
       }},
      {"poch",
       [](const CallArgs& a, std::int64_t n) {
         a.shape({1, 1, 1}, "poch(x; base; n)");
         const std::int64_t len = a.integer(2, 0);
         if (len < 0 || len > 100000) fail(a.item(2, 0), "Pochhammer length out of range");
         return pochhammer(PochhammerSpec{a.monomial(0, 0), a.base(1, 0), len}).truncated(n);
       }},
  };
  return table;
}

class Evaluator {
 public:
  explicit Evaluator(std::int64_t target) : target_(target) {}

  // A series certified to order >= n.
  LaurentSeries at(const Expr& e, std::int64_t n) {
    if (n > target_ + kMaxExtraOrder) fail(e, "required working precision is too large");
    return std::visit([&](const auto& x) { return visit(e, x, n); }, e.node);
  }

 private:
  LaurentSeries visit(const Expr&, const Number& x, std::int64_t) { return LaurentSeries::constant(x.value); }
  LaurentSeries visit(const Expr&, const Symbol&, std::int64_t) { return LaurentSeries::q_power(1); }
  LaurentSeries visit(const Expr& e, const Keyword& x, std::int64_t) { fail(e, "unknown name '" + x.name + "'"); }
  LaurentSeries visit(const Expr&, const Negate& x, std::int64_t n) { return negate(at(*x.operand, n)); }

  LaurentSeries visit(const Expr& e, const Binary& x, std::int64_t n) {
    if (x.op == '+' || x.op == '-') {
      const LaurentSeries l = at(*x.lhs, n).truncated(n);
      const LaurentSeries r = at(*x.rhs, n).truncated(n);
      return x.op == '+' ? add(l, r) : sub(l, r);
    }
    if (auto m = as_monomial(e)) return LaurentSeries::monomial(*m);
    std::int64_t nl = n, nr = n;
    int zero_retries = 0;
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
      const LaurentSeries l = operand(*x.lhs, nl);
      LaurentSeries r = operand(*x.rhs, nr);
      if (x.op == '/') {
        if (r.is_zero()) {
          if (r.is_exact()) fail(e, "division by zero");
          if (++zero_retries > kMaxZeroRetries) {
            fail(e, "divisor vanishes to order " + std::to_string(r.order()) + "; not invertible");
          }
          nr += std::int64_t{16} << zero_retries;
          continue;
        }
        r = invert(r);
      }
      const LaurentSeries out = mul(l, r);
      if (out.order() >= n) return out;
      const std::int64_t deficit = n - out.order();
      nl += deficit;
      nr += deficit;
    }
    fail(e, "could not reach the requested order");
  }

  LaurentSeries visit(const Expr& e, const Power& x, std::int64_t n) {
    if (x.exponent == 0) return LaurentSeries::constant(Rational(1));
    if (auto m = as_monomial(e)) return LaurentSeries::monomial(*m);
    std::int64_t nb = n;
    int zero_retries = 0;
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
      const LaurentSeries b = operand(*x.base, nb);
      if (x.exponent < 0 && b.is_zero()) {
        if (b.is_exact()) fail(e, "negative power of zero");
        if (++zero_retries > kMaxZeroRetries) {
          fail(e, "base vanishes to order " + std::to_string(b.order()) + "; not invertible");
        }
        nb += std::int64_t{16} << zero_retries;
        continue;
      }
      const LaurentSeries out = power(b, x.exponent);
      if (out.order() >= n) return out;
      nb += n - out.order();
    }
    fail(e, "could not reach the requested order");
  }

  LaurentSeries visit(const Expr& e, const Call& x, std::int64_t n) {
    const auto& table = builders();
    auto it = table.find(x.name);
    if (it == table.end()) fail(e, "unknown function '" + x.name + "'");
    try {
      return it->second(CallArgs(e, x), n);
    } catch (const DslError&) {
      throw;
    } catch (const AppellPoleError& err) {
      fail(e, std::string("Appell pole: ") + err.what());
    } catch (const std::exception& err) {
      fail(e, err.what());
    }
  }

  LaurentSeries visit(const Expr& e, const Substitute& x, std::int64_t n) {
    auto m = as_monomial(*x.base);
    if (!m || !is_unit_sign(m->coeff) || m->exp < 1) fail(*x.base, "expected a base +-q^t with t >= 1");
    const SignedPower base(m->coeff > 0 ? 1 : -1, m->exp);
    const std::int64_t inner = detail::ceil_div(n, base.power());
    (void)e;
    return substitute(at(*x.operand, inner).truncated(inner), base);
  }

  // Operand of * / ^ at order n, truncated so exact polynomials stay small
  // and can be inverted.
  LaurentSeries operand(const Expr& e, std::int64_t n) { return at(e, n).truncated(n); }

  std::int64_t target_;
};

}  // namespace

LaurentSeries eval(const Expr& e, std::int64_t n) {
  LaurentSeries s = Evaluator(n).at(e, n);
  return s.truncated(n);
}

LaurentSeries eval(std::string_view text, std::int64_t n) { return eval(*parse(text), n); }

}  // namespace qhecke::dsl
