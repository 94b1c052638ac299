#include "qhecke/eulerian.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qhecke/hecke.hpp"

namespace qhecke {

namespace {

// 1 - d q^k
struct Factor {
  Rational d;
  std::int64_t k;
};

void append_pochhammer(std::vector<Factor>& out, const PochhammerSpec& spec) {
  for (std::int64_t i = 0; i < spec.length; ++i) {
    const Monomial m = spec.base.pow(i) * spec.arg;
    out.push_back({m.coeff, m.exp});
  }
}

std::vector<Factor> factors(std::initializer_list<PochhammerSpec> specs) {
  std::vector<Factor> out;
  for (const auto& s : specs) append_pochhammer(out, s);
  return out;
}

// (sign q^e; q^t)_n shorthand
PochhammerSpec poch(int sign, std::int64_t e, int base_sign, std::int64_t t, std::int64_t n) {
  return PochhammerSpec{Monomial::q_power(e, sign), SignedPower(base_sign, t), n};
}

// lead * prod numer / prod denom, truncated at order. Numerator factors are
// applied exactly; denominators must be unit-leading (k >= 1).
LaurentSeries expand_term(const Monomial& lead, const std::vector<Factor>& numer, const std::vector<Factor>& denom,
                          std::int64_t order) {
  LaurentSeries s = LaurentSeries::monomial(lead, order);
  for (const auto& f : numer) {
    if (f.k == 0) {
      s = scale(s, 1 - f.d);
    } else if (f.k > 0) {
      s = multiply_binomial(s, f.d, f.k);
    } else {
      throw std::logic_error("numerator factor with negative exponent");
    }
  }
  for (const auto& f : denom) {
    if (f.k < 1) throw std::logic_error("denominator factor is not unit-leading");
    s = divide_binomial(s, f.d, f.k);
  }
  return s;
}

// Sums term(n) for n = 0, 1, ... while valuation(n) <= order, asserting the
// valuation bound is nondecreasing and that each term respects it.
LaurentSeries eulerian_sum(std::int64_t order, int widen, const std::function<std::int64_t(std::int64_t)>& valuation,
                           const std::function<LaurentSeries(std::int64_t, std::int64_t)>& term) {
  SeriesAccumulator acc(order);
  std::int64_t prev = std::numeric_limits<std::int64_t>::min();
  std::int64_t count = 0;
  for (std::int64_t n = 0;; ++n) {
    const std::int64_t v = valuation(n);
    if (v < prev) throw std::logic_error("Eulerian term valuation bound is not monotone");
    prev = v;
    if (v > order) break;
    const LaurentSeries t = term(n, order);
    if (!t.is_zero() && *t.valuation() < v) throw std::logic_error("Eulerian term below its valuation bound");
    acc.add(t);
    ++count;
  }
  for (std::int64_t n = count; n < count * widen + (widen > 1 ? 1 : 0); ++n) {
    acc.add(term(n, order));
  }
  return std::move(acc).finish();
}

HeckeSpec g_spec(std::int64_t a, std::int64_t b, std::int64_t c, int xs, std::int64_t xe, int ys, std::int64_t ye,
                 std::int64_t t = 1) {
  return HeckeSpec{QuadraticForm{a, b, c}, Monomial::q_power(xe, xs), Monomial::q_power(ye, ys), SignedPower(1, t)};
}

// g(spec1) + m * g(spec2)
LaurentSeries g_pair(const HeckeSpec& first, const Monomial& m, const HeckeSpec& second, std::int64_t order) {
  return add(hecke_g(first, order), mul_monomial(hecke_g(second, order - m.exp), m)).truncated(order);
}

}  // namespace

LaurentSeries pochhammer(const PochhammerSpec& spec) {
  if (spec.length < 0) throw std::invalid_argument("Pochhammer length must be >= 0");
  LaurentSeries s = LaurentSeries::constant(Rational(1));
  for (std::int64_t i = 0; i < spec.length; ++i) {
    const Monomial m = spec.base.pow(i) * spec.arg;
    // 1 - m as an exact polynomial
    s = mul(s, add(LaurentSeries::constant(Rational(1)), LaurentSeries::monomial(-m)));
  }
  return s;
}

LaurentSeries phi6(std::int64_t order, int widen) {
  return eulerian_sum(
      order, widen, [](std::int64_t n) { return n * n; },
      [](std::int64_t n, std::int64_t ord) {
        const Monomial lead = Monomial::q_power(n * n, (n & 1) ? -1 : 1);
        return expand_term(lead, factors({poch(1, 1, 1, 2, n)}), factors({poch(-1, 1, 1, 1, 2 * n)}), ord);
      });
}

LaurentSeries sigma_eulerian(std::int64_t order, int widen) {
  return eulerian_sum(
      order, widen, [](std::int64_t n) { return n * (n + 1) / 2; },
      [](std::int64_t n, std::int64_t ord) {
        return expand_term(Monomial::q_power(n * (n + 1) / 2), {}, factors({poch(-1, 1, 1, 1, n)}), ord);
      });
}

LaurentSeries sigma_double(std::int64_t order, SigmaSign reading, int widen) {
  // The n-th summand has valuation n(3n+1)/2 - n^2 = n(n+1)/2.
  return eulerian_sum(
      order, widen, [](std::int64_t n) { return n * (n + 1) / 2; },
      [reading](std::int64_t n, std::int64_t ord) {
        SeriesAccumulator acc(ord);
        const long outer = (n & 1) ? -1 : 1;
        for (std::int64_t j = -n; j <= n; ++j) {
          long sign = outer;
          if (reading == SigmaSign::inner_sum && (j & 1)) sign = -sign;
          const std::int64_t e = n * (3 * n + 1) / 2 - j * j;
          acc.add(e, sign);
          acc.add(e + 2 * n + 1, -sign);
        }
        return std::move(acc).finish();
      });
}

LaurentSeries sigma_g(std::int64_t order, SigmaGForm form) {
  if (form == SigmaGForm::g151) {
    return g_pair(g_spec(1, 5, 1, -1, 1, -1, 1), Monomial::q_power(2, -1), g_spec(1, 5, 1, -1, 4, -1, 4), order);
  }
  return g_pair(g_spec(1, 3, 3, -1, 1, 1, 2), Monomial::q_power(1, -1), g_spec(1, 3, 3, -1, 3, 1, 4), order);
}

LaurentSeries V0(std::int64_t order, int widen) {
  const LaurentSeries sum = eulerian_sum(
      order, widen, [](std::int64_t n) { return n * n; },
      [](std::int64_t n, std::int64_t ord) {
        return expand_term(Monomial::q_power(n * n), factors({poch(-1, 1, 1, 2, n)}), factors({poch(1, 1, 1, 2, n)}),
                           ord);
      });
  return add(LaurentSeries::constant(Rational(-1)), scale(sum, Rational(2)));
}

LaurentSeries delta_gen(std::int64_t order, DeltaVariant variant, int widen) {
  switch (variant) {
    case DeltaVariant::double_sum:
      // valuation n(2n+1) - n^2 = n^2 + n
      return eulerian_sum(
          order, widen, [](std::int64_t n) { return n * n + n; },
          [](std::int64_t n, std::int64_t ord) {
            SeriesAccumulator acc(ord);
            for (std::int64_t j = -n; j <= n; ++j) {
              const std::int64_t e = n * (2 * n + 1) - j * j;
              acc.add(e, 1L);
              acc.add(e + 2 * n + 1, 1L);
            }
            return std::move(acc).finish();
          });
    case DeltaVariant::g_form:
      return g_pair(g_spec(1, 2, 2, -1, 2, -1, 3, 2), Monomial::q_power(1), g_spec(1, 2, 2, -1, 4, -1, 5, 2), order);
    case DeltaVariant::eulerian_at_minus_q:
      return eulerian_sum(
          order, widen, [](std::int64_t n) { return n * (n + 1) / 2; },
          [](std::int64_t n, std::int64_t ord) {
            const Monomial lead = Monomial::q_power(n * (n + 1) / 2, (n & 1) ? -1 : 1);
            return expand_term(lead, factors({poch(1, 1, 1, 1, n)}), factors({poch(-1, 1, 1, 1, n)}), ord);
          });
  }
  throw std::invalid_argument("unknown delta variant");
}

namespace {

LaurentSeries aw_thm13(std::int64_t order, int widen) {
  // For fixed j the n-sum is built by the ratio
  //   t(n+1)/t(n) = q (1 - q^{2n+2j+2}) / ((1 + q^{2n+2j+2}) (1 + q^{2n+2j+3}) (1 - q^{2n+2})).
  SeriesAccumulator acc(order);
  const std::int64_t jcap = [&] {
    std::int64_t j = 0;
    while ((j + 1) * (2 * j + 3) <= order) ++j;
    return j;
  }();
  const std::int64_t jmax = widen > 1 ? (jcap + 1) * widen : jcap;
  for (std::int64_t j = 0; j <= jmax; ++j) {
    const std::int64_t vj = j * (2 * j + 1);
    if (vj > order && widen <= 1) break;
    LaurentSeries t = expand_term(Monomial::q_power(vj), factors({poch(1, 2, 1, 2, j)}),
                                  factors({poch(-1, 1, 1, 1, 2 * j + 1), poch(1, 2, 1, 2, j)}), order);
    const std::int64_t ncap = std::max<std::int64_t>(order - vj, -1);
    const std::int64_t nmax = widen > 1 ? (ncap + 1) * widen : ncap;
    for (std::int64_t n = 0; n <= nmax; ++n) {
      acc.add(t);
      const std::int64_t m = n + j + 1;
      t = mul_monomial(t, Monomial::q_power(1)).truncated(order);
      t = multiply_binomial(t, Rational(1), 2 * m);
      t = divide_binomial(t, Rational(-1), 2 * m);
      t = divide_binomial(t, Rational(-1), 2 * m + 1);
      t = divide_binomial(t, Rational(1), 2 * n + 2);
    }
  }
  return std::move(acc).finish();
}

}  // namespace

LaurentSeries aw_lhs(AwSeries which, std::int64_t order, int widen) {
  switch (which) {
    case AwSeries::e1_1a:
      return eulerian_sum(
          order, widen, [](std::int64_t n) { return n * (n + 1); },
          [](std::int64_t n, std::int64_t ord) {
            const Monomial lead = Monomial::q_power(n * (n + 1), (n & 1) ? -1 : 1);
            return expand_term(lead, factors({poch(1, 1, 1, 2, n)}), factors({poch(-1, 1, 1, 1, 2 * n + 1)}), ord);
          });
    case AwSeries::e1_1c:
      return eulerian_sum(
          order, widen, [](std::int64_t n) { return n; },
          [](std::int64_t n, std::int64_t ord) {
            return expand_term(Monomial::q_power(n), factors({poch(1, 1, 1, 2, n)}),
                               factors({poch(-1, 1, 1, 1, 2 * n + 1)}), ord);
          });
    case AwSeries::e1_1d:
      return eulerian_sum(
          order, widen, [](std::int64_t n) { return n; },
          [](std::int64_t n, std::int64_t ord) {
            return expand_term(Monomial::q_power(n), factors({poch(1, 1, -1, 1, 2 * n)}),
                               factors({poch(-1, 1, 1, 1, 2 * n + 1)}), ord);
          });
    case AwSeries::e1_5:
      return eulerian_sum(
          order, widen, [](std::int64_t n) { return n; },
          [](std::int64_t n, std::int64_t ord) {
            return expand_term(Monomial::q_power(n), {}, factors({poch(-1, 1, 1, 2, n + 1)}), ord);
          });
    case AwSeries::thm13:
      return aw_thm13(order, widen);
    case AwSeries::e1_7:
      return eulerian_sum(
          order, widen, [](std::int64_t n) { return n; },
          [](std::int64_t n, std::int64_t ord) {
            if (n == 0) {
              // (-q^4;q^4)_{-1} = (-q^2;q^2)_{-1} = 1/2, so the first term is 1/(1+q).
              return expand_term(Monomial::q_power(0), {}, factors({poch(-1, 1, 1, 2, 1)}), ord);
            }
            return expand_term(Monomial::q_power(n), factors({poch(-1, 4, 1, 4, n - 1)}),
                               factors({poch(-1, 2, 1, 2, n - 1), poch(-1, 1, 1, 2, n + 1)}), ord);
          });
  }
  throw std::invalid_argument("unknown aw series");
}

}  // namespace qhecke
