#include "qhecke/theta.hpp"

#include <stdexcept>
#include <vector>

#include "detail/quadratic.hpp"

namespace qhecke {

namespace {

// 1 - sign * q^k
struct Binomial {
  int sign;
  std::int64_t k;
};

int unit_sign(const Rational& c) { return c > 0 ? 1 : -1; }

}  // namespace

ThetaSpec ThetaSpec::make(const Monomial& arg, std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("theta modulus must be >= 1");
  return make(arg, SignedPower(1, modulus));
}

ThetaSpec ThetaSpec::make(const Monomial& arg, const SignedPower& base) {
  if (!arg.has_unit_coeff()) throw std::invalid_argument("theta argument must be +-q^e, got " + to_string(arg));
  return ThetaSpec{arg, base};
}

LaurentSeries theta_sum(const ThetaSpec& spec, std::int64_t order) {
  const std::int64_t t = spec.base.power();
  const std::int64_t e = spec.arg.exp;
  const int c = unit_sign(spec.arg.coeff);
  SeriesAccumulator acc(order);
  // 2 * exponent = t n^2 + (2e - t) n
  const auto range = detail::parabola_interval(t, 2 * e - t, 0, 2 * order);
  if (range) {
    for (std::int64_t n = range->first; n <= range->second; ++n) {
      const std::int64_t tri = n * (n - 1) / 2;
      int sign = (n & 1) ? -1 : 1;
      sign *= spec.base.sign_of_power(tri);
      if (c < 0 && (n & 1)) sign = -sign;
      acc.add(t * tri + n * e, static_cast<long>(sign));
    }
  }
  return std::move(acc).finish();
}

LaurentSeries theta_product(const ThetaSpec& spec, std::int64_t order) {
  const std::int64_t t = spec.base.power();
  const std::int64_t e = spec.arg.exp;
  const int c = unit_sign(spec.arg.coeff);
  const SignedPower& base = spec.base;

  // Factor i of each family is 1 - d q^k:
  //   (x; Q)_inf       d = c s^i,      k = e + t i
  //   (Q/x; Q)_inf     d = c s^(i+1),  k = t (i+1) - e
  //   (Q; Q)_inf       d = s^(i+1),    k = t (i+1)
  auto family = [&](int which, std::int64_t i) -> Binomial {
    switch (which) {
      case 0:
        return {c * base.sign_of_power(i), e + t * i};
      case 1:
        return {c * base.sign_of_power(i + 1), t * (i + 1) - e};
      default:
        return {base.sign_of_power(i + 1), t * (i + 1)};
    }
  };

  // Pass 1: the finitely many factors with k <= 0 become an exact prefactor.
  // 1 - d q^k with k < 0 is rewritten as -d q^k (1 - d q^{-k}) (d = +-1).
  Monomial prefactor = Monomial::q_power(0);
  std::vector<Binomial> reflected;
  for (int which = 0; which < 3; ++which) {
    for (std::int64_t i = 0;; ++i) {
      const Binomial f = family(which, i);
      if (f.k > 0) break;
      if (f.k == 0) {
        if (f.sign == 1) return LaurentSeries::zero(order);
        prefactor.coeff *= 2;
      } else {
        prefactor = prefactor * Monomial{Rational(-f.sign), f.k};
        reflected.push_back({f.sign, -f.k});
      }
    }
  }

  // Pass 2: expand the unit-leading factors up to the relative order needed.
  const std::int64_t rel = order - prefactor.exp;
  if (rel < 0) return LaurentSeries::zero(order);
  std::vector<Rational> poly(static_cast<std::size_t>(rel + 1));
  poly[0] = 1;
  auto apply = [&](const Binomial& f) {
    if (f.k > rel) return;
    const auto k = static_cast<std::size_t>(f.k);
    for (std::size_t i = poly.size() - 1; i >= k; --i) {
      if (poly[i - k] == 0) continue;
      if (f.sign > 0) {
        poly[i] -= poly[i - k];
      } else {
        poly[i] += poly[i - k];
      }
    }
  };
  for (const auto& f : reflected) apply(f);
  for (int which = 0; which < 3; ++which) {
    for (std::int64_t i = 0;; ++i) {
      const Binomial f = family(which, i);
      if (f.k > rel) break;
      if (f.k > 0) apply(f);
    }
  }
  return mul_monomial(LaurentSeries::from_dense(0, std::move(poly), rel), prefactor);
}

LaurentSeries J(std::int64_t a, std::int64_t m, std::int64_t order) {
  return theta_product(ThetaSpec::make(Monomial::q_power(a), m), order);
}

LaurentSeries Jbar(std::int64_t a, std::int64_t m, std::int64_t order) {
  return theta_product(ThetaSpec::make(Monomial::q_power(a, -1), m), order);
}

LaurentSeries Jm(std::int64_t m, std::int64_t order) { return J(m, 3 * m, order); }

}  // namespace qhecke
