#pragma once

#include <cstdint>

#include "qhecke/series.hpp"

namespace qhecke {

/// j(arg; base) with arg = +-q^e. The base is normally q^m; a negative base
/// -q^m is accepted because shift corrections evaluate thetas at (-q)^c.
struct ThetaSpec {
  Monomial arg;
  SignedPower base;

  /// j(arg; q^modulus). Throws std::invalid_argument on a non-unit coefficient
  /// or modulus < 1.
  static ThetaSpec make(const Monomial& arg, std::int64_t modulus);
  static ThetaSpec make(const Monomial& arg, const SignedPower& base);
};

/// Bilateral sum  sum_n (-1)^n base^{n(n-1)/2} arg^n, every term of exponent <= order.
LaurentSeries theta_sum(const ThetaSpec& spec, std::int64_t order);

/// Triple product (arg; base)_inf (base/arg; base)_inf (base; base)_inf.
LaurentSeries theta_product(const ThetaSpec& spec, std::int64_t order);

/// J_{a,m} = j(q^a; q^m)
LaurentSeries J(std::int64_t a, std::int64_t m, std::int64_t order);
/// Jbar_{a,m} = j(-q^a; q^m)
LaurentSeries Jbar(std::int64_t a, std::int64_t m, std::int64_t order);
/// J_m = J_{m,3m} = (q^m; q^m)_inf
LaurentSeries Jm(std::int64_t m, std::int64_t order);

}  // namespace qhecke
