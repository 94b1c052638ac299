#pragma once
// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond the Rational type: power series are dense
// int64 vectors, sums are plain nested loops over generous boxes.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

#include "qhecke/hecke.hpp"
#include "qhecke/series.hpp"

namespace oracle {

using qhecke::Rational;

// Sparse exact coefficients, exponent -> value.
using Coeffs = std::map<std::int64_t, Rational>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("oracle overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("oracle overflow");
  return r;
}

// Power series c[0] + c[1] q + ... + c[n] q^n with integer coefficients.
struct PowerSeries {
  std::vector<std::int64_t> c;
  explicit PowerSeries(std::int64_t n, std::int64_t constant = 0) : c(static_cast<std::size_t>(n + 1), 0) {
    c[0] = constant;
  }
  std::int64_t n() const { return static_cast<std::int64_t>(c.size()) - 1; }
};

inline PowerSeries multiply(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(a.n());
  for (std::int64_t i = 0; i <= a.n(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::int64_t j = 0; i + j <= a.n(); ++j) {
      out.c[i + j] = checked_add(out.c[i + j], checked_mul(a.c[i], b.c[j]));
    }
  }
  return out;
}

// Power series inverse; the constant term must be +-1.
inline PowerSeries inverse(const PowerSeries& a) {
  if (a.c[0] != 1 && a.c[0] != -1) throw std::invalid_argument("oracle inverse needs a unit constant");
  PowerSeries out(a.n());
  out.c[0] = a.c[0];
  for (std::int64_t k = 1; k <= a.n(); ++k) {
    std::int64_t s = 0;
    for (std::int64_t i = 1; i <= k; ++i) s = checked_add(s, checked_mul(a.c[i], out.c[k - i]));
    out.c[k] = checked_mul(-s, a.c[0]);
  }
  return out;
}

// 1 - sign q^k as a power series, k >= 0.
inline PowerSeries binomial(std::int64_t n, int sign, std::int64_t k) {
  PowerSeries out(n, 1);
  if (k <= n) out.c[k] -= sign;
  return out;
}

// prod_{i<len} (1 - (asign q^aexp) (bsign q^t)^i), all exponents >= 0.
inline PowerSeries pochhammer(std::int64_t n, int asign, std::int64_t aexp, int bsign, std::int64_t t,
                              std::int64_t len) {
  PowerSeries out(n, 1);
  for (std::int64_t i = 0; i < len; ++i) {
    const int sign = asign * ((bsign < 0 && (i & 1)) ? -1 : 1);
    out = multiply(out, binomial(n, sign, aexp + t * i));
  }
  return out;
}

inline PowerSeries monomial(std::int64_t n, int sign, std::int64_t e) {
  PowerSeries out(n);
  if (e <= n) out.c[e] = sign;
  return out;
}

inline PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(a.n());
  for (std::int64_t i = 0; i <= a.n(); ++i) out.c[i] = checked_add(a.c[i], b.c[i]);
  return out;
}

inline Coeffs to_coeffs(const PowerSeries& a) {
  Coeffs out;
  for (std::int64_t i = 0; i <= a.n(); ++i) {
    if (a.c[i] != 0) out[i] = Rational(static_cast<long>(a.c[i]));
  }
  return out;
}

// prod_{k=1}^{n} (1 - q^{m k})
inline PowerSeries euler_product(std::int64_t n, std::int64_t m) {
  PowerSeries out(n, 1);
  for (std::int64_t k = 1; m * k <= n; ++k) out = multiply(out, binomial(n, 1, m * k));
  return out;
}

// sum_k (-1)^k q^{k(3k-1)/2}, k over all integers.
inline PowerSeries pentagonal(std::int64_t n) {
  PowerSeries out(n);
  for (std::int64_t k = -200; k <= 200; ++k) {
    const std::int64_t e = k * (3 * k - 1) / 2;
    if (e <= n) out.c[e] += (k & 1) ? -1 : 1;
  }
  return out;
}

// Definition of j(x; q^m) as a bilateral sum over a fixed wide box.
inline Coeffs theta_box(int xsign, std::int64_t xexp, std::int64_t m, std::int64_t order, std::int64_t box = 400) {
  Coeffs out;
  for (std::int64_t k = -box; k <= box; ++k) {
    const std::int64_t e = m * (k * (k - 1) / 2) + k * xexp;
    if (e > order) continue;
    int sign = (k & 1) ? -1 : 1;
    if (xsign < 0 && (k & 1)) sign = -sign;
    out[e] += sign;
  }
  return out;
}

inline int sg(std::int64_t n) { return n >= 0 ? 1 : -1; }

// f or g over the rectangle |r|, |s| <= box.
inline Coeffs hecke_box(const qhecke::HeckeSpec& spec, std::int64_t order, bool plus, std::int64_t box = 60) {
  Coeffs out;
  const auto& f = spec.form;
  const std::int64_t t = spec.base.power();
  for (std::int64_t r = -box; r <= box; ++r) {
    for (std::int64_t s = -box; s <= box; ++s) {
      if (sg(r) != sg(s)) continue;
      const std::int64_t q = f.a * (r * (r - 1) / 2) + f.b * r * s + f.c * (s * (s - 1) / 2);
      const std::int64_t e = t * q + r * spec.x.exp + s * spec.y.exp;
      if (e > order) continue;
      Rational v = qhecke::pow(spec.x.coeff, r) * qhecke::pow(spec.y.coeff, s);
      if ((r + s) % 2 != 0) v = -v;
      if (spec.base.sign() < 0 && q % 2 != 0) v = -v;
      if (!plus && r < 0) v = -v;
      out[e] += v;
    }
  }
  return out;
}

inline void drop_zeros(Coeffs& c) {
  for (auto it = c.begin(); it != c.end();) it = (it->second == 0) ? c.erase(it) : std::next(it);
}

// Library series as sparse coefficients up to `order`.
inline Coeffs from_series(const qhecke::LaurentSeries& s, std::int64_t order) {
  Coeffs out;
  for (const auto& [e, c] : s.terms()) {
    if (e <= order) out[e] = c;
  }
  return out;
}

// True when the library series matches the oracle at every exponent <= order.
inline bool same(const qhecke::LaurentSeries& s, Coeffs expected, std::int64_t order) {
  drop_zeros(expected);
  for (auto it = expected.begin(); it != expected.end();) it = (it->first > order) ? expected.erase(it) : std::next(it);
  return s.order() >= order && from_series(s, order) == expected;
}

}  // namespace oracle
