#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhecke/rational.hpp"

namespace qhecke {

/// c * q^exp with c != 0. The only shape x, y, z arguments are allowed to take.
struct Monomial {
  Rational coeff{1};
  std::int64_t exp = 0;

  /// Throws std::invalid_argument when coeff is zero.
  static Monomial make(Rational coeff, std::int64_t exp);
  /// sign * q^exp
  static Monomial q_power(std::int64_t exp, int sign = 1);

  Monomial inverse() const;
  Monomial pow(std::int64_t k) const;
  bool has_unit_coeff() const { return is_unit_sign(coeff); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial operator-(const Monomial& m);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp == b.exp && a.coeff == b.coeff;
  }
};

std::string to_string(const Monomial& m);

/// A base substitution q -> sign * q^power, power >= 1.
class SignedPower {
 public:
  SignedPower() = default;
  /// Throws std::invalid_argument unless sign is +-1 and power >= 1.
  SignedPower(int sign, std::int64_t power);

  int sign() const { return sign_; }
  std::int64_t power() const { return power_; }

  /// (sign * q^power)^k as a monomial in q.
  Monomial pow(std::int64_t k) const;
  /// Sign picked up by base^k, i.e. sign^k.
  int sign_of_power(std::int64_t k) const { return (sign_ < 0 && (k & 1)) ? -1 : 1; }
  /// The base raised to k, e.g. (-q^2)^3 = -q^6.
  SignedPower raised(std::int64_t k) const;

  friend bool operator==(const SignedPower&, const SignedPower&) = default;

 private:
  int sign_ = 1;
  std::int64_t power_ = 1;
};

std::string to_string(const SignedPower& base);

/// Truncated formal Laurent series in q with exact rational coefficients.
///
/// Coefficients are certified for every exponent <= order(). An exact series
/// (order() == kExact) is a Laurent polynomial known to all orders. Storage
/// is dense between the lowest and highest nonzero exponents, so the first
/// and last stored coefficients are never zero; coefficient() and terms()
/// expose only the nonzero entries.
class LaurentSeries {
 public:
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

  /// The exact zero series.
  LaurentSeries() = default;

  static LaurentSeries zero(std::int64_t order);
  static LaurentSeries constant(const Rational& c, std::int64_t order = kExact);
  static LaurentSeries monomial(const Monomial& m, std::int64_t order = kExact);
  static LaurentSeries q_power(std::int64_t exp, std::int64_t order = kExact);
  /// Coefficients for exponents low, low+1, ...; entries above order are dropped.
  static LaurentSeries from_dense(std::int64_t low, std::vector<Rational> coeffs, std::int64_t order);
  static LaurentSeries from_terms(const std::vector<std::pair<std::int64_t, Rational>>& terms,
                                  std::int64_t order);

  std::int64_t order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  /// True when no coefficient up to order() is nonzero.
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::int64_t> valuation() const;
  /// valuation(), or a certified lower bound (order()+1) for a series that is
  /// zero up to its order. kExact for the exact zero series.
  std::int64_t valuation_bound() const;
  /// Highest exponent with a nonzero coefficient; requires !is_zero().
  std::int64_t top_exponent() const;

  /// Throws std::out_of_range("beyond truncation") when e > order().
  Rational coefficient(std::int64_t e) const;
  /// Nonzero coefficients in increasing exponent order.
  std::vector<std::pair<std::int64_t, Rational>> terms() const;

  /// Copy with order min(order, order()).
  LaurentSeries truncated(std::int64_t order) const;

  /// Same order and identical coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  // Raw dense access for the arithmetic kernels.
  std::int64_t dense_low() const { return low_; }
  const std::vector<Rational>& dense() const { return coeffs_; }

 private:
  LaurentSeries(std::int64_t low, std::vector<Rational> coeffs, std::int64_t order);
  void normalize();

  std::int64_t low_ = 0;
  std::vector<Rational> coeffs_;
  std::int64_t order_ = kExact;
};

/// Saturating order arithmetic: anything at or above kExact stays kExact.
std::int64_t order_add(std::int64_t order, std::int64_t delta);

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries negate(const LaurentSeries& a);
LaurentSeries scale(const LaurentSeries& a, const Rational& c);
/// Cauchy product. Result order is min(a.order + v(b), b.order + v(a)).
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul_monomial(const LaurentSeries& a, const Monomial& m);
/// Multiplicative inverse. Result order is a.order - 2 v(a). An exact series
/// can only be inverted when it is a single monomial; truncate first
/// otherwise. Throws std::domain_error("not invertible") for a zero series.
LaurentSeries invert(const LaurentSeries& a);
/// a^k for any integer k (negative powers go through invert()).
LaurentSeries power(const LaurentSeries& a, std::int64_t k);
/// q -> sign * q^t. Result order is t * a.order.
LaurentSeries substitute(const LaurentSeries& a, const SignedPower& base);

/// a * (1 - d q^k), k >= 1. Order is unchanged.
LaurentSeries multiply_binomial(const LaurentSeries& a, const Rational& d, std::int64_t k);
/// a / (1 - d q^k) for any k; k == 0 requires d != 1. For k < 0 the factor is
/// rewritten as -d^{-1} q^{-k} / (1 - d^{-1} q^{-k}), which raises the order
/// by -k. a must have a finite order unless it is zero.
LaurentSeries divide_binomial(const LaurentSeries& a, const Rational& d, std::int64_t k);

/// Sum over r from lo to hi with the reversed-range convention: when hi < lo
/// the result is minus the sum over hi+1 .. lo-1, so an empty range such as
/// 0..-1 gives zero.
LaurentSeries signed_range_sum(std::int64_t lo, std::int64_t hi,
                               const std::function<LaurentSeries(std::int64_t)>& term);

/// First exponent e in [lo, hi] where the coefficients differ, if any.
std::optional<std::int64_t> first_mismatch(const LaurentSeries& a, const LaurentSeries& b,
                                           std::int64_t lo, std::int64_t hi);
/// Coefficientwise equality for every exponent up to min(a.order, b.order).
bool agree(const LaurentSeries& a, const LaurentSeries& b);

/// Human readable form, e.g. "1 - q - q^2 + O(q^3)".
std::string to_text(const LaurentSeries& a);

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a) { return negate(a); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }
inline LaurentSeries operator*(const Rational& c, const LaurentSeries& a) { return scale(a, c); }
inline LaurentSeries operator*(const Monomial& m, const LaurentSeries& a) { return mul_monomial(a, m); }

/// Dense accumulator used by the series builders. Terms above the order are
/// ignored; the buffer grows downwards on demand.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(std::int64_t order) : order_(order) {}

  std::int64_t order() const { return order_; }
  void add(std::int64_t exp, const Rational& c);
  void add(std::int64_t exp, long c);
  void add(const LaurentSeries& s);
  LaurentSeries finish() &&;

 private:
  Rational& slot(std::int64_t exp);

  std::int64_t order_;
  std::int64_t low_ = 0;
  std::vector<Rational> coeffs_;
};

}  // namespace qhecke
