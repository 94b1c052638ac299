#include "qhecke/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhecke {

// ---------------------------------------------------------------------------
// Monomial / SignedPower

Monomial Monomial::make(Rational coeff, std::int64_t exp) {
  if (coeff == 0) throw std::invalid_argument("monomial coefficient must be nonzero");
  return Monomial{std::move(coeff), exp};
}

Monomial Monomial::q_power(std::int64_t exp, int sign) { return Monomial{Rational(sign), exp}; }

Monomial Monomial::inverse() const { return Monomial{1 / coeff, -exp}; }

Monomial Monomial::pow(std::int64_t k) const { return Monomial{qhecke::pow(coeff, k), exp * k}; }

Monomial operator*(const Monomial& a, const Monomial& b) {
  return Monomial{a.coeff * b.coeff, a.exp + b.exp};
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  return Monomial{a.coeff / b.coeff, a.exp - b.exp};
}

Monomial operator-(const Monomial& m) { return Monomial{-m.coeff, m.exp}; }

std::string to_string(const Monomial& m) {
  std::string c;
  if (m.coeff == -1) {
    c = "-";
  } else if (m.coeff != 1) {
    c = m.coeff.get_str() + (m.exp == 0 ? "" : "*");
  }
  if (m.exp == 0) return (m.coeff == 1 || m.coeff == -1) ? c + "1" : c;
  if (m.exp == 1) return c + "q";
  return c + "q^" + std::to_string(m.exp);
}

SignedPower::SignedPower(int sign, std::int64_t power) : sign_(sign), power_(power) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("base sign must be +1 or -1");
  if (power < 1) throw std::invalid_argument("base power must be >= 1");
}

Monomial SignedPower::pow(std::int64_t k) const {
  return Monomial{Rational(sign_of_power(k)), power_ * k};
}

SignedPower SignedPower::raised(std::int64_t k) const { return SignedPower(sign_of_power(k), power_ * k); }

std::string to_string(const SignedPower& base) {
  std::string s = base.sign() < 0 ? "-q" : "q";
  if (base.power() != 1) s += "^" + std::to_string(base.power());
  return s;
}

// ---------------------------------------------------------------------------
// LaurentSeries

std::int64_t order_add(std::int64_t order, std::int64_t delta) {
  if (order >= LaurentSeries::kExact || delta >= LaurentSeries::kExact) return LaurentSeries::kExact;
  return std::min(order + delta, LaurentSeries::kExact);
}

LaurentSeries::LaurentSeries(std::int64_t low, std::vector<Rational> coeffs, std::int64_t order)
    : low_(low), coeffs_(std::move(coeffs)), order_(std::min(order, kExact)) {
  normalize();
}

void LaurentSeries::normalize() {
  // Drop anything beyond the truncation order, then trim zeros at both ends.
  if (!coeffs_.empty() && order_ < kExact) {
    const std::int64_t keep = order_ - low_ + 1;
    if (keep <= 0) {
      coeffs_.clear();
    } else if (static_cast<std::int64_t>(coeffs_.size()) > keep) {
      coeffs_.resize(static_cast<std::size_t>(keep));
    }
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<std::int64_t>(lead);
  }
}

LaurentSeries LaurentSeries::zero(std::int64_t order) { return LaurentSeries(0, {}, order); }

LaurentSeries LaurentSeries::constant(const Rational& c, std::int64_t order) {
  return LaurentSeries(0, {c}, order);
}

LaurentSeries LaurentSeries::monomial(const Monomial& m, std::int64_t order) {
  return LaurentSeries(m.exp, {m.coeff}, order);
}

LaurentSeries LaurentSeries::q_power(std::int64_t exp, std::int64_t order) {
  return LaurentSeries(exp, {Rational(1)}, order);
}

LaurentSeries LaurentSeries::from_dense(std::int64_t low, std::vector<Rational> coeffs, std::int64_t order) {
  return LaurentSeries(low, std::move(coeffs), order);
}

LaurentSeries LaurentSeries::from_terms(const std::vector<std::pair<std::int64_t, Rational>>& terms,
                                        std::int64_t order) {
  SeriesAccumulator acc(order);
  for (const auto& [e, c] : terms) acc.add(e, c);
  return std::move(acc).finish();
}

std::optional<std::int64_t> LaurentSeries::valuation() const {
  if (coeffs_.empty()) return std::nullopt;
  return low_;
}

std::int64_t LaurentSeries::valuation_bound() const {
  if (!coeffs_.empty()) return low_;
  return order_add(order_, 1);
}

std::int64_t LaurentSeries::top_exponent() const {
  if (coeffs_.empty()) throw std::logic_error("top_exponent of a zero series");
  return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

Rational LaurentSeries::coefficient(std::int64_t e) const {
  if (e > order_) {
    throw std::out_of_range("beyond truncation: exponent " + std::to_string(e) + " > order " +
                            std::to_string(order_));
  }
  const std::int64_t i = e - low_;
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

std::vector<std::pair<std::int64_t, Rational>> LaurentSeries::terms() const {
  std::vector<std::pair<std::int64_t, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<std::int64_t>(i), coeffs_[i]);
  }
  return out;
}

LaurentSeries LaurentSeries::truncated(std::int64_t order) const {
  if (order >= order_) return *this;
  return LaurentSeries(low_, coeffs_, order);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.order_ == b.order_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// SeriesAccumulator

Rational& SeriesAccumulator::slot(std::int64_t exp) {
  if (coeffs_.empty()) {
    low_ = exp;
    coeffs_.resize(1);
    return coeffs_[0];
  }
  if (exp < low_) {
    const auto grow = static_cast<std::size_t>(low_ - exp);
    coeffs_.insert(coeffs_.begin(), grow, Rational(0));
    low_ = exp;
  }
  const auto i = static_cast<std::size_t>(exp - low_);
  if (i >= coeffs_.size()) coeffs_.resize(i + 1);
  return coeffs_[i];
}

void SeriesAccumulator::add(std::int64_t exp, const Rational& c) {
  if (exp > order_ || c == 0) return;
  slot(exp) += c;
}

void SeriesAccumulator::add(std::int64_t exp, long c) {
  if (exp > order_ || c == 0) return;
  slot(exp) += c;
}

void SeriesAccumulator::add(const LaurentSeries& s) {
  if (s.order() < order_) {
    throw std::logic_error("accumulated series is only certified to order " + std::to_string(s.order()) +
                           ", accumulator needs " + std::to_string(order_));
  }
  const auto& d = s.dense();
  for (std::size_t i = 0; i < d.size(); ++i) add(s.dense_low() + static_cast<std::int64_t>(i), d[i]);
}

LaurentSeries SeriesAccumulator::finish() && {
  return LaurentSeries::from_dense(low_, std::move(coeffs_), order_);
}

// ---------------------------------------------------------------------------
// Arithmetic

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
  const std::int64_t order = std::min(a.order(), b.order());
  if (a.is_zero()) return b.truncated(order);
  if (b.is_zero()) return a.truncated(order);
  const std::int64_t low = std::min(a.dense_low(), b.dense_low());
  const std::int64_t high = std::min(order, std::max(a.top_exponent(), b.top_exponent()));
  if (high < low) return LaurentSeries::zero(order);
  std::vector<Rational> out(static_cast<std::size_t>(high - low + 1));
  for (const auto* s : {&a, &b}) {
    const auto& d = s->dense();
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::int64_t e = s->dense_low() + static_cast<std::int64_t>(i);
      if (e > high) break;
      out[static_cast<std::size_t>(e - low)] += d[i];
    }
  }
  return LaurentSeries::from_dense(low, std::move(out), order);
}

LaurentSeries negate(const LaurentSeries& a) { return scale(a, Rational(-1)); }

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) { return add(a, negate(b)); }

LaurentSeries scale(const LaurentSeries& a, const Rational& c) {
  if (c == 0) return LaurentSeries();
  std::vector<Rational> out = a.dense();
  for (auto& v : out) v *= c;
  return LaurentSeries::from_dense(a.dense_low(), std::move(out), a.order());
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  const std::int64_t order =
      std::min(order_add(a.order(), b.valuation_bound()), order_add(b.order(), a.valuation_bound()));
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(order);
  const std::int64_t low = a.dense_low() + b.dense_low();
  const std::int64_t high = std::min(order, a.top_exponent() + b.top_exponent());
  if (high < low) return LaurentSeries::zero(order);
  std::vector<Rational> out(static_cast<std::size_t>(high - low + 1));
  const auto& da = a.dense();
  const auto& db = b.dense();
  const auto span = static_cast<std::size_t>(high - low);
  Rational t;
  for (std::size_t i = 0; i < da.size() && i <= span; ++i) {
    if (da[i] == 0) continue;
    const std::size_t jmax = std::min(db.size() - 1, span - i);
    for (std::size_t j = 0; j <= jmax; ++j) {
      if (db[j] == 0) continue;
      t = da[i] * db[j];
      out[i + j] += t;
    }
  }
  return LaurentSeries::from_dense(low, std::move(out), order);
}

LaurentSeries mul_monomial(const LaurentSeries& a, const Monomial& m) {
  std::vector<Rational> out = a.dense();
  for (auto& v : out) v *= m.coeff;
  return LaurentSeries::from_dense(a.dense_low() + m.exp, std::move(out), order_add(a.order(), m.exp));
}

LaurentSeries invert(const LaurentSeries& a) {
  if (a.is_zero()) throw std::domain_error("not invertible: zero series");
  const std::int64_t v = a.dense_low();
  const auto& d = a.dense();
  if (d.size() == 1) {
    const std::int64_t order = a.is_exact() ? LaurentSeries::kExact : a.order() - 2 * v;
    return LaurentSeries::monomial(Monomial{1 / d[0], -v}, order);
  }
  if (a.is_exact()) {
    throw std::domain_error("not invertible as an exact series: truncate the polynomial first");
  }
  // a = q^v (u0 + u1 q + ...), known to relative order m = order - v.
  const std::int64_t m = a.order() - v;
  std::vector<Rational> w(static_cast<std::size_t>(m + 1));
  const Rational inv0 = 1 / d[0];
  w[0] = inv0;
  Rational acc;
  for (std::int64_t k = 1; k <= m; ++k) {
    acc = 0;
    const std::int64_t imax = std::min<std::int64_t>(k, static_cast<std::int64_t>(d.size()) - 1);
    for (std::int64_t i = 1; i <= imax; ++i) {
      if (d[static_cast<std::size_t>(i)] == 0) continue;
      acc += d[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(k - i)];
    }
    w[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  return LaurentSeries::from_dense(-v, std::move(w), a.order() - 2 * v);
}

LaurentSeries power(const LaurentSeries& a, std::int64_t k) {
  if (k < 0) return power(invert(a), -k);
  LaurentSeries result = LaurentSeries::constant(Rational(1));
  LaurentSeries base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

LaurentSeries substitute(const LaurentSeries& a, const SignedPower& base) {
  const std::int64_t t = base.power();
  const std::int64_t order = a.is_exact() ? LaurentSeries::kExact : a.order() * t;
  if (a.is_zero()) return LaurentSeries::zero(order);
  const auto& d = a.dense();
  std::vector<Rational> out(static_cast<std::size_t>((static_cast<std::int64_t>(d.size()) - 1) * t + 1));
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    const std::int64_t e = a.dense_low() + static_cast<std::int64_t>(i);
    out[i * static_cast<std::size_t>(t)] = base.sign_of_power(e) > 0 ? d[i] : Rational(-d[i]);
  }
  return LaurentSeries::from_dense(a.dense_low() * t, std::move(out), order);
}

LaurentSeries multiply_binomial(const LaurentSeries& a, const Rational& d, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("multiply_binomial needs k >= 1");
  if (a.is_zero() || d == 0) return a;
  const std::int64_t low = a.dense_low();
  const std::int64_t high = std::min(a.order(), a.top_exponent() + k);
  std::vector<Rational> out(static_cast<std::size_t>(high - low + 1));
  const auto& src = a.dense();
  std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(std::min(src.size(), out.size())), out.begin());
  for (std::size_t i = 0; i < src.size() && i + static_cast<std::size_t>(k) < out.size(); ++i) {
    if (src[i] == 0) continue;
    out[i + static_cast<std::size_t>(k)] -= d * src[i];
  }
  return LaurentSeries::from_dense(low, std::move(out), a.order());
}

LaurentSeries divide_binomial(const LaurentSeries& a, const Rational& d, std::int64_t k) {
  if (k == 0) {
    if (d == 1) throw std::domain_error("not invertible: division by 1 - 1");
    return scale(a, 1 / (1 - d));
  }
  if (d == 0) return a;
  if (k < 0) {
    const Rational dinv = 1 / d;
    return divide_binomial(mul_monomial(a, Monomial{-dinv, -k}), dinv, -k);
  }
  if (a.is_zero()) return a;
  if (a.is_exact()) throw std::domain_error("division by a binomial needs a finite truncation order");
  const std::int64_t low = a.dense_low();
  std::vector<Rational> out(static_cast<std::size_t>(a.order() - low + 1));
  const auto& src = a.dense();
  std::copy(src.begin(), src.end(), out.begin());
  const auto step = static_cast<std::size_t>(k);
  Rational t;
  for (std::size_t i = step; i < out.size(); ++i) {
    if (out[i - step] == 0) continue;
    t = d * out[i - step];
    out[i] += t;
  }
  return LaurentSeries::from_dense(low, std::move(out), a.order());
}

LaurentSeries signed_range_sum(std::int64_t lo, std::int64_t hi,
                               const std::function<LaurentSeries(std::int64_t)>& term) {
  LaurentSeries total;
  if (lo <= hi) {
    for (std::int64_t r = lo; r <= hi; ++r) total = add(total, term(r));
    return total;
  }
  for (std::int64_t r = hi + 1; r <= lo - 1; ++r) total = add(total, term(r));
  return negate(total);
}

std::optional<std::int64_t> first_mismatch(const LaurentSeries& a, const LaurentSeries& b, std::int64_t lo,
                                           std::int64_t hi) {
  const auto ta = a.terms();
  const auto tb = b.terms();
  // Merge the two sparse term lists; the first exponent where they disagree wins.
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    std::int64_t e;
    bool differ;
    if (j == tb.size() || (i < ta.size() && ta[i].first < tb[j].first)) {
      e = ta[i++].first;
      differ = true;
    } else if (i == ta.size() || tb[j].first < ta[i].first) {
      e = tb[j++].first;
      differ = true;
    } else {
      e = ta[i].first;
      differ = ta[i].second != tb[j].second;
      ++i;
      ++j;
    }
    if (e > hi) break;
    if (differ && e >= lo) return e;
  }
  return std::nullopt;
}

bool agree(const LaurentSeries& a, const LaurentSeries& b) {
  const std::int64_t hi = std::min(a.order(), b.order());
  return !first_mismatch(a, b, std::numeric_limits<std::int64_t>::min(), hi).has_value();
}

std::string to_text(const LaurentSeries& a) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || e == 0) out << mag.get_str();
    if (e != 0) {
      if (!unit) out << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  if (!a.is_exact()) {
    if (first) out << "0";
    out << (first ? " + " : " + ") << "O(q^" << a.order() + 1 << ")";
  } else if (first) {
    out << "0";
  }
  return out.str();
}

}  // namespace qhecke
