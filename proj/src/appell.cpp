#include "qhecke/appell.hpp"

#include <algorithm>

#include "detail/quadratic.hpp"
#include "qhecke/theta.hpp"

namespace qhecke {

namespace {

// sum_r (-1)^r Q^{C(r,2)} z^r / (1 - d_r) to the given order, d_r = Q^{r-1} x z.
LaurentSeries lerch_sum(const AppellSpec& spec, std::int64_t order, int widen) {
  const std::int64_t p = spec.base_power;
  const Monomial& z = spec.z;
  SeriesAccumulator acc(order);

  // The numerator monomial has exponent p C(r,2) + r z.exp and the geometric
  // factor never lowers the valuation below that (it adds max(0, -d_r.exp)),
  // so r outside this parabola window cannot reach the order.
  auto window = detail::parabola_interval(p, 2 * z.exp - p, 0, 2 * order);
  if (!window) return std::move(acc).finish();
  std::int64_t lo = window->first, hi = window->second;
  if (widen > 1) {
    const std::int64_t width = hi - lo + 1;
    lo -= width * (widen - 1);
    hi += width * (widen - 1);
  }

  const Monomial xz = spec.x * z;
  for (std::int64_t r = lo; r <= hi; ++r) {
    const std::int64_t tri = r * (r - 1) / 2;
    const Monomial numer{((r & 1) ? Rational(-1) : Rational(1)) * pow(z.coeff, r), p * tri + r * z.exp};
    const Monomial d{xz.coeff, p * (r - 1) + xz.exp};
    const std::int64_t valuation = numer.exp + std::max<std::int64_t>(0, -d.exp);
    if (valuation > order) continue;
    if (d.exp == 0) {
      if (d.coeff == 1) {
        throw AppellPoleError(r, "pole in Appell-Lerch term r = " + std::to_string(r) +
                                     ": 1 - q^{p(r-1)} x z vanishes");
      }
      acc.add(numer.exp, numer.coeff / (1 - d.coeff));
      continue;
    }
    // 1/(1-d) = sum_k d^k for d.exp > 0, and -d^{-1} sum_k d^{-k} otherwise.
    Monomial lead = numer;
    Monomial ratio = d;
    if (d.exp < 0) {
      lead = -(numer / d);
      ratio = d.inverse();
    }
    Rational c = lead.coeff;
    for (std::int64_t e = lead.exp; e <= order; e += ratio.exp) {
      acc.add(e, c);
      c *= ratio.coeff;
    }
  }
  return std::move(acc).finish();
}

}  // namespace

LaurentSeries appell_m(const AppellSpec& spec, std::int64_t order, int widen) {
  const std::int64_t p = spec.base_power;
  if (p < 1) throw std::invalid_argument("Appell-Lerch base power must be >= 1");
  if (spec.z.coeff == 1 && spec.z.exp % p == 0) {
    throw std::invalid_argument("Appell-Lerch z = " + to_string(spec.z) + " is an integral power of the base");
  }
  const ThetaSpec jspec = ThetaSpec::make(spec.z, p);

  // j(z; Q) is a nonzero theta product, so its valuation is found by raising
  // the order until a coefficient appears.
  std::int64_t jorder = order;
  LaurentSeries theta = theta_product(jspec, jorder);
  while (theta.is_zero()) {
    jorder = 2 * std::max<std::int64_t>(jorder, 1) + 8;
    theta = theta_product(jspec, jorder);
  }
  const std::int64_t vj = *theta.valuation();

  // result = S / j: S is needed to order + v(j), and 1/j (order jorder - 2 v(j))
  // to order - v(S).
  const LaurentSeries sum = lerch_sum(spec, order + vj, widen);
  if (sum.is_zero()) return LaurentSeries::zero(order);
  const std::int64_t need_j = order - *sum.valuation() + 2 * vj;
  if (need_j > jorder) theta = theta_product(jspec, need_j);
  return mul(sum, invert(theta)).truncated(order);
}

}  // namespace qhecke
