#include "qhecke/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail/quadratic.hpp"
#include "qhecke/theta.hpp"

namespace qhecke {

namespace {

using detail::kUnbounded;

std::int64_t tri(std::int64_t n) { return n * (n - 1) / 2; }

struct Quadrant {
  std::int64_t lo;
  std::int64_t hi;
  bool negative;
};

constexpr Quadrant kQuadrants[] = {{0, kUnbounded, false}, {-kUnbounded, -1, true}};

// Collects the pruned support of one quadrant. Twice the term exponent is
//   t a r^2 + 2 t b r s + t c s^2 + A1 r + B1 s,  A1 = 2 x.exp - t a,  B1 = 2 y.exp - t c.
void quadrant_support(const HeckeSpec& spec, std::int64_t order, const Quadrant& quad,
                      std::vector<LatticePoint>& out) {
  const std::int64_t t = spec.base.power();
  const auto [a, b, c] = spec.form;
  const std::int64_t a1 = 2 * spec.x.exp - t * a;
  const std::int64_t b1 = 2 * spec.y.exp - t * c;
  const std::int64_t bound = 2 * order;

  std::optional<std::pair<std::int64_t, std::int64_t>> rwin;
  if (b >= 0) {
    // r s >= 0 inside a quadrant, so dropping the cross term leaves a lower
    // bound that is an upward parabola in r alone.
    const auto ymin = static_cast<std::int64_t>(detail::parabola_min(t * c, b1, 0, quad.lo, quad.hi));
    rwin = detail::parabola_interval(t * a, a1, ymin, bound, quad.lo, quad.hi);
  } else {
    // Positive definite: minimise over real s and clear denominators (x 4tc).
    const std::int64_t lead = 4 * t * t * (a * c - b * b);
    const std::int64_t lin = 4 * t * (c * a1 - b * b1);
    rwin = detail::parabola_interval(lead, lin, -b1 * b1, 4 * t * c * bound, quad.lo, quad.hi);
  }
  if (!rwin) return;
  for (std::int64_t r = rwin->first; r <= rwin->second; ++r) {
    const auto swin = detail::parabola_interval(t * c, 2 * t * b * r + b1, t * a * r * r + a1 * r, bound,
                                                quad.lo, quad.hi);
    if (!swin) continue;
    for (std::int64_t s = swin->first; s <= swin->second; ++s) out.push_back({r, s});
  }
}

LaurentSeries hecke_sum(const HeckeSpec& spec, std::int64_t order, int widen, bool plus) {
  spec.form.validate();
  SeriesAccumulator acc(order);
  const bool unit = spec.x.has_unit_coeff() && spec.y.has_unit_coeff();
  for (const auto& [r, s] : enumerate_support(spec, order, widen)) {
    const std::int64_t e = spec.exponent(r, s);
    const bool flip = !plus && r < 0;
    if (unit) {
      int sign = ((r + s) & 1) ? -1 : 1;
      if (spec.x.coeff < 0 && (r & 1)) sign = -sign;
      if (spec.y.coeff < 0 && (s & 1)) sign = -sign;
      sign *= spec.base.sign_of_power(spec.form.value(r, s));
      acc.add(e, static_cast<long>(flip ? -sign : sign));
    } else {
      const Rational coeff = spec.coefficient(r, s);
      acc.add(e, flip ? Rational(-coeff) : coeff);
    }
  }
  return std::move(acc).finish();
}

// base^k as a monomial times m.
Monomial times_base(const HeckeSpec& spec, std::int64_t k, const Monomial& m) { return spec.base.pow(k) * m; }

// prefactor * builder(order - prefactor.exp)
template <typename Builder>
LaurentSeries scaled(const Monomial& prefactor, std::int64_t order, Builder&& build) {
  return mul_monomial(build(order - prefactor.exp), prefactor);
}

}  // namespace

void QuadraticForm::validate() const {
  if (!is_admissible()) {
    throw std::invalid_argument("indefinite beyond convergence condition: (a,b,c) = (" + std::to_string(a) +
                                "," + std::to_string(b) + "," + std::to_string(c) + ")");
  }
}

Rational HeckeSpec::coefficient(std::int64_t r, std::int64_t s) const {
  Rational v = pow(x.coeff, r) * pow(y.coeff, s);
  if ((r + s) & 1) v = -v;
  if (base.sign_of_power(form.value(r, s)) < 0) v = -v;
  return v;
}

std::vector<LatticePoint> enumerate_support(const HeckeSpec& spec, std::int64_t order, int widen) {
  spec.form.validate();
  std::vector<LatticePoint> points;
  for (const auto& quad : kQuadrants) quadrant_support(spec, order, quad, points);

  if (widen > 1) {
    // Rescan a box around the pruned support, `widen` times larger.
    std::int64_t rlo = -1, rhi = 1, slo = -1, shi = 1;
    for (const auto& p : points) {
      rlo = std::min(rlo, p.r);
      rhi = std::max(rhi, p.r);
      slo = std::min(slo, p.s);
      shi = std::max(shi, p.s);
    }
    const std::int64_t rpad = (rhi - rlo + 1) * (widen - 1);
    const std::int64_t spad = (shi - slo + 1) * (widen - 1);
    points.clear();
    for (std::int64_t r = rlo - rpad; r <= rhi + rpad; ++r) {
      for (std::int64_t s = slo - spad; s <= shi + spad; ++s) {
        if (sg(r) == sg(s) && spec.exponent(r, s) <= order) points.push_back({r, s});
      }
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

LaurentSeries hecke_f(const HeckeSpec& spec, std::int64_t order, int widen) {
  return hecke_sum(spec, order, widen, false);
}

LaurentSeries hecke_g(const HeckeSpec& spec, std::int64_t order, int widen) {
  return hecke_sum(spec, order, widen, true);
}

HeckeSpec flipped(const HeckeSpec& spec) {
  const auto [a, b, c] = spec.form;
  HeckeSpec out = spec;
  out.x = spec.base.pow(2 * a + b) / spec.x;
  out.y = spec.base.pow(2 * c + b) / spec.y;
  return out;
}

namespace {

Monomial flip_prefactor(const HeckeSpec& spec) {
  const auto [a, b, c] = spec.form;
  return spec.base.pow(a + b + c) / (spec.x * spec.y);
}

}  // namespace

LaurentSeries f_flip_rhs(const HeckeSpec& spec, std::int64_t order) {
  const HeckeSpec image = flipped(spec);
  return scaled(-flip_prefactor(spec), order, [&](std::int64_t n) { return hecke_f(image, n); });
}

LaurentSeries g_flip_rhs(const HeckeSpec& spec, std::int64_t order) {
  const HeckeSpec image = flipped(spec);
  return scaled(flip_prefactor(spec), order, [&](std::int64_t n) { return hecke_g(image, n); });
}

HeckeSpec shifted(const HeckeSpec& spec, std::int64_t l, std::int64_t k) {
  const auto [a, b, c] = spec.form;
  HeckeSpec out = spec;
  out.x = times_base(spec, a * l + b * k, spec.x);
  out.y = times_base(spec, b * l + c * k, spec.y);
  return out;
}

namespace {

// (-x)^l (-y)^k Q^{a C(l,2) + b l k + c C(k,2)}
Monomial shift_prefactor(const HeckeSpec& spec, std::int64_t l, std::int64_t k) {
  return (-spec.x).pow(l) * (-spec.y).pow(k) * spec.base.pow(spec.form.value(l, k));
}

}  // namespace

LaurentSeries f_shift_rhs(const HeckeSpec& spec, std::int64_t l, std::int64_t k, std::int64_t order) {
  const auto [a, b, c] = spec.form;
  const HeckeSpec image = shifted(spec, l, k);
  LaurentSeries total =
      scaled(shift_prefactor(spec, l, k), order, [&](std::int64_t n) { return hecke_f(image, n); });

  // sum_{m=0}^{l-1} (-x)^m Q^{a C(m,2)} j(Q^{mb} y; Q^c)
  total = add(total, signed_range_sum(0, l - 1, [&](std::int64_t m) {
                const Monomial pre = (-spec.x).pow(m) * spec.base.pow(a * tri(m));
                const auto theta = ThetaSpec::make(times_base(spec, m * b, spec.y), spec.base.raised(c));
                return scaled(pre, order, [&](std::int64_t n) { return theta_product(theta, n); });
              }));
  // sum_{m=0}^{k-1} (-y)^m Q^{c C(m,2)} j(Q^{mb} x; Q^a)
  total = add(total, signed_range_sum(0, k - 1, [&](std::int64_t m) {
                const Monomial pre = (-spec.y).pow(m) * spec.base.pow(c * tri(m));
                const auto theta = ThetaSpec::make(times_base(spec, m * b, spec.x), spec.base.raised(a));
                return scaled(pre, order, [&](std::int64_t n) { return theta_product(theta, n); });
              }));
  return total.truncated(order);
}

LaurentSeries g_shift_rhs(const HeckeSpec& spec, std::int64_t l, std::int64_t k, std::int64_t order) {
  const auto [a, b, c] = spec.form;
  const HeckeSpec image = shifted(spec, l, k);
  LaurentSeries total =
      scaled(shift_prefactor(spec, l, k), order, [&](std::int64_t n) { return hecke_g(image, n); });

  // sum_{r=0}^{l-1} (-x)^r Q^{a C(r,2)} sum_s sg(s) (-y)^s Q^{b r s + c C(s,2)}
  total = add(total, signed_range_sum(0, l - 1, [&](std::int64_t r) {
                const Monomial pre = (-spec.x).pow(r) * spec.base.pow(a * tri(r));
                const SgThetaSpec inner{c, b * r, -spec.y, spec.base};
                return scaled(pre, order, [&](std::int64_t n) { return sg_theta(inner, n); });
              }));
  // sum_{s=0}^{k-1} (-y)^s Q^{c C(s,2)} sum_r sg(r) (-x)^r Q^{b r s + a C(r,2)}
  total = add(total, signed_range_sum(0, k - 1, [&](std::int64_t s) {
                const Monomial pre = (-spec.y).pow(s) * spec.base.pow(c * tri(s));
                const SgThetaSpec inner{a, b * s, -spec.x, spec.base};
                return scaled(pre, order, [&](std::int64_t n) { return sg_theta(inner, n); });
              }));
  // -2 sum_{r=0}^{l-1} sum_{s=0}^{k-1} (-x)^r (-y)^s Q^{a C(r,2) + b r s + c C(s,2)}
  const LaurentSeries corner = signed_range_sum(0, l - 1, [&](std::int64_t r) {
    return signed_range_sum(0, k - 1, [&](std::int64_t s) {
      return LaurentSeries::monomial((-spec.x).pow(r) * (-spec.y).pow(s) * spec.base.pow(spec.form.value(r, s)));
    });
  });
  total = sub(total, scale(corner, Rational(2)));
  return total.truncated(order);
}

LaurentSeries sg_theta(const SgThetaSpec& spec, std::int64_t order, int widen) {
  if (spec.quad <= 0) throw std::invalid_argument("sg_theta needs a positive quadratic coefficient");
  const std::int64_t t = spec.base.power();
  SeriesAccumulator acc(order);
  // 2 * exponent = t quad n^2 + (2 t linear - t quad + 2 w) n
  auto window = detail::parabola_interval(t * spec.quad, 2 * t * spec.linear - t * spec.quad + 2 * spec.weight.exp,
                                          0, 2 * order);
  if (!window) return std::move(acc).finish();
  std::int64_t lo = window->first, hi = window->second;
  if (widen > 1) {
    const std::int64_t width = hi - lo + 1;
    lo -= width * (widen - 1);
    hi += width * (widen - 1);
  }
  for (std::int64_t n = lo; n <= hi; ++n) {
    const std::int64_t base_exp = spec.quad * tri(n) + spec.linear * n;
    Rational coeff = pow(spec.weight.coeff, n) * sg(n) * spec.base.sign_of_power(base_exp);
    acc.add(t * base_exp + n * spec.weight.exp, coeff);
  }
  return std::move(acc).finish();
}

}  // namespace qhecke
