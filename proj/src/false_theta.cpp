#include <stdexcept>

#include "detail/quadratic.hpp"
#include "qhecke/hecke.hpp"

namespace qhecke {

void FalseThetaSpec::validate() const {
  if (quad2 <= 0) throw std::invalid_argument("false theta needs A > 0");
  if ((quad2 - linear2) % 2 != 0) throw std::invalid_argument("false theta needs A = B (mod 2)");
  if (filter) {
    if (filter->modulus < 1 || static_cast<std::int64_t>(filter->signs.size()) != filter->modulus) {
      throw std::invalid_argument("residue filter needs one sign per residue");
    }
  }
}

LaurentSeries false_theta(const FalseThetaSpec& spec, std::int64_t order, int widen) {
  spec.validate();
  SeriesAccumulator acc(order);
  const std::int64_t nlo = spec.support == Support::nonneg ? 0 : -detail::kUnbounded;
  auto window = detail::parabola_interval(spec.quad2, spec.linear2, 2 * spec.constant, 2 * order, nlo);
  if (!window) return std::move(acc).finish();
  std::int64_t lo = window->first, hi = window->second;
  if (widen > 1) {
    const std::int64_t width = hi - lo + 1;
    hi += width * (widen - 1);
    lo = std::max(nlo, lo - width * (widen - 1));
  }
  for (std::int64_t n = lo; n <= hi; ++n) {
    long sign = 1;
    if (spec.sign == SignMode::alternating && (n & 1)) sign = -sign;
    if (spec.support == Support::sg_bilateral) sign *= sg(n);
    if (spec.filter) {
      const std::int64_t m = spec.filter->modulus;
      sign *= spec.filter->signs[static_cast<std::size_t>(((n % m) + m) % m)];
      if (sign == 0) continue;
    }
    acc.add((spec.quad2 * n * n + spec.linear2 * n) / 2 + spec.constant, sign);
  }
  return std::move(acc).finish();
}

FalseThetaSpec legendre3_theta_spec() {
  FalseThetaSpec spec;
  spec.quad2 = 2;
  spec.linear2 = 0;
  spec.constant = 0;
  spec.sign = SignMode::plus;
  spec.support = Support::nonneg;
  spec.filter = ResidueFilter{3, {0, 1, -1}};
  return spec;
}

}  // namespace qhecke
