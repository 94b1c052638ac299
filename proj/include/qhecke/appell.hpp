#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "qhecke/series.hpp"

namespace qhecke {

/// m(x, q^p, z) for monomial x and z.
struct AppellSpec {
  Monomial x;
  std::int64_t base_power = 1;
  Monomial z;
};

/// Raised when a denominator 1 - q^{p(r-1)} x z vanishes at an r that
/// contributes below the requested order.
class AppellPoleError : public std::domain_error {
 public:
  AppellPoleError(std::int64_t r, const std::string& what) : std::domain_error(what), r_(r) {}
  std::int64_t r() const { return r_; }

 private:
  std::int64_t r_;
};

/// The Appell-Lerch sum
///   m(x, Q, z) = 1/j(z; Q) * sum_r (-1)^r Q^{r(r-1)/2} z^r / (1 - Q^{r-1} x z),  Q = q^p.
/// `widen` > 1 scales the r-window about its centre; results must not change.
/// Throws std::invalid_argument when z is an integral power of Q, and
/// AppellPoleError for a vanishing denominator inside the window.
LaurentSeries appell_m(const AppellSpec& spec, std::int64_t order, int widen = 1);

}  // namespace qhecke
