#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qhecke/series.hpp"

namespace qhecke {

/// Exponent a C(r,2) + b r s + c C(s,2) of a Hecke-Rogers double sum.
struct QuadraticForm {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 1;

  /// a, c > 0 and b > -sqrt(ac), i.e. b >= 0 or b^2 < ac for integers.
  bool is_admissible() const { return a > 0 && c > 0 && (b >= 0 || b * b < a * c); }
  /// Throws std::invalid_argument("indefinite beyond convergence condition").
  void validate() const;
  std::int64_t value(std::int64_t r, std::int64_t s) const {
    return a * (r * (r - 1) / 2) + b * r * s + c * (s * (s - 1) / 2);
  }
};

/// Arguments of f_{a,b,c}(x, y, Q) and g_{a,b,c}(x, y, Q): x, y are monomials
/// in q and Q = base = +-q^t.
struct HeckeSpec {
  QuadraticForm form;
  Monomial x;
  Monomial y;
  SignedPower base;

  /// Exponent in q of the (r, s) term.
  std::int64_t exponent(std::int64_t r, std::int64_t s) const {
    return base.power() * form.value(r, s) + r * x.exp + s * y.exp;
  }
  /// (-1)^{r+s} x^r y^s times the sign of base^{form(r,s)}.
  Rational coefficient(std::int64_t r, std::int64_t s) const;
};

struct LatticePoint {
  std::int64_t r;
  std::int64_t s;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// All (r, s) with sg(r) = sg(s) and term exponent <= order, sorted.
/// `widen` > 1 rescans a box `widen` times larger than the pruned windows
/// (still filtering by exponent) for stability checks.
std::vector<LatticePoint> enumerate_support(const HeckeSpec& spec, std::int64_t order, int widen = 1);

/// (sum_{r,s>=0} - sum_{r,s<0}) (-1)^{r+s} x^r y^s Q^{a C(r,2) + b r s + c C(s,2)}
LaurentSeries hecke_f(const HeckeSpec& spec, std::int64_t order, int widen = 1);
/// Same with + between the two quadrant sums.
LaurentSeries hecke_g(const HeckeSpec& spec, std::int64_t order, int widen = 1);

/// -(Q^{a+b+c}/(xy)) f(Q^{2a+b}/x, Q^{2c+b}/y, Q)
LaurentSeries f_flip_rhs(const HeckeSpec& spec, std::int64_t order);
/// +(Q^{a+b+c}/(xy)) g(Q^{2a+b}/x, Q^{2c+b}/y, Q)
LaurentSeries g_flip_rhs(const HeckeSpec& spec, std::int64_t order);
/// The argument map of the flip: (x, y) -> (Q^{2a+b}/x, Q^{2c+b}/y).
HeckeSpec flipped(const HeckeSpec& spec);

/// Right-hand side of the (l, k) shift of f: shifted double sum plus the
/// theta corrections j(Q^{mb} y; Q^c), j(Q^{mb} x; Q^a). Ranges 0..l-1 and
/// 0..k-1 follow signed_range_sum for negative l, k.
LaurentSeries f_shift_rhs(const HeckeSpec& spec, std::int64_t l, std::int64_t k, std::int64_t order);
/// Right-hand side of the (l, k) shift of g: shifted double sum, the two
/// sg-weighted bilateral corrections, and -2 times the finite double sum.
LaurentSeries g_shift_rhs(const HeckeSpec& spec, std::int64_t l, std::int64_t k, std::int64_t order);
/// The shifted arguments (Q^{al+bk} x, Q^{bl+ck} y).
HeckeSpec shifted(const HeckeSpec& spec, std::int64_t l, std::int64_t k);

/// sum_{n in Z} sg(n) weight^n base^{quad C(n,2) + linear n}, sg(n) = 1 for
/// n >= 0 and -1 for n < 0.
struct SgThetaSpec {
  std::int64_t quad = 1;
  std::int64_t linear = 0;
  Monomial weight;
  SignedPower base;
};
LaurentSeries sg_theta(const SgThetaSpec& spec, std::int64_t order, int widen = 1);

inline int sg(std::int64_t n) { return n >= 0 ? 1 : -1; }

// ---------------------------------------------------------------------------
// False theta functions

enum class SignMode { plus, alternating };
enum class Support { nonneg, sg_bilateral };

/// Character twist: residue n mod modulus contributes signs[residue] (0 drops it).
struct ResidueFilter {
  std::int64_t modulus = 1;
  std::vector<int> signs;
};

/// sum over n of [sign] [filter] q^{(A n^2 + B n)/2 + C}, over n >= 0 or over
/// all n weighted by sg(n).
struct FalseThetaSpec {
  std::int64_t quad2 = 1;    // A
  std::int64_t linear2 = 1;  // B
  std::int64_t constant = 0; // C
  SignMode sign = SignMode::alternating;
  Support support = Support::nonneg;
  std::optional<ResidueFilter> filter;

  /// Throws std::invalid_argument unless A > 0 and A = B (mod 2).
  void validate() const;
};

LaurentSeries false_theta(const FalseThetaSpec& spec, std::int64_t order, int widen = 1);

/// sum_{n>=1} (n/3) q^{n^2}
FalseThetaSpec legendre3_theta_spec();

}  // namespace qhecke
