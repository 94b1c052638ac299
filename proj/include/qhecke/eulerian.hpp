#pragma once

#include <cstdint>

#include "qhecke/series.hpp"

namespace qhecke {

/// (arg; base)_length = prod_{i=0}^{length-1} (1 - base^i arg)
struct PochhammerSpec {
  Monomial arg;
  SignedPower base;
  std::int64_t length = 0;
};

/// The finite product as an exact Laurent polynomial.
LaurentSeries pochhammer(const PochhammerSpec& spec);

// Every Eulerian builder below stops once the lower bound on the valuation of
// the n-th summand (its q-power; the Pochhammer quotient is unit-leading)
// exceeds the order, and checks that bound is nondecreasing in n. `widen` > 1
// keeps summing that many times further, which must not change the result.

/// sum_{n>=0} (-1)^n q^{n^2} (q;q^2)_n / (-q;q)_{2n}, a sixth order mock theta function.
LaurentSeries phi6(std::int64_t order, int widen = 1);

/// sigma(q) = sum_{n>=0} q^{n(n+1)/2} / (-q;q)_n
LaurentSeries sigma_eulerian(std::int64_t order, int widen = 1);

/// Where the sign (-1)^{n+j} of the sigma double sum is applied.
enum class SigmaSign {
  inner_sum,   // (-1)^j inside sum_{j=-n}^{n}, (-1)^n outside
  outer_only,  // (-1)^n only
};
/// sum_n (-1)^{n(+j)} q^{n(3n+1)/2} (1 - q^{2n+1}) sum_{j=-n}^{n} q^{-j^2}
LaurentSeries sigma_double(std::int64_t order, SigmaSign reading, int widen = 1);

enum class SigmaGForm { g151, g133 };
/// g_{1,5,1}(-q,-q,q) - q^2 g_{1,5,1}(-q^4,-q^4,q)  or
/// g_{1,3,3}(-q,q^2,q) - q g_{1,3,3}(-q^3,q^4,q)
LaurentSeries sigma_g(std::int64_t order, SigmaGForm form);

/// V0(q) = -1 + 2 sum_{n>=0} q^{n^2} (-q;q^2)_n / (q;q^2)_n, an eighth order mock theta function.
LaurentSeries V0(std::int64_t order, int widen = 1);

enum class DeltaVariant {
  double_sum,           // sum q^{n(2n+1)} (1 + q^{2n+1}) sum_{j=-n}^{n} q^{-j^2}
  g_form,               // g_{1,2,2}(-q^2,-q^3,q^2) + q g_{1,2,2}(-q^4,-q^5,q^2)
  eulerian_at_minus_q,  // sum (-1)^n q^{n(n+1)/2} (q;q)_n / (-q;q)_n
};
LaurentSeries delta_gen(std::int64_t order, DeltaVariant variant, int widen = 1);

/// Left-hand sides of the false theta identities aw(...).
enum class AwSeries {
  e1_1a,  // sum (-1)^n q^{n(n+1)} (q;q^2)_n / (-q;q)_{2n+1}
  e1_1c,  // sum (q;q^2)_n q^n / (-q;q)_{2n+1}
  e1_1d,  // sum (q;-q)_{2n} q^n / (-q;q)_{2n+1}
  e1_5,   // sum q^n / (-q;q^2)_{n+1}
  thm13,  // sum_{n,j>=0} q^{j(2j+1)+n} (q^2;q^2)_{n+j} / ((-q;q)_{2n+2j+1} (q^2;q^2)_j (q^2;q^2)_n)
  e1_7,   // sum (-q^4;q^4)_{n-1} q^n / ((-q^2;q^2)_{n-1} (-q;q^2)_{n+1})
};
LaurentSeries aw_lhs(AwSeries which, std::int64_t order, int widen = 1);

}  // namespace qhecke
