#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "qhecke/eulerian.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/theta.hpp"
#include "random_specs.hpp"

using namespace qhecke;
using testing_support::Rng;

namespace {

Monomial qp(std::int64_t e, int sign = 1) { return Monomial::q_power(e, sign); }

HeckeSpec spec(std::int64_t a, std::int64_t b, std::int64_t c, Monomial x, Monomial y, SignedPower base = {}) {
  return HeckeSpec{{a, b, c}, x, y, base};
}

LaurentSeries geometric(std::int64_t n) {
  std::vector<Rational> ones(static_cast<std::size_t>(n + 1), Rational(1));
  return LaurentSeries::from_dense(0, ones, n);
}

std::vector<LatticePoint> brute_support(const HeckeSpec& s, std::int64_t order, std::int64_t box) {
  std::vector<LatticePoint> out;
  for (std::int64_t r = -box; r <= box; ++r) {
    for (std::int64_t t = -box; t <= box; ++t) {
      if (sg(r) == sg(t) && s.exponent(r, t) <= order) out.push_back({r, t});
    }
  }
  return out;
}

bool same_spec(const HeckeSpec& a, const HeckeSpec& b) {
  return a.form.a == b.form.a && a.form.b == b.form.b && a.form.c == b.form.c && a.x == b.x && a.y == b.y &&
         a.base == b.base;
}

}  // namespace

TEST_CASE("form admissibility") {
  CHECK(QuadraticForm{1, 3, 1}.is_admissible());
  CHECK(QuadraticForm{2, -1, 1}.is_admissible());
  CHECK_FALSE(QuadraticForm{1, -1, 1}.is_admissible());
  CHECK_FALSE(QuadraticForm{0, 1, 1}.is_admissible());
  CHECK_THROWS_WITH_AS(hecke_f(spec(1, -2, 1, qp(1), qp(1)), 10), doctest::Contains("indefinite beyond convergence condition"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(hecke_g(spec(2, -3, 4, qp(1), qp(1)), 10), doctest::Contains("indefinite beyond convergence condition"),
                       std::invalid_argument);
  CHECK_THROWS_AS(f_flip_rhs(spec(1, -1, 1, qp(1), qp(1)), 10), std::invalid_argument);
}

TEST_CASE("closed forms") {
  const std::int64_t n = 40;
  const LaurentSeries j1 = Jm(1, n);
  CHECK(agree(hecke_f(spec(1, 2, 1, qp(1), qp(1)), n), mul(j1, j1)));
  CHECK(agree(hecke_f(spec(3, 3, 1, qp(3), qp(1)), n), mul(J(1, 4, n), J(6, 12, n))));
  CHECK(oracle::same(hecke_g(spec(2, 2, 2, qp(2, -1), qp(3, -1)), 30), oracle::from_series(geometric(30), 30), 30));
  CHECK(oracle::same(hecke_g(spec(1, 2, 4, qp(1, -1), qp(4, -1)), 30), oracle::from_series(geometric(30), 30), 30));
}

TEST_CASE("constant term") {
  // 1 whenever the origin is the only lattice point reaching exponent 0
  Rng rng(5);
  int lone = 0;
  for (int i = 0; i < 60; ++i) {
    const HeckeSpec s = testing_support::random_spec(rng);
    if (enumerate_support(s, 0) != std::vector<LatticePoint>{{0, 0}}) continue;
    ++lone;
    CHECK(hecke_f(s, 10).coefficient(0) == 1);
    CHECK(hecke_g(s, 10).coefficient(0) == 1);
  }
  CHECK(lone > 20);
  // positive exponents alone are not enough: (-1,-1) also lands on q^0 here
  const HeckeSpec s = spec(1, 0, 1, qp(1), qp(1));
  CHECK(enumerate_support(s, 0) == std::vector<LatticePoint>{{-1, -1}, {0, 0}});
  CHECK(hecke_f(s, 10).coefficient(0) == 0);
  CHECK(hecke_g(s, 10).coefficient(0) == 2);
}

TEST_CASE("enumerate_support") {
  const std::vector<LatticePoint> origin{{0, 0}};
  for (const QuadraticForm f : {QuadraticForm{1, 2, 1}, QuadraticForm{1, 3, 1}, QuadraticForm{2, -1, 3}}) {
    CHECK(enumerate_support(HeckeSpec{f, qp(1), qp(1), {}}, 0) == origin);
  }
  const HeckeSpec s1 = spec(1, 2, 1, qp(1), qp(1));
  CHECK(enumerate_support(s1, 3) == brute_support(s1, 3, 10));
  const HeckeSpec s2 = spec(1, 3, 1, qp(1), qp(2));
  CHECK(enumerate_support(s2, 10) == brute_support(s2, 10, 40));
  // negative offsets from flip arguments
  const HeckeSpec s3 = spec(2, -1, 3, qp(-4), qp(-2, -1));
  CHECK(enumerate_support(s3, 25) == brute_support(s3, 25, 60));
}

TEST_CASE("pruned enumeration equals the rectangular oracle") {
  Rng rng(2024);
  for (int i = 0; i < 50; ++i) {
    const HeckeSpec s = testing_support::random_spec(rng);
    const std::int64_t n = testing_support::uniform(rng, 5, 30);
    CAPTURE(i);
    CHECK(enumerate_support(s, n) == brute_support(s, n, 60));
    CHECK(oracle::same(hecke_f(s, n), oracle::hecke_box(s, n, false), n));
    CHECK(oracle::same(hecke_g(s, n), oracle::hecke_box(s, n, true), n));
  }
}

TEST_CASE("widening enumeration windows changes nothing") {
  Rng rng(77);
  for (int i = 0; i < 30; ++i) {
    const HeckeSpec s = testing_support::random_spec(rng);
    CHECK(hecke_f(s, 40, 2) == hecke_f(s, 40));
    CHECK(hecke_g(s, 40, 2) == hecke_g(s, 40));
  }
}

TEST_CASE("flip examples") {
  const HeckeSpec s = spec(2, 2, 2, qp(2, -1), qp(3, -1));
  CHECK(agree(g_flip_rhs(s, 40), hecke_g(s, 40)));
  const HeckeSpec fl = flipped(s);
  CHECK(fl.x == qp(4, -1));
  CHECK(fl.y == qp(3, -1));
  const HeckeSpec t = spec(1, 2, 1, qp(1), qp(1));
  CHECK(agree(f_flip_rhs(t, 40), hecke_f(t, 40)));
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const HeckeSpec r = testing_support::random_spec(rng);
    CHECK(same_spec(flipped(flipped(r)), r));
  }
}

TEST_CASE("shift examples") {
  const HeckeSpec s = spec(1, 3, 1, qp(1), qp(2));
  CHECK(agree(g_shift_rhs(s, 0, 1, 40), hecke_g(s, 40)));
  const HeckeSpec t = spec(1, 2, 1, qp(1, -1), qp(1), SignedPower(1, 2));
  CHECK(agree(f_shift_rhs(t, 1, 1, 40), hecke_f(t, 40)));
  CHECK(f_shift_rhs(t, 0, 0, 40) == hecke_f(t, 40));
  CHECK(g_shift_rhs(s, 0, 0, 40) == hecke_g(s, 40));
  // the two negative shifts used in proofs
  const HeckeSpec u = spec(1, 2, 4, qp(1, -1), qp(4, -1));
  CHECK(agree(g_shift_rhs(u, -2, 2, 40), hecke_g(u, 40)));
  CHECK(agree(g_shift_rhs(u, 2, -3, 40), hecke_g(u, 40)));
  CHECK(same_spec(shifted(s, 1, 2), spec(1, 3, 1, qp(1 + 1 + 6), qp(2 + 3 + 2))));
}

TEST_CASE("flip and shift laws on random specs") {
  Rng rng(11);
  for (int i = 0; i < 25; ++i) {
    const HeckeSpec s = testing_support::random_spec(rng);
    const std::int64_t l = testing_support::uniform(rng, -3, 3);
    const std::int64_t k = testing_support::uniform(rng, -3, 3);
    CAPTURE(i);
    CHECK(agree(f_flip_rhs(s, 40), hecke_f(s, 40)));
    CHECK(agree(g_flip_rhs(s, 40), hecke_g(s, 40)));
    CHECK(agree(f_shift_rhs(s, l, k, 40), hecke_f(s, 40)));
    CHECK(agree(g_shift_rhs(s, l, k, 40), hecke_g(s, 40)));
    CHECK(f_flip_rhs(s, 40).order() >= 40);
    CHECK(g_shift_rhs(s, l, k, 40).order() >= 40);
  }
}

TEST_CASE("sg(r) = -sg(-1-r)") {
  for (std::int64_t r = -20; r <= 20; ++r) CHECK(sg(r) == -sg(-1 - r));
  CHECK(sg(0) == 1);
  CHECK(sg(-1) == -1);
}

TEST_CASE("sg_theta") {
  const std::int64_t n = 60;
  // sum sg(s) (-1)^s q^{C(s+1,2)} = 2 sum_{s>=0} (-1)^s q^{C(s+1,2)}
  const LaurentSeries bilateral = sg_theta({1, 1, qp(0, -1), {}}, n);
  oracle::Coeffs doubled;
  for (std::int64_t s = 0; s * (s + 1) / 2 <= n; ++s) doubled[s * (s + 1) / 2] += (s & 1) ? -2 : 2;
  CHECK(oracle::same(bilateral, doubled, n));
  CHECK(sg_theta({1, 1, qp(0, -1), {}}, n, 2) == bilateral);
  CHECK(sg_theta({3, 0, qp(2), {}}, 30).coefficient(0) == 1);
  // bilateral oracle with a negative base
  oracle::Coeffs expected;
  for (std::int64_t s = -100; s <= 100; ++s) {
    const std::int64_t e = 2 * (s * (s - 1) / 2) + 3 * s;
    if (e > n) continue;
    const int sign = sg(s) * ((e & 1) ? -1 : 1);
    expected[e] += sign;
  }
  CHECK(oracle::same(sg_theta({2, 3, qp(0), SignedPower(-1, 1)}, n), expected, n));
}

TEST_CASE("reversed range sum vanishes") {
  for (std::int64_t s = 1; s <= 10; ++s) {
    auto term = [s](std::int64_t r) {
      return LaurentSeries::monomial(Monomial::q_power(r * (r - 1 - 4 * s) / 2, (r & 1) ? -1 : 1));
    };
    CHECK(signed_range_sum(1, 4 * s, term).is_zero());
    oracle::Coeffs brute;
    for (std::int64_t r = 1; r <= 4 * s; ++r) brute[r * (r - 1 - 4 * s) / 2] += (r & 1) ? -1 : 1;
    oracle::drop_zeros(brute);
    CHECK(brute.empty());
  }
}

TEST_CASE("false_theta") {
  const LaurentSeries tri = false_theta({1, 1, 0, SignMode::alternating, Support::nonneg, std::nullopt}, 10);
  CHECK(oracle::same(tri, {{0, 1}, {1, -1}, {3, 1}, {6, -1}, {10, 1}}, 10));
  const LaurentSeries chi = false_theta(legendre3_theta_spec(), 16);
  CHECK(oracle::same(chi, {{1, 1}, {4, -1}, {16, 1}}, 16));
  // sum sg(n) (-1)^n q^{n(3n+1)/2}
  const std::int64_t n = 80;
  oracle::Coeffs expected;
  for (std::int64_t k = -60; k <= 60; ++k) {
    const std::int64_t e = k * (3 * k + 1) / 2;
    if (e <= n) expected[e] += sg(k) * ((k & 1) ? -1 : 1);
  }
  const FalseThetaSpec flip{3, 1, 0, SignMode::alternating, Support::sg_bilateral, std::nullopt};
  CHECK(oracle::same(false_theta(flip, n), expected, n));
  CHECK(false_theta(flip, n, 3) == false_theta(flip, n));
  CHECK_THROWS_AS(false_theta({2, 1, 0, SignMode::plus, Support::nonneg, std::nullopt}, 5), std::invalid_argument);
  CHECK_THROWS_AS(false_theta({0, 0, 0, SignMode::plus, Support::nonneg, std::nullopt}, 5), std::invalid_argument);
}
