#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cauchy/error.hpp"
#include "cauchy/power_series.hpp"
#include "oracles.hpp"

using namespace cauchy;

namespace {

void check_coeffs(const PowerSeries& s, const std::vector<cplx>& expected, double tol) {
  REQUIRE(s.order() + 1 >= expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    INFO("k = " << k);
    CHECK(std::abs(s[k] - expected[k]) <= tol);
  }
}

PowerSeries random_poly(std::mt19937_64& rng, std::size_t degree, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(degree + 1);
  for (auto& x : c) x = scale * cplx(u(rng), u(rng));
  return PowerSeries(c);
}

}  // namespace

TEST_CASE("ps_eval") {
  CHECK(ps_eval(PowerSeries({0.0, 1.0}), 0.5) == cplx(0.5));
  CHECK(ps_eval(PowerSeries({1.0, 2.0, 3.0}), 0.0) == cplx(1.0));
  CHECK(std::abs(ps_eval(PowerSeries({0.0, 1.0, 0.2}), 0.5) - 0.55) < 1e-15);
}

TEST_CASE("ps_derivative") {
  check_coeffs(ps_derivative(PowerSeries({1.0, 2.0, 3.0})), {2.0, 6.0}, 0.0);
  check_coeffs(ps_derivative(PowerSeries({0.0, 1.0})), {1.0}, 0.0);
  check_coeffs(ps_derivative(PowerSeries({0.0, 1.0, 0.2})), {1.0, 0.4}, 1e-16);
  CHECK(ps_derivative(PowerSeries({0.0, 1.0, 0.2})).order() == 1);

  try {
    ps_derivative(PowerSeries({5.0}));
    FAIL("expected DegreeTooLow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeTooLow);
  }
}

TEST_CASE("ps_mul, ps_div, ps_integrate, ps_exp") {
  const auto prod = ps_mul(PowerSeries({1.0, 1.0}), PowerSeries({1.0, -1.0}));
  CHECK(prod.order() == 1);
  check_coeffs(prod, {1.0, 0.0}, 0.0);

  // truncation to the minimum common order
  CHECK(ps_mul(PowerSeries({1.0, 2.0, 3.0, 4.0}), PowerSeries({1.0, 1.0})).order() == 1);

  check_coeffs(ps_exp(PowerSeries({0.0})), {1.0}, 0.0);

  const auto q = ps_div(PowerSeries({1.0, 0.4}), PowerSeries({1.0, 0.2}), 6);
  const auto ref = oracle::long_division({1.0, 0.4}, {1.0, 0.2}, 6);
  for (std::size_t k = 0; k <= 6; ++k) CHECK(std::abs(q[k] - ref[k]) < 1e-15);
  CHECK(std::abs(q[2] + 0.04) < 1e-15);

  check_coeffs(ps_integrate(PowerSeries({1.0, 2.0, 3.0})), {0.0, 1.0, 1.0, 1.0}, 0.0);

  try {
    ps_div(PowerSeries({1.0}), PowerSeries({0.0, 1.0}));
    FAIL("expected DivisionBySingularSeries");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionBySingularSeries);
  }
}

TEST_CASE("ps_log_branch") {
  check_coeffs(ps_log_branch(PowerSeries({1.0})), {0.0}, 0.0);
  check_coeffs(ps_log_branch(PowerSeries({std::exp(1.0)})), {1.0}, 1e-15);

  const auto l = ps_log_branch(PowerSeries({1.0, 0.4}), 12);
  const auto ref = oracle::log1p_series(0.4, 12);
  for (std::size_t k = 0; k <= 12; ++k) CHECK(std::abs(l[k] - ref[k]) < 1e-15);
  CHECK(std::abs(l[2] + 0.08) < 1e-15);

  // principal anchor for a negative constant term
  CHECK(std::abs(ps_log_branch(PowerSeries({-1.0}))[0] - cplx(0.0, std::acos(-1.0))) < 1e-15);

  try {
    ps_log_branch(PowerSeries({0.0, 1.0}));
    FAIL("expected LogOfVanishingSeries");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LogOfVanishingSeries);
  }
}

TEST_CASE("ps_sqrt_branch") {
  check_coeffs(ps_sqrt_branch(PowerSeries({1.0})), {1.0}, 0.0);
  check_coeffs(ps_sqrt_branch(PowerSeries({4.0})), {2.0}, 1e-15);

  const auto r = ps_sqrt_branch(PowerSeries({1.0, 0.4}), 10);
  const auto ref = oracle::binomial_series(0.5, 0.4, 10);
  for (std::size_t k = 0; k <= 10; ++k) CHECK(std::abs(r[k] - ref[k]) < 1e-15);
  check_coeffs(r, {1.0, 0.2, -0.02, 0.004}, 1e-15);

  try {
    ps_sqrt_branch(PowerSeries({0.0, 2.0}));
    FAIL("expected LogOfVanishingSeries");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LogOfVanishingSeries);
  }
}

TEST_CASE("ps_recenter") {
  const auto a = ps_recenter(PowerSeries({0.0, 1.0}), 0.3, 1);
  check_coeffs(a, {0.3, 1.0}, 1e-16);
  CHECK(a.center() == cplx(0.3));
  check_coeffs(ps_recenter(PowerSeries({0.0, 0.0, 1.0}), 1.0, 2), {1.0, 2.0, 1.0}, 0.0);
  check_coeffs(ps_recenter(PowerSeries({0.0, 1.0, 0.2}), -0.5, 2), {-0.45, 0.8, 0.2}, 1e-15);
}

TEST_CASE("coefficients below 1e-300 are flushed") {
  const PowerSeries s({1.0, cplx(1e-310, 2e-305), 1e-299});
  CHECK(s[1] == cplx{});
  CHECK(s[2] == cplx(1e-299));
}

TEST_CASE("property: product evaluates to the product of evaluations") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int trial = 0; trial < 50; ++trial) {
    // pad both factors so the truncated product is the exact polynomial product
    auto a = random_poly(rng, 4);
    auto b = random_poly(rng, 5);
    std::vector<cplx> ac(a.coeffs().begin(), a.coeffs().end());
    std::vector<cplx> bc(b.coeffs().begin(), b.coeffs().end());
    ac.resize(10);
    bc.resize(10);
    const PowerSeries pa(ac), pb(bc);
    const cplx z(u(rng), u(rng));
    CHECK(std::abs(ps_eval(ps_mul(pa, pb), z) - pa(z) * pb(z)) < 1e-10);
  }
}

TEST_CASE("property: sqrt squared reproduces the input") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t deg = 1 + trial % 8;
    auto s = random_poly(rng, deg, 0.1);
    std::vector<cplx> c(s.coeffs().begin(), s.coeffs().end());
    c[0] = cplx(1.0, 0.3);  // zero-free near the origin
    const PowerSeries p(c);
    const auto r = ps_sqrt_branch(p, deg);
    const auto sq = ps_mul(r, r);
    for (std::size_t k = 0; k <= deg; ++k) CHECK(std::abs(sq[k] - p[k]) < 1e-12);
  }
}

TEST_CASE("property: recentering preserves values") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_poly(rng, 7);
    const cplx z0(u(rng), u(rng));
    const cplx z(u(rng), u(rng));
    const auto t = ps_recenter(s, z0, 7);
    CHECK(std::abs(t(z) - s(z)) < 1e-12);
  }
}

TEST_CASE("property: derivative of exp is s' exp(s)") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_poly(rng, 9, 0.5);
    const auto e = ps_exp(s);
    const auto lhs = ps_derivative(e);
    const auto rhs = ps_mul(ps_derivative(s), e);
    for (std::size_t k = 0; k <= lhs.order(); ++k) CHECK(std::abs(lhs[k] - rhs[k]) < 1e-12);
  }
}
