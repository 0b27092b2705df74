#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "frechet/errors.hpp"
#include "frechet/numerics.hpp"
#include "oracles.hpp"

using namespace frechet;
using frechet::test::bessel_k1_series;
using frechet::test::log_distance;
using frechet::test::multiplication_rhs;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("log_gamma at classical points") {
  CHECK(std::abs(log_gamma(ComplexValue(1.0, 0.0))) < 1e-15);
  CHECK(std::abs(log_gamma(ComplexValue(2.0, 0.0))) < 1e-15);
  const ComplexValue half = log_gamma(ComplexValue(0.5, 0.0));
  CHECK(half.real() == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-15));
  CHECK(std::abs(half.imag()) < 1e-15);
  CHECK(log_gamma(ComplexValue(11.0, 0.0)).real() ==
        doctest::Approx(std::log(3628800.0)).epsilon(1e-14));
}

TEST_CASE("log_gamma matches arbitrary-precision reference values") {
  // Reference values from mpmath.loggamma at 30 digits.
  struct Case {
    ComplexValue s;
    ComplexValue want;
  };
  const Case cases[] = {
      {{3.7, 2.1}, {0.785346958073822388758, 2.58301292511526224859}},
      {{-2.3, 0.7}, {-1.266429485193089379760, -8.07678236671205563272}},
      {{0.2, -7.0}, {-10.6602450354878331161, -6.14965406208733101947}},
      {{150.0, 40.0}, {594.720403716019617459, 200.759261643739059170}},
  };
  for (const auto& c : cases) {
    const ComplexValue got = log_gamma(c.s);
    CHECK(std::abs(got - c.want) <= 1e-13 * std::abs(c.want));
  }
}

TEST_CASE("log_gamma rejects poles and non-finite input") {
  CHECK_THROWS_AS(log_gamma(ComplexValue(0.0, 0.0)), PoleError);
  CHECK_THROWS_AS(log_gamma(ComplexValue(-3.0, 0.0)), PoleError);
  CHECK_THROWS_AS(log_gamma(ComplexValue(NAN, 1.0)), DomainError);
  CHECK_THROWS_AS(log_gamma(ComplexValue(1.0, INFINITY)), DomainError);
  CHECK_NOTHROW(log_gamma(ComplexValue(-3.0, 1e-9)));
  CHECK_NOTHROW(log_gamma(ComplexValue(-2.5, 0.0)));
}

TEST_CASE("log_gamma satisfies the multiplication formula") {
  auto lg = [](ComplexValue z) { return log_gamma(z); };
  const ComplexValue s(3.7, 2.1);
  CHECK(log_distance(log_gamma(s), multiplication_rhs(lg, s / 3.0, 3)) <=
        1e-12 * std::abs(log_gamma(s)));

  std::mt19937_64 rng(20140227);
  std::uniform_real_distribution<double> re(0.1, 5.0), im(-5.0, 5.0);
  for (int n = 2; n <= 4; ++n) {
    for (int i = 0; i < 100; ++i) {
      const ComplexValue z(re(rng), im(rng));
      const ComplexValue lhs = log_gamma(double(n) * z);
      CHECK(log_distance(lhs, multiplication_rhs(lg, z, n)) <=
            1e-12 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("log_gamma recurrence and conjugate symmetry") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> re(0.1, 5.0), im(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const ComplexValue s(re(rng), im(rng));
    const ComplexValue r = log_gamma(s + 1.0) - log_gamma(s) - std::log(s);
    CHECK(std::abs(r) <= 1e-13 * std::max(1.0, std::abs(log_gamma(s))));
    CHECK(std::abs(log_gamma(std::conj(s)) - std::conj(log_gamma(s))) < 1e-14);
  }
}

TEST_CASE("log_gamma is continuous across Re s = 1/2 where reflection takes over") {
  for (double y : {-30.0, -3.0, 0.4, 2.0, 17.0}) {
    const ComplexValue left = log_gamma(ComplexValue(0.5 - 1e-9, y));
    const ComplexValue right = log_gamma(ComplexValue(0.5 + 1e-9, y));
    CHECK(std::abs(left - right) < 1e-7);
  }
}

TEST_CASE("integrate_semi_infinite on exact integrals") {
  const auto a = integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0);
  CHECK(a.converged);
  CHECK(std::abs(a.value - 1.0) < 1e-12);
  const auto b = integrate_semi_infinite([](double x) { return x * std::exp(-x); }, 0.0);
  CHECK(std::abs(b.value - 1.0) < 1e-12);
  CHECK(b.err_estimate >= 0.0);
  CHECK(b.evaluations > 0);
  const auto c = integrate_semi_infinite([](double x) { return 1.0 / (x * x); }, 2.0);
  CHECK(std::abs(c.value - 0.5) < 1e-12);
}

TEST_CASE("exp(-u - 1/u) integrates to 2 K_1(2)") {
  const auto r = integrate_semi_infinite([](double u) { return std::exp(-u - 1.0 / u); }, 0.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 2.0 * bessel_k1_series(2.0)) < 1e-12);
}

TEST_CASE("integrate handles breakpoints and reversed limits") {
  auto f = [](double x) { return std::abs(x - 0.3); };
  const auto fwd = integrate(f, 0.0, 1.0, {}, {0.3});
  CHECK(std::abs(fwd.value - (0.045 + 0.245)) < 1e-14);
  const auto rev = integrate(f, 1.0, 0.0, {}, {0.3});
  CHECK(rev.value == doctest::Approx(-fwd.value));
  CHECK(integrate(f, 0.5, 0.5).value == 0.0);
}

TEST_CASE("non-finite integrand values count as zero") {
  auto f = [](double x) { return x == 0.0 ? NAN : std::exp(-1.0 / x) / (x * x); };
  const auto r = integrate(f, 0.0, 1.0);
  CHECK(std::abs(r.value - std::exp(-1.0)) < 1e-12);
}

TEST_CASE("quadrature is linear within its error estimates") {
  auto f = [](double x) { return std::exp(-x) * std::cos(x); };
  auto g = [](double x) { return 1.0 / (1.0 + x * x * x); };
  const double a = 2.5;
  const double b = -0.75;
  const auto rf = integrate_semi_infinite(f, 0.0);
  const auto rg = integrate_semi_infinite(g, 0.0);
  const auto rc = integrate_semi_infinite([&](double x) { return a * f(x) + b * g(x); }, 0.0);
  const double bound = rc.err_estimate + std::abs(a) * rf.err_estimate + std::abs(b) * rg.err_estimate;
  CHECK(std::abs(rc.value - (a * rf.value + b * rg.value)) <= bound + 1e-15);
}

TEST_CASE("non-convergence is reported, not hidden") {
  QuadratureConfig cfg;
  cfg.max_subdivisions = 2;
  cfg.rel_tol = 1e-14;
  cfg.abs_tol = 1e-300;
  const auto r = integrate([](double x) { return std::sin(200.0 * x); }, 0.0, 10.0, cfg);
  CHECK_FALSE(r.converged);
}

TEST_CASE("converged results honour their tolerance") {
  QuadratureConfig cfg;
  for (double p : {0.1, 1.0, 7.0}) {
    const auto r = integrate_semi_infinite([p](double x) { return std::exp(-p * x * x); }, 0.0, cfg);
    REQUIRE(r.converged);
    CHECK(r.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value)));
    CHECK(std::abs(r.value - 0.5 * std::sqrt(kPi / p)) < 1e-12);
  }
}

TEST_CASE("QuadratureConfig validation") {
  QuadratureConfig cfg;
  cfg.abs_tol = 0.0;
  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 0.0; }, 0.0, cfg), DomainError);
  cfg = {};
  cfg.max_subdivisions = 0;
  CHECK_THROWS_AS(integrate([](double) { return 0.0; }, 0.0, 1.0, cfg), DomainError);
}

TEST_CASE("bessel_k1 against the ascending series") {
  // mpmath: K_1(2) = 0.1398658818165224272846
  CHECK(bessel_k1_series(2.0) == doctest::Approx(0.1398658818165224272846).epsilon(1e-14));
  for (double z : {0.05, 0.3, 1.0, 2.0, 4.5}) {
    CHECK(bessel_k1(z) == doctest::Approx(bessel_k1_series(z)).epsilon(1e-10));
  }
  // Beyond the series' reach: 30-digit reference values.
  CHECK(bessel_k1(50.0) == doctest::Approx(3.44410222671755561259e-23).epsilon(1e-10));
  CHECK(bessel_k1(0.05) == doctest::Approx(19.9096743258825053968).epsilon(1e-10));
}

TEST_CASE("bessel_k1 small-argument limit and monotonicity") {
  CHECK(std::abs(1e-3 * bessel_k1(1e-3) - 1.0) < 1e-3);
  double prev = INFINITY;
  for (int i = 0; i < 500; ++i) {
    const double z = 0.05 + (50.0 - 0.05) * i / 499.0;
    const double v = bessel_k1(z);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(bessel_k1(0.0), DomainError);
  CHECK_THROWS_AS(bessel_k1(-1.0), DomainError);
}
