#include "kgbound/specfun.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace kgbound;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("ln_gamma reproduces factorials and half-integer values") {
  CHECK(ln_gamma(1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(ln_gamma(2.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(ln_gamma(10.0) == doctest::Approx(std::log(362880.0)).epsilon(1e-14));
  // Gamma(1/2) = sqrt(pi)
  CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-14));
}

TEST_CASE("ln_gamma rejects the nonpositive axis") {
  CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(ln_gamma(-1.0), std::domain_error);
  CHECK_THROWS_AS(ln_gamma(-0.5), std::domain_error);
}

TEST_CASE("ln_gamma satisfies the recurrence lnGamma(x+1) = lnGamma(x) + ln x") {
  // The bound is relative to the magnitude of lnGamma: near x = 100 the
  // function value is ~360, where one ulp is already 5.7e-14, so an absolute
  // 1e-13 would sit inside the rounding floor of the three terms involved.
  for (int i = 0; i <= 2000; ++i) {
    double x = 0.1 * std::pow(1000.0, i / 2000.0);  // log-spaced over [0.1, 100]
    double lhs = ln_gamma(x + 1.0);
    double rhs = ln_gamma(x) + std::log(x);
    double dev = std::fabs(lhs - rhs) / std::max(1.0, std::fabs(lhs));
    CHECK(dev <= 1e-13);
  }
}

TEST_CASE("hyp2f1_terminating degree-0 and degree-1 cases") {
  // n = 0: empty product, the sum is identically 1 for any bb, cc, s.
  for (double s : {0.0, 0.3, 0.97}) {
    CHECK(hyp2f1_terminating(0, 3.7, 1.2, s) == 1.0);
    CHECK(hyp2f1_terminating(0, -5.0, 0.5, s) == 1.0);
  }
  // n = 1: 1 - (bb/cc) s, a single term.
  for (double s : {0.1, 0.5, 0.9}) {
    CHECK(hyp2f1_terminating(1, 2.0, 3.0, s) ==
          doctest::Approx(1.0 - (2.0 / 3.0) * s).epsilon(1e-15));
    CHECK(hyp2f1_terminating(1, -1.5, 0.7, s) ==
          doctest::Approx(1.0 + (1.5 / 0.7) * s).epsilon(1e-15));
  }
}

TEST_CASE("hyp2f1_terminating matches a brute-force Pochhammer sum") {
  // n = 2, bb = 3, cc = 1, s = 1/2: terms are 1, -3, 3/2, all exactly
  // representable, so the comparison is bit-for-bit.
  double direct = hyp2f1_terminating(2, 3.0, 1.0, 0.5);
  CHECK(direct == -0.5);

  // General brute force: sum_{k<=n} (-n)_k (bb)_k / ((cc)_k k!) s^k.
  auto brute = [](int n, double bb, double cc, double s) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
      double t = 1.0;
      for (int j = 0; j < k; ++j) {
        t *= (static_cast<double>(-n) + j) * (bb + j) / ((cc + j) * (j + 1));
      }
      sum += t * std::pow(s, k);
    }
    return sum;
  };
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> ub(-4.0, 6.0), us(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng() % 9);
    double bb = ub(rng);
    double cc = ub(rng);
    if (cc <= 0.0 && cc == std::floor(cc)) cc += 0.37;  // keep cc admissible
    double s = us(rng);
    double want = brute(n, bb, cc, s);
    double got = hyp2f1_terminating(n, bb, cc, s);
    CHECK(got == doctest::Approx(want).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("hyp2f1_terminating rejects nonpositive-integer cc") {
  CHECK_THROWS_AS(hyp2f1_terminating(2, 1.0, 0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(hyp2f1_terminating(2, 1.0, -1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(hyp2f1_terminating(2, 1.0, -7.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(hyp2f1_terminating(-1, 1.0, 2.0, 0.5), std::domain_error);
  // non-integer negative cc is fine
  CHECK_NOTHROW(hyp2f1_terminating(2, 1.0, -0.5, 0.5));
}

TEST_CASE("jacobi_p low orders against closed forms") {
  for (double x : {-0.9, -0.2, 0.0, 0.4, 1.0}) {
    CHECK(jacobi_p(0, 0.7, 1.9, x) == 1.0);
    // P1^{(a,b)}(x) = (a - b)/2 + (a + b + 2) x / 2
    double a = 1.3, b = 0.4;
    CHECK(jacobi_p(1, a, b, x) ==
          doctest::Approx(0.5 * (a - b) + 0.5 * (a + b + 2.0) * x).epsilon(1e-14));
    // Legendre case: P2^{(0,0)}(x) = (3x^2 - 1)/2
    CHECK(jacobi_p(2, 0.0, 0.0, x) ==
          doctest::Approx(0.5 * (3.0 * x * x - 1.0)).epsilon(1e-14).scale(1.0));
  }
}

TEST_CASE("jacobi_p ties to the terminating hypergeometric") {
  // P_n^{(a,b)}(1 - 2s) = Gamma(n+a+1) / (n! Gamma(a+1)) 2F1(-n, n+a+b+1; 1+a; s)
  auto check_point = [](int n, double a, double b, double s, double tol) {
    double lhs = jacobi_p(n, a, b, 1.0 - 2.0 * s);
    double pre = std::exp(ln_gamma(n + a + 1.0) - ln_gamma(n + 1.0) -
                          ln_gamma(a + 1.0));
    double rhs = pre * hyp2f1_terminating(n, n + a + b + 1.0, 1.0 + a, s);
    CHECK(lhs == doctest::Approx(rhs).epsilon(tol).scale(1.0));
  };
  check_point(3, 1.2, 0.7, 0.3, 1e-12);

  // At larger n and s near 1 the terminating sum alternates with strong
  // cancellation (~1e-9 relative is the observed floor at n = 10), while the
  // recurrence stays stable; the tolerance reflects the sum, not the
  // recurrence.
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> uab(-0.9, 5.0), us(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng() % 11);
    check_point(n, uab(rng), uab(rng), us(rng), 2e-8);
  }
}

TEST_CASE("jacobi_p input validation") {
  CHECK_THROWS_AS(jacobi_p(-1, 0.0, 0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(jacobi_p(2, -1.0, 0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(jacobi_p(2, 0.0, -1.5, 0.5), std::domain_error);
}

TEST_CASE("integrate handles smooth integrands") {
  auto lin = integrate([](double x) { return x; }, 0.0, 1.0);
  CHECK(lin.converged);
  CHECK(lin.value == doctest::Approx(0.5).epsilon(1e-12));

  auto cosint = integrate([](double x) { return std::cos(x); }, 0.0, kPi / 2);
  CHECK(cosint.converged);
  CHECK(cosint.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("integrate resolves integrable endpoint singularities") {
  // x^{-1/2} integrates to 2 despite blowing up at the lower endpoint.
  auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));

  // Singularity at the upper endpoint as well.
  auto u = integrate([](double x) { return 1.0 / std::sqrt(1.0 - x); }, 0.0, 1.0);
  CHECK(u.converged);
  CHECK(u.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("integrate reproduces Beta function values") {
  auto beta = [](double p, double q) {
    return std::exp(ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q));
  };
  // The norm integrand shape: s^{2 eps - 1} (1 - s)^{2 kappa} with the
  // dimensionless constants of a typical ground state.
  double eps = 0.9539151, kappa = 1.498;
  auto r = integrate(
      [&](double s) {
        return std::pow(s, 2.0 * eps - 1.0) * std::pow(1.0 - s, 2.0 * kappa);
      },
      0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(beta(2.0 * eps, 2.0 * kappa + 1.0)).epsilon(1e-9));

  std::mt19937 rng(1331);
  std::uniform_real_distribution<double> upq(0.2, 6.0);
  for (int trial = 0; trial < 50; ++trial) {
    double p = upq(rng), q = upq(rng);
    auto b = integrate(
        [&](double s) {
          return std::pow(s, p - 1.0) * std::pow(1.0 - s, q - 1.0);
        },
        0.0, 1.0);
    CHECK(b.converged);
    CHECK(b.value == doctest::Approx(beta(p, q)).epsilon(1e-8));
  }
}

TEST_CASE("integrate reports non-convergence instead of lying") {
  QuadratureSpec tight;
  tight.max_depth = 2;  // far too shallow for an endpoint singularity
  auto r = integrate([](double x) { return std::pow(x, -0.9); }, 0.0, 1.0, tight);
  CHECK_FALSE(r.converged);
}

TEST_CASE("quadrature defaults") {
  QuadratureSpec spec;
  CHECK(spec.abs_tol == 1e-10);
  CHECK(spec.rel_tol == 1e-10);
  CHECK(spec.max_depth == 60);
}
