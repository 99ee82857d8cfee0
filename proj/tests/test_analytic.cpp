#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ellrmt/analytic.hpp"

using namespace ellrmt;
constexpr double kPi = std::numbers::pi;

TEST_CASE("bessel_half: closed forms at half-integer orders") {
  // J_{1/2}(x) = sqrt(2/(pi x)) sin x ; J_{-1/2}(x) = sqrt(2/(pi x)) cos x
  CHECK(analytic::bessel_half(1, kPi) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(analytic::bessel_half(-1, kPi / 2) == doctest::Approx(0.0).epsilon(1e-12));
  for (double x : {0.001, 0.03, 0.7, 1.0, 2.0, 14.5, 250.0, 1000.0}) {
    double s = std::sqrt(2.0 / (kPi * x));
    CHECK(analytic::bessel_half(1, x) ==
          doctest::Approx(s * std::sin(x)).epsilon(1e-12));
    CHECK(analytic::bessel_half(-1, x) ==
          doctest::Approx(s * std::cos(x)).epsilon(1e-12));
    // J_{3/2}(x) = sqrt(2/(pi x)) (sin x / x - cos x)
    CHECK(analytic::bessel_half(3, x) ==
          doctest::Approx(s * (std::sin(x) / x - std::cos(x))).epsilon(1e-9));
    // J_{-3/2}(x) = sqrt(2/(pi x)) (-cos x / x - sin x)
    CHECK(analytic::bessel_half(-3, x) ==
          doctest::Approx(s * (-std::cos(x) / x - std::sin(x))).epsilon(1e-9));
  }
}

TEST_CASE("bessel_half: spot value J_{3/2}(1) from the closed form") {
  double expect = std::sqrt(2.0 / kPi) * (std::sin(1.0) - std::cos(1.0));
  CHECK(analytic::bessel_half(3, 1.0) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("bessel_half: recurrence consistency at higher orders") {
  // J_{nu+1} = (2 nu / x) J_nu - J_{nu-1}; the residual is compared against
  // the largest term (the recurrence itself cancels catastrophically at
  // small x, which is why the implementation does not use it there)
  for (double x : {0.001, 0.05, 0.9, 3.0, 40.0, 1000.0}) {
    for (int tn = -19; tn <= 19; tn += 2) {
      double lhs = analytic::bessel_half(tn + 4, x);  // J_{nu+1}, nu = tn/2 + 1
      double nu = (tn + 2) / 2.0;
      double big = 2.0 * nu / x * analytic::bessel_half(tn + 2, x);
      double jm = analytic::bessel_half(tn, x);
      double scale = std::max({std::fabs(lhs), std::fabs(big), std::fabs(jm), 1e-300});
      CHECK(std::fabs(lhs - (big - jm)) / scale < 1e-9);
    }
  }
}

TEST_CASE("bessel_half: long-double series oracle in the small-x regime") {
  // j_n(x) = x^n/(2n+1)!! sum_k (-x^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1)),
  // summed in long double; independent of the Miller recurrence path.
  auto series_j = [](int n, double x) {
    long double xl = x;
    long double dfact = 1.0L;
    for (int i = 1; i <= 2 * n + 1; i += 2) dfact *= i;
    long double lead = std::pow(xl, n) / dfact;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
      term *= -(xl * xl / 2.0L) / (static_cast<long double>(k) * (2 * n + 2 * k + 1));
      sum += term;
      if (std::fabs(static_cast<double>(term)) < 1e-24 * std::fabs(static_cast<double>(sum)))
        break;
    }
    return static_cast<double>(lead * sum);
  };
  for (int n = 2; n <= 10; ++n) {
    for (double x : {0.001, 0.01, 0.1, 0.5, 1.0, 2.0}) {
      if (x >= n) continue;  // series oracle only probes the downward region
      double expect = series_j(n, x) * std::sqrt(2.0 * x / kPi);
      double got = analytic::bessel_half(2 * n + 1, x);
      CHECK(std::fabs(got - expect) <= 1e-10 * std::fabs(expect));
    }
  }
}

TEST_CASE("bessel_half: rejects nonpositive x and integer orders") {
  CHECK_THROWS(analytic::bessel_half(1, 0.0));
  CHECK_THROWS(analytic::bessel_half(1, -2.0));
  CHECK_THROWS(analytic::bessel_half(2, 1.0));
}

TEST_CASE("interaction_density: r=1 equals the SO(odd) density") {
  for (int i = 0; i < 500; ++i) {
    double theta = 0.01 + (5.0 - 0.01) * i / 499.0;
    double direct = 1.0 - std::sin(2.0 * kPi * theta) / (2.0 * kPi * theta);
    CHECK(std::fabs(analytic::interaction_density(1, theta) - direct) < 1e-10);
    CHECK(std::fabs(analytic::interaction_density(1, theta) -
                    analytic::so_odd_density(theta)) < 1e-10);
  }
}

TEST_CASE("interaction_density: internal r=0 variant equals the SO(even) density") {
  for (int i = 0; i < 500; ++i) {
    double theta = 0.01 + (5.0 - 0.01) * i / 499.0;
    CHECK(std::fabs(analytic::interaction_density_any(0, theta) -
                    analytic::so_even_density(theta)) < 1e-10);
  }
  CHECK_THROWS(analytic::interaction_density(0, 1.0));
}

TEST_CASE("interaction_density: theta -> 0 vanishing of order theta^{2r}") {
  for (int r = 1; r <= 5; ++r) {
    CHECK(analytic::interaction_density(r, 0.0) == 0.0);
    // ratio to theta^{2r} stabilizes to a finite positive constant
    double r1 = analytic::interaction_density(r, 1e-1) / std::pow(1e-1, 2 * r);
    double r2 = analytic::interaction_density(r, 1e-2) / std::pow(1e-2, 2 * r);
    double r3 = analytic::interaction_density(r, 1e-3) / std::pow(1e-3, 2 * r);
    CHECK(r3 > 0.0);
    CHECK(std::fabs(r2 / r3 - 1.0) < 0.05);
    CHECK(std::fabs(r1 / r3 - 1.0) < 0.5);
  }
}

TEST_CASE("interaction_density: first local maximum moves right as r grows") {
  auto argmax_on = [](int r) {
    // location of the first local maximum on (0, 5]
    double prev = 0.0, best = 0.0;
    for (int i = 1; i <= 2000; ++i) {
      double t = 5.0 * i / 2000.0;
      double v = analytic::interaction_density(r, t);
      if (v < prev) { best = 5.0 * (i - 1) / 2000.0; break; }
      prev = v;
    }
    return best;
  };
  double last = 0.0;
  for (int r = 1; r <= 5; ++r) {
    double pos = argmax_on(r);
    CHECK(pos > last);
    last = pos;
  }
}

TEST_CASE("so_even / so_odd densities: limits and decay") {
  CHECK(analytic::so_even_density(0.0) == doctest::Approx(2.0));
  CHECK(analytic::so_odd_density(0.0) == doctest::Approx(0.0));
  CHECK(std::fabs(analytic::so_even_density(50.0) - 1.0) < 0.01);
  CHECK(std::fabs(analytic::so_odd_density(50.0) - 1.0) < 0.01);
}

TEST_CASE("densities are nonnegative on a dense grid") {
  for (int i = 0; i <= 4000; ++i) {
    double t = 20.0 * i / 4000.0;
    CHECK(analytic::so_even_density(t) >= 0.0);
    CHECK(analytic::so_odd_density(t) >= 0.0);
    for (int r = 1; r <= 5; ++r)
      CHECK(analytic::interaction_density(r, t) >= -1e-12);
  }
}

TEST_CASE("sine_kernel_pc: values") {
  CHECK(analytic::sine_kernel_pc(0.0) == doctest::Approx(0.0));
  CHECK(analytic::sine_kernel_pc(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  double expect = 1.0 - std::pow(2.0 / kPi, 2);  // 1 - (sin(pi/2)/(pi/2))^2
  CHECK(analytic::sine_kernel_pc(0.5) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("tabulation covers the grid and serializes") {
  auto c = analytic::tabulate_interaction(3, 5.0, 101);
  REQUIRE(c.grid.size() == 101);
  CHECK(c.grid.front() == 0.0);
  CHECK(c.grid.back() == doctest::Approx(5.0));
  CHECK(c.values.front() == 0.0);
}
