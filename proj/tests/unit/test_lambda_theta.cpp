#include <algorithm>
#include <cmath>

#include "adlab/errors.hpp"
#include "adlab/hyp2f1.hpp"
#include "adlab/lambda_theta.hpp"
#include "doctest.h"

using adlab::Complex;
using adlab::LambdaPoint;
using adlab::SmoothCutoff;

TEST_CASE("smooth cutoff") {
  for (double delta : {1.0 / 8.0, 1.0 / 16.0, 1.0 / 32.0}) {
    const SmoothCutoff c(delta);
    CHECK(adlab::smooth_g(0.75, c) == 1.0);
    CHECK(adlab::smooth_g(0.5, c) == 0.0);
    CHECK(adlab::smooth_g(1.0, c) == 0.0);
    CHECK(adlab::smooth_g(0.2, c) == 0.0);
    CHECK(adlab::smooth_g(1.3, c) == 0.0);
    CHECK(adlab::smooth_g(0.5 + delta, c) == 1.0);
    CHECK(adlab::smooth_g(0.5 + delta / 2.0, c) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(adlab::smooth_g(1.0 - delta / 2.0, c) == doctest::Approx(0.5).epsilon(1e-15));
    double prev = 0.0;
    double max_slope = 0.0;
    const double h = 1e-5;
    for (double x = 0.45; x < 1.05; x += h) {
      const double g = adlab::smooth_g(x, c);
      CHECK(g >= 0.0);
      CHECK(g <= 1.0);
      max_slope = std::max(max_slope, std::abs(g - prev) / h);
      prev = g;
    }
    CHECK(max_slope <= 4.0 / delta);
  }
  CHECK_THROWS_AS(SmoothCutoff(0.2), adlab::DomainError);
  CHECK_THROWS_AS(SmoothCutoff(0.0), adlab::DomainError);
}

TEST_CASE("LambdaPoint domain") {
  CHECK(LambdaPoint(10.0, 0.1).a() == doctest::Approx(10.0));
  CHECK(LambdaPoint(10.0, 0.1).reflected().r() == -10.0);
  CHECK_THROWS_AS(LambdaPoint(0.5, 1.0), adlab::DomainError);
  CHECK_THROWS_AS(LambdaPoint(5.0, 1e-4), adlab::DomainError);
  CHECK_THROWS_AS(LambdaPoint(5.0, 11.0), adlab::DomainError);
  CHECK_THROWS_AS(adlab::lambda_envelope(LambdaPoint(1.5, 1.0)), adlab::DomainError);
}

TEST_CASE("lambda value and self-convergence") {
  const LambdaPoint p(10.0, 0.1);
  const auto res = adlab::lambda_over_window(p, SmoothCutoff{}, 0, 0);
  CHECK(std::abs(res.value - res.previous) <= 1e-7 * std::abs(res.value));
  // mpmath quad at 30 digits
  const Complex oracle{0.041085965991773734219, 0.0063025692115393477169};
  CHECK(std::abs(res.value - oracle) <= 1e-7 * std::abs(oracle));
}

TEST_CASE("lambda conjugation symmetry") {
  for (double r : {2.0, 10.0, 50.0}) {
    for (double z : {1e-3, 0.1, 10.0}) {
      const LambdaPoint p(r, z);
      const Complex v = adlab::lambda(p);
      CAPTURE(r);
      CAPTURE(z);
      CHECK(std::abs(adlab::lambda(p.reflected()) - std::conj(v)) <= 1e-9 * std::abs(v));
    }
  }
}

TEST_CASE("lambda triangle-inequality envelope") {
  for (double r : {2.0, 20.0}) {
    for (double z : {0.01, 1.0}) {
      const LambdaPoint p(r, z);
      const double a = p.a();
      double peak = 0.0;
      for (int k = 0; k <= 400; ++k) {
        const double y = a * std::pow(2.0, k / 400.0);
        peak = std::max(peak, std::abs(adlab::prefactored_f21(adlab::HypPoint(r, y)).value));
      }
      // int_a^{2a} y^{-3/2} dy = 2 a^{-1/2} (1 - 2^{-1/2})
      const double bound = peak * 2.0 / std::sqrt(a) * (1.0 - 1.0 / std::sqrt(2.0));
      CAPTURE(r);
      CAPTURE(z);
      CHECK(std::abs(adlab::lambda(p)) <= bound * (1.0 + 1e-6));
    }
  }
}

TEST_CASE("support exactness") {
  for (double r : {2.0, 20.0}) {
    for (double z : {0.01, 1.0}) {
      const LambdaPoint p(r, z);
      const Complex inner = adlab::lambda_over_window(p, SmoothCutoff{}, 0, 0).value;
      const Complex outer = adlab::lambda_over_window(p, SmoothCutoff{}, 1, 1).value;
      CHECK(std::abs(inner - outer) <= 1e-12 * std::abs(inner));
    }
  }
}

TEST_CASE("theta") {
  // mpmath: 0.09054543667931278309
  CHECK(adlab::theta(LambdaPoint(5.0, 0.5)) == doctest::Approx(0.09054543667931278309).epsilon(1e-7));

  const LambdaPoint p(20.0, 1.0);
  const Complex l = adlab::lambda(p);
  CHECK(std::abs(adlab::theta(p) - 0.5 * l.real()) <= 1e-27 * std::abs(l));
  CHECK(adlab::theta_from_lambda(1.0, Complex(0.0, 2.0)) ==
        doctest::Approx(-1.0 / std::sinh(3.141592653589793)).epsilon(1e-14));
}

TEST_CASE("bound ratio is positive and finite") {
  for (double r : {2.0, 5.0, 50.0}) {
    for (double z : {1e-3, 1.0, 10.0}) {
      const double ratio = adlab::lambda_bound_ratio(LambdaPoint(r, z));
      CHECK(ratio > 0.0);
      CHECK(std::isfinite(ratio));
    }
  }
}
