#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "adlab/errors.hpp"
#include "adlab/hyp2f1.hpp"
#include "adlab/mb_integral.hpp"
#include "doctest.h"

using adlab::Complex;
using adlab::HypPoint;

namespace {

// The four-case form of |r + t/2| - |r + t| - |t|/2.
double piecewise_profile(double r, double t) {
  if (t > 0.0) return -t;
  if (t > -r) return 0.0;
  if (t > -2.0 * r) return 2.0 * r + 2.0 * t;
  return t;
}

}  // namespace

TEST_CASE("exponent profile") {
  CHECK(adlab::exponent_profile(3.0, 1.0) == doctest::Approx(-1.0));
  CHECK(adlab::exponent_profile(3.0, -2.0) == doctest::Approx(0.0));
  CHECK(adlab::exponent_profile(3.0, -5.0) == doctest::Approx(-4.0));

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> rd(0.01, 100.0);
  std::uniform_real_distribution<double> td(-3.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double r = rd(rng);
    double t = td(rng) * r;
    if (i % 100 == 0) t = 0.0;
    if (i % 100 == 1) t = -r;
    if (i % 100 == 2) t = -2.0 * r;
    CHECK(std::abs(adlab::exponent_profile(r, t) - piecewise_profile(r, t)) <= 1e-14 * (1.0 + r));
  }
}

TEST_CASE("contour shift identity") {
  for (auto [r, y] : {std::pair{5.0, 100.0}, {10.0, 300.0}, {20.0, 1000.0}, {3.0, 1.0}}) {
    const HypPoint p(r, y);
    const Complex lhs = adlab::prefactored_f21(p).value;
    const Complex main = adlab::corollary_bracket(r, std::log(y)) * std::exp(Complex(-0.5, -r) * std::log(y));
    CAPTURE(r);
    CAPTURE(y);
    CHECK(std::abs(lhs - main - adlab::integral_I(r, y)) <= 1e-7);
  }
}

TEST_CASE("integral_I refinement and domain") {
  const auto d = adlab::integral_I_detailed(10.0, 100.0);
  CHECK(std::abs(d.value - d.previous) <= 1e-8 * std::abs(d.value));
  CHECK(std::isfinite(d.value.real()));
  CHECK(std::isfinite(d.value.imag()));
  CHECK_THROWS_AS(adlab::integral_I(1.5, 10.0), adlab::DomainError);
  CHECK_THROWS_AS(adlab::integral_I(5.0, 0.5), adlab::DomainError);
  CHECK_THROWS_AS(adlab::majorant_decomposition(101.0), adlab::DomainError);
}

TEST_CASE("integral_I envelope calibrated on the small grid") {
  double c = 0.0;
  for (double r : {2.0, 5.0})
    for (double y : {10.0, 100.0}) c = std::max(c, std::abs(adlab::integral_I(r, y)) * y / r);
  for (double r : {2.0, 5.0, 10.0, 20.0}) {
    for (double y : {10.0, 100.0, 1000.0}) {
      CAPTURE(r);
      CAPTURE(y);
      CHECK(std::abs(adlab::integral_I(r, 2.0 * y)) * 2.0 * y / r <= 1.5 * c);
    }
  }
}

TEST_CASE("majorant breakdown") {
  for (double r : {2.0, 3.5, 10.0, 50.0, 100.0}) {
    const auto m = adlab::majorant_decomposition(r);
    double sum = 0.0;
    for (double piece : m.pieces) {
      CHECK(piece >= 0.0);
      sum += piece;
    }
    CAPTURE(r);
    CHECK(std::abs(sum - m.total) <= 1e-12 * m.total);
    CHECK(m.dominant() >= 0.5 * m.total);
    // rigorous bounds from |t|/sinh(pi|t|) <= 1/pi and cosh >= e^|x|/2 on the pieces
    CHECK(m.pieces[2] <= 0.5 * std::numbers::pi * r);
    CHECK(m.pieces[3] <= std::numbers::pi * r);
  }
  CHECK(adlab::majorant_integrand(5.0, 0.0) ==
        doctest::Approx(adlab::majorant_integrand(5.0, 1e-12)).epsilon(1e-10));
  CHECK(adlab::majorant_integrand(5.0, -10.0) == 0.0);
}

TEST_CASE("I2 decays like r^-3/2") {
  const double c2 = adlab::majorant_decomposition(2.0).pieces[1] * std::pow(2.0, 1.5);
  for (double r : {5.0, 10.0, 20.0, 50.0, 100.0}) {
    CAPTURE(r);
    CHECK(adlab::majorant_decomposition(r).pieces[1] <= 1.5 * c2 * std::pow(r, -1.5));
  }
}

TEST_CASE("majorant validity") {
  for (double r : {2.0, 5.0, 20.0}) {
    const double absolute = adlab::integral_I_absolute(r);
    const double total = adlab::majorant_decomposition(r).total;
    CHECK(absolute <= adlab::kMajorantConstant * total);
    for (double y : {1.0, 10.0, 100.0, 1000.0}) {
      CAPTURE(r);
      CAPTURE(y);
      CHECK(std::abs(adlab::integral_I(r, y)) * y <= absolute * (1.0 + 1e-6));
    }
  }
}
