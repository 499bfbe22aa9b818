#include "adlab/complex_gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "adlab/errors.hpp"

namespace adlab {
namespace {

// B_{2k} / (2k (2k-1)), k = 1..10.
constexpr std::array<double, 10> kLogGammaCoeffs = {
    1.0 / 12.0,         -1.0 / 360.0,          1.0 / 1260.0,       -1.0 / 1680.0,
    1.0 / 1188.0,       -691.0 / 360360.0,     1.0 / 156.0,        -3617.0 / 122400.0,
    43867.0 / 244188.0, -174611.0 / 125400.0};

// B_{2k} / (2k), k = 1..10.
constexpr std::array<double, 10> kDigammaCoeffs = {
    1.0 / 12.0,        -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,       -691.0 / 32760.0,   1.0 / 12.0,  -3617.0 / 8160.0,
    43867.0 / 14364.0, -174611.0 / 6600.0};

constexpr double kStirlingRealPart = 10.0;
// In the closed right half-plane the Stirling remainder is at most 2^N times
// the first omitted term; at |z| >= 12 that is below 1e-18.
constexpr double kStirlingModulus = 12.0;

void check_domain(Complex z, const char* op) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(op) + ": non-finite argument");
  }
  if (z.real() <= kGammaMinRealPart || std::abs(z.imag()) > kGammaMaxImagPart) {
    throw DomainError(std::string(op) + ": argument outside Re z > -20, |Im z| <= 1e6");
  }
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw PoleError(std::string(op) + ": pole at non-positive integer " +
                    std::to_string(z.real()));
  }
}

bool in_stirling_region(Complex w) {
  return w.real() >= kStirlingRealPart ||
         (w.real() >= 0.0 && std::abs(w) >= kStirlingModulus);
}

// Evaluates sum_k c_k x^k for k = 0..9 by Horner's rule.
Complex horner(const std::array<double, 10>& c, Complex x) {
  Complex acc = c.back();
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

Complex require_finite(Complex v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw OverflowError(std::string(what) + ": result is not finite");
  }
  return v;
}

Complex ln_gamma(Complex z) {
  check_domain(z, "ln_gamma");

  Complex shift_logs{0.0, 0.0};
  Complex w = z;
  while (!in_stirling_region(w)) {
    shift_logs += std::log(w);
    w += 1.0;
  }

  const Complex inv = 1.0 / w;
  const Complex series = inv * horner(kLogGammaCoeffs, inv * inv);
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  const Complex stirling = (w - 0.5) * std::log(w) - w + half_log_two_pi + series;
  return require_finite(stirling - shift_logs, "ln_gamma");
}

Complex digamma(Complex z) {
  check_domain(z, "digamma");

  Complex shift{0.0, 0.0};
  Complex w = z;
  while (!in_stirling_region(w)) {
    shift += 1.0 / w;
    w += 1.0;
  }

  const Complex inv2 = 1.0 / (w * w);
  const Complex asymptotic = std::log(w) - 0.5 / w - inv2 * horner(kDigammaCoeffs, inv2);
  return require_finite(asymptotic - shift, "digamma");
}

double gamma_abs_sq_critical(double t) {
  if (!(std::abs(t) <= 200.0)) {
    throw DomainError("gamma_abs_sq_critical: requires |t| <= 200");
  }
  return std::numbers::pi / std::cosh(std::numbers::pi * t);
}

}  // namespace adlab
