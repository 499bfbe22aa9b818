#include "adlab/mb_integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "adlab/errors.hpp"
#include "adlab/quadrature.hpp"

namespace adlab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxStep = 0.05;
constexpr double kRefineTol = 1e-9;
constexpr double kAcceptTol = 1e-7;
constexpr int kMaxHalvings = 6;
constexpr double kTailCutoff = 1e-14;

void check_r(double r, const char* what) {
  if (!(r >= kRemainderMinR && r <= kRemainderMaxR)) {
    throw DomainError(std::string(what) + ": requires 2 <= r <= 100");
  }
}

double truncation_radius(double r, double y) { return 2.0 * r + 40.0 + 8.0 * std::log1p(y); }

// log of Gamma(-1/2+i(r+t))^2 Gamma(1-it) / Gamma(i(2r+t)); 1/Gamma(z) is
// taken as z / Gamma(1+z) so the zero at t = -2r needs no special case.
// Returns false where the integrand vanishes.
bool log_integrand(double r, double t, Complex& out) {
  const Complex recip_arg{0.0, 2.0 * r + t};
  if (recip_arg.imag() == 0.0) return false;
  out = 2.0 * ln_gamma(Complex(-0.5, r + t)) + ln_gamma(Complex(1.0, -t)) +
        std::log(recip_arg) - ln_gamma(1.0 + recip_arg);
  return true;
}

// log sinh(x) and log cosh(x) for x >= 0 without overflow.
double log_sinh(double x) { return x + std::log(-std::expm1(-2.0 * x)) - std::numbers::ln2; }
double log_cosh(double x) { return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2; }

}  // namespace

RemainderIntegral integral_I_detailed(double r, double y) {
  check_r(r, "integral_I");
  if (!(y >= 1.0 && y <= 1e6)) throw DomainError("integral_I: requires 1 <= y <= 1e6");

  const double log_y = std::log(y);
  const double h0 = std::min(kMaxStep, kPi / (8.0 * (1.0 + std::abs(log_y))));
  const double radius = truncation_radius(r, y);
  auto f = [&](double t) -> Complex {
    Complex lg;
    if (!log_integrand(r, t, lg)) return {0.0, 0.0};
    return std::exp(lg + Complex(-1.0, t) * log_y);
  };
  const TrapezoidSweep sweep = trapezoid_halving(f, -radius, radius, h0, kRefineTol, kMaxHalvings);
  if (!(sweep.change() <= kAcceptTol * std::abs(sweep.value))) {
    throw ConvergenceError("integral_I: step halving did not settle to 1e-7");
  }
  RemainderIntegral out;
  out.value = require_finite(sweep.value / (2.0 * kPi), "integral_I");
  out.previous = sweep.coarse / (2.0 * kPi);
  out.step = sweep.step;
  out.halvings = sweep.halvings;
  return out;
}

Complex integral_I(double r, double y) { return integral_I_detailed(r, y).value; }

double integral_I_absolute(double r) {
  check_r(r, "integral_I_absolute");
  const double radius = truncation_radius(r, 1.0);
  auto f = [&](double t) -> double {
    Complex lg;
    if (!log_integrand(r, t, lg)) return 0.0;
    return std::exp(lg.real());
  };
  const TrapezoidSweep sweep = trapezoid_halving(f, -radius, radius, kMaxStep, kRefineTol, kMaxHalvings);
  return sweep.value.real() / (2.0 * kPi);
}

double majorant_integrand(double r, double t) {
  const double v = std::abs(2.0 * r + t);
  const double u = r + t;
  const double at = std::abs(t);
  if (v == 0.0) return 0.0;
  double log_value = 0.5 * (std::log(v) + log_sinh(kPi * v)) - std::log1p(u * u) - log_cosh(kPi * std::abs(u));
  if (at == 0.0) {
    log_value += -0.5 * std::log(kPi);
  } else {
    log_value += 0.5 * (std::log(at) - log_sinh(kPi * at));
  }
  return std::exp(log_value);
}

MajorantBreakdown majorant_decomposition(double r) {
  check_r(r, "majorant_decomposition");
  const std::array<std::pair<double, double>, 7> intervals{{
      {1.0, INFINITY},
      {-1.0, 1.0},
      {-r + 1.0, -1.0},
      {-r - 1.0, -r + 1.0},
      {-2.0 * r + 1.0, -r - 1.0},
      {-2.0 * r - 1.0, -2.0 * r + 1.0},
      {-INFINITY, -2.0 * r - 1.0},
  }};
  auto f = [r](double t) { return majorant_integrand(r, t); };

  // The integrand decays like exp(-pi |t|) beyond t = 1 and like exp(pi t)
  // below t = -2r, so walk outward until it drops under kTailCutoff.
  auto tail_end = [&](double start, double direction) {
    double t = start;
    while (f(t) >= kTailCutoff) t += direction;
    return t;
  };

  MajorantBreakdown out;
  const double tol = 1e-12;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    double lo = intervals[i].first;
    double hi = intervals[i].second;
    if (std::isinf(hi)) hi = tail_end(lo, 1.0);
    if (std::isinf(lo)) lo = tail_end(hi, -1.0);
    out.pieces[i] = integrate_adaptive(f, lo, hi, tol);
  }
  out.total = 0.0;
  for (double p : out.pieces) out.total += p;
  return out;
}

double exponent_profile(double r, double t) {
  if (!(r > 0.0)) throw DomainError("exponent_profile: requires r > 0");
  return std::abs(r + 0.5 * t) - std::abs(r + t) - 0.5 * std::abs(t);
}

}  // namespace adlab
