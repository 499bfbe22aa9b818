#include "adlab/lambda_theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "adlab/errors.hpp"

namespace adlab {
namespace {

constexpr double kRelTol = 1e-7;
constexpr int kMinNodesPerOctave = 64;
constexpr int kNodesPerPeriod = 16;
constexpr int kMaxHalvings = 8;
constexpr double kMaxA = 5e5;

// s(u) / (s(u) + s(1-u)) with s(u) = exp(-1/u), written as a logistic in
// 1/u - 1/(1-u) so neither exponential overflows.
double smoothstep(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return 1.0 / (1.0 + std::exp(1.0 / u - 1.0 / (1.0 - u)));
}

}  // namespace

SmoothCutoff::SmoothCutoff(double delta) : delta_(delta) {
  if (!(delta > 0.0 && delta <= 0.125)) {
    throw DomainError("SmoothCutoff: delta must lie in (0, 1/8]");
  }
}

double smooth_g(double x, const SmoothCutoff& cutoff) {
  const double d = cutoff.delta();
  if (!(x > 0.5 && x < 1.0)) return 0.0;
  if (x < 0.5 + d) return smoothstep((x - 0.5) / d);
  if (x > 1.0 - d) return smoothstep((1.0 - x) / d);
  return 1.0;
}

LambdaPoint::LambdaPoint(double r, double z) : r_(r), z_(z) {
  if (!(std::abs(r) >= 1.0 && std::abs(r) <= 100.0)) {
    throw DomainError("LambdaPoint: requires 1 <= |r| <= 100");
  }
  if (!(z >= 1e-3 && z <= 10.0)) {
    throw DomainError("LambdaPoint: requires 1e-3 <= Z <= 10");
  }
}

LambdaResult lambda_over_window(const LambdaPoint& p, const SmoothCutoff& cutoff,
                                int octaves_below, int octaves_above) {
  if (octaves_below < 0 || octaves_above < 0) {
    throw DomainError("lambda_over_window: octave counts must be non-negative");
  }
  const double a = p.a();
  if (!(a <= kMaxA)) throw DomainError("lambda: a = 1/Z exceeds 5e5");
  const double r = p.r();

  // The phase of y^(ir) turns by 2 r log 2 over one octave of y.
  const double periods = 2.0 * std::abs(r) * std::numbers::ln2 / (2.0 * std::numbers::pi);
  const int per_octave =
      std::max(kMinNodesPerOctave, static_cast<int>(std::ceil(kNodesPerPeriod * periods)));

  const int octaves = octaves_below + 1 + octaves_above;
  const double u_lo = std::log(a) - octaves_below * std::numbers::ln2;
  const PrefactoredF21 prefactored(r, a, 2.0 * a);

  // Integrand in u = log y: g(a/y) y^(-1/2+ir) * prefactored F.
  auto f = [&](double u) -> Complex {
    const double y = std::exp(u);
    const double weight = smooth_g(a / y, cutoff);
    if (weight == 0.0) return {0.0, 0.0};
    const Complex twist = std::exp(Complex(-0.5, r) * u);
    return weight * twist * prefactored(y).value;
  };

  std::size_t intervals = static_cast<std::size_t>(per_octave) * static_cast<std::size_t>(octaves);
  double h = std::numbers::ln2 / per_octave;
  Complex raw{0.0, 0.0};
  for (std::size_t k = 1; k < intervals; ++k) raw += f(u_lo + static_cast<double>(k) * h);

  LambdaResult out;
  out.value = raw * h;
  out.previous = out.value;
  out.nodes_per_octave = per_octave;
  for (int level = 1; level <= kMaxHalvings; ++level) {
    Complex mids{0.0, 0.0};
    for (std::size_t k = 0; k < intervals; ++k) {
      mids += f(u_lo + (static_cast<double>(k) + 0.5) * h);
    }
    raw += mids;
    intervals *= 2;
    h *= 0.5;
    out.previous = out.value;
    out.value = raw * h;
    out.nodes_per_octave *= 2;
    out.halvings = level;
    if (std::abs(out.value - out.previous) <= kRelTol * std::abs(out.value)) {
      require_finite(out.value, "lambda");
      return out;
    }
  }
  throw ConvergenceError("lambda: step halving did not reach 1e-7 relative at r = " +
                         std::to_string(r) + ", Z = " + std::to_string(p.z()));
}

Complex lambda(const LambdaPoint& p, const SmoothCutoff& cutoff) {
  return lambda_over_window(p, cutoff, 0, 0).value;
}

double theta_from_lambda(double r, Complex lambda_value) {
  const Complex weight{1.0, 1.0 / std::sinh(std::numbers::pi * r)};
  return 0.5 * (weight * lambda_value).real();
}

double theta(const LambdaPoint& p, const SmoothCutoff& cutoff) {
  return theta_from_lambda(p.r(), lambda(p, cutoff));
}

double lambda_envelope(const LambdaPoint& p) {
  const double r = std::abs(p.r());
  if (!(r >= 2.0)) throw DomainError("lambda_envelope: requires r >= 2");
  const double z = p.z();
  return z * (std::log(r) + std::abs(std::log(z))) + std::pow(z, 1.5) * r;
}

double lambda_bound_ratio(const LambdaPoint& p, const SmoothCutoff& cutoff) {
  const double envelope = lambda_envelope(p);
  return std::abs(lambda(p, cutoff)) / envelope;
}

}  // namespace adlab
