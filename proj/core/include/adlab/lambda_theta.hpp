#pragma once

#include "adlab/complex_gamma.hpp"
#include "adlab/hyp2f1.hpp"

namespace adlab {

/// Smooth characteristic function of [1/2, 1] with transition width delta.
class SmoothCutoff {
 public:
  static constexpr double kDefaultDelta = 1.0 / 16.0;

  explicit SmoothCutoff(double delta = kDefaultDelta);

  double delta() const { return delta_; }

 private:
  double delta_;
};

/// Exponential smoothstep: 0 outside (1/2, 1), 1 on [1/2+delta, 1-delta],
/// and w(u) = s(u) / (s(u) + s(1-u)), s(u) = exp(-1/u), across each transition.
double smooth_g(double x, const SmoothCutoff& cutoff);

/// Spectral parameter r (1 <= |r| <= 100) and Z in [1e-3, 10]; a = 1/Z.
class LambdaPoint {
 public:
  LambdaPoint(double r, double z);

  double r() const { return r_; }
  double z() const { return z_; }
  double a() const { return 1.0 / z_; }

  LambdaPoint reflected() const { return LambdaPoint(-r_, z_); }

 private:
  double r_;
  double z_;
};

struct LambdaResult {
  Complex value;
  Complex previous;  // one halving before
  int nodes_per_octave = 0;
  int halvings = 0;
};

/// Lambda(r, Z) = Gamma(1/2+ir)^2 / Gamma(1+2ir) int_0^inf g(a/y) y^(-3/2+ir) F(...; -y) dy.
///
/// Trapezoid in log y over the support [a, 2a] of g(a/y), with the step
/// halved until successive sums agree to 1e-7 relative.
Complex lambda(const LambdaPoint& p, const SmoothCutoff& cutoff = SmoothCutoff{});

/// Same quadrature over [a 2^-below, a 2^(1+above)] on the identical node lattice.
LambdaResult lambda_over_window(const LambdaPoint& p, const SmoothCutoff& cutoff,
                                int octaves_below, int octaves_above);

/// Theta = 1/2 Re((1 + i / sinh(pi r)) Lambda(r, Z)).
double theta(const LambdaPoint& p, const SmoothCutoff& cutoff = SmoothCutoff{});
double theta_from_lambda(double r, Complex lambda_value);

/// Z (log r + |log Z|) + Z^(3/2) r; requires r >= 2.
double lambda_envelope(const LambdaPoint& p);

/// |Lambda(r, Z)| / lambda_envelope(p).
double lambda_bound_ratio(const LambdaPoint& p, const SmoothCutoff& cutoff = SmoothCutoff{});

}  // namespace adlab
