#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace adlab {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Newton iteration on P_n from the Chebyshev initial guesses; nodes ascending.
GaussLegendreRule gauss_legendre(std::size_t n);

/// Integrates f over [lo, hi] with the given rule mapped onto the interval.
template <class F>
double integrate_panel(const GaussLegendreRule& rule, F&& f, double lo, double hi) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * acc;
}

/// Adaptive Gauss-Kronrod (61-point) on a finite interval.
/// rel_tol is relative to the L1 norm of the integrand on the interval.
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol, double* error_estimate = nullptr);

/// Result of a step-halving trapezoid sweep on a line.
struct TrapezoidSweep {
  std::complex<double> value;   // finest-level sum
  std::complex<double> coarse;  // sum one level before
  double step = 0.0;
  int halvings = 0;
  bool converged = false;

  double change() const { return std::abs(value - coarse); }
};

/// Uniform trapezoid on [lo, hi] for an integrand that is negligible at both
/// ends, starting at a step no larger than initial_step and halving until two
/// successive sums agree to rel_tol (at most max_halvings times). Each halving
/// only evaluates the new midpoints.
template <class F>
TrapezoidSweep trapezoid_halving(F&& f, double lo, double hi, double initial_step,
                                 double rel_tol, int max_halvings) {
  const auto intervals =
      static_cast<std::size_t>(std::ceil((hi - lo) / initial_step - 1e-9));
  double h = (hi - lo) / static_cast<double>(intervals);
  std::complex<double> raw{0.0, 0.0};
  for (std::size_t k = 0; k <= intervals; ++k) {
    const double w = (k == 0 || k == intervals) ? 0.5 : 1.0;
    raw += w * std::complex<double>(f(lo + static_cast<double>(k) * h));
  }
  TrapezoidSweep out;
  out.value = raw * h;
  out.coarse = out.value;
  out.step = h;
  std::size_t count = intervals;
  for (int level = 1; level <= max_halvings; ++level) {
    std::complex<double> mids{0.0, 0.0};
    for (std::size_t k = 0; k < count; ++k) {
      mids += std::complex<double>(f(lo + (static_cast<double>(k) + 0.5) * h));
    }
    raw += mids;
    count *= 2;
    h *= 0.5;
    out.coarse = out.value;
    out.value = raw * h;
    out.step = h;
    out.halvings = level;
    if (out.change() <= rel_tol * std::abs(out.value)) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace adlab
