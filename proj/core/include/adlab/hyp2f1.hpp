#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "adlab/complex_gamma.hpp"

namespace adlab {

// Evaluation of the balanced Gauss function F(1/2+ir, 1/2+ir; 1+2ir; -y)
// and of its gamma-prefactored form
//
//   Gamma(1/2+ir)^2 / Gamma(1+2ir) * F(1/2+ir, 1/2+ir; 1+2ir; -y).

inline constexpr double kSeriesMaxY = 0.9;
inline constexpr double kPfaffMaxY = 50.0;
inline constexpr double kMellinBarnesMinY = 0.1;
inline constexpr double kMellinBarnesMinAbsR = 0.01;
inline constexpr double kHypMaxAbsR = 100.0;
inline constexpr double kHypMaxY = 1.0e6;

enum class Backend { Series, Pfaff, MellinBarnes, Asymptotic };

std::string_view backend_name(Backend b);

/// Spectral parameter r (|r| <= 100) and argument y (0 < y <= 1e6).
class HypPoint {
 public:
  HypPoint(double r, double y);

  double r() const { return r_; }
  double y() const { return y_; }

 private:
  double r_;
  double y_;
};

struct EvalResult {
  Complex value;
  double est_error = 0.0;
  Backend backend = Backend::Series;
};

/// Backend boundaries used by the dispatchers. Both must lie inside the
/// validity range of the backend below them.
struct DispatchThresholds {
  double series_max_y = kSeriesMaxY;
  double pfaff_max_y = kPfaffMaxY;
};

/// Gamma(1/2+ir)^2 / Gamma(1+2ir), assembled from log-gamma differences.
Complex gamma_prefactor(double r);

/// Power series of F at -y; requires y < 0.9.
EvalResult f21_series(const HypPoint& p);

/// F via the Pfaff transformation onto y/(1+y); requires y <= 50.
EvalResult f21_pfaff(const HypPoint& p);

/// Prefactored value from the Mellin-Barnes integral on Re s = -1/4.
/// Requires y >= 0.1 and |r| >= 0.01.
EvalResult f21_mellin_barnes(const HypPoint& p);

/// log y + 2 psi(1) - 2 psi(1/2 + ir), for any real log y.
Complex corollary_bracket(double r, double log_y);

/// y^(-1/2-ir) (log y + 2 psi(1) - 2 psi(1/2+ir)); requires y > 1.
Complex asymptotic_main(const HypPoint& p);

/// Prefactored value, dispatched by y: series, then Pfaff, then Mellin-Barnes.
/// Series and Pfaff results whose error estimate exceeds 1e-9 relative (large
/// |r|) are replaced by Mellin-Barnes wherever that backend is defined.
EvalResult prefactored_f21(const HypPoint& p, const DispatchThresholds& thresholds = {});

/// Plain F(1/2+ir, 1/2+ir; 1+2ir; -y) through the same dispatch.
EvalResult evaluate_f21(const HypPoint& p, const DispatchThresholds& thresholds = {});

/// Mellin-Barnes quadrature sharing one set of gamma samples across a range
/// of y. The step and truncation are chosen for the whole range, and the
/// step-halving refinement is confirmed at the range ends and its geometric
/// midpoint.
class MellinBarnesEvaluator {
 public:
  MellinBarnesEvaluator(double r, double y_lo, double y_hi);

  EvalResult operator()(double y) const;

  double step() const { return step_; }
  std::size_t node_count() const { return samples_.size(); }
  int halvings() const { return halvings_; }

 private:
  struct Sample {
    double t;
    Complex weight;  // gamma factors at s = c + it
    bool coarse;     // node also present one level before
  };

  double r_;
  double y_lo_;
  double y_hi_;
  double step_ = 0.0;
  int halvings_ = 0;
  std::vector<Sample> samples_;

  void sums(double y, Complex& fine, Complex& coarse) const;
};

/// Range-aware prefactored evaluator: identical dispatch to prefactored_f21,
/// with a single Mellin-Barnes evaluator reused for every y in [y_lo, y_hi].
/// The fallback evaluator is built lazily, so one instance must not be shared
/// between threads.
class PrefactoredF21 {
 public:
  PrefactoredF21(double r, double y_lo, double y_hi, const DispatchThresholds& thresholds = {});

  EvalResult operator()(double y) const;

 private:
  double r_;
  double y_lo_;
  double y_hi_;
  DispatchThresholds thresholds_;
  Complex prefactor_;
  std::optional<MellinBarnesEvaluator> mellin_barnes_;
  mutable std::optional<MellinBarnesEvaluator> fallback_;

  bool can_fall_back(double y) const;
  EvalResult fall_back(double y) const;
};

}  // namespace adlab
