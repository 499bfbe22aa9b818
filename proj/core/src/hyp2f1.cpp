#include "adlab/hyp2f1.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "adlab/errors.hpp"

namespace adlab {
namespace {

using LongComplex = std::complex<long double>;

constexpr double kContour = -0.25;
constexpr double kMaxStep = 0.05;
constexpr double kRefineTol = 1e-9;
constexpr double kAcceptTol = 1e-7;
constexpr double kFallbackTol = 1e-9;  // series/Pfaff estimate above which the dispatcher prefers Mellin-Barnes
constexpr int kMaxHalvings = 6;
constexpr std::size_t kMaxSeriesTerms = 1'000'000;
constexpr long double kSeriesStopTol = 1e-16L;
// Gamma samples below this fraction of the peak are dropped from the sums.
constexpr double kSampleTrim = 1e-18;

struct SeriesSum {
  LongComplex value;
  long double last_term = 0.0L;
  long double abs_sum = 0.0L;
  std::size_t terms = 0;
};

// Sum of (a)_k (b)_k / ((c)_k k!) z^k with Pochhammer ratios built up term by
// term. Stops once two consecutive terms fall below kSeriesStopTol |sum|.
SeriesSum gauss_series(LongComplex a, LongComplex b, LongComplex c, long double z) {
  SeriesSum out;
  LongComplex term = 1.0L;
  out.value = 1.0L;
  out.abs_sum = 1.0L;
  int small_in_a_row = 0;
  for (std::size_t k = 0; k < kMaxSeriesTerms; ++k) {
    const long double kk = static_cast<long double>(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0L)) * z;
    out.value += term;
    const long double mag = std::abs(term);
    out.abs_sum += mag;
    out.last_term = mag;
    out.terms = k + 1;
    if (mag < kSeriesStopTol * std::abs(out.value)) {
      if (++small_in_a_row == 2) return out;
    } else {
      small_in_a_row = 0;
    }
  }
  throw ConvergenceError("hypergeometric series: no convergence within 1e6 terms");
}

double series_error(const SeriesSum& s) {
  return static_cast<double>(s.last_term + 8.0L * LDBL_EPSILON * s.abs_sum);
}

void check_thresholds(const DispatchThresholds& t) {
  if (!(t.series_max_y > 0.0 && t.series_max_y <= kSeriesMaxY && t.pfaff_max_y >= t.series_max_y &&
        t.pfaff_max_y <= kPfaffMaxY)) {
    throw DomainError("dispatch thresholds must satisfy 0 < series_max_y <= 0.9 and series_max_y <= pfaff_max_y <= 50");
  }
}

EvalResult checked(EvalResult r, const char* what) {
  require_finite(r.value, what);
  if (!(r.est_error <= kAcceptTol * std::abs(r.value))) {
    throw ConvergenceError(std::string(what) + ": error estimate above 1e-7 relative");
  }
  return r;
}

EvalResult prefactor_times(const EvalResult& f, Complex prefactor) {
  const double mag = std::abs(prefactor);
  EvalResult out;
  out.value = prefactor * f.value;
  out.est_error = mag * f.est_error + 1e-13 * std::abs(out.value);
  out.backend = f.backend;
  return out;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Series:
      return "series";
    case Backend::Pfaff:
      return "pfaff";
    case Backend::MellinBarnes:
      return "mellin_barnes";
    case Backend::Asymptotic:
      return "asymptotic";
  }
  return "unknown";
}

HypPoint::HypPoint(double r, double y) : r_(r), y_(y) {
  if (!std::isfinite(r) || std::abs(r) > kHypMaxAbsR) {
    throw DomainError("HypPoint: r must be finite with |r| <= 100");
  }
  if (!(y > 0.0) || y > kHypMaxY) {
    throw DomainError("HypPoint: y must satisfy 0 < y <= 1e6");
  }
}

Complex gamma_prefactor(double r) {
  const Complex a{0.5, r};
  const Complex c{1.0, 2.0 * r};
  return require_finite(std::exp(2.0 * ln_gamma(a) - ln_gamma(c)), "gamma_prefactor");
}

EvalResult f21_series(const HypPoint& p) {
  if (!(p.y() < kSeriesMaxY)) throw DomainError("f21_series: requires y < 0.9");
  const LongComplex a{0.5L, static_cast<long double>(p.r())};
  const LongComplex c{1.0L, 2.0L * static_cast<long double>(p.r())};
  const SeriesSum s = gauss_series(a, a, c, -static_cast<long double>(p.y()));
  EvalResult out;
  out.value = Complex(static_cast<double>(s.value.real()), static_cast<double>(s.value.imag()));
  out.est_error = series_error(s);
  out.backend = Backend::Series;
  require_finite(out.value, "f21_series");
  return out;
}

EvalResult f21_pfaff(const HypPoint& p) {
  if (!(p.y() <= kPfaffMaxY)) throw DomainError("f21_pfaff: requires y <= 50");
  const long double y = p.y();
  const LongComplex a{0.5L, static_cast<long double>(p.r())};
  const LongComplex c{1.0L, 2.0L * static_cast<long double>(p.r())};
  // F(a, b; c; -y) = (1+y)^(-a) F(a, c-b; c; y/(1+y)), here with b = a.
  const SeriesSum s = gauss_series(a, c - a, c, y / (1.0L + y));
  const LongComplex scale = std::exp(-a * std::log1p(y));
  const LongComplex v = scale * s.value;
  EvalResult out;
  out.value = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  out.est_error = static_cast<double>(std::abs(scale)) * series_error(s);
  out.backend = Backend::Pfaff;
  require_finite(out.value, "f21_pfaff");
  return out;
}

// -- Mellin-Barnes ----------------------------------------------------------

MellinBarnesEvaluator::MellinBarnesEvaluator(double r, double y_lo, double y_hi)
    : r_(r), y_lo_(y_lo), y_hi_(y_hi) {
  if (!(std::abs(r) >= kMellinBarnesMinAbsR && std::abs(r) <= kHypMaxAbsR)) {
    throw DomainError("Mellin-Barnes backend: requires 0.01 <= |r| <= 100");
  }
  if (!(y_lo >= kMellinBarnesMinY && y_hi >= y_lo && y_hi <= kHypMaxY)) {
    throw DomainError("Mellin-Barnes backend: requires 0.1 <= y <= 1e6");
  }

  const double max_abs_log = std::max(std::abs(std::log(y_lo)), std::abs(std::log(y_hi)));
  const double h0 = std::min(kMaxStep, std::numbers::pi / (8.0 * (1.0 + max_abs_log)));
  const double half_width = 2.0 * std::abs(r) + 40.0 + 8.0 * std::log1p(y_hi);

  const Complex a{0.5, r};
  const Complex c{1.0, 2.0 * r};
  auto weight = [&](double t) {
    const Complex s{kContour, t};
    return std::exp(2.0 * ln_gamma(a + s) + ln_gamma(-s) - ln_gamma(c + s));
  };

  const auto intervals = static_cast<std::size_t>(std::ceil(2.0 * half_width / h0));
  double h = 2.0 * half_width / static_cast<double>(intervals);
  samples_.reserve(2 * intervals + 1);
  for (std::size_t k = 0; k <= intervals; ++k) {
    const double t = -half_width + static_cast<double>(k) * h;
    samples_.push_back({t, weight(t), true});
  }

  std::vector<double> probes{y_lo, std::sqrt(y_lo * y_hi), y_hi};
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());

  double worst = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= kMaxHalvings; ++level) {
    std::vector<Sample> refined;
    refined.reserve(2 * samples_.size() - 1);
    for (std::size_t k = 0; k < samples_.size(); ++k) {
      refined.push_back({samples_[k].t, samples_[k].weight, true});
      if (k + 1 < samples_.size()) {
        const double t = samples_[k].t + 0.5 * h;
        refined.push_back({t, weight(t), false});
      }
    }
    samples_ = std::move(refined);
    h *= 0.5;
    step_ = h;
    halvings_ = level;

    worst = 0.0;
    for (double y : probes) {
      Complex fine;
      Complex coarse;
      sums(y, fine, coarse);
      worst = std::max(worst, std::abs(fine - coarse) / std::abs(fine));
    }
    if (worst <= kRefineTol) break;
  }
  if (!(worst <= kAcceptTol)) {
    throw ConvergenceError("Mellin-Barnes backend: step halving disagreement " +
                           std::to_string(worst) + " after refinement cap");
  }

  double peak = 0.0;
  for (const auto& s : samples_) peak = std::max(peak, std::abs(s.weight));
  auto negligible = [&](const Sample& s) { return std::abs(s.weight) < kSampleTrim * peak; };
  const auto first = std::find_if_not(samples_.begin(), samples_.end(), negligible);
  const auto last = std::find_if_not(samples_.rbegin(), samples_.rend(), negligible).base();
  samples_ = std::vector<Sample>(first, last);
}

void MellinBarnesEvaluator::sums(double y, Complex& fine, Complex& coarse) const {
  const double log_y = std::log(y);
  Complex all{0.0, 0.0};
  Complex even{0.0, 0.0};
  for (const auto& s : samples_) {
    const Complex term = s.weight * std::polar(1.0, s.t * log_y);
    all += term;
    if (s.coarse) even += term;
  }
  const double scale = std::exp(kContour * log_y) / (2.0 * std::numbers::pi);
  fine = all * (step_ * scale);
  coarse = even * (2.0 * step_ * scale);
}

EvalResult MellinBarnesEvaluator::operator()(double y) const {
  if (!(y >= y_lo_ * (1.0 - 1e-12) && y <= y_hi_ * (1.0 + 1e-12))) {
    throw DomainError("MellinBarnesEvaluator: y outside the prepared range");
  }
  Complex fine;
  Complex coarse;
  sums(y, fine, coarse);
  EvalResult out;
  out.value = fine;
  out.est_error = std::abs(fine - coarse);
  out.backend = Backend::MellinBarnes;
  return checked(out, "f21_mellin_barnes");
}

EvalResult f21_mellin_barnes(const HypPoint& p) {
  return MellinBarnesEvaluator(p.r(), p.y(), p.y())(p.y());
}

// -- asymptotic form -------------------------------------------------------

Complex corollary_bracket(double r, double log_y) {
  return log_y - 2.0 * kEulerGamma - 2.0 * digamma(Complex(0.5, r));
}

Complex asymptotic_main(const HypPoint& p) {
  if (!(p.y() > 1.0)) throw DomainError("asymptotic_main: requires y > 1");
  const double log_y = std::log(p.y());
  const Complex twist = std::exp(-Complex(0.5, p.r()) * log_y);
  return require_finite(twist * corollary_bracket(p.r(), log_y), "asymptotic_main");
}

// -- dispatch ---------------------------------------------------------------

PrefactoredF21::PrefactoredF21(double r, double y_lo, double y_hi,
                               const DispatchThresholds& thresholds)
    : r_(r), y_lo_(y_lo), y_hi_(y_hi), thresholds_(thresholds) {
  check_thresholds(thresholds_);
  if (!(y_hi >= y_lo)) throw DomainError("PrefactoredF21: empty y range");
  static_cast<void>(HypPoint(r, y_lo));
  static_cast<void>(HypPoint(r, y_hi));
  prefactor_ = gamma_prefactor(r);
  if (y_hi >= thresholds_.pfaff_max_y) {
    mellin_barnes_.emplace(r, std::max(y_lo, thresholds_.pfaff_max_y), y_hi);
  }
}

bool PrefactoredF21::can_fall_back(double y) const {
  return y >= kMellinBarnesMinY && std::abs(r_) >= kMellinBarnesMinAbsR;
}

EvalResult PrefactoredF21::fall_back(double y) const {
  if (!fallback_) {
    const double hi = std::min(y_hi_, thresholds_.pfaff_max_y);
    fallback_.emplace(r_, std::max(y_lo_, kMellinBarnesMinY), std::max(hi, y));
  }
  return (*fallback_)(y);
}

EvalResult PrefactoredF21::operator()(double y) const {
  const HypPoint p(r_, y);
  if (y < thresholds_.pfaff_max_y) {
    const EvalResult f = y < thresholds_.series_max_y ? f21_series(p) : f21_pfaff(p);
    const EvalResult out = prefactor_times(f, prefactor_);
    // cancellation in the sums grows like exp(pi |r|); the contour integral does not
    if (out.est_error > kFallbackTol * std::abs(out.value) && can_fall_back(y)) return fall_back(y);
    return checked(out, "prefactored_f21");
  }
  if (!mellin_barnes_) throw DomainError("PrefactoredF21: y outside the prepared range");
  return (*mellin_barnes_)(y);
}

EvalResult prefactored_f21(const HypPoint& p, const DispatchThresholds& thresholds) {
  return PrefactoredF21(p.r(), p.y(), p.y(), thresholds)(p.y());
}

EvalResult evaluate_f21(const HypPoint& p, const DispatchThresholds& thresholds) {
  check_thresholds(thresholds);
  if (p.y() < thresholds.pfaff_max_y) {
    const EvalResult f = p.y() < thresholds.series_max_y ? f21_series(p) : f21_pfaff(p);
    if (!(f.est_error > kFallbackTol * std::abs(f.value)) || p.y() < kMellinBarnesMinY ||
        std::abs(p.r()) < kMellinBarnesMinAbsR) {
      return f;
    }
  }
  EvalResult mb = f21_mellin_barnes(p);
  const Complex prefactor = gamma_prefactor(p.r());
  mb.value /= prefactor;
  mb.est_error /= std::abs(prefactor);
  return mb;
}

}  // namespace adlab
