#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace adlab {

/// d(1..n_max) from the harmonic sieve. Immutable once built.
class DivisorTable {
 public:
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 31;

  std::uint32_t n_max() const { return n_max_; }

  // d(n) for 1 <= n <= n_max.
  std::uint16_t operator[](std::uint32_t n) const { return counts_[n]; }
  std::uint16_t at(std::uint64_t n) const;

  std::span<const std::uint16_t> counts() const { return counts_; }

 private:
  friend DivisorTable sieve_divisor_counts(std::uint64_t n_max);
  DivisorTable(std::uint32_t n_max, std::vector<std::uint16_t> counts)
      : n_max_(n_max), counts_(std::move(counts)) {}

  std::uint32_t n_max_;
  std::vector<std::uint16_t> counts_;  // counts_[0] unused
};

/// Throws CapacityError if n_max is 0, above 2^31, or cannot be allocated.
DivisorTable sieve_divisor_counts(std::uint64_t n_max);

/// sum_{n <= M} d(n) d(n+f); RangeError if M + f > n_max.
std::uint64_t divisor_correlation(const DivisorTable& table, std::uint64_t m, std::uint64_t f);

/// All prefix sums C(n) = sum_{k <= n} d(k) d(k+f) for n = 1..m_max (index n-1).
std::vector<std::uint64_t> correlation_prefix(const DivisorTable& table, std::uint64_t m_max,
                                              std::uint64_t f);

/// Coefficients of the main-term integrand
///   S0 A B + 2 S1 (A + B) + 4 S2,  A = log x + 2 gamma, B = log(x+f) + 2 gamma,
/// where S0, S1, S2 are the value and first two derivatives at s = 2 of
/// sigma_{1-s}(f) / zeta(s) = sum_q c_q(f) q^-s.
struct MainTermCoefficients {
  double s0 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
};

MainTermCoefficients main_term_coefficients(std::uint64_t f);

/// Main-term integrand at x > 0.
double main_term_density(const MainTermCoefficients& c, double x, double f);

/// MT(M, f) = int_0^M density(x) dx on dyadic 64-point Gauss-Legendre panels. M >= 2.
double main_term(std::uint64_t m, std::uint64_t f);

/// MT(n, f) for n = 1..m_max (index n-1), built by unit-interval increments.
std::vector<double> main_term_profile(std::uint64_t m_max, std::uint64_t f);

/// correlation - main term.
double error_term(const DivisorTable& table, std::uint64_t m, std::uint64_t f);

/// E(n, f) for n = 1..m_max (index n-1).
std::vector<double> error_profile(const DivisorTable& table, std::uint64_t m_max, std::uint64_t f);

/// max |E(n, f)| over M/2 < n <= M, read from an error_profile.
double dyadic_error_envelope(std::span<const double> profile, std::uint64_t m);

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
  std::size_t dropped = 0;  // entries with |E| == 0
};

/// Least-squares slope of log|E| against log M. Zero entries are dropped;
/// InsufficientDataError below 5 usable points.
ExponentFit exponent_fit(std::span<const std::pair<double, double>> series);

enum class BoundKind { Mot, Meur, New };
enum class Regime { BelowCrossover, AboveCrossover };

std::string bound_name(BoundKind kind);
std::string regime_name(Regime regime);

/// M^(2 / (1 + 4 alpha)), where the two classical bounds stop agreeing.
double crossover_shift(double m, double alpha);

Regime regime_of(double m, double f, double alpha);

/// Right-hand side of the chosen bound with implied constant 1.
/// RangeError when (M, f) is outside that bound's validity range:
///   Mot:  1 <= f <= M^(2/(1+2 alpha))
///   Meur: 1 <= f <= M^(2-eps)
///   New:  M^(2/(1+4 alpha)) < f < M^(2-eps)
double bound_rhs(double m, double f, double alpha, double epsilon, BoundKind which);

/// delta M + delta^(-1/2) f^(1/2), the smoothing-parameter budget.
double delta_objective(double delta, double m, double f);

/// f^(1/3) / M^(2/3), where the two summands of delta_objective are equal.
double balanced_delta(double m, double f);

struct ExperimentConfig {
  std::vector<std::uint64_t> shifts{1};
  std::vector<std::uint64_t> m_grid;
  double alpha = 7.0 / 64.0;
  double epsilon = 0.01;
  std::string output_path = ".";

  // Throws DomainError unless alpha in [0, 1/2], epsilon > 0 and 1 <= f < M^2.
  void validate() const;
};

struct BoundReport {
  std::uint64_t m = 0;
  std::uint64_t f = 0;
  std::uint64_t correlation = 0;
  double main_term = 0.0;
  double error_term = 0.0;
  std::optional<double> bound_mot;  // empty outside the bound's validity range
  std::optional<double> bound_meur;
  std::optional<double> bound_new;
  Regime regime = Regime::BelowCrossover;
};

BoundReport make_bound_report(const DivisorTable& table, std::uint64_t m, std::uint64_t f,
                              double alpha, double epsilon);

}  // namespace adlab
