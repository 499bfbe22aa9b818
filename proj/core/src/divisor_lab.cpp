#include "adlab/divisor_lab.hpp"

#include <algorithm>
#include <cmath>
#include <new>
#include <numbers>
#include <string>

#include "adlab/complex_gamma.hpp"
#include "adlab/errors.hpp"
#include "adlab/quadrature.hpp"

namespace adlab {
namespace {

constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
constexpr double kZeta2Prime = -0.93754825431584375370257409456786;
constexpr double kZeta2Second = 1.98928023429890102342085868742;

constexpr int kDyadicPanels = 80;

std::vector<std::uint64_t> divisors_of(std::uint64_t f) {
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= f; ++d) {
    if (f % d != 0) continue;
    small.push_back(d);
    if (d != f / d) large.push_back(f / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

const GaussLegendreRule& rule64() {
  static const GaussLegendreRule rule = gauss_legendre(64);
  return rule;
}

const GaussLegendreRule& rule16() {
  static const GaussLegendreRule rule = gauss_legendre(16);
  return rule;
}

// int_0^x density, x > 0: dyadic panels [x/2^(k+1), x/2^k] keep the log
// singularity at 0 outside every panel; the remaining sliver [0, x 2^-80] is
// integrated in closed form with log(t + f) frozen at log f.
double main_term_integral(const MainTermCoefficients& c, double x, double f) {
  auto density = [&](double t) { return main_term_density(c, t, f); };
  double hi = x;
  double acc = 0.0;
  for (int k = 0; k < kDyadicPanels; ++k) {
    const double lo = 0.5 * hi;
    acc += integrate_panel(rule64(), density, lo, hi);
    hi = lo;
  }
  const double eps = hi;
  const double int_a = eps * (std::log(eps) - 1.0 + 2.0 * kEulerGamma);
  const double b0 = std::log(f) + 2.0 * kEulerGamma;
  acc += c.s0 * b0 * int_a + 2.0 * c.s1 * (int_a + eps * b0) + 4.0 * c.s2 * eps;
  return acc;
}

void check_shift(std::uint64_t f, const char* what) {
  if (f == 0) throw DomainError(std::string(what) + ": shift f must be positive");
}

}  // namespace

std::uint16_t DivisorTable::at(std::uint64_t n) const {
  if (n == 0 || n > n_max_) {
    throw RangeError("DivisorTable: index " + std::to_string(n) + " outside 1.." +
                     std::to_string(n_max_));
  }
  return counts_[n];
}

DivisorTable sieve_divisor_counts(std::uint64_t n_max) {
  if (n_max == 0 || n_max > DivisorTable::kMaxSize) {
    throw CapacityError("sieve_divisor_counts: n_max must lie in 1..2^31");
  }
  std::vector<std::uint16_t> counts;
  try {
    counts.assign(n_max + 1, 0);
  } catch (const std::bad_alloc&) {
    throw CapacityError("sieve_divisor_counts: cannot allocate " + std::to_string(2 * (n_max + 1)) +
                        " bytes");
  }
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    for (std::uint64_t m = k; m <= n_max; m += k) ++counts[m];
  }
  return DivisorTable(static_cast<std::uint32_t>(n_max), std::move(counts));
}

std::uint64_t divisor_correlation(const DivisorTable& table, std::uint64_t m, std::uint64_t f) {
  check_shift(f, "divisor_correlation");
  if (m + f > table.n_max()) {
    throw RangeError("divisor_correlation: M + f = " + std::to_string(m + f) +
                     " exceeds the table size " + std::to_string(table.n_max()));
  }
  const auto d = table.counts();
  std::uint64_t acc = 0;
  for (std::uint64_t n = 1; n <= m; ++n) acc += std::uint64_t{d[n]} * d[n + f];
  return acc;
}

std::vector<std::uint64_t> correlation_prefix(const DivisorTable& table, std::uint64_t m_max,
                                              std::uint64_t f) {
  check_shift(f, "correlation_prefix");
  if (m_max + f > table.n_max()) {
    throw RangeError("correlation_prefix: M + f exceeds the table size");
  }
  const auto d = table.counts();
  std::vector<std::uint64_t> out(m_max);
  std::uint64_t acc = 0;
  for (std::uint64_t n = 1; n <= m_max; ++n) {
    acc += std::uint64_t{d[n]} * d[n + f];
    out[n - 1] = acc;
  }
  return out;
}

MainTermCoefficients main_term_coefficients(std::uint64_t f) {
  check_shift(f, "main_term_coefficients");
  // sigma_{1-s}(f) and its s-derivatives at s = 2.
  double sigma0 = 0.0;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  for (std::uint64_t d : divisors_of(f)) {
    const double inv = 1.0 / static_cast<double>(d);
    const double log_d = std::log(static_cast<double>(d));
    sigma0 += inv;
    sigma1 -= log_d * inv;
    sigma2 += log_d * log_d * inv;
  }
  // 1/zeta(s) and its s-derivatives at s = 2.
  const double z0 = 1.0 / kZeta2;
  const double z1 = -kZeta2Prime / (kZeta2 * kZeta2);
  const double z2 = 2.0 * kZeta2Prime * kZeta2Prime / (kZeta2 * kZeta2 * kZeta2) -
                    kZeta2Second / (kZeta2 * kZeta2);
  MainTermCoefficients c;
  c.s0 = sigma0 * z0;
  c.s1 = sigma1 * z0 + sigma0 * z1;
  c.s2 = sigma2 * z0 + 2.0 * sigma1 * z1 + sigma0 * z2;
  return c;
}

double main_term_density(const MainTermCoefficients& c, double x, double f) {
  const double a = std::log(x) + 2.0 * kEulerGamma;
  const double b = std::log(x + f) + 2.0 * kEulerGamma;
  return c.s0 * a * b + 2.0 * c.s1 * (a + b) + 4.0 * c.s2;
}

double main_term(std::uint64_t m, std::uint64_t f) {
  if (m < 2) throw DomainError("main_term: requires M >= 2");
  return main_term_integral(main_term_coefficients(f), static_cast<double>(m),
                            static_cast<double>(f));
}

std::vector<double> main_term_profile(std::uint64_t m_max, std::uint64_t f) {
  const MainTermCoefficients c = main_term_coefficients(f);
  const double fd = static_cast<double>(f);
  auto density = [&](double t) { return main_term_density(c, t, fd); };
  std::vector<double> out(m_max);
  if (m_max == 0) return out;
  long double acc = main_term_integral(c, 1.0, fd);
  out[0] = static_cast<double>(acc);
  for (std::uint64_t n = 1; n < m_max; ++n) {
    const double lo = static_cast<double>(n);
    acc += integrate_panel(rule16(), density, lo, lo + 1.0);
    out[n] = static_cast<double>(acc);
  }
  return out;
}

double error_term(const DivisorTable& table, std::uint64_t m, std::uint64_t f) {
  const std::uint64_t corr = divisor_correlation(table, m, f);
  const double mt = main_term(m, f);
  return static_cast<double>(corr) - mt;
}

std::vector<double> error_profile(const DivisorTable& table, std::uint64_t m_max, std::uint64_t f) {
  const std::vector<std::uint64_t> corr = correlation_prefix(table, m_max, f);
  std::vector<double> out = main_term_profile(m_max, f);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<double>(corr[i]) - out[i];
  return out;
}

double dyadic_error_envelope(std::span<const double> profile, std::uint64_t m) {
  if (m < 2 || m > profile.size()) {
    throw RangeError("dyadic_error_envelope: M outside the profile");
  }
  double worst = 0.0;
  for (std::uint64_t n = m / 2 + 1; n <= m; ++n) worst = std::max(worst, std::abs(profile[n - 1]));
  return worst;
}

ExponentFit exponent_fit(std::span<const std::pair<double, double>> series) {
  ExponentFit out;
  std::vector<std::pair<double, double>> logs;
  for (const auto& [m, e] : series) {
    if (e == 0.0) {
      ++out.dropped;
      continue;
    }
    if (!(m > 0.0)) throw DomainError("exponent_fit: M must be positive");
    logs.emplace_back(std::log(m), std::log(std::abs(e)));
  }
  if (logs.size() < 5) {
    throw InsufficientDataError("exponent_fit: need at least 5 non-zero points, have " +
                                std::to_string(logs.size()));
  }
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : logs) {
    mx += x;
    my += y;
  }
  const double n = static_cast<double>(logs.size());
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : logs) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0) throw InsufficientDataError("exponent_fit: all M values coincide");
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  out.points = logs.size();
  return out;
}

std::string bound_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::Mot:
      return "mot";
    case BoundKind::Meur:
      return "meur";
    case BoundKind::New:
      return "new";
  }
  return "unknown";
}

std::string regime_name(Regime regime) {
  return regime == Regime::BelowCrossover ? "below_crossover" : "above_crossover";
}

double crossover_shift(double m, double alpha) { return std::pow(m, 2.0 / (1.0 + 4.0 * alpha)); }

Regime regime_of(double m, double f, double alpha) {
  return f > crossover_shift(m, alpha) ? Regime::AboveCrossover : Regime::BelowCrossover;
}

double bound_rhs(double m, double f, double alpha, double epsilon, BoundKind which) {
  if (!(m >= 2.0 && f >= 1.0)) throw RangeError("bound_rhs: requires M >= 2 and f >= 1");
  if (!(alpha >= 0.0 && alpha <= 0.5) || !(epsilon >= 0.0)) {
    throw DomainError("bound_rhs: requires alpha in [0, 1/2] and epsilon >= 0");
  }
  const double mm = m * m + m * f;
  switch (which) {
    case BoundKind::Mot: {
      if (f > std::pow(m, 2.0 / (1.0 + 2.0 * alpha))) {
        throw RangeError("bound_rhs(mot): f above M^(2/(1+2 alpha))");
      }
      return std::pow(mm, 1.0 / 3.0 + epsilon) +
             std::pow(f, 0.125 + 0.5 * alpha) * std::pow(mm, 0.25 + epsilon) +
             std::pow(f, 0.5 + alpha) * std::pow(m, epsilon);
    }
    case BoundKind::Meur: {
      if (f > std::pow(m, 2.0 - epsilon)) throw RangeError("bound_rhs(meur): f above M^(2-eps)");
      const double m_eps = std::pow(m, epsilon);
      return std::cbrt(mm) * m_eps +
             std::pow(mm, 0.25) * m_eps * std::min(std::pow(m, 0.25), std::pow(f, 0.125 + 0.5 * alpha));
    }
    case BoundKind::New: {
      if (!(f > crossover_shift(m, alpha) && f < std::pow(m, 2.0 - epsilon))) {
        throw RangeError("bound_rhs(new): requires M^(2/(1+4 alpha)) < f < M^(2-eps)");
      }
      return std::pow(f, epsilon) * (std::cbrt(f * m) + std::pow(f, 0.25) * std::sqrt(m));
    }
  }
  throw DomainError("bound_rhs: unknown bound");
}

double delta_objective(double delta, double m, double f) {
  return delta * m + std::sqrt(f / delta);
}

double balanced_delta(double m, double f) { return std::cbrt(f) / std::pow(m, 2.0 / 3.0); }

void ExperimentConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw DomainError("alpha must lie in [0, 1/2]");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  if (shifts.empty() || m_grid.empty()) throw DomainError("shifts and M grid must be non-empty");
  for (std::uint64_t m : m_grid) {
    for (std::uint64_t f : shifts) {
      const double m2 = static_cast<double>(m) * static_cast<double>(m);
      if (f < 1 || static_cast<double>(f) >= m2) {
        throw DomainError("every (M, f) must satisfy 1 <= f < M^2");
      }
    }
  }
}

BoundReport make_bound_report(const DivisorTable& table, std::uint64_t m, std::uint64_t f,
                              double alpha, double epsilon) {
  BoundReport rep;
  rep.m = m;
  rep.f = f;
  rep.correlation = divisor_correlation(table, m, f);
  rep.main_term = main_term(m, f);
  rep.error_term = static_cast<double>(rep.correlation) - rep.main_term;
  const double md = static_cast<double>(m);
  const double fd = static_cast<double>(f);
  auto try_bound = [&](BoundKind k) -> std::optional<double> {
    try {
      return bound_rhs(md, fd, alpha, epsilon, k);
    } catch (const RangeError&) {
      return std::nullopt;
    }
  };
  rep.bound_mot = try_bound(BoundKind::Mot);
  rep.bound_meur = try_bound(BoundKind::Meur);
  rep.bound_new = try_bound(BoundKind::New);
  rep.regime = regime_of(md, fd, alpha);
  return rep;
}

}  // namespace adlab
