#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "adlab/cli.hpp"
#include "adlab/complex_gamma.hpp"
#include "adlab/divisor_lab.hpp"
#include "adlab/errors.hpp"
#include "adlab/hyp2f1.hpp"
#include "adlab/lambda_theta.hpp"
#include "adlab/mb_integral.hpp"

namespace adlab::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string pass_cell(bool ok) { return ok ? "1" : "0"; }

int status_of(const RunManifest& m) { return m.all_pass() ? kPass : kCheckFailed; }

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void require_list(const std::vector<double>& v, const char* flag, double lo, double hi) {
  require(!v.empty(), std::string(flag) + " must not be empty");
  for (double x : v) {
    require(std::isfinite(x) && x >= lo && x <= hi,
            std::string(flag) + " values must lie in [" + fmt(lo) + ", " + fmt(hi) + "]");
  }
}

std::string pair_list(const std::vector<GridPoint>& pairs) {
  std::string out;
  for (const auto& [a, b] : pairs) {
    if (!out.empty()) out += ',';
    out += fmt(a) + ':' + fmt(b);
  }
  return out;
}

// Same point sets as the invariant suite of the library tests.
std::vector<Complex> random_points(std::mt19937_64& rng, int n, double re_lo, double re_hi, double im_max) {
  std::uniform_real_distribution<double> re(re_lo, re_hi);
  std::uniform_real_distribution<double> im(-im_max, im_max);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = re(rng);
    out.emplace_back(x, im(rng));
  }
  return out;
}

}  // namespace

std::vector<GridPoint> parse_pairs(const std::vector<std::string>& items, const char* flag) {
  std::vector<GridPoint> out;
  for (const auto& item : items) {
    const auto colon = item.find(':');
    require(colon != std::string::npos, std::string(flag) + " expects r:value pairs, got '" + item + "'");
    try {
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const std::string a = item.substr(0, colon);
      const std::string b = item.substr(colon + 1);
      const double x = std::stod(a, &used_a);
      const double y = std::stod(b, &used_b);
      require(used_a == a.size() && used_b == b.size(), std::string(flag) + ": trailing characters");
      out.emplace_back(x, y);
    } catch (const std::logic_error&) {
      throw UsageError(std::string(flag) + ": cannot parse '" + item + "'");
    }
  }
  return out;
}

std::vector<std::uint64_t> DivisorOptions::default_m_grid() {
  std::vector<std::uint64_t> grid;
  for (int k = 10; k <= 20; ++k) grid.push_back(std::uint64_t{1} << k);
  return grid;
}

// -- verify-gamma -----------------------------------------------------------

int verify_gamma(const GammaOptions& o, const std::filesystem::path& out_dir, RunManifest& m,
                 std::ostream& diag) {
  require(std::isfinite(o.t_max) && o.t_max >= 0.0 && o.t_max <= 200.0, "--t-max must lie in [0, 200]");
  require(o.grid >= 1 && o.grid <= 100000, "--grid must lie in 1..100000");
  require(o.random_points >= 1 && o.random_points <= 1000000, "--random-points must lie in 1..1e6");
  m.param("t_max", fmt(o.t_max));
  m.param("grid", std::to_string(o.grid));
  m.param("random_points", std::to_string(o.random_points));
  m.param("seed", std::to_string(o.seed));

  CsvTable csv({"check", "argument", "observed", "expected", "abs_err", "pass"});
  auto family = [&](const std::string& name, auto&& rows) {
    double worst = 0.0;
    bool ok = true;
    for (const auto& [arg, observed, expected, tol] : rows) {
      const double err = std::abs(observed - expected);
      const bool pass = err <= tol;
      ok = ok && pass;
      worst = std::max(worst, err);
      csv.add_row({name, arg, fmt(observed), fmt(expected), fmt(err), pass_cell(pass)});
    }
    m.check({name, ok, "max abs_err " + fmt(worst)});
  };
  struct Row {
    std::string arg;
    double observed;
    double expected;
    double tol;
  };

  std::vector<Row> rows;
  for (int i = 0; i < o.grid; ++i) {
    const double t = o.grid == 1 ? 0.0 : o.t_max * i / (o.grid - 1);
    const double mod_sq = std::exp(2.0 * ln_gamma({0.5, t}).real());
    rows.push_back({fmt(t), mod_sq * std::cosh(kPi * t) / kPi, 1.0, 1e-10});
  }
  family("critical_line", rows);

  std::mt19937_64 rng(o.seed);
  rows.clear();
  for (const Complex z : random_points(rng, o.random_points, 1.0, 50.0, 100.0)) {
    rows.push_back({fmt(z), std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z), 0.0, 1e-12});
  }
  family("digamma_recurrence", rows);

  rows.clear();
  for (const Complex z : random_points(rng, o.random_points, 1.0, 50.0, 100.0)) {
    rows.push_back({fmt(z), std::abs(ln_gamma(z + 1.0) - ln_gamma(z) - std::log(z)), 0.0, 1e-11});
  }
  family("ln_gamma_recurrence", rows);

  rows.clear();
  for (const Complex z : random_points(rng, o.random_points, 1e-3, 60.0, 200.0)) {
    rows.push_back({fmt(z), std::abs(ln_gamma(std::conj(z)) - std::conj(ln_gamma(z))), 0.0, 1e-13});
  }
  family("schwarz_reflection", rows);

  rows.clear();
  for (const Complex z : {Complex(0.3, 0.2), Complex(0.2, 0.1), Complex(-0.3, 0.2)}) {
    auto fd_error = [&](double h) {
      return std::abs((ln_gamma(z + h) - ln_gamma(z - h)) / (2.0 * h) - digamma(z));
    };
    rows.push_back({fmt(z), fd_error(1e-4) / fd_error(1e-5), 100.0, 20.0});
  }
  family("derivative_consistency", rows);

  rows.clear();
  rows.push_back({fmt(Complex(1.0, 0.0)), digamma(1.0).real(), -kEulerGamma, 1e-14});
  rows.push_back({fmt(Complex(0.5, 0.0)), ln_gamma(0.5).real(), 0.5 * std::log(kPi), 1e-14});
  family("reference_values", rows);

  const auto path = out_dir / "gamma_checks.csv";
  csv.write(path);
  m.output(path);
  diag << "verify-gamma: " << csv.rows() << " rows\n";
  return status_of(m);
}

// -- verify-corollary -------------------------------------------------------

int verify_corollary(const CorollaryOptions& o, const std::filesystem::path& out_dir, RunManifest& m,
                     std::ostream& diag) {
  require_list(o.r_list, "--r-list", 1.0, 100.0);
  require(std::isfinite(o.y_min) && o.y_min > 1.0, "--y-min must exceed 1");
  require(std::isfinite(o.y_max) && o.y_max >= 10.0 * o.y_min && o.y_max <= 1e6,
          "--y-max must satisfy 10 y_min <= y_max <= 1e6");
  require(o.grid_points >= 2 && o.grid_points <= 10000, "--grid-points must lie in 2..10000");
  require(o.slack >= 1.0, "--slack must be at least 1");
  m.param("r_list", fmt_list(o.r_list));
  m.param("y_min", fmt(o.y_min));
  m.param("y_max", fmt(o.y_max));
  m.param("grid_points", std::to_string(o.grid_points));
  m.param("slack", fmt(o.slack));

  const std::vector<double> coarse{o.y_min, o.y_min * std::sqrt(10.0), 10.0 * o.y_min};
  std::vector<double> fine;
  const double span = std::log(o.y_max / o.y_min);
  for (int i = 0; i < o.grid_points; ++i) fine.push_back(o.y_min * std::exp(span * i / (o.grid_points - 1)));

  CsvTable csv({"grid", "r", "y", "abs_diff", "r_over_y", "ratio", "backend"});
  for (double r : o.r_list) {
    auto scan = [&](const char* grid, const std::vector<double>& ys) {
      double worst = 0.0;
      for (double y : ys) {
        const HypPoint p(r, y);
        const EvalResult lhs = prefactored_f21(p);
        const double diff = std::abs(lhs.value - asymptotic_main(p));
        const double ratio = diff * y / r;
        worst = std::max(worst, ratio);
        csv.add_row({grid, fmt(r), fmt(y), fmt(diff), fmt(r / y), fmt(ratio),
                     std::string(backend_name(lhs.backend))});
      }
      return worst;
    };
    const double c_coarse = scan("coarse", coarse);
    const double c_fine = scan("fine", fine);
    m.check({"envelope_r=" + fmt(r), c_fine <= o.slack * c_coarse,
             "C_fine " + fmt(c_fine) + " C_coarse " + fmt(c_coarse)});
    if (r >= kRemainderMinR) {
      double worst = 0.0;
      for (double y : coarse) {
        const HypPoint p(r, y);
        worst = std::max(worst, std::abs(prefactored_f21(p).value - asymptotic_main(p) - integral_I(r, y)));
      }
      m.check({"contour_shift_r=" + fmt(r), worst <= 1e-7, "max abs_err " + fmt(worst)});
    }
  }

  const auto path = out_dir / "corollary_scan.csv";
  csv.write(path);
  m.output(path);
  diag << "verify-corollary: " << csv.rows() << " rows\n";
  return status_of(m);
}

// -- scan-lambda --------------------------------------------------------------

int scan_lambda(const LambdaOptions& o, const std::filesystem::path& out_dir, RunManifest& m,
                std::ostream& diag) {
  require_list(o.r_list, "--r-list", 2.0, 100.0);
  require_list(o.z_list, "--z-list", 1e-3, 10.0);
  require(o.delta > 0.0 && o.delta <= 0.125, "--delta must lie in (0, 1/8]");
  require(!o.calibration.empty(), "--calibration must not be empty");
  for (const auto& [r, z] : o.calibration) {
    require(r >= 2.0 && r <= 100.0 && z >= 1e-3 && z <= 10.0, "--calibration points must be in range");
  }
  require(o.slack >= 1.0, "--slack must be at least 1");
  m.param("r_list", fmt_list(o.r_list));
  m.param("z_list", fmt_list(o.z_list));
  m.param("delta", fmt(o.delta));
  m.param("calibration", pair_list(o.calibration));
  m.param("slack", fmt(o.slack));

  const SmoothCutoff cutoff(o.delta);
  std::map<GridPoint, double> ratios;
  auto ratio_at = [&](double r, double z) {
    const auto key = GridPoint{r, z};
    if (auto it = ratios.find(key); it != ratios.end()) return it->second;
    const LambdaPoint p(r, z);
    return ratios[key] = std::abs(lambda(p, cutoff)) / lambda_envelope(p);
  };

  CsvTable csv({"r", "Z", "re", "im", "abs", "envelope", "ratio", "conj_rel_err"});
  double fine_max = 0.0;
  double conj_worst = 0.0;
  bool finite = true;
  for (double r : o.r_list) {
    for (double z : o.z_list) {
      const LambdaPoint p(r, z);
      const Complex v = lambda(p, cutoff);
      const Complex reflected = lambda(p.reflected(), cutoff);
      const double env = lambda_envelope(p);
      const double ratio = std::abs(v) / env;
      const double conj_err = std::abs(reflected - std::conj(v)) / std::abs(v);
      ratios[{r, z}] = ratio;
      fine_max = std::max(fine_max, ratio);
      conj_worst = std::max(conj_worst, conj_err);
      finite = finite && std::isfinite(ratio) && ratio > 0.0;
      csv.add_row({fmt(r), fmt(z), fmt(v.real()), fmt(v.imag()), fmt(std::abs(v)), fmt(env), fmt(ratio),
                   fmt(conj_err)});
    }
  }
  double coarse_max = 0.0;
  for (const auto& [r, z] : o.calibration) coarse_max = std::max(coarse_max, ratio_at(r, z));

  m.check({"envelope", fine_max <= o.slack * coarse_max,
           "fine max " + fmt(fine_max) + " calibration max " + fmt(coarse_max)});
  m.check({"conjugation", conj_worst <= 1e-9, "max rel_err " + fmt(conj_worst)});
  m.check({"ratio_positive_finite", finite, ""});

  const auto path = out_dir / "lambda_scan.csv";
  csv.write(path);
  m.output(path);
  diag << "scan-lambda: " << csv.rows() << " rows\n";
  return status_of(m);
}

// -- verify-lemma2 ----------------------------------------------------------

int verify_lemma2(const Lemma2Options& o, const std::filesystem::path& out_dir, RunManifest& m,
                  std::ostream& diag) {
  require_list(o.r_list, "--r-list", kRemainderMinR, kRemainderMaxR);
  require_list(o.y_list, "--y-list", 1.0, 1e6);
  require(!o.calibration.empty(), "--calibration must not be empty");
  for (const auto& [r, y] : o.calibration) {
    require(r >= kRemainderMinR && r <= kRemainderMaxR && y >= 1.0 && y <= 1e6,
            "--calibration points must be in range");
  }
  require(o.slack >= 1.0, "--slack must be at least 1");
  m.param("r_list", fmt_list(o.r_list));
  m.param("y_list", fmt_list(o.y_list));
  m.param("calibration", pair_list(o.calibration));
  m.param("slack", fmt(o.slack));

  CsvTable csv({"r", "y", "abs_I", "r_over_y", "ratio", "I2", "I3", "I4", "total_majorant"});
  double fine_max = 0.0;
  double worst_share = 1.0;
  double worst_validity = 0.0;  // |I| y / absolute integral
  double worst_absolute = 0.0;  // absolute integral / total
  double worst_step = 0.0;
  for (double r : o.r_list) {
    const MajorantBreakdown maj = majorant_decomposition(r);
    const double absolute = integral_I_absolute(r);
    worst_share = std::min(worst_share, maj.dominant() / maj.total);
    worst_absolute = std::max(worst_absolute, absolute / maj.total);
    for (double y : o.y_list) {
      const RemainderIntegral rem = integral_I_detailed(r, y);
      const double abs_i = std::abs(rem.value);
      const double ratio = abs_i * y / r;
      fine_max = std::max(fine_max, ratio);
      worst_validity = std::max(worst_validity, abs_i * y / absolute);
      worst_step = std::max(worst_step, std::abs(rem.value - rem.previous) / abs_i);
      csv.add_row({fmt(r), fmt(y), fmt(abs_i), fmt(r / y), fmt(ratio), fmt(maj.pieces[1]),
                   fmt(maj.pieces[2]), fmt(maj.pieces[3]), fmt(maj.total)});
    }
  }
  double coarse_max = 0.0;
  for (const auto& [r, y] : o.calibration) coarse_max = std::max(coarse_max, std::abs(integral_I(r, y)) * y / r);

  // spot rows of the four-case profile
  double profile_err = 0.0;
  for (const auto& [r, t, expected] : {std::tuple{3.0, 1.0, -1.0}, {3.0, -2.0, 0.0}, {3.0, -5.0, -4.0},
                                       {3.0, -7.0, -7.0}, {3.0, -3.0, 0.0}, {3.0, -6.0, -6.0}}) {
    profile_err = std::max(profile_err, std::abs(exponent_profile(r, t) - expected));
  }

  m.check({"envelope", fine_max <= o.slack * coarse_max,
           "fine max " + fmt(fine_max) + " calibration max " + fmt(coarse_max)});
  m.check({"majorant_validity", worst_validity <= 1.0 + 1e-6 && worst_absolute <= kMajorantConstant,
           "max |I|y/abs " + fmt(worst_validity) + " max abs/total " + fmt(worst_absolute)});
  m.check({"dominance", worst_share >= 0.5, "min (I2+I3+I4)/total " + fmt(worst_share)});
  m.check({"quadrature_stability", worst_step <= 1e-8, "max halving change " + fmt(worst_step)});
  m.check({"exponent_profile", profile_err <= 1e-14, "max abs_err " + fmt(profile_err)});

  const auto path = out_dir / "lemma2_scan.csv";
  csv.write(path);
  m.output(path);
  diag << "verify-lemma2: " << csv.rows() << " rows\n";
  return status_of(m);
}

// -- divisor-experiment -------------------------------------------------------

int divisor_experiment(const DivisorOptions& o, const std::filesystem::path& out_dir, RunManifest& m,
                       std::ostream& diag) {
  ExperimentConfig cfg;
  cfg.shifts = o.shifts;
  cfg.m_grid = o.m_grid;
  cfg.alpha = o.alpha;
  cfg.epsilon = o.epsilon;
  cfg.output_path = out_dir.string();
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  require(o.n_max >= 2 && o.n_max <= DivisorTable::kMaxSize, "--n-max must lie in 2..2^31");
  require(o.slope_lo < o.slope_hi, "--slope-window must be increasing");
  for (std::uint64_t mm : o.m_grid) require(mm >= 2, "--m-grid values must be at least 2");
  m.param("n_max", std::to_string(o.n_max));
  m.param("shifts", fmt_list(o.shifts));
  m.param("m_grid", fmt_list(o.m_grid));
  m.param("alpha", fmt(o.alpha));
  m.param("epsilon", fmt(o.epsilon));
  m.param("slope_window", fmt(o.slope_lo) + ',' + fmt(o.slope_hi));

  const DivisorTable table = sieve_divisor_counts(o.n_max);
  diag << "divisor-experiment: sieved d(n) up to " << table.n_max() << '\n';

  CsvTable report({"M", "f", "correlation", "main_term", "error_term", "dyadic_envelope", "bound_mot",
                   "bound_meur", "bound_new", "regime", "status"});
  CsvTable fits({"f", "slope", "points", "dropped", "pointwise_slope"});
  std::size_t out_of_range = 0;
  std::size_t ordered = 0;
  std::size_t ordering_violations = 0;

  for (std::uint64_t f : o.shifts) {
    std::uint64_t m_top = 0;
    for (std::uint64_t mm : o.m_grid)
      if (mm + f <= o.n_max) m_top = std::max(m_top, mm);
    const std::vector<double> profile = m_top ? error_profile(table, m_top, f) : std::vector<double>{};

    std::vector<std::pair<double, double>> envelope_series;
    std::vector<std::pair<double, double>> point_series;
    for (std::uint64_t mm : o.m_grid) {
      if (mm + f > o.n_max) {
        ++out_of_range;
        report.add_row({std::to_string(mm), std::to_string(f), "NA", "NA", "NA", "NA", "NA", "NA", "NA", "NA",
                        "range_error"});
        continue;
      }
      const BoundReport row = make_bound_report(table, mm, f, o.alpha, o.epsilon);
      const double env = dyadic_error_envelope(profile, mm);
      envelope_series.emplace_back(static_cast<double>(mm), env);
      point_series.emplace_back(static_cast<double>(mm), std::abs(row.error_term));
      if (row.regime == Regime::AboveCrossover && row.bound_mot && row.bound_meur) {
        ++ordered;
        if (!(*row.bound_meur <= *row.bound_mot)) ++ordering_violations;
      }
      report.add_row({std::to_string(mm), std::to_string(f), std::to_string(row.correlation),
                      fmt(row.main_term), fmt(row.error_term), fmt(env), fmt(row.bound_mot),
                      fmt(row.bound_meur), fmt(row.bound_new), regime_name(row.regime), "ok"});
    }

    const std::string name = "exponent_window_f=" + std::to_string(f);
    try {
      const ExponentFit fit = exponent_fit(envelope_series);
      const ExponentFit pointwise = exponent_fit(point_series);
      if (fit.dropped) diag << "warning: dropped " << fit.dropped << " zero envelope values for f=" << f << '\n';
      fits.add_row({std::to_string(f), fmt(fit.slope), std::to_string(fit.points), std::to_string(fit.dropped),
                    fmt(pointwise.slope)});
      m.check({name, fit.slope >= o.slope_lo && fit.slope <= o.slope_hi,
               "slope " + fmt(fit.slope) + " (pointwise " + fmt(pointwise.slope) + ")"});
    } catch (const InsufficientDataError& e) {
      fits.add_row({std::to_string(f), "NA", std::to_string(envelope_series.size()), "NA", "NA"});
      m.check({name, false, e.what()});
    }
  }

  m.check({"rows_in_range", out_of_range == 0, std::to_string(out_of_range) + " rows with M + f > n_max"});
  m.check({"bound_ordering", ordering_violations == 0,
           std::to_string(ordered) + " rows above crossover, " + std::to_string(ordering_violations) +
               " violations"});

  const auto report_path = out_dir / "divisor_report.csv";
  const auto fit_path = out_dir / "exponent_fit.csv";
  report.write(report_path);
  fits.write(fit_path);
  m.output(report_path);
  m.output(fit_path);
  diag << "divisor-experiment: " << report.rows() << " report rows\n";
  return status_of(m);
}

}  // namespace adlab::cli
