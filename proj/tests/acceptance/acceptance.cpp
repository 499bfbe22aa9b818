// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "adlab/cli.hpp"
#include "adlab/complex_gamma.hpp"
#include "adlab/divisor_lab.hpp"
#include "adlab/hyp2f1.hpp"
#include "adlab/lambda_theta.hpp"
#include "adlab/mb_integral.hpp"

using namespace adlab;

namespace {

struct Outcome {
  std::vector<std::string> lines;  // one per sub-check
  bool pass = true;

  void sub(bool ok, const std::string& text) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + text);
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// 1 -----------------------------------------------------------------------
Outcome gamma_identities() {
  Outcome o;
  double worst = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double t = 0.5 * i;
    const double v = std::exp(2.0 * ln_gamma({0.5, t}).real()) * std::cosh(std::numbers::pi * t) / std::numbers::pi;
    worst = std::max(worst, std::abs(v - 1.0));
  }
  o.sub(worst <= 1e-10, "critical line, 61 points on [0,30]: max err " + num(worst) + " (tol 1e-10)");

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(1.0, 50.0);
  std::uniform_real_distribution<double> im(-100.0, 100.0);
  worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = re(rng);
    const Complex z(x, im(rng));
    worst = std::max(worst, std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z));
  }
  o.sub(worst <= 1e-12, "digamma recurrence, 1000 random points: max err " + num(worst) + " (tol 1e-12)");
  return o;
}

// 2 -----------------------------------------------------------------------
Outcome hypergeometric() {
  Outcome o;
  double worst = 0.0;
  for (double r : {0.5, 2.0, 10.0, 50.0}) {
    const Complex pref = gamma_prefactor(r);
    for (double y : {0.2, 0.5, 0.8})
      worst = std::max(worst, rel(f21_series(HypPoint(r, y)).value, f21_pfaff(HypPoint(r, y)).value));
    for (double y : {1.0, 5.0, 20.0, 45.0})
      worst = std::max(worst, rel(f21_pfaff(HypPoint(r, y)).value * pref, f21_mellin_barnes(HypPoint(r, y)).value));
  }
  o.sub(worst <= 1e-8, "cross-backend agreement on overlap grids: max rel " + num(worst) + " (tol 1e-8)");

  double worst_res = 0.0;
  for (double r : {0.0, 1.0, 5.0, 12.0, 20.0}) {
    for (double y : {0.1, 0.5, 0.85, 2.0, 8.0, 20.0}) {
      const Complex a{0.5, r};
      const Complex c{1.0, 2.0 * r};
      const double h = 1e-4 * std::max(1.0, y);
      auto f = [&](double yy) { return evaluate_f21(HypPoint(r, yy)).value; };
      const Complex f0 = f(y);
      const Complex fp = -(f(y + h) - f(y - h)) / (2.0 * h);
      const Complex fpp = (f(y + h) - 2.0 * f0 + f(y - h)) / (h * h);
      const double z = -y;
      const Complex res = z * (1.0 - z) * fpp + (c - (2.0 * a + 1.0) * z) * fp - a * a * f0;
      worst_res = std::max(worst_res, std::abs(res) / (std::abs(a * a) * std::abs(f0)));
    }
  }
  o.sub(worst_res <= 1e-4, "ODE residual, r <= 20, y <= 20: max scaled residual " + num(worst_res) + " (tol 1e-4)");
  return o;
}

// 3 -----------------------------------------------------------------------
Outcome large_y_remainder() {
  Outcome o;
  auto ratio = [](double r, double y) {
    const HypPoint p(r, y);
    return std::abs(prefactored_f21(p).value - asymptotic_main(p)) * y / r;
  };
  for (double r : {5.0, 10.0, 20.0}) {
    double coarse = 0.0;
    for (double y : {100.0, 316.0, 1000.0}) coarse = std::max(coarse, ratio(r, y));
    double fine = 0.0;
    for (int i = 0; i < 30; ++i) fine = std::max(fine, ratio(r, 100.0 * std::pow(100.0, i / 29.0)));
    o.sub(fine <= 1.5 * coarse, "r = " + num(r) + ": C_fine " + num(fine) + " vs 1.5 C_coarse " + num(1.5 * coarse));
  }
  for (auto [r, y] : {std::pair{5.0, 100.0}, {10.0, 300.0}, {20.0, 1000.0}}) {
    const HypPoint p(r, y);
    const double gap = std::abs(prefactored_f21(p).value - asymptotic_main(p) - integral_I(r, y));
    o.sub(gap <= 1e-7, "contour shift identity at (" + num(r) + ", " + num(y) + "): " + num(gap) + " (tol 1e-7)");
  }
  return o;
}

// 4 -----------------------------------------------------------------------
Outcome remainder_integral() {
  Outcome o;
  const std::vector<double> rs{2.0, 5.0, 10.0, 20.0, 50.0};
  double coarse = 0.0;
  for (auto [r, y] : {std::pair{2.0, 10.0}, {5.0, 100.0}}) coarse = std::max(coarse, std::abs(integral_I(r, y)) * y / r);
  double fine = 0.0;
  for (double r : rs)
    for (double y : {1.0, 10.0, 100.0, 1000.0}) fine = std::max(fine, std::abs(integral_I(r, y)) * y / r);
  o.sub(fine <= 1.5 * coarse, "envelope |I| y / r: fine max " + num(fine) + " vs 1.5 calibration " + num(1.5 * coarse));

  std::vector<MajorantBreakdown> maj;
  for (double r : rs) maj.push_back(majorant_decomposition(r));
  struct Piece {
    const char* name;
    std::size_t index;
    double power;  // piece ~ C r^power
  };
  for (const Piece& pc : {Piece{"I2 <= C2 r^-3/2", 1, -1.5}, Piece{"I3 <= C3 r", 2, 1.0}, Piece{"I4 <= C4 r", 3, 1.0}}) {
    const double c = std::max(maj[0].pieces[pc.index] / std::pow(rs[0], pc.power),
                              maj[1].pieces[pc.index] / std::pow(rs[1], pc.power));
    double worst = 0.0;
    for (std::size_t i = 2; i < rs.size(); ++i) worst = std::max(worst, maj[i].pieces[pc.index] / std::pow(rs[i], pc.power));
    o.sub(worst <= 1.5 * c, std::string(pc.name) + ": max scaled " + num(worst) + " vs 1.5 C " + num(1.5 * c));
  }
  double share = 1.0;
  for (const auto& m : maj) share = std::min(share, m.dominant() / m.total);
  o.sub(share >= 0.5, "dominance I2+I3+I4 >= 0.5 total: min share " + num(share));
  return o;
}

// 5 -----------------------------------------------------------------------
Outcome lambda_bound() {
  Outcome o;
  const SmoothCutoff wide(1.0 / 16.0);
  const SmoothCutoff narrow(1.0 / 32.0);
  double fine = 0.0;
  double conj = 0.0;
  double shift = 0.0;
  std::string worst_shift_at;
  for (double r : {2.0, 5.0, 10.0, 20.0, 50.0}) {
    for (double z : {1e-3, 1e-2, 0.1, 1.0, 10.0}) {
      const LambdaPoint p(r, z);
      const Complex v = lambda(p, wide);
      fine = std::max(fine, std::abs(v) / lambda_envelope(p));
      conj = std::max(conj, std::abs(lambda(p.reflected(), wide) - std::conj(v)) / std::abs(v));
      const double d = std::abs(v - lambda(p, narrow)) / std::abs(v);
      if (d > shift) {
        shift = d;
        worst_shift_at = "(" + num(r) + ", " + num(z) + ")";
      }
    }
  }
  const double coarse = std::max(lambda_bound_ratio(LambdaPoint(5.0, 0.1), wide), lambda_bound_ratio(LambdaPoint(10.0, 1.0), wide));
  o.sub(fine <= 1.5 * coarse, "bound ratio: fine max " + num(fine) + " vs 1.5 calibration " + num(1.5 * coarse));
  o.sub(conj <= 1e-9, "conjugation symmetry: max rel " + num(conj) + " (tol 1e-9)");
  o.sub(shift <= 0.2, "delta 1/16 vs 1/32: max rel change " + num(shift) + " at " + worst_shift_at + " (tol 0.2)");
  return o;
}

// 6 -----------------------------------------------------------------------
Outcome divisor_pipeline() {
  Outcome o;
  const auto big = sieve_divisor_counts(10000000);
  for (std::uint64_t n : {1000u, 100000u, 10000000u}) {
    std::uint64_t sieve = 0;
    std::uint64_t hyperbola = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
      sieve += big[static_cast<std::uint32_t>(k)];
      hyperbola += n / k;
    }
    o.sub(sieve == hyperbola, "hyperbola identity at N = " + std::to_string(n));
  }

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> md(1, 500);
  std::uniform_int_distribution<std::uint64_t> fd(1, 50);
  auto d = [](std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k) c += n % k == 0;
    return c;
  };
  int mismatches = 0;
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t m = md(rng);
    const std::uint64_t f = fd(rng);
    std::uint64_t brute = 0;
    for (std::uint64_t n = 1; n <= m; ++n) brute += d(n) * d(n + f);
    mismatches += divisor_correlation(big, m, f) != brute;
  }
  o.sub(mismatches == 0, "correlation vs trial division, 50 instances: " + std::to_string(mismatches) + " mismatches");

  const std::uint64_t top = std::uint64_t{1} << 20;
  const auto table = sieve_divisor_counts(top + 1);
  const auto profile = error_profile(table, top, 1);
  std::vector<std::pair<double, double>> envelope;
  std::vector<std::pair<double, double>> points;
  for (int k = 10; k <= 20; ++k) {
    const std::uint64_t m = std::uint64_t{1} << k;
    envelope.emplace_back(static_cast<double>(m), dyadic_error_envelope(profile, m));
    points.emplace_back(static_cast<double>(m), std::abs(profile[m - 1]));
  }
  const double slope = exponent_fit(envelope).slope;
  o.sub(slope >= 0.4 && slope <= 0.8, "exponent of |E(M,1)| over M = 2^10..2^20 (dyadic envelope): " + num(slope) +
                                          " (pointwise samples " + num(exponent_fit(points).slope) + ")");
  return o;
}

// 7 -----------------------------------------------------------------------
Outcome bounds() {
  Outcome o;
  const double alpha = 7.0 / 64.0;
  const double eps = 0.01;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int order_fail = 0;
  int ratio_fail = 0;
  for (int i = 0; i < 20; ++i) {
    const double m = std::pow(10.0, 3.0 + 5.0 * u(rng));
    const double lo = std::log(crossover_shift(m, alpha));
    const double hi = std::log(std::pow(m, 2.0 / (1.0 + 2.0 * alpha)));
    const double f = std::exp(lo + (hi - lo) * (0.01 + 0.98 * u(rng)));
    const double mot = bound_rhs(m, f, alpha, eps, BoundKind::Mot);
    const double meur = bound_rhs(m, f, alpha, eps, BoundKind::Meur);
    const double nw = bound_rhs(m, f, alpha, eps, BoundKind::New);
    order_fail += !(meur <= mot);
    const double ratio = meur / nw;
    ratio_fail += !(ratio <= std::pow(m, 2.0 * eps) && ratio >= std::pow(m, -2.0 * eps));
  }
  o.sub(order_fail == 0, "Meur <= Mot at 20 points above crossover: " + std::to_string(order_fail) + " violations");
  o.sub(ratio_fail == 0, "Meur/New within M^(2 eps): " + std::to_string(ratio_fail) + " violations");
  return o;
}

// 8 -----------------------------------------------------------------------
std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  Outcome o;
  const auto root = std::filesystem::temp_directory_path() / ("adlab_acceptance_" + std::to_string(getpid()));
  const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> runs{
      {{"verify-gamma"}, {"gamma_checks.csv"}},
      {{"verify-corollary"}, {"corollary_scan.csv"}},
      {{"scan-lambda"}, {"lambda_scan.csv"}},
      {{"verify-lemma2"}, {"lemma2_scan.csv"}},
      {{"divisor-experiment"}, {"divisor_report.csv", "exponent_fit.csv"}},
  };
  for (const auto& [args, files] : runs) {
    std::ostringstream sink;
    for (const char* tag : {"a", "b"}) {
      auto full = args;
      full.push_back("--out-dir");
      full.push_back((root / tag / args[0]).string());
      adlab::cli::run(full, sink, sink);
    }
    bool same = true;
    for (const auto& file : files) {
      const std::string a = slurp(root / "a" / args[0] / file);
      const std::string b = slurp(root / "b" / args[0] / file);
      same = same && !a.empty() && a == b;
    }
    o.sub(same, args[0] + ": CSVs byte-identical across two runs");
  }
  std::filesystem::remove_all(root);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "gamma identities", 1.0, gamma_identities},
      {2, "hypergeometric backends", 60.0, hypergeometric},
      {3, "large-y remainder", 120.0, large_y_remainder},
      {4, "remainder integral and majorant", 120.0, remainder_integral},
      {5, "Lambda bound", 300.0, lambda_bound},
      {6, "divisor pipeline", 180.0, divisor_pipeline},
      {7, "bound comparison", 1.0, bounds},
      {8, "CLI determinism", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.sub(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0.0) out.sub(secs <= c.budget_s, "runtime " + num(secs) + " s (budget " + num(c.budget_s) + " s)");
    failed += !out.pass;
    std::cout << "criterion " << c.id << ' ' << (out.pass ? "PASS" : "FAIL") << "  " << c.title << "  (" << num(secs)
              << " s)\n";
    for (const auto& line : out.lines) std::cout << "    " << line << '\n';
    std::cout.flush();
  }
  std::cout << (failed ? std::to_string(failed) + " of 8 criteria failed" : std::string("all 8 criteria passed")) << '\n';
  return failed ? 1 : 0;
}
