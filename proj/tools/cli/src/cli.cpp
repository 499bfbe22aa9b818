#include "adlab/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <functional>
#include <optional>

#include "adlab/errors.hpp"
#include "commands.hpp"

namespace adlab::cli {

namespace {

void add_out_dir(CLI::App* sub, std::string& out_dir) {
  sub->add_option("--out-dir", out_dir, "Directory for CSV reports and run_manifest.txt")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& diag) {
  CLI::App app{"Numerical verification lab for the binary additive divisor problem", "adlab"};
  app.require_subcommand(1);
  app.fallthrough(false);

  std::string out_dir = ".";
  std::function<int(const std::filesystem::path&, RunManifest&)> action;
  std::string chosen;

  GammaOptions gamma;
  auto* g = app.add_subcommand("verify-gamma", "Check log-gamma and digamma identities");
  g->add_option("--t-max", gamma.t_max, "Largest t on the critical line")->capture_default_str();
  g->add_option("--grid", gamma.grid, "Critical-line points in [0, t-max]")->capture_default_str();
  g->add_option("--random-points", gamma.random_points, "Random points per recurrence check")
      ->capture_default_str();
  g->add_option("--seed", gamma.seed, "Seed for the random points")->capture_default_str();
  add_out_dir(g, out_dir);
  g->callback([&] {
    chosen = "verify-gamma";
    action = [&](const std::filesystem::path& dir, RunManifest& m) { return verify_gamma(gamma, dir, m, diag); };
  });

  CorollaryOptions corollary;
  auto* c = app.add_subcommand("verify-corollary", "Scan the O(r/y) remainder of the large-y expansion");
  c->add_option("--r-list", corollary.r_list, "Spectral parameters")->delimiter(',')->capture_default_str();
  c->add_option("--y-min", corollary.y_min, "Smallest y")->capture_default_str();
  c->add_option("--y-max", corollary.y_max, "Largest y")->capture_default_str();
  c->add_option("--grid-points", corollary.grid_points, "Log-spaced fine-grid points")->capture_default_str();
  c->add_option("--slack", corollary.slack, "Allowed fine/coarse ratio")->capture_default_str();
  add_out_dir(c, out_dir);
  c->callback([&] {
    chosen = "verify-corollary";
    action = [&](const std::filesystem::path& dir, RunManifest& m) {
      return verify_corollary(corollary, dir, m, diag);
    };
  });

  LambdaOptions lam;
  std::vector<std::string> lam_cal;
  auto* l = app.add_subcommand("scan-lambda", "Scan |Lambda(r, Z)| against its envelope");
  l->add_option("--r-list", lam.r_list, "Spectral parameters")->delimiter(',')->capture_default_str();
  l->add_option("--z-list", lam.z_list, "Values of Z")->delimiter(',')->capture_default_str();
  l->add_option("--delta", lam.delta, "Transition width of the cutoff")->capture_default_str();
  l->add_option("--calibration", lam_cal, "Calibration points r:Z (default 5:0.1,10:1)")->delimiter(',');
  l->add_option("--slack", lam.slack, "Allowed fine/calibration ratio")->capture_default_str();
  add_out_dir(l, out_dir);
  l->callback([&] {
    chosen = "scan-lambda";
    action = [&](const std::filesystem::path& dir, RunManifest& m) {
      if (!lam_cal.empty()) lam.calibration = parse_pairs(lam_cal, "--calibration");
      return scan_lambda(lam, dir, m, diag);
    };
  });

  Lemma2Options lemma;
  std::vector<std::string> lemma_cal;
  auto* w = app.add_subcommand("verify-lemma2", "Check the remainder integral against its majorant");
  w->add_option("--r-list", lemma.r_list, "Spectral parameters (>= 2)")->delimiter(',')->capture_default_str();
  w->add_option("--y-list", lemma.y_list, "Values of y")->delimiter(',')->capture_default_str();
  w->add_option("--calibration", lemma_cal, "Calibration points r:y (default 2:10,5:100)")->delimiter(',');
  w->add_option("--slack", lemma.slack, "Allowed fine/calibration ratio")->capture_default_str();
  add_out_dir(w, out_dir);
  w->callback([&] {
    chosen = "verify-lemma2";
    action = [&](const std::filesystem::path& dir, RunManifest& m) {
      if (!lemma_cal.empty()) lemma.calibration = parse_pairs(lemma_cal, "--calibration");
      return verify_lemma2(lemma, dir, m, diag);
    };
  });

  DivisorOptions div;
  std::vector<double> window;
  auto* d = app.add_subcommand("divisor-experiment", "Measure the error term of sum d(n) d(n+f)");
  d->add_option("--n-max", div.n_max, "Sieve limit")->capture_default_str();
  d->add_option("--shifts", div.shifts, "Shifts f")->delimiter(',')->capture_default_str();
  d->add_option("--m-grid", div.m_grid, "Values of M")->delimiter(',')->capture_default_str();
  d->add_option("--alpha", div.alpha, "Ramanujan exponent")->capture_default_str();
  d->add_option("--epsilon", div.epsilon, "Epsilon in the bounds")->capture_default_str();
  d->add_option("--slope-window", window, "Accepted exponent range lo,hi (default 0.4,0.8)")
      ->delimiter(',')
      ->expected(2);
  add_out_dir(d, out_dir);
  d->callback([&] {
    chosen = "divisor-experiment";
    action = [&](const std::filesystem::path& dir, RunManifest& m) {
      if (window.size() == 2) {
        div.slope_lo = window[0];
        div.slope_hi = window[1];
      }
      return divisor_experiment(div, dir, m, diag);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, diag);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, diag);
  } catch (const CLI::ParseError& e) {
    app.exit(e, diag, diag);
    diag << app.help();
    return kUsageError;
  }

  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    diag << "error: cannot create output directory " << dir << '\n';
    return kUsageError;
  }

  RunManifest manifest(chosen);
  manifest.param("out_dir", out_dir);
  int code = kPass;
  try {
    code = action(dir, manifest);
  } catch (const UsageError& e) {
    diag << "error: " << e.what() << '\n';
    manifest.note("error", e.what());
    code = kUsageError;
  } catch (const std::exception& e) {
    diag << "check aborted: " << e.what() << '\n';
    manifest.note("error", e.what());
    code = kCheckFailed;
  }
  manifest.write(dir, code);
  if (code != kUsageError) {
    diag << chosen << " summary:\n";
    print_summary(diag, manifest);
    diag << (code == kPass ? "ALL CHECKS PASSED" : "CHECKS FAILED") << '\n';
  }
  return code;
}

}  // namespace adlab::cli
