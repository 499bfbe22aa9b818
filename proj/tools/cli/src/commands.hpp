#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"

namespace adlab::cli {

/// Bad flag values; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using GridPoint = std::pair<double, double>;

/// Parses "a:b" pairs such as "5:0.1".
std::vector<GridPoint> parse_pairs(const std::vector<std::string>& items, const char* flag);

struct GammaOptions {
  double t_max = 30.0;
  int grid = 61;
  int random_points = 1000;
  std::uint64_t seed = 20240601;
};

struct CorollaryOptions {
  std::vector<double> r_list{5.0, 10.0, 20.0};
  double y_min = 100.0;
  double y_max = 1.0e4;
  int grid_points = 30;
  double slack = 1.5;
};

struct LambdaOptions {
  std::vector<double> r_list{2.0, 5.0, 10.0, 20.0, 50.0};
  std::vector<double> z_list{1e-3, 1e-2, 0.1, 1.0, 10.0};
  double delta = 1.0 / 16.0;
  std::vector<GridPoint> calibration{{5.0, 0.1}, {10.0, 1.0}};
  double slack = 1.5;
};

struct Lemma2Options {
  std::vector<double> r_list{2.0, 5.0, 10.0, 20.0, 50.0};
  std::vector<double> y_list{1.0, 10.0, 100.0, 1000.0};
  std::vector<GridPoint> calibration{{2.0, 10.0}, {5.0, 100.0}};
  double slack = 1.5;
};

struct DivisorOptions {
  std::uint64_t n_max = (std::uint64_t{1} << 20) + 1;
  std::vector<std::uint64_t> shifts{1};
  std::vector<std::uint64_t> m_grid = default_m_grid();
  double alpha = 7.0 / 64.0;
  double epsilon = 0.01;
  double slope_lo = 0.4;
  double slope_hi = 0.8;

  static std::vector<std::uint64_t> default_m_grid();
};

// Each command validates its options (UsageError), writes its CSVs into
// out_dir and records checks in the manifest. Returns the exit status.
int verify_gamma(const GammaOptions& o, const std::filesystem::path& out_dir, RunManifest& m,
                 std::ostream& diag);
int verify_corollary(const CorollaryOptions& o, const std::filesystem::path& out_dir, RunManifest& m,
                     std::ostream& diag);
int scan_lambda(const LambdaOptions& o, const std::filesystem::path& out_dir, RunManifest& m,
                std::ostream& diag);
int verify_lemma2(const Lemma2Options& o, const std::filesystem::path& out_dir, RunManifest& m,
                  std::ostream& diag);
int divisor_experiment(const DivisorOptions& o, const std::filesystem::path& out_dir, RunManifest& m,
                       std::ostream& diag);

}  // namespace adlab::cli
