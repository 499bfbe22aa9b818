#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adlab/complex_gamma.hpp"

namespace adlab::cli {

// %.17g, which round-trips every double.
std::string fmt(double v);
std::string fmt(std::optional<double> v);  // NA when empty
std::string fmt(Complex z);                // re+imi
std::string fmt_list(const std::vector<double>& v);
std::string fmt_list(const std::vector<std::uint64_t>& v);

/// Comma-separated file with a fixed header. Rows are buffered and written
/// by flush(), with LF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  std::size_t rows() const { return rows_.size(); }
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Named pass/fail outcome, with the measured value for the summary table.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Flat key=value record of one run.
class RunManifest {
 public:
  explicit RunManifest(std::string subcommand);

  void param(std::string key, std::string value);
  void check(const Check& c);
  void output(const std::filesystem::path& path);
  void note(std::string key, std::string value);

  const std::vector<Check>& checks() const { return checks_; }
  bool all_pass() const;

  // Stamps the end time and writes run_manifest.txt into dir.
  void write(const std::filesystem::path& dir, int exit_code);

 private:
  std::string subcommand_;
  std::string started_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::vector<std::pair<std::string, std::string>> notes_;
  std::vector<Check> checks_;
  std::vector<std::string> outputs_;
};

void print_summary(std::ostream& diag, const RunManifest& manifest);

}  // namespace adlab::cli
