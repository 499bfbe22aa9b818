#include "report.hpp"

#include <cstdio>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace adlab::cli {

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_cells(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += fmt(v[i]);
    } else {
      out += std::to_string(v[i]);
    }
  }
  return out;
}

}  // namespace

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(std::optional<double> v) { return v ? fmt(*v) : std::string("NA"); }

std::string fmt(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string fmt_list(const std::vector<double>& v) { return join(v); }
std::string fmt_list(const std::vector<std::uint64_t>& v) { return join(v); }

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw std::logic_error("CsvTable: row width mismatch");
  rows_.push_back(std::move(cells));
}

void CsvTable::write(const std::filesystem::path& path) const {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_cells(os, header_);
  for (const auto& row : rows_) write_cells(os, row);
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

RunManifest::RunManifest(std::string subcommand)
    : subcommand_(std::move(subcommand)), started_(utc_now()) {}

void RunManifest::param(std::string key, std::string value) {
  params_.emplace_back(std::move(key), std::move(value));
}

void RunManifest::check(const Check& c) { checks_.push_back(c); }

void RunManifest::output(const std::filesystem::path& path) { outputs_.push_back(path.string()); }

void RunManifest::note(std::string key, std::string value) {
  notes_.emplace_back(std::move(key), std::move(value));
}

bool RunManifest::all_pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

void RunManifest::write(const std::filesystem::path& dir, int exit_code) {
  std::ofstream os(dir / "run_manifest.txt", std::ios::binary | std::ios::trunc);
  if (!os) return;
  os << "subcommand=" << subcommand_ << '\n';
  for (const auto& [k, v] : params_) os << "param." << k << '=' << v << '\n';
  os << "start=" << started_ << '\n';
  os << "end=" << utc_now() << '\n';
  for (const auto& c : checks_) os << "check." << c.name << '=' << (c.pass ? "pass" : "fail") << '\n';
  for (std::size_t i = 0; i < outputs_.size(); ++i) os << "output." << i << '=' << outputs_[i] << '\n';
  for (const auto& [k, v] : notes_) os << k << '=' << v << '\n';
  os << "exit_code=" << exit_code << '\n';
}

void print_summary(std::ostream& diag, const RunManifest& manifest) {
  std::size_t width = 5;
  for (const auto& c : manifest.checks()) width = std::max(width, c.name.size());
  for (const auto& c : manifest.checks()) {
    diag << "  " << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
         << (c.pass ? "PASS" : "FAIL");
    if (!c.detail.empty()) diag << "  " << c.detail;
    diag << '\n';
  }
}

}  // namespace adlab::cli
