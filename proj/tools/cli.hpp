#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "loewner/driving.hpp"

namespace loewner::cli {

struct RunConfig {
  std::string command;
  std::string demo;  ///< demo scenario name

  std::string driving;
  std::string points;
  std::string trace;
  std::string map;
  std::string out;
  std::string report;
  std::string format = "csv";
  std::string interp = "const";
  std::optional<double> horizon;

  double from = 0.0;
  double to = 1.0;
  std::size_t substeps = 64;
  bool rk_check = false;

  std::string grid = "0:1:10";
  std::string family;
  std::string gamma = "1+t";
  double shift_rate = 1.0;
  std::string basepoint;
  double order = 1.0;
  std::string schedule;
  std::size_t triples = 50;

  double tau_max = 12.566;
  std::size_t n = 200;

  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Reads a `t,lambda` CSV.  Throws ParseError / MonotoneViolation / EmptyFile
/// with the file name and line number in the message.
DrivingFunction parse_driving_csv(const std::string& path, DrivingMode mode = DrivingMode::PiecewiseConstant,
                                  std::optional<double> horizon = std::nullopt);

/// Executes one command.  Returns 0 on success, 2 on input errors, 3 on numerical failures.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs; `--help` output goes to `out`.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace loewner::cli
