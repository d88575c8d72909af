#pragma once

/**
 * @file commands.hpp
 * @brief Implementation of the `bellman` command-line subcommands.
 *
 * Each command writes its primary output to `out` and one-line diagnostics of
 * the form "error: <name>: <detail>" to `err`, and returns the process exit
 * code:
 *   0  all checks passed
 *   1  a mathematical invariant failed
 *   2  usage or domain error
 *   3  I/O error
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bellman::cli {

enum ExitCode : int { kOk = 0, kInvariantFailed = 1, kUsage = 2, kIo = 3 };

inline constexpr std::string_view kCsvHeader = "p,q,s1,s2,t,tau,gamma,delta,dt_ds1,residual,status";

/// 17 significant digits, '.' separator, independent of the global locale.
std::string format_real(double x);

struct ScanConfig {
  double p = 2.0;
  double q = 1.5;
  std::vector<double> s2;
  double s1_min = 0.1;
  double s1_max = 0.9;
  int n = 10;
  std::string output_path = "-";  // "-" writes to `out`
};

struct VerifyConfig {
  double p = 2.0;
  double q = 1.5;
  int grid_n = 30;
  double tol = 1e-5;  // relative tolerance of the finite-difference check
};

struct HardyConfig {
  double p = 2.0;
  double q = 1.5;
  int samples = 100;
  int steps = 4;
  std::uint64_t seed = 7;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0 && checks > 0; }
};

int cmd_solve(double p, double q, double s1, double s2, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_hardy(const HardyConfig& cfg, std::ostream& out, std::ostream& err);

/// The invariant suites run by cmd_verify, in order. Requires grid_n >= 10.
std::vector<SuiteResult> run_verify_suites(const VerifyConfig& cfg);

/// Parses argv (argv[0] is the program name) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bellman::cli
