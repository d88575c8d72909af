#pragma once

/**
 * @file grid.hpp
 * @brief Batch evaluation over parameter grids and step-function samples.
 *
 * Every kernel comes in two flavours: a plain serial loop kept as the
 * reference, and an OpenMP version that distributes independent points over
 * threads. Results are written by index, so both produce identical vectors
 * in the same order regardless of scheduling.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bellman/exponents.hpp"
#include "bellman/hardy.hpp"

namespace bellman::grid {

/// One evaluated parameter point. status is "ok" or an error name.
struct PointResult {
  ParamPoint pt;
  double t = 0.0;
  double tau = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double dt_ds1 = 0.0;
  double residual = 0.0;
  std::string status;

  bool ok() const noexcept { return status == "ok"; }
};

/// Solve plus gamma, delta and t gamma / delta; never throws for
/// mathematical failures (they become the status).
PointResult evaluate_point(const Exponents& e, ParamPoint pt);

std::vector<PointResult> scan_serial(const Exponents& e, std::span<const ParamPoint> points);
std::vector<PointResult> scan_parallel(const Exponents& e, std::span<const ParamPoint> points);

/// Row-major (s2 outer, s1 inner) rectangular grid.
std::vector<ParamPoint> rectangular_grid(std::span<const double> s2_values, std::span<const double> s1_values);

/// n equally spaced values from lo to hi inclusive (n >= 2).
std::vector<double> linspace(double lo, double hi, int n);

enum class SampleStatus { passed, violated, boundary, no_root, error };

std::string_view sample_status_name(SampleStatus s) noexcept;

struct SampleOutcome {
  SampleStatus status = SampleStatus::error;
  hardy::VerificationReport report;
  std::string error;  // error name when status is not passed/violated
};

SampleOutcome verify_one(const hardy::StepFunction& h, const Exponents& e);

std::vector<SampleOutcome> verify_serial(const Exponents& e, std::span<const hardy::StepFunction> samples);
std::vector<SampleOutcome> verify_parallel(const Exponents& e, std::span<const hardy::StepFunction> samples);

/// Per-sample seed derived from a batch seed and the sample index.
std::uint64_t sample_seed(std::uint64_t batch_seed, std::uint64_t index);

}  // namespace bellman::grid
