#pragma once

/**
 * @file hardy.hpp
 * @brief Step functions, their moments, and the Hardy-type inequality
 *
 *   int_0^kappa ( (1/u) int_0^u h )^p du  <=  t(s1, s2)^p * int_0^kappa h^p
 *
 * where s1 = x^p / (kappa^(p-1) z), s2 = x^q / (kappa^(q-1) y) and
 * (x, y, z) = (int h, int h^q, int h^p).
 */

#include <cstdint>
#include <span>
#include <vector>

#include "bellman/exponents.hpp"

namespace bellman::hardy {

/// Nonnegative step function on (0, kappa]; values[i] is taken on
/// (breakpoints[i], breakpoints[i+1]].
class StepFunction {
 public:
  /// Throws ErrorKind::invalid_argument unless breakpoints start at 0, are
  /// strictly increasing, values.size() == breakpoints.size() - 1, every value
  /// is >= 0 and at least one is > 0.
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  /// Convenience: pieces of the given lengths, laid out from 0.
  static StepFunction from_lengths(std::span<const double> lengths, std::span<const double> values);

  double kappa() const noexcept { return breakpoints_.back(); }
  std::size_t pieces() const noexcept { return values_.size(); }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> values() const noexcept { return values_; }
  double length(std::size_t i) const { return breakpoints_[i + 1] - breakpoints_[i]; }

  bool is_constant() const noexcept;

  /// c * h for c > 0.
  StepFunction scaled(double c) const;

  /// Nonincreasing rearrangement: same multiset of (length, value) pieces,
  /// sorted by value descending.
  StepFunction decreasing_rearrangement() const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

struct MomentTriple {
  double x = 0.0;  // int h
  double y = 0.0;  // int h^q
  double z = 0.0;  // int h^p
  double kappa = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

struct VerificationReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / z
  double t = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  bool passed = false;
  double quadrature_error_estimate = 0.0;
};

/// Relative slack in the power-mean chain before moments count as inconsistent.
inline constexpr double kMomentChainTol = 1e-12;
/// Samples closer than this to the domain boundary are redrawn by sample_step.
inline constexpr double kInteriorMargin = 1e-6;
/// Relative part of the verification budget on top of the quadrature estimate.
inline constexpr double kRelativeBudget = 1e-9;

/// Exact sums of v_i^r (b_i - b_{i-1}) for r in {1, q, p}.
MomentTriple step_moments(const StepFunction& h, const Exponents& e);

/// (x^p / (kappa^(p-1) z), x^q / (kappa^(q-1) y)).
/// Throws ErrorKind::inconsistent_moments if the power-mean chain
/// x/kappa <= (y/kappa)^(1/q) <= (z/kappa)^(1/p) fails beyond 1e-12.
ParamPoint moments_to_params(const MomentTriple& m, const Exponents& e);

/// The Hardy functional of h. On (0, b_1] the average is the constant v_1;
/// later segments are split into panels with right/left <= 2 and integrated by
/// 16-point Gauss-Legendre, with one halving pass. error_estimate is
/// |halved - single| summed over panels; value is the halved sum.
QuadratureResult hardy_lhs(const StepFunction& h, const Exponents& e);

/// Solves for t at the point induced by h and checks lhs <= t^p z + budget.
/// Throws ErrorKind::boundary_case for constant h (which maps to (1, 1)) or
/// points on the lower boundary; solver errors propagate.
VerificationReport verify_hardy(const StepFunction& h, const Exponents& e);

/// Deterministic pseudo-random step function with k >= 2 positive pieces.
/// Draws that land within 1e-6 of the domain boundary (lower curve or s2 = 1)
/// are redrawn from the same stream.
StepFunction sample_step(std::uint64_t seed, int k, double kappa, const Exponents& e);

}  // namespace bellman::hardy
