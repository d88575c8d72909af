#pragma once

/**
 * @file solver.hpp
 * @brief The implicit equation for the constant t(s1, s2).
 *
 * For (s1, s2) in the parameter domain, t = t(s1, s2) in (1, p/(p-1)) solves
 *
 *   q (p w^(q-1) - (p-1) w^q) (t^(p-q) - s1/s2) = (p-q) s1 alpha(s2),
 *
 * where w = omega_q(tau),
 *   tau      = ((p-q)/p) (t^p - s1) / (t^(p-q) - s1/s2),
 *   alpha(s2) = omega_q(s2)^q / s2 - 1.
 *
 * residual() is LHS - RHS. tau is strictly increasing in t on the domain, so
 * the set of t with tau <= 1 is an interval [1, t*]; solve_t() scans that
 * interval in 64 cells, keeps the largest sign change and refines it with an
 * Illinois-modified secant guarded by bisection.
 */

#include "bellman/exponents.hpp"

namespace bellman::solver {

struct BellmanSolution {
  double t = 0.0;
  double tau = 0.0;
  double omega_q_tau = 0.0;
  double residual = 0.0;
  double bracket_width = 0.0;
};

inline constexpr int kScanCells = 64;
inline constexpr double kEndpointGap = 1e-12;
inline constexpr double kBracketWidth = 1e-13;

/// tau(s1, s2, t). Throws ErrorKind::singularity if t^(p-q) <= s1/s2.
double tau_eval(const Exponents& e, ParamPoint pt, double t);

/// alpha(s2) = omega_q(s2)^q / s2 - 1 > 0, s2 in (0, 1).
double alpha_eval(const Exponents& e, double s2);

/// LHS - RHS of the implicit equation at t. Throws ErrorKind::infeasible_tau
/// when tau is outside [0, 1].
double residual(const Exponents& e, ParamPoint pt, double t);

/// Solves for t(s1, s2). Requires in_domain(e, pt) == inside.
///
/// Errors: outside_domain / boundary_case for points not strictly inside;
/// no_root when no sign change exists in (1 + 1e-12, p/(p-1) - 1e-12) with
/// tau in [0, 1]. The latter marks points beyond the (operational) upper-left
/// edge of the domain.
BellmanSolution solve_t(const Exponents& e, ParamPoint pt);

/// Largest s1 in (0, s2^((p-1)/(q-1))) for which solve_t succeeds at (s1, s2),
/// found by bisection on solver success to relative precision 1e-12. When the
/// solver succeeds right up to the lower boundary, the boundary value itself is
/// returned.
double feasible_s1_limit(const Exponents& e, double s2);

}  // namespace bellman::solver
