#pragma once

/**
 * @file sensitivity.hpp
 * @brief Derivative of t(s1, s2) with respect to s1.
 *
 * Differentiating the implicit equation gives
 *
 *   dt/ds1 * delta(s1, s2) = t * gamma(s1, s2)
 *
 * with, for w = omega_q(tau) and B = ((p-1) q w - p (q-1)) / (p (q-1) (w - 1)),
 *
 *   gamma = alpha(s2) - B (t^q / s2 - 1)
 *   delta = B lambda(t) + (p-q) s1 alpha(s2)
 *   lambda(t) = q t^p - p t^q s1/s2 + (p-q) s1.
 *
 * delta > 0 everywhere on the domain; the sign of dt/ds1 is the sign of gamma.
 */

#include "bellman/exponents.hpp"
#include "bellman/solver.hpp"

namespace bellman::sensitivity {

struct SensitivityReport {
  double t = 0.0;
  double tau = 0.0;
  double lambda_val = 0.0;
  double gamma_val = 0.0;
  double delta_val = 0.0;
  double dt_ds1 = 0.0;
  double dt_ds1_fd = 0.0;
  double fd_rel_err = 0.0;
};

double lambda_eval(const Exponents& e, ParamPoint pt, double t);

/// B = ((p-1) q w - p (q-1)) / (p (q-1) (w - 1)); singular at w = 1.
double bracket_factor(const Exponents& e, double omega_q_tau);

double gamma_eval(const Exponents& e, ParamPoint pt, const solver::BellmanSolution& sol);
double delta_eval(const Exponents& e, ParamPoint pt, const solver::BellmanSolution& sol);

/// Central-difference step used by dt_ds1: 1e-6 * max(s1, 1e-3).
double fd_step(double s1);

/// Solves at pt, evaluates t gamma / delta, and cross-checks it against a
/// central difference of the solver in s1. Throws ErrorKind::stencil when
/// either stencil point cannot be solved.
SensitivityReport dt_ds1(const Exponents& e, ParamPoint pt);

/// Same, with a caller-chosen stencil half-width h.
SensitivityReport dt_ds1(const Exponents& e, ParamPoint pt, double h);

/// d tau / dt with (s1, s2) fixed: ((p-q)/p) t^(p-q-1) lambda(t) / (t^(p-q) - s1/s2)^2.
double dtau_dt(const Exponents& e, ParamPoint pt, double t);

/// d tau / ds1 with t fixed: ((p-q)/p) (t^p/s2 - t^(p-q)) / (t^(p-q) - s1/s2)^2.
double dtau_ds1(const Exponents& e, ParamPoint pt, double t);

}  // namespace bellman::sensitivity
