#include "bellman/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bellman/error.hpp"

namespace bellman::sensitivity {
namespace {

double tau_gap(const Exponents& e, ParamPoint pt, double t) {
  const double den = std::pow(t, e.p() - e.q()) - pt.s1 / pt.s2;
  if (!(den > 0.0)) {
    throw Error(ErrorKind::singularity, "t^(p-q) - s1/s2 <= 0 at t=" + std::to_string(t));
  }
  return den;
}

}  // namespace

double lambda_eval(const Exponents& e, ParamPoint pt, double t) {
  const double p = e.p();
  const double q = e.q();
  return q * std::pow(t, p) - p * std::pow(t, q) * (pt.s1 / pt.s2) + (p - q) * pt.s1;
}

double bracket_factor(const Exponents& e, double omega_q_tau) {
  const double p = e.p();
  const double q = e.q();
  const double w = omega_q_tau;
  if (!(w > 1.0)) {
    throw Error(ErrorKind::singularity, "omega_q(tau) = 1 (tau = 1): bracket factor unbounded");
  }
  return ((p - 1.0) * q * w - p * (q - 1.0)) / (p * (q - 1.0) * (w - 1.0));
}

double gamma_eval(const Exponents& e, ParamPoint pt, const solver::BellmanSolution& sol) {
  const double b = bracket_factor(e, sol.omega_q_tau);
  return solver::alpha_eval(e, pt.s2) - b * (std::pow(sol.t, e.q()) / pt.s2 - 1.0);
}

double delta_eval(const Exponents& e, ParamPoint pt, const solver::BellmanSolution& sol) {
  const double b = bracket_factor(e, sol.omega_q_tau);
  return b * lambda_eval(e, pt, sol.t) + (e.p() - e.q()) * pt.s1 * solver::alpha_eval(e, pt.s2);
}

double fd_step(double s1) { return 1e-6 * std::max(s1, 1e-3); }

SensitivityReport dt_ds1(const Exponents& e, ParamPoint pt) { return dt_ds1(e, pt, fd_step(pt.s1)); }

SensitivityReport dt_ds1(const Exponents& e, ParamPoint pt, double h) {
  const solver::BellmanSolution sol = solver::solve_t(e, pt);

  SensitivityReport r;
  r.t = sol.t;
  r.tau = sol.tau;
  r.lambda_val = lambda_eval(e, pt, sol.t);
  r.gamma_val = gamma_eval(e, pt, sol);
  r.delta_val = delta_eval(e, pt, sol);
  r.dt_ds1 = sol.t * r.gamma_val / r.delta_val;

  double t_plus = 0.0;
  double t_minus = 0.0;
  try {
    t_plus = solver::solve_t(e, {pt.s1 + h, pt.s2}).t;
    t_minus = solver::solve_t(e, {pt.s1 - h, pt.s2}).t;
  } catch (const Error& err) {
    throw Error(ErrorKind::stencil, "finite-difference stencil h=" + std::to_string(h) +
                                        " left the feasible set: " + err.what());
  }
  r.dt_ds1_fd = (t_plus - t_minus) / (2.0 * h);
  r.fd_rel_err = std::abs(r.dt_ds1 - r.dt_ds1_fd) / std::max(std::abs(r.dt_ds1), 1e-12);
  return r;
}

double dtau_dt(const Exponents& e, ParamPoint pt, double t) {
  const double p = e.p();
  const double q = e.q();
  const double gap = tau_gap(e, pt, t);
  return (p - q) / p * std::pow(t, p - q - 1.0) * lambda_eval(e, pt, t) / (gap * gap);
}

double dtau_ds1(const Exponents& e, ParamPoint pt, double t) {
  const double p = e.p();
  const double q = e.q();
  const double gap = tau_gap(e, pt, t);
  return (p - q) / p * (std::pow(t, p) / pt.s2 - std::pow(t, p - q)) / (gap * gap);
}

}  // namespace bellman::sensitivity
