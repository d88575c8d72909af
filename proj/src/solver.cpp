#include "bellman/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "bellman/domain.hpp"
#include "bellman/error.hpp"
#include "bellman/special_fn.hpp"

namespace bellman::solver {
namespace {

std::string describe(ParamPoint pt) {
  return "(s1=" + std::to_string(pt.s1) + ", s2=" + std::to_string(pt.s2) + ")";
}

double tau_denominator(const Exponents& e, ParamPoint pt, double t) {
  return std::pow(t, e.p() - e.q()) - pt.s1 / pt.s2;
}

double tau_unchecked(const Exponents& e, ParamPoint pt, double t) {
  const double p = e.p();
  const double q = e.q();
  return (p - q) / p * (std::pow(t, p) - pt.s1) / tau_denominator(e, pt, t);
}

// LHS - RHS given tau already known to lie in [0, 1] and alpha(s2) precomputed.
double residual_at(const Exponents& e, ParamPoint pt, double t, double tau, double alpha) {
  const double p = e.p();
  const double q = e.q();
  const double w = special::omega(q, tau);
  const double lead = std::pow(w, q - 1.0) * (p - (p - 1.0) * w);
  return q * lead * tau_denominator(e, pt, t) - (p - q) * pt.s1 * alpha;
}

struct Evaluator {
  const Exponents& e;
  ParamPoint pt;
  double alpha;

  double operator()(double t) const {
    double tau = tau_unchecked(e, pt, t);
    // Rounding can push tau a hair above 1 at the clipped end of the scan.
    if (tau > 1.0) tau = 1.0;
    return residual_at(e, pt, t, tau, alpha);
  }
};

// Largest t in [lo, hi] with tau(t) <= 1, given tau(lo) <= 1 < tau(hi).
double clip_to_valid_tau(const Exponents& e, ParamPoint pt, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (tau_unchecked(e, pt, mid) <= 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

BellmanSolution refine(const Exponents& e, ParamPoint pt, const Evaluator& f, double lo, double hi,
                       double f_lo, double f_hi) {
  double best_t = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
  double best_f = std::abs(f_lo) <= std::abs(f_hi) ? f_lo : f_hi;
  // Illinois weights; the true residuals are kept separately in best_f.
  double g_lo = f_lo;
  double g_hi = f_hi;
  int retained = 0;  // +1 while lo is kept, -1 while hi is kept
  double width_before = hi - lo;
  int steps_since_check = 0;

  for (int it = 0; it < 400 && hi - lo > kBracketWidth; ++it) {
    double x = hi - g_hi * (hi - lo) / (g_hi - g_lo);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    if (++steps_since_check == 3) {
      if (hi - lo > 0.5 * width_before) x = 0.5 * (lo + hi);
      width_before = hi - lo;
      steps_since_check = 0;
    }
    const double fx = f(x);
    if (std::abs(fx) < std::abs(best_f)) {
      best_f = fx;
      best_t = x;
    }
    if (fx == 0.0) {
      lo = hi = x;
      break;
    }
    if (opposite(fx, g_hi)) {
      lo = x;
      g_lo = fx;
      if (retained == -1) g_hi *= 0.5;
      retained = -1;
    } else {
      hi = x;
      g_hi = fx;
      if (retained == 1) g_lo *= 0.5;
      retained = 1;
    }
  }
  if (hi - lo > kBracketWidth) {
    throw Error(ErrorKind::internal, "solve_t: refinement did not converge at " + describe(pt));
  }

  BellmanSolution sol;
  sol.t = best_t;
  sol.tau = tau_eval(e, pt, best_t);
  sol.omega_q_tau = special::omega(e.q(), std::min(sol.tau, 1.0));
  sol.residual = best_f;
  sol.bracket_width = hi - lo;
  return sol;
}

bool solvable(const Exponents& e, ParamPoint pt) {
  try {
    solve_t(e, pt);
    return true;
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::no_root || err.kind() == ErrorKind::infeasible_tau ||
        err.kind() == ErrorKind::outside_domain || err.kind() == ErrorKind::boundary_case) {
      return false;
    }
    throw;
  }
}

}  // namespace

double tau_eval(const Exponents& e, ParamPoint pt, double t) {
  const double den = tau_denominator(e, pt, t);
  if (!(den > 0.0)) {
    throw Error(ErrorKind::singularity, "tau: t^(p-q) - s1/s2 <= 0 at t=" + std::to_string(t));
  }
  return tau_unchecked(e, pt, t);
}

double alpha_eval(const Exponents& e, double s2) {
  if (!(s2 > 0.0 && s2 < 1.0)) {
    throw Error(ErrorKind::domain, "alpha: s2=" + std::to_string(s2) + " outside (0, 1)");
  }
  return std::pow(special::omega(e.q(), s2), e.q()) / s2 - 1.0;
}

double residual(const Exponents& e, ParamPoint pt, double t) {
  const double tau = tau_eval(e, pt, t);
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw Error(ErrorKind::infeasible_tau,
                "tau=" + std::to_string(tau) + " outside [0, 1] at t=" + std::to_string(t));
  }
  return residual_at(e, pt, t, tau, alpha_eval(e, pt.s2));
}

BellmanSolution solve_t(const Exponents& e, ParamPoint pt) {
  switch (domain::in_domain(e, pt)) {
    case domain::Membership::inside: break;
    case domain::Membership::on_lower_boundary:
      throw Error(ErrorKind::boundary_case, "point on the lower boundary " + describe(pt));
    case domain::Membership::outside:
      throw Error(ErrorKind::outside_domain, "point outside the domain " + describe(pt));
  }

  const double a = 1.0 + kEndpointGap;
  const double b = e.p_conjugate() - kEndpointGap;
  if (!(tau_unchecked(e, pt, a) <= 1.0)) {
    throw Error(ErrorKind::no_root, "tau > 1 on the whole scan range at " + describe(pt));
  }
  const double upper = tau_unchecked(e, pt, b) <= 1.0 ? b : clip_to_valid_tau(e, pt, a, b);

  const Evaluator f{e, pt, alpha_eval(e, pt.s2)};
  std::array<double, kScanCells + 1> nodes{};
  std::array<double, kScanCells + 1> values{};
  for (int i = 0; i <= kScanCells; ++i) {
    nodes[i] = (i == kScanCells) ? upper : a + (upper - a) * i / kScanCells;
    values[i] = f(nodes[i]);
  }

  // Largest root: walk the cells from the top.
  for (int i = kScanCells; i >= 1; --i) {
    if (values[i] == 0.0) {
      BellmanSolution sol;
      sol.t = nodes[i];
      sol.tau = tau_eval(e, pt, sol.t);
      sol.omega_q_tau = special::omega(e.q(), std::min(sol.tau, 1.0));
      sol.residual = 0.0;
      sol.bracket_width = 0.0;
      return sol;
    }
    if (opposite(values[i - 1], values[i])) {
      return refine(e, pt, f, nodes[i - 1], nodes[i], values[i - 1], values[i]);
    }
  }
  throw Error(ErrorKind::no_root, "no sign change of the residual in (1, p/(p-1)) at " + describe(pt));
}

double feasible_s1_limit(const Exponents& e, double s2) {
  if (!(s2 > 0.0 && s2 < 1.0)) {
    throw Error(ErrorKind::domain, "feasible_s1_limit: s2=" + std::to_string(s2) + " outside (0, 1)");
  }
  const double boundary = std::pow(s2, (e.p() - 1.0) / (e.q() - 1.0));
  // Stay far enough from the lower curve that in_domain reports inside.
  const double near_boundary = boundary * (1.0 - 1e-9);
  if (solvable(e, {near_boundary, s2})) return boundary;

  double lo = boundary * 1e-6;
  double hi = near_boundary;
  if (!solvable(e, {lo, s2})) {
    throw Error(ErrorKind::no_root, "feasible_s1_limit: no feasible s1 near 0 for s2=" +
                                        std::to_string(s2));
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (solvable(e, {mid, s2})) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace bellman::solver
