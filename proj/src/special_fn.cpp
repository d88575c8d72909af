#include "bellman/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bellman/error.hpp"

namespace bellman::special {
namespace {

constexpr double kResidualTol = 1e-14;
constexpr double kBracketTol = 1e-15;
constexpr int kMaxIterations = 200;

void require_exponent(double r) {
  if (!(r > 1.0) || !std::isfinite(r)) {
    throw Error(ErrorKind::domain, "exponent must be > 1, got " + std::to_string(r));
  }
}

void require_bracket(double r, double z) {
  require_exponent(r);
  const double hi = r / (r - 1.0);
  if (!(z >= 1.0 && z <= hi)) {
    throw Error(ErrorKind::domain, "z=" + std::to_string(z) + " outside [1, " +
                                       std::to_string(hi) + "]");
  }
}

double h_raw(double r, double z) {
  // z^(r-1) (r - (r-1) z)
  return std::pow(z, r - 1.0) * (r - (r - 1.0) * z);
}

double h_deriv_raw(double r, double z) {
  return r * (r - 1.0) * std::pow(z, r - 2.0) * (1.0 - z);
}

}  // namespace

double h_eval(double r, double z) {
  require_bracket(r, z);
  return h_raw(r, z);
}

double h_deriv(double r, double z) {
  require_bracket(r, z);
  return h_deriv_raw(r, z);
}

double omega(double r, double s) {
  require_exponent(r);
  if (!(s >= 0.0 && s <= 1.0)) {
    throw Error(ErrorKind::domain, "omega argument s=" + std::to_string(s) + " outside [0, 1]");
  }
  const double top = r / (r - 1.0);
  if (s == 1.0) return 1.0;
  if (s == 0.0) return top;

  double lo = 1.0;
  double hi = top;
  // Near z = 1, H_r(z) ~ 1 - r (r-1) (z-1)^2 / 2.
  double z = std::clamp(1.0 + std::sqrt(2.0 * (1.0 - s) / (r * (r - 1.0))), lo, hi);
  if (z <= lo || z >= hi) z = 0.5 * (lo + hi);

  for (int it = 0; it < kMaxIterations; ++it) {
    const double f = h_raw(r, z) - s;
    if (f == 0.0) return z;
    // H_r is decreasing: positive residual means z is left of the root.
    if (f > 0.0) {
      lo = z;
    } else {
      hi = z;
    }
    const double d = h_deriv_raw(r, z);
    double next = (d != 0.0) ? z - f / d : lo - 1.0;
    const bool newton_ok = next > lo && next < hi;
    if (!newton_ok) next = 0.5 * (lo + hi);

    if (std::abs(f) <= kResidualTol && newton_ok) {
      // One more quadratic step after the residual criterion is met; it
      // brings z to full precision where |H'| is small.
      return next;
    }
    if (hi - lo <= kBracketTol || next == z) return next;
    z = next;
  }
  throw Error(ErrorKind::internal, "omega: iteration cap exceeded at s=" + std::to_string(s));
}

double omega_deriv(double r, double s) {
  require_exponent(r);
  if (!(s >= 0.0 && s <= 1.0)) {
    throw Error(ErrorKind::domain, "omega_deriv argument s=" + std::to_string(s) + " outside [0, 1]");
  }
  if (s == 0.0 || s == 1.0) {
    throw Error(ErrorKind::singularity, "omega_deriv is one-sided/unbounded at s=" + std::to_string(s));
  }
  return 1.0 / h_deriv_raw(r, omega(r, s));
}

}  // namespace bellman::special
