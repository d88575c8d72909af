#pragma once

/**
 * @file special_fn.hpp
 * @brief The polynomial H_r(z) = -(r-1) z^r + r z^(r-1) and its inverse.
 *
 * H_r decreases strictly from H_r(1) = 1 to H_r(r/(r-1)) = 0, so on the
 * bracket [1, r/(r-1)] it has a well defined inverse omega_r : [0,1] ->
 * [1, r/(r-1)]. Everything else in the library is built on these four
 * functions.
 *
 * All functions are pure and thread-safe. Arguments outside their domain
 * raise bellman::Error (ErrorKind::domain or ErrorKind::singularity).
 */

namespace bellman::special {

/// H_r(z) for z in [1, r/(r-1)]; result in [0, 1].
double h_eval(double r, double z);

/// H_r'(z) = r (r-1) z^(r-2) (1 - z). Non-positive on the bracket, zero at z = 1.
double h_deriv(double r, double z);

/// omega_r(s) = H_r^{-1}(s) for s in [0, 1].
///
/// Safeguarded Newton on [1, r/(r-1)]: a Newton step is taken only if it lands
/// strictly inside the current bracket, otherwise the bracket is bisected.
/// The endpoints s = 1 and s = 0 return 1 and r/(r-1) exactly.
double omega(double r, double s);

/// d omega_r / ds = 1 / H_r'(omega_r(s)), strictly negative on (0, 1).
///
/// Blows up like -1/sqrt(2 r (r-1) (1-s)) as s -> 1 because H_r' vanishes
/// at z = 1; both s = 0 and s = 1 are rejected as singular.
double omega_deriv(double r, double s);

}  // namespace bellman::special
