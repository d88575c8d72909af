#pragma once

#include "bellman/exponents.hpp"

namespace bellman::curves {

/// Constants of the s1 -> 0+ analysis.
struct EndgameConstants {
  double a = 0.0;               // ((p-1)/(q-1)) (p/(p-1))^q
  double threshold = 0.0;       // H_q(p/(p-1))
  double f_at_threshold = 0.0;  // (p/(p-q) - 1) (1 - (p-1)/(q-1))
};

EndgameConstants endgame_constants(const Exponents& e);

/// F(s2) = (omega_q(s2)^q - a)/s2 - 1 + (p-1)/(q-1), the limit of gamma as
/// s1 -> 0+ for s2 below the threshold.
double big_f(const Exponents& e, double s2);

/// Exact F'(s2) = (a - G(s2)) / s2^2.
double big_f_deriv(const Exponents& e, double s2);

/// G(s2) = omega_q(s2) s2 / ((q-1)(omega_q(s2) - 1)) + omega_q(s2)^q.
double big_g(const Exponents& e, double s2);

}  // namespace bellman::curves
