#include "bellman/curve_analysis.hpp"

#include <cmath>
#include <string>

#include "bellman/domain.hpp"
#include "bellman/error.hpp"
#include "bellman/special_fn.hpp"

namespace bellman::curves {
namespace {

void require_open_unit(double s2, const char* what) {
  if (!(s2 > 0.0 && s2 < 1.0)) {
    throw Error(ErrorKind::domain, std::string(what) + ": s2=" + std::to_string(s2) + " outside (0, 1)");
  }
}

double constant_a(const Exponents& e) {
  return (e.p() - 1.0) / (e.q() - 1.0) * std::pow(e.p_conjugate(), e.q());
}

}  // namespace

EndgameConstants endgame_constants(const Exponents& e) {
  const double p = e.p();
  const double q = e.q();
  return {constant_a(e), domain::threshold(e), (p / (p - q) - 1.0) * (1.0 - (p - 1.0) / (q - 1.0))};
}

double big_f(const Exponents& e, double s2) {
  require_open_unit(s2, "F");
  const double q = e.q();
  const double w = special::omega(q, s2);
  return (std::pow(w, q) - constant_a(e)) / s2 - 1.0 + (e.p() - 1.0) / (q - 1.0);
}

double big_g(const Exponents& e, double s2) {
  require_open_unit(s2, "G");
  const double q = e.q();
  const double w = special::omega(q, s2);
  if (!(w > 1.0)) throw Error(ErrorKind::singularity, "G: omega_q(s2) = 1");
  return w * s2 / ((q - 1.0) * (w - 1.0)) + std::pow(w, q);
}

double big_f_deriv(const Exponents& e, double s2) {
  const double g = big_g(e, s2);
  return (constant_a(e) - g) / (s2 * s2);
}

}  // namespace bellman::curves
