#include "bellman/domain.hpp"

#include <cmath>
#include <string>

#include "bellman/error.hpp"
#include "bellman/special_fn.hpp"

namespace bellman::domain {

std::string_view membership_name(Membership m) noexcept {
  switch (m) {
    case Membership::inside: return "inside";
    case Membership::on_lower_boundary: return "on-lower-boundary";
    case Membership::outside: return "outside";
  }
  return "unknown";
}

Membership in_domain(const Exponents& e, ParamPoint pt) {
  const auto [s1, s2] = pt;
  if (!(s1 > 0.0 && s1 < 1.0 && s2 > 0.0 && s2 < 1.0)) return Membership::outside;
  const double lower = std::pow(s1, (e.q() - 1.0) / (e.p() - 1.0));
  if (std::abs(s2 - lower) <= kBoundaryTol) return Membership::on_lower_boundary;
  return s2 > lower ? Membership::inside : Membership::outside;
}

double lower_curve(const Exponents& e, double s1) {
  if (!(s1 > 0.0 && s1 < 1.0)) {
    throw Error(ErrorKind::domain, "lower_curve: s1=" + std::to_string(s1) + " outside (0, 1)");
  }
  return std::pow(s1, (e.q() - 1.0) / (e.p() - 1.0));
}

double eq_omega_curve(const Exponents& e, double s1) {
  if (!(s1 >= 0.0 && s1 <= 1.0)) {
    throw Error(ErrorKind::domain, "eq_omega_curve: s1=" + std::to_string(s1) + " outside [0, 1]");
  }
  return special::h_eval(e.q(), special::omega(e.p(), s1));
}

double threshold(const Exponents& e) {
  const double p = e.p();
  const double q = e.q();
  return (p - q) / p * std::pow(e.p_conjugate(), q);
}

}  // namespace bellman::domain
