#include "bellman/error.hpp"

#include <cmath>
#include <string>

#include "bellman/exponents.hpp"

namespace bellman {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::singularity: return "singularity";
    case ErrorKind::outside_domain: return "outside-domain";
    case ErrorKind::boundary_case: return "boundary-case";
    case ErrorKind::infeasible_tau: return "infeasible-tau";
    case ErrorKind::no_root: return "no-root";
    case ErrorKind::stencil: return "stencil";
    case ErrorKind::inconsistent_moments: return "inconsistent-moments";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

Exponents::Exponents(double p, double q) : p_(p), q_(q) {
  if (!std::isfinite(p) || !std::isfinite(q) || !(q > 1.0) || !(p > q)) {
    throw Error(ErrorKind::domain, "exponents must satisfy 1 < q < p (got p=" +
                                       std::to_string(p) + ", q=" + std::to_string(q) + ")");
  }
}

}  // namespace bellman
