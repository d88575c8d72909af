#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bellman {

enum class ErrorKind {
  domain,               // argument outside the function's domain
  singularity,          // expression is singular at the requested point
  outside_domain,       // (s1, s2) outside the parameter domain
  boundary_case,        // (s1, s2) on the lower boundary or at (1, 1)
  infeasible_tau,       // tau outside [0, 1], omega_q undefined
  no_root,              // implicit equation has no root in (1, p/(p-1))
  stencil,              // finite-difference stencil left the feasible set
  inconsistent_moments, // moment triple violates the power-mean chain
  invalid_argument,     // malformed input object
  internal,             // iteration cap exceeded or similar
};

/// Stable kebab-case name, used on the CLI diagnostics stream.
std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace bellman
