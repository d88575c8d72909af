#pragma once

namespace bellman {

/// The exponent pair (p, q) with 1 < q < p. Validated on construction.
class Exponents {
 public:
  Exponents(double p, double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  /// p/(p-1), the right end of the range of omega_p.
  double p_conjugate() const noexcept { return p_ / (p_ - 1.0); }
  /// q/(q-1), the right end of the range of omega_q.
  double q_conjugate() const noexcept { return q_ / (q_ - 1.0); }

  friend bool operator==(const Exponents&, const Exponents&) = default;

 private:
  double p_;
  double q_;
};

/// A point (s1, s2) of the parameter plane. Membership in the domain is
/// decided by domain::in_domain, not on construction.
struct ParamPoint {
  double s1 = 0.0;
  double s2 = 0.0;
};

}  // namespace bellman
