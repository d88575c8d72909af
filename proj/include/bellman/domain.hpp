#pragma once

#include <string_view>

#include "bellman/exponents.hpp"

namespace bellman::domain {

enum class Membership { inside, on_lower_boundary, outside };

std::string_view membership_name(Membership m) noexcept;

/// |s2 - s1^((q-1)/(p-1))| at or below this counts as the lower boundary.
inline constexpr double kBoundaryTol = 1e-12;

/// Classifies (s1, s2) against 0 < s1^((q-1)/(p-1)) <= s2 < 1.
///
/// The upper-left envelope s1 < (1/h(s2))^(1/q) is not checked here; the
/// solver reports points beyond it as ErrorKind::no_root.
Membership in_domain(const Exponents& e, ParamPoint pt);

/// The lower boundary s2 = s1^((q-1)/(p-1)), s1 in (0, 1).
double lower_curve(const Exponents& e, double s1);

/// The equal-omega curve s2 = H_q(omega_p(s1)), s1 in [0, 1]. On this curve
/// t(s1, s2) = omega_p(s1) in closed form.
double eq_omega_curve(const Exponents& e, double s1);

/// H_q(p/(p-1)) = ((p-q)/p) (p/(p-1))^q.
double threshold(const Exponents& e);

}  // namespace bellman::domain
