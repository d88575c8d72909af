#include "bellman/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "bellman/domain.hpp"
#include "bellman/error.hpp"
#include "bellman/solver.hpp"

namespace bellman::hardy {
namespace {

using Gauss16 = boost::math::quadrature::gauss<double, 16>;

QuadratureResult integrate_panel(double v, double c, double p, double lo, double hi) {
  // Average of h on (0, u] for u in this segment: v + c/u.
  auto integrand = [v, c, p](double u) { return std::pow(v + c / u, p); };
  const double mid = 0.5 * (lo + hi);
  const double coarse = Gauss16::integrate(integrand, lo, hi);
  const double fine = Gauss16::integrate(integrand, lo, mid) + Gauss16::integrate(integrand, mid, hi);
  return {fine, std::abs(fine - coarse)};
}

}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() < 2 || values_.size() + 1 != breakpoints_.size()) {
    throw Error(ErrorKind::invalid_argument, "step function needs k >= 1 values and k+1 breakpoints");
  }
  if (breakpoints_.front() != 0.0) {
    throw Error(ErrorKind::invalid_argument, "first breakpoint must be 0");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > breakpoints_[i - 1]) || !std::isfinite(breakpoints_[i])) {
      throw Error(ErrorKind::invalid_argument, "breakpoints must be finite and strictly increasing");
    }
  }
  bool any_positive = false;
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::invalid_argument, "step values must be finite and >= 0");
    }
    any_positive = any_positive || v > 0.0;
  }
  if (!any_positive) throw Error(ErrorKind::invalid_argument, "step function is identically zero");
}

StepFunction StepFunction::from_lengths(std::span<const double> lengths, std::span<const double> values) {
  std::vector<double> b(lengths.size() + 1, 0.0);
  std::partial_sum(lengths.begin(), lengths.end(), b.begin() + 1);
  return StepFunction(std::move(b), std::vector<double>(values.begin(), values.end()));
}

bool StepFunction::is_constant() const noexcept {
  return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) == values_.end();
}

StepFunction StepFunction::scaled(double c) const {
  if (!(c > 0.0)) throw Error(ErrorKind::invalid_argument, "scale factor must be > 0");
  std::vector<double> v = values_;
  for (double& x : v) x *= c;
  return StepFunction(breakpoints_, std::move(v));
}

StepFunction StepFunction::decreasing_rearrangement() const {
  std::vector<std::size_t> order(values_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [this](std::size_t a, std::size_t b) { return values_[a] > values_[b]; });
  std::vector<double> lengths;
  std::vector<double> values;
  lengths.reserve(order.size());
  values.reserve(order.size());
  for (std::size_t i : order) {
    lengths.push_back(length(i));
    values.push_back(values_[i]);
  }
  return from_lengths(lengths, values);
}

MomentTriple step_moments(const StepFunction& h, const Exponents& e) {
  MomentTriple m;
  m.kappa = h.kappa();
  const auto v = h.values();
  for (std::size_t i = 0; i < h.pieces(); ++i) {
    const double len = h.length(i);
    m.x += v[i] * len;
    m.y += std::pow(v[i], e.q()) * len;
    m.z += std::pow(v[i], e.p()) * len;
  }
  return m;
}

ParamPoint moments_to_params(const MomentTriple& m, const Exponents& e) {
  const double p = e.p();
  const double q = e.q();
  if (!(m.x > 0.0 && m.y > 0.0 && m.z > 0.0 && m.kappa > 0.0)) {
    throw Error(ErrorKind::inconsistent_moments, "moments and kappa must be positive");
  }
  const double mean1 = m.x / m.kappa;
  const double meanq = std::pow(m.y / m.kappa, 1.0 / q);
  const double meanp = std::pow(m.z / m.kappa, 1.0 / p);
  if (mean1 > meanq * (1.0 + kMomentChainTol) || meanq > meanp * (1.0 + kMomentChainTol)) {
    throw Error(ErrorKind::inconsistent_moments, "power-mean chain violated");
  }
  return {std::pow(m.x, p) / (std::pow(m.kappa, p - 1.0) * m.z),
          std::pow(m.x, q) / (std::pow(m.kappa, q - 1.0) * m.y)};
}

QuadratureResult hardy_lhs(const StepFunction& h, const Exponents& e) {
  const double p = e.p();
  const auto b = h.breakpoints();
  const auto v = h.values();

  QuadratureResult total;
  total.value = std::pow(v[0], p) * b[1];
  double accumulated = v[0] * b[1];
  for (std::size_t i = 1; i < h.pieces(); ++i) {
    const double lo = b[i];
    const double hi = b[i + 1];
    const double c = accumulated - v[i] * lo;
    const int panels = std::max(1, static_cast<int>(std::ceil(std::log2(hi / lo))));
    const double ratio = std::pow(hi / lo, 1.0 / panels);
    double left = lo;
    for (int j = 0; j < panels; ++j) {
      const double right = (j + 1 == panels) ? hi : left * ratio;
      const QuadratureResult r = integrate_panel(v[i], c, p, left, right);
      total.value += r.value;
      total.error_estimate += r.error_estimate;
      left = right;
    }
    accumulated += v[i] * (hi - lo);
  }
  return total;
}

VerificationReport verify_hardy(const StepFunction& h, const Exponents& e) {
  if (h.is_constant()) {
    throw Error(ErrorKind::boundary_case, "constant h maps to (s1, s2) = (1, 1)");
  }
  const MomentTriple m = step_moments(h, e);
  const ParamPoint pt = moments_to_params(m, e);
  if (domain::in_domain(e, pt) == domain::Membership::on_lower_boundary) {
    throw Error(ErrorKind::boundary_case, "induced point lies on the lower boundary");
  }
  const solver::BellmanSolution sol = solver::solve_t(e, pt);
  const QuadratureResult q = hardy_lhs(h, e);

  VerificationReport r;
  r.lhs = q.value;
  r.quadrature_error_estimate = q.error_estimate;
  r.t = sol.t;
  r.s1 = pt.s1;
  r.s2 = pt.s2;
  r.rhs = std::pow(sol.t, e.p()) * m.z;
  r.ratio = r.lhs / m.z;
  r.passed = r.lhs <= r.rhs + q.error_estimate + kRelativeBudget * r.rhs;
  return r;
}

StepFunction sample_step(std::uint64_t seed, int k, double kappa, const Exponents& e) {
  if (k < 2) throw Error(ErrorKind::invalid_argument, "sample_step needs k >= 2");
  if (!(kappa > 0.0)) throw Error(ErrorKind::invalid_argument, "kappa must be > 0");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> cut(0.0, kappa);
  std::uniform_real_distribution<double> level(0.05, 3.0);

  for (;;) {
    std::vector<double> b{0.0, kappa};
    while (b.size() < static_cast<std::size_t>(k) + 1) {
      const double x = cut(rng);
      if (x <= 1e-9 * kappa || x >= kappa * (1.0 - 1e-9)) continue;
      b.push_back(x);
    }
    std::sort(b.begin(), b.end());
    bool separated = true;
    for (std::size_t i = 1; i < b.size(); ++i) separated = separated && (b[i] - b[i - 1] > 1e-9 * kappa);
    if (!separated) continue;

    std::vector<double> vals(static_cast<std::size_t>(k));
    for (double& x : vals) x = level(rng);

    StepFunction h(std::move(b), std::move(vals));
    const ParamPoint pt = moments_to_params(step_moments(h, e), e);
    const double gap_lower = pt.s2 - std::pow(pt.s1, (e.q() - 1.0) / (e.p() - 1.0));
    if (gap_lower > kInteriorMargin && pt.s2 < 1.0 - kInteriorMargin) return h;
  }
}

}  // namespace bellman::hardy
