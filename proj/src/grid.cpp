#include "bellman/grid.hpp"

#include <cstddef>
#include <string>

#include "bellman/error.hpp"
#include "bellman/sensitivity.hpp"
#include "bellman/solver.hpp"

namespace bellman::grid {

PointResult evaluate_point(const Exponents& e, ParamPoint pt) {
  PointResult r;
  r.pt = pt;
  try {
    const solver::BellmanSolution sol = solver::solve_t(e, pt);
    r.t = sol.t;
    r.tau = sol.tau;
    r.residual = sol.residual;
    r.gamma = sensitivity::gamma_eval(e, pt, sol);
    r.delta = sensitivity::delta_eval(e, pt, sol);
    r.dt_ds1 = sol.t * r.gamma / r.delta;
    r.status = "ok";
  } catch (const Error& err) {
    r.status = std::string(err.name());
  }
  return r;
}

std::vector<PointResult> scan_serial(const Exponents& e, std::span<const ParamPoint> points) {
  std::vector<PointResult> out;
  out.reserve(points.size());
  for (const ParamPoint& pt : points) out.push_back(evaluate_point(e, pt));
  return out;
}

std::vector<PointResult> scan_parallel(const Exponents& e, std::span<const ParamPoint> points) {
  std::vector<PointResult> out(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = evaluate_point(e, points[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<ParamPoint> rectangular_grid(std::span<const double> s2_values, std::span<const double> s1_values) {
  std::vector<ParamPoint> pts;
  pts.reserve(s2_values.size() * s1_values.size());
  for (double s2 : s2_values) {
    for (double s1 : s1_values) pts.push_back({s1, s2});
  }
  return pts;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "linspace needs n >= 2");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  v.back() = hi;
  return v;
}

std::string_view sample_status_name(SampleStatus s) noexcept {
  switch (s) {
    case SampleStatus::passed: return "passed";
    case SampleStatus::violated: return "violated";
    case SampleStatus::boundary: return "boundary";
    case SampleStatus::no_root: return "no-root";
    case SampleStatus::error: return "error";
  }
  return "unknown";
}

SampleOutcome verify_one(const hardy::StepFunction& h, const Exponents& e) {
  SampleOutcome o;
  try {
    o.report = hardy::verify_hardy(h, e);
    o.status = o.report.passed ? SampleStatus::passed : SampleStatus::violated;
  } catch (const Error& err) {
    o.error = std::string(err.name());
    switch (err.kind()) {
      case ErrorKind::boundary_case: o.status = SampleStatus::boundary; break;
      case ErrorKind::no_root: o.status = SampleStatus::no_root; break;
      default: o.status = SampleStatus::error; break;
    }
  }
  return o;
}

std::vector<SampleOutcome> verify_serial(const Exponents& e, std::span<const hardy::StepFunction> samples) {
  std::vector<SampleOutcome> out;
  out.reserve(samples.size());
  for (const auto& h : samples) out.push_back(verify_one(h, e));
  return out;
}

std::vector<SampleOutcome> verify_parallel(const Exponents& e, std::span<const hardy::StepFunction> samples) {
  std::vector<SampleOutcome> out(samples.size());
  const auto n = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(dynamic, 2)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = verify_one(samples[static_cast<std::size_t>(i)], e);
  }
  return out;
}

std::uint64_t sample_seed(std::uint64_t batch_seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = batch_seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace bellman::grid
