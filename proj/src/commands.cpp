#include "bellman/commands.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bellman/curve_analysis.hpp"
#include "bellman/domain.hpp"
#include "bellman/error.hpp"
#include "bellman/exponents.hpp"
#include "bellman/grid.hpp"
#include "bellman/hardy.hpp"
#include "bellman/sensitivity.hpp"
#include "bellman/solver.hpp"
#include "bellman/special_fn.hpp"

namespace bellman::cli {
namespace {

void diag(std::ostream& err, std::string_view name, std::string_view detail) {
  err << "error: " << name << ": " << detail << '\n';
}

void write_row(std::ostream& out, const Exponents& e, const grid::PointResult& r) {
  const bool ok = r.ok();
  const auto num = [ok](double x) { return ok ? format_real(x) : std::string("nan"); };
  out << format_real(e.p()) << ',' << format_real(e.q()) << ',' << format_real(r.pt.s1) << ','
      << format_real(r.pt.s2) << ',' << num(r.t) << ',' << num(r.tau) << ',' << num(r.gamma) << ','
      << num(r.delta) << ',' << num(r.dt_ds1) << ',' << num(r.residual) << ',' << r.status << '\n';
}

// Records a check; keeps the first failure message.
class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      if (result_.failures == 0) result_.first_failure = what;
      ++result_.failures;
    }
  }

  SuiteResult done() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string at(double a, double b) { return "(" + format_real(a) + ", " + format_real(b) + ")"; }

SuiteResult omega_suite(const Exponents& e) {
  Suite s("omega-roundtrip");
  for (double r : {e.p(), e.q()}) {
    const auto grid = grid::linspace(0.0, 1.0, 1000);
    double prev = special::omega(r, grid.front()) + 1.0;
    for (double x : grid) {
      const double z = special::omega(r, x);
      s.check(std::abs(special::h_eval(r, z) - x) <= 1e-12, "H(omega(s)) != s at " + at(r, x));
      s.check(z >= 1.0 && z <= r / (r - 1.0), "omega out of range at " + at(r, x));
      s.check(z < prev, "omega not strictly decreasing at " + at(r, x));
      prev = z;
    }
  }
  return s.done();
}

SuiteResult equal_omega_suite(const Exponents& e, int n) {
  Suite s("equal-omega-curve");
  for (double s1 : grid::linspace(0.05, 0.95, n)) {
    const double s2 = domain::eq_omega_curve(e, s1);
    try {
      const auto sol = solver::solve_t(e, {s1, s2});
      s.check(std::abs(sol.t - special::omega(e.p(), s1)) <= 1e-8, "t != omega_p(s1) at " + at(s1, s2));
      s.check(std::abs(sol.tau - s2) <= 1e-8, "tau != s2 at " + at(s1, s2));
    } catch (const Error& err) {
      s.check(false, std::string(err.name()) + " at " + at(s1, s2));
    }
  }
  return s.done();
}

// gamma < 0, delta > 0, lambda > 0 (and lambda(t) >= lambda(1)), dt/ds1 < 0, and
// strict decrease of t along every feasible s1 line.
SuiteResult sign_suite(const Exponents& e, int n) {
  Suite s("sign-suite");
  for (double s2 : grid::linspace(0.05, 0.98, n)) {
    double limit = 0.0;
    try {
      limit = solver::feasible_s1_limit(e, s2);
    } catch (const Error& err) {
      s.check(false, "feasible_s1_limit: " + std::string(err.name()) + " at s2=" + format_real(s2));
      continue;
    }
    std::vector<ParamPoint> pts;
    for (double f : grid::linspace(0.01, 0.99, n)) pts.push_back({f * limit, s2});
    const auto rows = grid::scan_parallel(e, pts);
    double prev_t = 0.0;
    bool have_prev = false;
    for (const auto& r : rows) {
      const std::string where = at(r.pt.s1, r.pt.s2);
      s.check(r.ok(), "solve failed (" + r.status + ") at " + where);
      if (!r.ok()) continue;
      const double lam1 = sensitivity::lambda_eval(e, r.pt, 1.0);
      const double lam = sensitivity::lambda_eval(e, r.pt, r.t);
      s.check(r.gamma < 0.0, "gamma >= 0 at " + where);
      s.check(r.delta > 0.0, "delta <= 0 at " + where);
      s.check(lam1 > 0.0 && lam >= lam1, "lambda(t) < lambda(1) or lambda(1) <= 0 at " + where);
      s.check(r.dt_ds1 < 0.0, "dt/ds1 >= 0 at " + where);
      if (have_prev) s.check(r.t - prev_t < -10.0 * solver::kBracketWidth, "t not decreasing at " + where);
      prev_t = r.t;
      have_prev = true;
    }
  }
  return s.done();
}

SuiteResult star_suite(const Exponents& e) {
  Suite s("inequality-star");
  const double p = e.p();
  const double q = e.q();
  for (int i = 1; i <= 200; ++i) {
    const double s1 = i / 201.0;
    s.check(p * std::pow(s1, (p - q) / (p - 1.0)) < (p - q) * s1 + q, "(*) fails at s1=" + format_real(s1));
  }
  return s.done();
}

SuiteResult endgame_suite(const Exponents& e) {
  Suite s("endgame");
  const auto c = curves::endgame_constants(e);
  for (int i = 1; i <= 100; ++i) {
    const double s2 = c.threshold * i / 101.0;
    s.check(curves::big_f(e, s2) < 0.0, "F >= 0 at s2=" + format_real(s2));
    s.check(curves::big_f_deriv(e, s2) > 0.0, "F' <= 0 at s2=" + format_real(s2));
  }
  s.check(std::abs(curves::big_f(e, c.threshold) - c.f_at_threshold) <= 1e-10, "F(threshold) identity");
  s.check(c.f_at_threshold < 0.0, "F(threshold) >= 0");
  s.check(std::pow(e.q_conjugate(), e.q()) < c.a, "(q/(q-1))^q >= a");
  double prev = curves::big_g(e, 0.02);
  for (double s2 : grid::linspace(0.02, 0.98, 200)) {
    if (s2 == 0.02) continue;
    const double g = curves::big_g(e, s2);
    s.check(g > prev, "G not increasing at s2=" + format_real(s2));
    prev = g;
  }
  return s.done();
}

SuiteResult fd_suite(const Exponents& e, int n, double tol) {
  Suite s("fd-derivative");
  const int m = std::max(5, n / 3);
  for (double s2 : grid::linspace(0.3, 0.96, m)) {
    double limit = 0.0;
    try {
      limit = solver::feasible_s1_limit(e, s2);
    } catch (const Error& err) {
      s.check(false, "feasible_s1_limit: " + std::string(err.name()) + " at s2=" + format_real(s2));
      continue;
    }
    for (double f : grid::linspace(0.05, 0.9, m)) {
      const ParamPoint pt{f * limit, s2};
      if (pt.s2 - domain::lower_curve(e, pt.s1) < 1e-4) continue;
      try {
        const auto r = sensitivity::dt_ds1(e, pt);
        s.check(r.fd_rel_err <= tol, "FD mismatch " + format_real(r.fd_rel_err) + " at " + at(pt.s1, s2));
        s.check(r.dt_ds1 < 0.0, "dt/ds1 >= 0 at " + at(pt.s1, s2));
      } catch (const Error& err) {
        s.check(false, std::string(err.name()) + " at " + at(pt.s1, s2));
      }
    }
  }
  return s.done();
}

int domain_error(std::ostream& err, const Error& e) {
  diag(err, e.name(), e.what());
  return kUsage;
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

int cmd_solve(double p, double q, double s1, double s2, std::ostream& out, std::ostream& err) {
  try {
    const Exponents e(p, q);
    const ParamPoint pt{s1, s2};
    const grid::PointResult r = grid::evaluate_point(e, pt);
    if (!r.ok()) {
      diag(err, r.status, "no solution at (s1=" + format_real(s1) + ", s2=" + format_real(s2) + ")");
      return kUsage;
    }
    out << kCsvHeader << '\n';
    write_row(out, e, r);
    return kOk;
  } catch (const Error& e) {
    return domain_error(err, e);
  }
}

int cmd_scan(const ScanConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<Exponents> e;
  try {
    e.emplace(cfg.p, cfg.q);
  } catch (const Error& ex) {
    return domain_error(err, ex);
  }
  if (!(cfg.s1_min > 0.0 && cfg.s1_min < cfg.s1_max && cfg.s1_max < 1.0) || cfg.n < 2) {
    diag(err, "usage", "scan needs 0 < s1-min < s1-max < 1 and n >= 2");
    return kUsage;
  }
  if (cfg.s2.empty() || std::any_of(cfg.s2.begin(), cfg.s2.end(), [](double v) { return !(v > 0.0 && v < 1.0); })) {
    diag(err, "usage", "scan needs at least one s2 value in (0, 1)");
    return kUsage;
  }

  const auto s1_values = grid::linspace(cfg.s1_min, cfg.s1_max, cfg.n);
  const auto points = grid::rectangular_grid(cfg.s2, s1_values);
  const auto rows = grid::scan_parallel(*e, points);

  std::ofstream file;
  std::ostream* sink = &out;
  if (cfg.output_path != "-") {
    file.open(cfg.output_path, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!file) {
      diag(err, "io", "cannot open " + cfg.output_path + " for writing");
      return kIo;
    }
    sink = &file;
  }
  *sink << kCsvHeader << '\n';
  for (const auto& r : rows) write_row(*sink, *e, r);
  sink->flush();
  if (!*sink) {
    diag(err, "io", "write failed for " + cfg.output_path);
    return kIo;
  }

  // t must decrease strictly along s1 among ok rows of each s2 line.
  for (std::size_t line = 0; line < cfg.s2.size(); ++line) {
    double prev = 0.0;
    bool have_prev = false;
    for (int j = 0; j < cfg.n; ++j) {
      const auto& r = rows[line * static_cast<std::size_t>(cfg.n) + static_cast<std::size_t>(j)];
      if (!r.ok()) continue;
      if (have_prev && !(r.t < prev)) {
        diag(err, "invariant-failed", "t not strictly decreasing at s1=" + format_real(r.pt.s1) +
                                          ", s2=" + format_real(r.pt.s2));
        return kInvariantFailed;
      }
      prev = r.t;
      have_prev = true;
    }
  }
  return kOk;
}

std::vector<SuiteResult> run_verify_suites(const VerifyConfig& cfg) {
  const Exponents e(cfg.p, cfg.q);
  std::vector<SuiteResult> out;
  out.push_back(omega_suite(e));
  out.push_back(equal_omega_suite(e, cfg.grid_n));
  out.push_back(sign_suite(e, cfg.grid_n));
  out.push_back(star_suite(e));
  out.push_back(endgame_suite(e));
  out.push_back(fd_suite(e, cfg.grid_n, cfg.tol));
  return out;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.grid_n < 10) {
    diag(err, "usage", "verify needs --grid >= 10 (got " + std::to_string(cfg.grid_n) + ")");
    return kUsage;
  }
  if (!(cfg.tol > 0.0)) {
    diag(err, "usage", "verify needs --tol > 0");
    return kUsage;
  }
  std::vector<SuiteResult> suites;
  try {
    suites = run_verify_suites(cfg);
  } catch (const Error& e) {
    return domain_error(err, e);
  }
  int failed = 0;
  for (const auto& s : suites) {
    out << (s.passed() ? "PASS " : "FAIL ") << s.name << " checks=" << s.checks << " failures=" << s.failures;
    if (!s.passed()) out << " first=\"" << s.first_failure << '"';
    out << '\n';
    if (!s.passed()) {
      ++failed;
      diag(err, "invariant-failed", s.name + ": " + s.first_failure);
    }
  }
  out << "summary: suites=" << suites.size() << " passed=" << suites.size() - failed << " failed=" << failed
      << '\n';
  return failed == 0 ? kOk : kInvariantFailed;
}

int cmd_hardy(const HardyConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.samples < 1 || cfg.steps < 2) {
    diag(err, "usage", "hardy needs --samples >= 1 and --steps >= 2");
    return kUsage;
  }
  std::optional<Exponents> e;
  try {
    e.emplace(cfg.p, cfg.q);
  } catch (const Error& ex) {
    return domain_error(err, ex);
  }

  constexpr std::array<double, 3> kKappas{0.5, 1.0, 3.0};
  std::vector<hardy::StepFunction> samples;
  samples.reserve(static_cast<std::size_t>(cfg.samples));
  for (int i = 0; i < cfg.samples; ++i) {
    const double kappa = kKappas[static_cast<std::size_t>(i) % kKappas.size()];
    samples.push_back(hardy::sample_step(grid::sample_seed(cfg.seed, static_cast<std::uint64_t>(i)), cfg.steps,
                                         kappa, *e));
  }
  const auto outcomes = grid::verify_parallel(*e, samples);

  out << "sample,k,kappa,s1,s2,t,lhs,rhs,ratio,status\n";
  int passed = 0;
  int violated = 0;
  int solver_failures = 0;
  double max_ratio = 0.0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    const auto& r = o.report;
    const bool solved = o.status == grid::SampleStatus::passed || o.status == grid::SampleStatus::violated;
    const double ratio = solved ? r.lhs / r.rhs : std::nan("");
    if (solved) max_ratio = std::max(max_ratio, ratio);
    out << i << ',' << cfg.steps << ',' << format_real(samples[i].kappa()) << ',' << format_real(r.s1) << ','
        << format_real(r.s2) << ',' << (solved ? format_real(r.t) : "nan") << ','
        << (solved ? format_real(r.lhs) : "nan") << ',' << (solved ? format_real(r.rhs) : "nan") << ','
        << format_real(ratio) << ',' << grid::sample_status_name(o.status) << '\n';
    switch (o.status) {
      case grid::SampleStatus::passed: ++passed; break;
      case grid::SampleStatus::violated: ++violated; break;
      default: ++solver_failures; break;
    }
  }
  out << "summary: samples=" << cfg.samples << " passed=" << passed << " violated=" << violated
      << " solver_failures=" << solver_failures << " max_ratio=" << format_real(max_ratio) << '\n';
  if (violated > 0) {
    diag(err, "invariant-failed", std::to_string(violated) + " sample(s) violate lhs <= t^p z");
    return kInvariantFailed;
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bellman-function constant t(s1, s2) for the dyadic maximal operator", "bellman"};
  app.require_subcommand(1);

  double p = 2.0;
  double q = 1.5;

  auto* solve = app.add_subcommand("solve", "solve for t at one point and print a CSV row");
  double s1 = 0.0;
  double s2 = 0.0;
  solve->add_option("--p", p, "exponent p")->required();
  solve->add_option("--q", q, "exponent q (1 < q < p)")->required();
  solve->add_option("--s1", s1, "s1 in (0, 1)")->required();
  solve->add_option("--s2", s2, "s2 in (0, 1)")->required();

  auto* scan = app.add_subcommand("scan", "solve on an s1 grid for one or more s2 values, CSV output");
  ScanConfig scfg;
  scan->add_option("--p", scfg.p, "exponent p")->required();
  scan->add_option("--q", scfg.q, "exponent q")->required();
  scan->add_option("--s2", scfg.s2, "fixed s2 value(s), comma separated or repeated")->required()->delimiter(',');
  scan->add_option("--s1-min", scfg.s1_min, "smallest s1")->required();
  scan->add_option("--s1-max", scfg.s1_max, "largest s1")->required();
  scan->add_option("--n", scfg.n, "number of s1 grid points (>= 2)")->required();
  scan->add_option("--out", scfg.output_path, "output CSV path, '-' for stdout");

  auto* verify = app.add_subcommand("verify", "run every invariant suite for one exponent pair");
  VerifyConfig vcfg;
  verify->add_option("--p", vcfg.p, "exponent p")->required();
  verify->add_option("--q", vcfg.q, "exponent q")->required();
  verify->add_option("--grid", vcfg.grid_n, "grid size (>= 10)");
  verify->add_option("--tol", vcfg.tol, "relative tolerance of the finite-difference check");

  auto* hardy_cmd = app.add_subcommand("hardy", "check the Hardy-type inequality on random step functions");
  HardyConfig hcfg;
  hardy_cmd->add_option("--p", hcfg.p, "exponent p")->required();
  hardy_cmd->add_option("--q", hcfg.q, "exponent q")->required();
  hardy_cmd->add_option("--samples", hcfg.samples, "number of samples (>= 1)");
  hardy_cmd->add_option("--steps", hcfg.steps, "pieces per step function (>= 2)");
  hardy_cmd->add_option("--seed", hcfg.seed, "batch seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    diag(err, "usage", e.what());
    return kUsage;
  }

  if (solve->parsed()) return cmd_solve(p, q, s1, s2, out, err);
  if (scan->parsed()) return cmd_scan(scfg, out, err);
  if (verify->parsed()) return cmd_verify(vcfg, out, err);
  if (hardy_cmd->parsed()) return cmd_hardy(hcfg, out, err);
  diag(err, "usage", "no subcommand");
  return kUsage;
}

}  // namespace bellman::cli
