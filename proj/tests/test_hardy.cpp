#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "bellman/domain.hpp"
#include "bellman/error.hpp"
#include "bellman/hardy.hpp"
#include "bellman/solver.hpp"

using namespace bellman;
using namespace bellman::hardy;

namespace {

const Exponents kE(2.0, 1.5);

StepFunction two_step() { return StepFunction({0.0, 0.25, 1.0}, {2.0, 1.0}); }

// p = 2 antiderivative: on (b0, b1] the average is v + c/u with c = A - v*b0.
double lhs_p2_oracle(const StepFunction& h) {
  const auto b = h.breakpoints();
  const auto v = h.values();
  double acc = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double c = acc - v[i] * b[i];
    if (b[i] == 0.0) {
      total += v[i] * v[i] * b[i + 1];
    } else {
      total += v[i] * v[i] * (b[i + 1] - b[i]) + 2.0 * v[i] * c * std::log(b[i + 1] / b[i]) +
               c * c * (1.0 / b[i] - 1.0 / b[i + 1]);
    }
    acc += v[i] * (b[i + 1] - b[i]);
  }
  return total;
}

}  // namespace

TEST_CASE("StepFunction construction") {
  const auto h = two_step();
  CHECK(h.pieces() == 2);
  CHECK(h.kappa() == 1.0);
  CHECK(h.length(1) == 0.75);
  CHECK_FALSE(h.is_constant());
  CHECK(StepFunction({0.0, 0.5, 2.0}, {3.0, 3.0}).is_constant());

  const std::vector<double> lengths{0.25, 0.75};
  const std::vector<double> values{2.0, 1.0};
  const auto g = StepFunction::from_lengths(lengths, values);
  CHECK(g.breakpoints()[1] == 0.25);
  CHECK(g.kappa() == 1.0);
}

TEST_CASE("StepFunction rejects invalid input") {
  CHECK_THROWS_AS(StepFunction({0.0, 1.0}, {}), Error);
  CHECK_THROWS_AS(StepFunction({0.1, 1.0}, {1.0}), Error);
  CHECK_THROWS_AS(StepFunction({0.0, 1.0, 1.0}, {1.0, 2.0}), Error);
  CHECK_THROWS_AS(StepFunction({0.0, 1.0}, {-1.0}), Error);
  CHECK_THROWS_AS(StepFunction({0.0, 1.0}, {0.0}), Error);
  CHECK_THROWS_AS(StepFunction({0.0, 1.0}, {NAN}), Error);
  CHECK_THROWS_AS(two_step().scaled(0.0), Error);
}

TEST_CASE("two-step moments, parameters and Hardy functional") {
  const auto h = two_step();
  const auto m = step_moments(h, kE);
  CHECK(m.x == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(m.y == doctest::Approx(1.4571067811865475).epsilon(1e-15));
  CHECK(m.z == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(m.kappa == 1.0);

  const auto pt = moments_to_params(m, kE);
  CHECK(pt.s1 == doctest::Approx(0.8928571428571429).epsilon(1e-15));
  // mpmath oracle: 1.25^1.5 / 1.4571067811865475
  CHECK(pt.s2 == doctest::Approx(0.9591215304065261).epsilon(1e-14));

  const auto lhs = hardy_lhs(h, kE);
  // 1 + 0.9375 + 0.5 ln 4
  CHECK(std::abs(lhs.value - 2.6306471805599453) <= 1e-9);
  CHECK(lhs.error_estimate <= 1e-9);

  const auto rep = verify_hardy(h, kE);
  CHECK(rep.passed);
  CHECK(rep.ratio == doctest::Approx(1.5032269603199688).epsilon(1e-10));
  CHECK(rep.t * rep.t >= rep.ratio);
  CHECK(rep.t == doctest::Approx(1.326154198044027).epsilon(1e-9));
}

TEST_CASE("constant h") {
  const StepFunction h({0.0, 0.7, 3.0}, {1.5, 1.5});
  for (auto [p, q] : {std::pair{2.0, 1.5}, {3.0, 2.0}}) {
    const Exponents e(p, q);
    const auto m = step_moments(h, e);
    CHECK(m.x == doctest::Approx(4.5).epsilon(1e-15));
    CHECK(m.y == doctest::Approx(std::pow(1.5, q) * 3.0).epsilon(1e-15));
    CHECK(m.z == doctest::Approx(std::pow(1.5, p) * 3.0).epsilon(1e-15));
    const auto pt = moments_to_params(m, e);
    CHECK(pt.s1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pt.s2 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(hardy_lhs(h, e).value == doctest::Approx(std::pow(1.5, p) * 3.0).epsilon(1e-13));
    CHECK_THROWS_AS(verify_hardy(h, e), Error);
  }
}

TEST_CASE("moments_to_params rejects inconsistent moments") {
  // z too small for the given x violates the power-mean chain.
  CHECK_THROWS_AS(moments_to_params({1.0, 1.0, 0.5, 1.0}, kE), Error);
  CHECK_THROWS_AS(moments_to_params({0.0, 1.0, 1.0, 1.0}, kE), Error);
}

TEST_CASE("scaling leaves parameters and ratio unchanged") {
  for (std::uint64_t seed = 1; seed < 30; ++seed) {
    const auto h = sample_step(seed, 5, 1.0, kE);
    const auto m = step_moments(h, kE);
    const auto pt = moments_to_params(m, kE);
    const double ratio = hardy_lhs(h, kE).value / m.z;
    for (double c : {0.01, 0.5, 7.0, 300.0}) {
      const auto hc = h.scaled(c);
      const auto mc = step_moments(hc, kE);
      CHECK(mc.x == doctest::Approx(c * m.x).epsilon(1e-14));
      CHECK(mc.y == doctest::Approx(std::pow(c, 1.5) * m.y).epsilon(1e-14));
      CHECK(mc.z == doctest::Approx(c * c * m.z).epsilon(1e-14));
      const auto ptc = moments_to_params(mc, kE);
      CHECK(ptc.s1 == doctest::Approx(pt.s1).epsilon(1e-13));
      CHECK(ptc.s2 == doctest::Approx(pt.s2).epsilon(1e-13));
      CHECK(hardy_lhs(hc, kE).value / mc.z == doctest::Approx(ratio).epsilon(1e-10));
    }
  }
}

TEST_CASE("quadrature matches the p = 2 antiderivative") {
  const Exponents e(2.0, 1.5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const double kappa = seed % 3 == 0 ? 0.5 : seed % 3 == 1 ? 1.0 : 3.0;
    const auto h = sample_step(seed, 2 + static_cast<int>(seed % 7), kappa, e);
    const auto lhs = hardy_lhs(h, e);
    const double exact = lhs_p2_oracle(h);
    CAPTURE(seed);
    CHECK(std::abs(lhs.value - exact) <= 1e-10 * exact);
    CHECK(std::abs(lhs.value - exact) <= lhs.error_estimate + 1e-12 * exact);
  }
  // A short first segment followed by a long one stresses the 1/u tail.
  const StepFunction tail({0.0, 1e-4, 10.0}, {50.0, 0.01});
  CHECK(std::abs(hardy_lhs(tail, e).value - lhs_p2_oracle(tail)) <= 1e-10 * lhs_p2_oracle(tail));
}

TEST_CASE("decreasing rearrangement dominates and both pass") {
  int checked = 0;
  for (auto [p, q] : {std::pair{2.0, 1.5}, {3.0, 2.0}}) {
    const Exponents e(p, q);
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
      const auto h = sample_step(seed, 2 + static_cast<int>(seed % 7), 1.0, e);
      const auto r = h.decreasing_rearrangement();
      const auto vals = r.values();
      for (std::size_t i = 1; i < vals.size(); ++i) CHECK(vals[i] <= vals[i - 1]);
      CHECK(step_moments(r, e).z == doctest::Approx(step_moments(h, e).z).epsilon(1e-13));
      CHECK(hardy_lhs(r, e).value >= hardy_lhs(h, e).value * (1.0 - 1e-12));
      // h and its rearrangement share (s1, s2), so both solve or neither does.
      bool passed_h = false;
      bool passed_r = false;
      try {
        passed_h = verify_hardy(h, e).passed;
        passed_r = verify_hardy(r, e).passed;
      } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::no_root);
        continue;
      }
      CHECK(passed_h);
      CHECK(passed_r);
      ++checked;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("sample_step determinism and validity") {
  const auto a = sample_step(42, 6, 3.0, kE);
  const auto b = sample_step(42, 6, 3.0, kE);
  const auto c = sample_step(43, 6, 3.0, kE);
  CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
  CHECK(std::equal(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin()));
  CHECK_FALSE(std::equal(a.values().begin(), a.values().end(), c.values().begin()));
  CHECK(a.pieces() == 6);
  CHECK(a.kappa() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK_THROWS_AS(sample_step(1, 1, 1.0, kE), Error);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto h = sample_step(seed, 2, 1.0, kE);
    const auto m = step_moments(h, kE);
    CHECK(m.x / m.kappa <= std::pow(m.y / m.kappa, 1.0 / 1.5) * (1.0 + 1e-12));
    CHECK(std::pow(m.y / m.kappa, 1.0 / 1.5) <= std::sqrt(m.z / m.kappa) * (1.0 + 1e-12));
    const auto pt = moments_to_params(m, kE);
    CHECK(pt.s2 < 1.0 - kInteriorMargin);
    CHECK(pt.s2 - domain::lower_curve(kE, pt.s1) > kInteriorMargin);
  }
}

TEST_CASE("verify_hardy on random samples") {
  int solved = 0;
  for (auto [p, q] : {std::pair{2.0, 1.5}, {3.0, 2.0}}) {
    const Exponents e(p, q);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto h = sample_step(seed, 2 + static_cast<int>(seed % 7), 1.0, e);
      try {
        const auto rep = verify_hardy(h, e);
        CAPTURE(seed);
        CHECK(rep.passed);
        CHECK(rep.lhs <= rep.rhs * (1.0 + kRelativeBudget) + rep.quadrature_error_estimate);
        CHECK(rep.ratio == doctest::Approx(rep.lhs / step_moments(h, e).z));
        ++solved;
      } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::no_root);
      }
    }
  }
  CHECK(solved > 100);
}
