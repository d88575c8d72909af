#include <doctest.h>

#include <cmath>

#include "bellman/curve_analysis.hpp"
#include "bellman/domain.hpp"
#include "bellman/error.hpp"

using namespace bellman;
using namespace bellman::curves;

TEST_CASE("endgame constants") {
  const auto c = endgame_constants(Exponents(2.0, 1.5));
  // a = 2 * 2^1.5
  CHECK(c.a == doctest::Approx(5.656854249492381).epsilon(1e-15));
  CHECK(c.threshold == doctest::Approx(0.7071067811865476).epsilon(1e-15));
  CHECK(c.f_at_threshold == doctest::Approx(-3.0).epsilon(1e-15));
  CHECK(endgame_constants(Exponents(3.0, 2.0)).f_at_threshold == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("F anchors") {
  const Exponents e(2.0, 1.5);
  CHECK(big_f(e, domain::threshold(e)) == doctest::Approx(-3.0).epsilon(1e-12));
  // Oracle values from an mpmath prototype.
  CHECK(big_f(e, 0.1) == doctest::Approx(-6.637467937250779).epsilon(1e-12));
  CHECK(big_f(e, 0.5) == doctest::Approx(-3.1211751815570254).epsilon(1e-12));
  CHECK(big_f(e, 0.9) == doctest::Approx(-3.1249253844624567).epsilon(1e-12));
  CHECK(big_f(Exponents(2.5, 1.3), domain::threshold(Exponents(2.5, 1.3))) ==
        doctest::Approx(-13.0 / 3.0).epsilon(1e-11));
}

TEST_CASE("F diverges to -infinity as s2 -> 0") {
  const Exponents e(2.0, 1.5);
  double prev = big_f(e, 0.1);
  for (double s2 : {1e-2, 1e-3, 1e-4, 1e-6}) {
    const double f = big_f(e, s2);
    CHECK(f < prev);
    prev = f;
  }
  CHECK(prev < -1e3);
}

TEST_CASE("F identity at the threshold across exponents") {
  for (auto [p, q] : {std::pair{2.0, 1.5}, {3.0, 2.0}, {2.5, 1.3}, {5.0, 1.2}, {1.8, 1.7}}) {
    const Exponents e(p, q);
    const auto c = endgame_constants(e);
    CAPTURE(p);
    CAPTURE(q);
    CHECK(std::abs(big_f(e, c.threshold) - c.f_at_threshold) <= 1e-10);
    CHECK(c.f_at_threshold < 0.0);
    CHECK(std::pow(e.q_conjugate(), q) < c.a);
  }
}

TEST_CASE("F' matches central differences and the sign of a - G") {
  for (auto [p, q] : {std::pair{2.0, 1.5}, {3.0, 2.0}, {2.5, 1.3}}) {
    const Exponents e(p, q);
    const auto c = endgame_constants(e);
    for (int i = 1; i <= 60; ++i) {
      const double s2 = 0.98 * i / 60.0;
      const double h = 1e-6 * s2;
      const double fd = (big_f(e, s2 + h) - big_f(e, s2 - h)) / (2.0 * h);
      const double an = big_f_deriv(e, s2);
      CAPTURE(p);
      CAPTURE(s2);
      CHECK(std::abs(fd - an) <= 1e-5 * std::max(1.0, std::abs(an)));
      CHECK((an > 0.0) == (c.a - big_g(e, s2) > 0.0));
    }
  }
}

TEST_CASE("F < 0 and F' > 0 below the threshold") {
  for (auto [p, q] : {std::pair{2.0, 1.5}, {3.0, 2.0}, {2.5, 1.3}}) {
    const Exponents e(p, q);
    const double thr = domain::threshold(e);
    for (int i = 1; i <= 100; ++i) {
      const double s2 = thr * i / 101.0;
      CHECK(big_f(e, s2) < 0.0);
      CHECK(big_f_deriv(e, s2) > 0.0);
    }
  }
}

TEST_CASE("G anchors and strict increase") {
  const Exponents e(2.0, 1.5);
  CHECK(big_g(e, domain::threshold(e)) == doctest::Approx(5.656854249492381).epsilon(1e-12));
  for (auto [p, q] : {std::pair{2.0, 1.5}, {3.0, 2.0}, {2.5, 1.3}}) {
    const Exponents ee(p, q);
    double prev = big_g(ee, 0.02);
    for (int i = 1; i < 200; ++i) {
      const double g = big_g(ee, 0.02 + 0.96 * i / 199.0);
      CHECK(g > prev);
      prev = g;
    }
  }
}

TEST_CASE("curve functions reject s2 outside (0, 1)") {
  const Exponents e(2.0, 1.5);
  CHECK_THROWS_AS(big_f(e, 0.0), Error);
  CHECK_THROWS_AS(big_f(e, 1.0), Error);
  CHECK_THROWS_AS(big_f_deriv(e, -0.5), Error);
  CHECK_THROWS_AS(big_g(e, 1.2), Error);
}
