#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fracops/errors.hpp"
#include "fracops/fractional_ops.hpp"
#include "fracops/laplace.hpp"
#include "fracops/special_functions.hpp"
#include "fracops/verify.hpp"

using namespace fracops;

TEST_CASE("termwise transform") {
  SPowerSum one = transform(PowerSum::constant(1.0));
  REQUIRE(one.size() == 1);
  CHECK(one.terms()[0].coeff == 1.0);
  CHECK(one.terms()[0].s_exponent == -1.0);

  SPowerSum phi = transform(PowerSum::monomial(reciprocal_gamma(0.5), -0.5));
  REQUIRE(phi.size() == 1);
  CHECK(phi.terms()[0].coeff == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(phi.terms()[0].s_exponent == doctest::Approx(-0.5).epsilon(1e-15));

  SPowerSum t = transform(PowerSum::monomial(1.0, 1.0));
  CHECK(t.terms()[0].coeff == 1.0);
  CHECK(t.terms()[0].s_exponent == -2.0);
  for (double s : {1.0, 2.0, 5.0}) {
    double numeric = numeric_laplace([](double x) { return x; }, s, 40.0 / s + 40.0, 1e-9);
    CHECK(std::fabs(numeric - t.evaluate(s)) <= 1e-8);
  }
  CHECK_THROWS_AS(transform(PowerSum::monomial(1.0, -1.0)), NotTransformableError);
}

TEST_CASE("image of the fractional integral") {
  SPowerSum ft = SPowerSum::monomial(1.0, -1.0);
  SPowerSum shifted = rule_j(FracOrder::of(0.5), ft);
  CHECK(shifted.terms()[0].s_exponent == -1.5);
  CHECK(approx_equal(rule_j(FracOrder::of(0.0), ft), ft));
}

TEST_CASE("image of the Caputo derivative") {
  FracOrder half = FracOrder::of(0.5);
  // constant: everything cancels
  SPowerSum r = rule_caputo(half, transform(PowerSum::constant(1.0)), InitialData{{1.0}});
  CHECK(r.is_zero());

  // f(t) = t: image s^(-3/2), identical to the transform of the derivative
  SPowerSum rt = rule_caputo(half, transform(PowerSum::monomial(1.0, 1.0)), InitialData{{0.0}});
  REQUIRE(rt.size() == 1);
  CHECK(rt.terms()[0].s_exponent == doctest::Approx(-1.5).epsilon(1e-15));
  CHECK(rt.terms()[0].coeff == doctest::Approx(1.0).epsilon(1e-13));
  PowerSum dt = caputo_derivative(PowerSum::monomial(1.0, 1.0), half);
  CHECK(approx_equal(rt, transform(dt)));

  // integer order reproduces the classical rule
  SPowerSum ft{{2.0, -3.0}};
  SPowerSum r2 = rule_caputo(FracOrder::of(2.0), ft, InitialData{{3.0, 4.0}});
  SPowerSum expected{{2.0, -1.0}, {-3.0, 1.0}, {-4.0, 0.0}};
  CHECK(approx_equal(r2, expected));

  CHECK_THROWS_AS(rule_caputo(half, ft, InitialData{{1.0, 2.0}}), LengthError);
}

TEST_CASE("image of the Riemann-Liouville derivative") {
  FracOrder half = FracOrder::of(0.5);
  SPowerSum r = rule_rl(half, transform(PowerSum::constant(1.0)), {0.0});
  REQUIRE(r.size() == 1);
  CHECK(r.terms()[0].s_exponent == -0.5);
  CHECK(approx_equal(r, transform(rl_derivative(PowerSum::constant(1.0), half))));

  // classical first-derivative rule at alpha = 1
  PowerSum f{{1.0, 0.0}, {1.0, 1.0}};
  SPowerSum classical = rule_rl(FracOrder::of(1.0), transform(f), rl_initial_values(f, FracOrder::of(1.0)));
  CHECK(approx_equal(classical, transform(classical_derivative(f, 1))));

  CHECK_THROWS_AS(rule_rl(half, transform(f), {0.0, 1.0}), LengthError);
}

TEST_CASE("bounded initial values of the fractional integral") {
  std::vector<double> v1 = rl_initial_values(PowerSum::constant(1.0), FracOrder::of(0.5));
  REQUIRE(v1.size() == 1);
  CHECK(v1[0] == 0.0);

  std::vector<double> v2 = rl_initial_values(PowerSum::monomial(1.0, -0.5), FracOrder::of(0.5));
  REQUIRE(v2.size() == 1);
  CHECK(v2[0] == doctest::Approx(fracops::gamma(0.5)).epsilon(1e-14));

  PowerSum mixed{{1.0, -0.5}, {1.0, 0.0}};
  CHECK_THROWS_AS(rl_initial_values(mixed, FracOrder::of(1.5)), UnboundedInitialValueError);
  CHECK_THROWS_AS(rl_initial_values(PowerSum::monomial(1.0, -1.5), FracOrder::of(0.5)),
                  NotIntegrableError);
}

TEST_CASE("maximal cancellation: annihilated kernel transforms to zero") {
  FracOrder half = FracOrder::of(0.5);
  PowerSum f = PowerSum::monomial(fracops::gamma(0.5), -0.5);
  CHECK(rl_derivative(f, half).is_zero());
  SPowerSum rhs = rule_rl(half, transform(f), rl_initial_values(f, half));
  CHECK(rhs.is_zero());
}

TEST_CASE("numeric transform") {
  CHECK(std::fabs(numeric_laplace([](double) { return 1.0; }, 2.0, 40.0, 1e-9) - 0.5) <= 1e-8);
  double phi = numeric_laplace([](double t) { return reciprocal_gamma(0.5) / std::sqrt(t); }, 1.0,
                               60.0, 1e-8);
  CHECK(std::fabs(phi - 1.0) <= 1e-6);
  CHECK(std::fabs(numeric_laplace([](double t) { return t; }, 3.0, 30.0, 1e-9) - 1.0 / 9.0) <= 1e-8);
  // growth past the horizon that exp(-st) cannot beat
  CHECK_THROWS_AS(numeric_laplace([](double t) { return std::pow(t, 10.0); }, 0.1, 10.0, 1e-8),
                  TailBoundError);
  CHECK_THROWS_AS(numeric_laplace([](double) { return 1.0; }, -1.0, 10.0, 1e-8), DomainError);
}

TEST_CASE("randomized transform diagrams") {
  verify::Options opt;
  opt.trials = 60;
  CHECK(verify::run_laplace(opt).ok());
}
