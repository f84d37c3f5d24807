#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "fracops/errors.hpp"
#include "fracops/liouville.hpp"
#include "fracops/special_functions.hpp"

using namespace fracops;

TEST_CASE("closed forms on exponentials") {
  FracOrder half = FracOrder::of(0.5);
  LiouvilleTerm e2 = LiouvilleTerm::exponential(1.0, 2.0);
  LiouvilleTerm j = liouville_integral(e2, half);
  CHECK(j.rate() == 2.0);
  CHECK(j.coeff() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  LiouvilleTerm d = liouville_derivative(e2, half);
  CHECK(d.coeff() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  LiouvilleTerm e1 = LiouvilleTerm::exponential(1.0, 1.0);
  CHECK(liouville_integral(e1, FracOrder::of(1.0)).coeff() == doctest::Approx(1.0));
  CHECK(liouville_derivative(LiouvilleTerm::exponential(1.0, 3.0), FracOrder::of(2.0)).coeff() ==
        doctest::Approx(9.0).epsilon(1e-15));
}

TEST_CASE("closed forms on negative-axis powers") {
  FracOrder half = FracOrder::of(0.5);
  LiouvilleTerm p2 = LiouvilleTerm::power_of_abs(1.0, 2.0);
  LiouvilleTerm j = liouville_integral(p2, half);
  CHECK(j.delta() == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(j.coeff() == doctest::Approx(fracops::gamma(1.5) / fracops::gamma(2.0)).epsilon(1e-14));

  LiouvilleTerm d = liouville_derivative(LiouvilleTerm::power_of_abs(1.0, 1.0), half);
  CHECK(d.delta() == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(d.coeff() == doctest::Approx(fracops::gamma(1.5)).epsilon(1e-14));

  CHECK_THROWS_AS(liouville_integral(LiouvilleTerm::power_of_abs(1.0, 0.3), half),
                  NotLiouvilleClassError);
  CHECK_THROWS_AS(LiouvilleTerm::power_of_abs(1.0, -2.0), DomainError);
  CHECK_THROWS_AS(LiouvilleTerm::exponential(1.0, 0.0), DomainError);
}

TEST_CASE("integral and derivative invert each other on the class") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> alpha_dist(0.05, 2.5);
  std::uniform_real_distribution<double> coeff_dist(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    FracOrder ord = FracOrder::of(alpha_dist(rng));
    LiouvilleTerm e = LiouvilleTerm::exponential(coeff_dist(rng) + 3.5, alpha_dist(rng));
    LiouvilleTerm back = liouville_derivative(liouville_integral(e, ord), ord);
    CHECK(back.coeff() == doctest::Approx(e.coeff()).epsilon(1e-12));

    double delta = ord.alpha() + alpha_dist(rng);
    LiouvilleTerm p = LiouvilleTerm::power_of_abs(coeff_dist(rng) + 3.5, delta);
    LiouvilleTerm pback = liouville_derivative(liouville_integral(p, ord), ord);
    CHECK(pback.delta() == doctest::Approx(delta).epsilon(1e-13));
    CHECK(pback.coeff() == doctest::Approx(p.coeff()).epsilon(1e-12));
  }
}

TEST_CASE("order additivity where the class allows it") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> dist(0.05, 1.2);
  for (int i = 0; i < 100; ++i) {
    double a = dist(rng), b = dist(rng);
    double delta = a + b + dist(rng);
    LiouvilleTerm p = LiouvilleTerm::power_of_abs(1.0, delta);
    LiouvilleTerm two_step = liouville_integral(liouville_integral(p, FracOrder::of(a)),
                                                FracOrder::of(b));
    LiouvilleTerm direct = liouville_integral(p, FracOrder::of(a + b));
    CHECK(two_step.delta() == doctest::Approx(direct.delta()).epsilon(1e-13));
    CHECK(two_step.coeff() == doctest::Approx(direct.coeff()).epsilon(1e-12));
  }
}

TEST_CASE("Weyl integral through reflection") {
  FracOrder half = FracOrder::of(0.5);
  WeylTerm e = WeylTerm::decaying_exponential(1.0, 2.0);
  WeylTerm w = weyl_integral(e, half);
  CHECK(w.rate() == 2.0);
  CHECK(w.coeff() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

  WeylTerm p = weyl_integral(WeylTerm::inverse_power(1.0, 2.0), half);
  CHECK(p.delta() == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(p.coeff() == doctest::Approx(fracops::gamma(1.5) / fracops::gamma(2.0)).epsilon(1e-14));

  CHECK(weyl_integral(WeylTerm::decaying_exponential(1.0, 1.0), FracOrder::of(1.0)).coeff() ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(weyl_integral(WeylTerm::inverse_power(1.0, 0.4), half), NotLiouvilleClassError);

  // reflection is an involution
  LiouvilleTerm original = LiouvilleTerm::power_of_abs(2.5, 1.75);
  LiouvilleTerm round = reflect(reflect(original));
  CHECK(round.coeff() == original.coeff());
  CHECK(round.delta() == original.delta());
}

TEST_CASE("classification") {
  FracOrder half = FracOrder::of(0.5);
  CHECK(classify(PowerTerm{1.0, 0.5}, half) == FunctionClass::Riemann);
  CHECK(classify(PowerTerm{1.0, -1.5}, half) == FunctionClass::Neither);
  CHECK(classify(LiouvilleTerm::power_of_abs(1.0, 2.0), half) == FunctionClass::Liouville);
  CHECK(classify(LiouvilleTerm::power_of_abs(1.0, 0.3), half) == FunctionClass::Neither);
  CHECK(classify(LiouvilleTerm::exponential(1.0, 1.0), half) == FunctionClass::Liouville);
  CHECK(classify(WeylTerm::decaying_exponential(1.0, 2.0), half) == FunctionClass::Liouville);
  CHECK(std::string(to_string(FunctionClass::Riemann)) == "Riemann");
}

TEST_CASE("jump identity at a discontinuous origin") {
  FracOrder half = FracOrder::of(0.5);
  JumpIdentityResult r1 = causal_jump_identity_check(PowerSum::constant(1.0), half, 1.0);
  CHECK(r1.lhs == doctest::Approx(0.5641895835477563).epsilon(1e-12));
  CHECK(r1.rhs == doctest::Approx(0.5641895835477563).epsilon(1e-12));
  CHECK(r1.diff <= 1e-12);

  JumpIdentityResult r2 =
      causal_jump_identity_check(PowerSum{{1.0, 0.0}, {1.0, 1.0}}, half, 1.0);
  CHECK(r2.lhs == doctest::Approx(1.6925687506432689).epsilon(1e-12));
  CHECK(r2.diff <= 1e-11 * std::fabs(r2.rhs));

  // no jump: both sides collapse to the Caputo value
  JumpIdentityResult r3 = causal_jump_identity_check(PowerSum::monomial(1.0, 1.0), half, 2.0);
  CHECK(r3.diff <= 1e-11 * std::fabs(r3.rhs));

  CHECK_THROWS_AS(causal_jump_identity_check(PowerSum::constant(1.0), FracOrder::of(1.5), 1.0),
                  DomainError);
}

TEST_CASE("truncated quadrature confirms the closed forms") {
  FracOrder half = FracOrder::of(0.5);
  // exponential: tail below e^(-cT)
  double e_quad = liouville_quadrature(LiouvilleTerm::exponential(1.0, 1.0), half, 0.0, 20.0, 1e-8);
  CHECK(std::fabs(e_quad - 1.0) <= 1e-6);

  double p_quad =
      liouville_quadrature(LiouvilleTerm::power_of_abs(1.0, 2.0), half, -1.0, 20000.0, 1e-7);
  CHECK(std::fabs(p_quad - fracops::gamma(1.5) / fracops::gamma(2.0)) <= 1e-6);

  double w_exp = weyl_quadrature(WeylTerm::decaying_exponential(1.0, 2.0), half, 0.5, 20.0, 1e-8);
  CHECK(std::fabs(w_exp - std::exp(-1.0) / std::sqrt(2.0)) <= 1e-6);

  double w_pow = weyl_quadrature(WeylTerm::inverse_power(1.0, 2.0), half, 1.0, 20000.0, 1e-7);
  CHECK(std::fabs(w_pow - fracops::gamma(1.5) / fracops::gamma(2.0)) <= 1e-6);
}
