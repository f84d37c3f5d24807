#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "fracops/errors.hpp"
#include "fracops/exponent_law.hpp"
#include "fracops/fractional_ops.hpp"
#include "fracops/verify.hpp"

using namespace fracops;

TEST_CASE("word parsing and rendering") {
  OperatorWord w = OperatorWord::parse("D:0.5,J:1,Dc:0.25");
  REQUIRE(w.steps().size() == 3);
  CHECK(w.steps()[0].kind == StepKind::RlDerivative);
  CHECK(w.steps()[1].kind == StepKind::Integral);
  CHECK(w.steps()[2].kind == StepKind::CaputoDerivative);
  CHECK(w.steps()[2].order.alpha() == 0.25);
  OperatorWord round = OperatorWord::parse(w.to_string());
  CHECK(round.steps().size() == 3);
  CHECK(round.steps()[1].order.alpha() == 1.0);

  CHECK_THROWS_AS(OperatorWord::parse("X:1"), ParseError);
  CHECK_THROWS_AS(OperatorWord::parse("D"), ParseError);
  CHECK_THROWS_AS(OperatorWord::parse("D:abc"), ParseError);
}

TEST_CASE("commutation without additivity") {
  PowerSum f = PowerSum::monomial(1.0, -0.5);
  CHECK(apply_word(OperatorWord::parse("D:0.5,D:0.5"), f).is_zero());
  PowerSum once = apply_word(OperatorWord::parse("D:1"), f);
  CHECK(approx_equal(once, PowerSum::monomial(-0.5, -1.5), 1e-13));
}

TEST_CASE("additivity without commutation") {
  PowerSum g = PowerSum::monomial(1.0, 0.5);
  CHECK(apply_word(OperatorWord::parse("D:0.5,D:1.5"), g).is_zero());
  PowerSum ba = apply_word(OperatorWord::parse("D:1.5,D:0.5"), g);
  CHECK(approx_equal(ba, PowerSum::monomial(-0.25, -1.5), 1e-13));
  CHECK(approx_equal(ba, apply_word(OperatorWord::parse("D:2"), g), 1e-12));
}

TEST_CASE("integration does not undo differentiation") {
  for (double a : {0.4, 0.7, 1.6}) {
    PowerSum f = PowerSum::monomial(1.0, a - 1.0);
    char steps[32];
    std::snprintf(steps, sizeof steps, "J:%g,D:%g", a, a);
    CHECK(apply_word(OperatorWord::parse(steps), f).is_zero());
    CHECK(!f.is_zero());
  }
}

TEST_CASE("step errors carry their position") {
  PowerSum f = PowerSum::monomial(1.0, -1.5);
  try {
    apply_word(OperatorWord::parse("D:0.5,J:0.5"), f);
    FAIL("expected NotIntegrableError");
  } catch (const NotIntegrableError& e) {
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
  // trace retains the intermediate stages
  WordTrace t = apply_word_trace(OperatorWord::parse("D:0.5,J:0.5"), PowerSum::monomial(1.0, 0.5));
  CHECK(t.stages.size() == 2);
}

TEST_CASE("composition law cases") {
  CHECK(check_theorem3(0.3, {1.0, 1.0}, 1.2, 0.7, 1));
  CHECK(check_theorem3(0.3, {1.0}, 0.5, 1.5, 2));
  CHECK(check_theorem3(2.0, {1.0}, 1.0, 1.0, 3));
  CHECK_THROWS_AS(check_theorem3(0.3, {1.0}, 1.0, 2.0, 1), PreconditionError);
  CHECK_THROWS_AS(check_theorem3(0.3, {1.0}, 1.0, 0.5, 2), PreconditionError);
  CHECK_THROWS_AS(check_theorem3(0.3, {1.0}, 2.0, 1.0, 3), PreconditionError);
  CHECK_THROWS_AS(check_theorem3(-1.5, {1.0}, 0.5, 0.5, 1), DomainError);
  CHECK_THROWS_AS(check_theorem3(0.3, {1.0}, 0.5, 0.25, 4), DomainError);
}

TEST_CASE("sequential problems and their solution spaces") {
  using Variant = SequentialProblem::Variant;
  PowerSum one = PowerSum::constant(1.0);

  SequentialProblem a = SequentialProblem::split(Variant::OuterAlpha, 0.5, 0.5, one, {3.0, 5.0});
  PowerSum u = solve_sequential(a);
  CHECK(approx_equal(u, PowerSum{{5.0, -0.5}, {3.0, 0.0}, {1.0, 1.0}}, 1e-13));
  SequentialCheck ac = verify_sequential(a, u);
  CHECK(ac.ok);
  CHECK(ac.residual.is_zero());

  SequentialProblem c = SequentialProblem::first_order(one, 7.0);
  PowerSum w = solve_sequential(c);
  CHECK(approx_equal(w, PowerSum{{7.0, 0.0}, {1.0, 1.0}}, 1e-13));
  CHECK(verify_sequential(c, w).ok);
  // the split problems' singular basis element does not solve the classical one
  SequentialCheck bad = verify_sequential(c, w + PowerSum::monomial(1.0, -0.5));
  CHECK(!bad.ok);
  CHECK(!bad.residual.is_zero());

  SequentialProblem b = SequentialProblem::split(Variant::OuterBeta, 0.25, 0.75,
                                                 PowerSum::monomial(1.0, 1.0), {0.0, 1.0});
  PowerSum v = solve_sequential(b);
  CHECK(approx_equal(v, PowerSum{{1.0, -0.75}, {0.5, 2.0}}, 1e-12));
  CHECK(verify_sequential(b, v).ok);

  // wrong singular exponent fails when alpha != beta: a nonzero residual
  // when the word applies, non-integrability when it does not
  SequentialProblem a2 = SequentialProblem::split(Variant::OuterAlpha, 0.75, 0.25, one, {1.0, 1.0});
  PowerSum wrong = rl_integral(one, FracOrder::of(1.0)) + PowerSum::constant(1.0) +
                   PowerSum::monomial(1.0, 0.75 - 1.0);
  CHECK(!verify_sequential(a2, wrong).ok);
  SequentialProblem a3 = SequentialProblem::split(Variant::OuterAlpha, 0.25, 0.75, one, {1.0, 1.0});
  PowerSum steep = rl_integral(one, FracOrder::of(1.0)) + PowerSum::constant(1.0) +
                   PowerSum::monomial(1.0, 0.25 - 1.0);
  CHECK_THROWS_AS(verify_sequential(a3, steep), NotIntegrableError);

  CHECK(sequential_null_basis(a).size() == 2);
  CHECK(sequential_null_basis(b).size() == 2);
  CHECK(sequential_null_basis(c).size() == 1);

  CHECK_THROWS_AS(SequentialProblem::split(Variant::OuterAlpha, 0.3, 0.6, one, {1.0, 1.0}),
                  DomainError);
  CHECK_THROWS_AS(SequentialProblem::split(Variant::OuterAlpha, 0.5, 0.5, one, {1.0}),
                  LengthError);
  CHECK_THROWS_AS(solve_sequential(SequentialProblem::first_order(PowerSum::monomial(1.0, -1.5), 0.0)),
                  NotIntegrableError);
}

TEST_CASE("randomized batteries") {
  verify::Options opt;
  opt.trials = 80;
  CHECK(verify::run_exponent_law(opt).ok());
  CHECK(verify::run_theorem3(opt).ok());
}
