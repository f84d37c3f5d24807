// Acceptance gate: every criterion prints exactly one PASS/FAIL line and the
// binary exits nonzero if any of them fail. Tolerances are pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fracops/errors.hpp"
#include "fracops/exponent_law.hpp"
#include "fracops/fractional_ops.hpp"
#include "fracops/laplace.hpp"
#include "fracops/liouville.hpp"
#include "fracops/numeric_ops.hpp"
#include "fracops/sampled_function.hpp"
#include "fracops/special_functions.hpp"
#include "fracops/verify.hpp"

using namespace fracops;

namespace {

int g_failures = 0;

void report(int index, const char* label, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, label,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

constexpr double kSqrtPiHalf = 0.88622692545275801365;
constexpr double kInvGammaHalf = 0.56418958354775628695;

bool single_term_matches(const PowerSum& f, double coeff, double exponent, double tol) {
  return f.size() == 1 && std::fabs(f.terms()[0].coeff - coeff) <= tol &&
         std::fabs(f.terms()[0].exponent - exponent) <= 1e-12;
}

// 1. the worked-example table, frozen values at 1e-12
void criterion_worked_examples() {
  FracOrder half = FracOrder::of(0.5);
  std::string detail;
  bool ok = true;

  PowerSum a = rl_derivative(PowerSum::monomial(1.0, 0.5), half);
  if (!single_term_matches(a, kSqrtPiHalf, 0.0, 1e-12)) { ok = false; detail += "D^1/2 t^1/2; "; }

  if (!rl_derivative(PowerSum::monomial(1.0, -0.5), half).is_zero()) {
    ok = false;
    detail += "D^1/2 t^-1/2 not exactly 0; ";
  }

  PowerSum c = rl_derivative(PowerSum::monomial(1.0, -0.5), FracOrder::of(1.0));
  if (!single_term_matches(c, -0.5, -1.5, 1e-14)) { ok = false; detail += "D^1 t^-1/2; "; }

  if (!rl_derivative(PowerSum::monomial(1.0, 0.5), FracOrder::of(1.5)).is_zero()) {
    ok = false;
    detail += "D^3/2 t^1/2 not exactly 0; ";
  }

  PowerSum e = rl_derivative(PowerSum::constant(1.0), half);
  if (!single_term_matches(e, kInvGammaHalf, -0.5, 1e-12)) { ok = false; detail += "D^1/2 1; "; }

  report(1, "worked-example table", ok, detail);
}

// 2. semigroup and left-inverse batteries, 500 cases each at 1e-11
void criterion_semigroup_inverse() {
  verify::Options opt;
  opt.trials = 500;
  opt.tol = 1e-11;
  verify::SuiteResult semigroup = verify::run_semigroup(opt);
  verify::SuiteResult inverse = verify::run_inverse(opt);
  char detail[128];
  std::snprintf(detail, sizeof detail, "%d+%d checks, %d failures",
                semigroup.checks, inverse.checks, semigroup.failures + inverse.failures);
  report(2, "semigroup and left-inverse suites", semigroup.ok() && inverse.ok(), detail);
}

// 3. non-right-inverse and null spaces over 100 random orders in (0, 2)
void criterion_right_inverse_null_space() {
  verify::Rng rng(404);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    double a = rng.uniform(0.01, 1.99);
    FracOrder ord = FracOrder::of(a);
    PowerSum f = PowerSum::monomial(1.0, a - 1.0);
    if (!rl_integral(rl_derivative(f, ord), ord).is_zero() || f.is_zero()) ++failures;
  }
  for (int i = 0; i < 100; ++i) {
    FracOrder ord = FracOrder::of(rng.uniform(0.01, 1.99));
    for (const PowerSum& b : null_space_basis(DerivativeKind::RiemannLiouville, ord))
      if (!rl_derivative(b, ord).is_zero()) ++failures;
    for (const PowerSum& b : null_space_basis(DerivativeKind::Caputo, ord))
      if (!caputo_derivative(b, ord).is_zero()) ++failures;
  }
  char detail[64];
  std::snprintf(detail, sizeof detail, "%d failures over 200 draws", failures);
  report(3, "non-right-inverse and null spaces", failures == 0, detail);
}

// helpers for randomized admissible inputs
PowerSum random_admissible(verify::Rng& rng, const FracOrder& ord) {
  std::vector<PowerTerm> terms;
  for (int k = 0; k < ord.m(); ++k)
    if (rng.uniform(0.0, 1.0) < 0.5) terms.push_back({rng.uniform(0.5, 3.0), double(k)});
  int extra = rng.uniform_int(1, 3);
  for (int i = 0; i < extra; ++i)
    terms.push_back({rng.uniform(-3.0, 3.0), rng.uniform(ord.m() - 1 + 0.05 + i * 0.5,
                                                         ord.m() - 1 + 0.55 + i * 0.5)});
  return PowerSum(std::move(terms));
}

// 4. decomposition and jump identity at 1e-11 relative
void criterion_decompose_jump() {
  verify::Rng rng(505);
  int failures = 0;
  for (int i = 0; i < 300; ++i) {
    FracOrder ord = FracOrder::of(rng.uniform(0.01, 3.0));
    PowerSum f = random_admissible(rng, ord);
    if (f.is_zero()) continue;
    Decomposition d = decompose_rl_caputo(f, ord);
    if (!approx_equal(d.caputo_part + d.correction, rl_derivative(f, ord), 1e-11)) ++failures;
  }
  for (int i = 0; i < 100; ++i) {
    FracOrder ord = FracOrder::of(rng.uniform(0.02, 0.98));
    PowerSum f = PowerSum::constant(rng.uniform(0.5, 3.0)) +
                 PowerSum::monomial(rng.uniform(-2.0, 2.0), rng.uniform(0.1, 4.0));
    for (double t : {0.5, 1.0, 2.0}) {
      JumpIdentityResult r = causal_jump_identity_check(f, ord, t);
      if (r.diff > 1e-11 * std::max({1.0, std::fabs(r.lhs), std::fabs(r.rhs)})) ++failures;
    }
  }
  char detail[64];
  std::snprintf(detail, sizeof detail, "%d failures over 600 checks", failures);
  report(4, "decomposition and jump identity", failures == 0, detail);
}

// 5. transform diagrams at 1e-11, numeric cross-check at 1e-6
void criterion_laplace() {
  verify::Rng rng(606);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    PowerSum f = PowerSum::monomial(rng.uniform(-3.0, 3.0), rng.uniform(-0.9, 4.0)) +
                 PowerSum::monomial(rng.uniform(-3.0, 3.0), rng.uniform(4.1, 6.0));
    FracOrder a = FracOrder::of(rng.uniform(0.0, 3.0));
    if (!approx_equal(transform(rl_integral(f, a)), rule_j(a, transform(f)), 1e-11)) ++failures;
  }
  for (int i = 0; i < 150; ++i) {
    FracOrder ord = FracOrder::of(rng.uniform(0.01, 3.0));
    PowerSum f = random_admissible(rng, ord);
    if (f.is_zero()) continue;
    InitialData init{taylor_at_zero(f, ord.m())};
    if (!approx_equal(transform(caputo_derivative(f, ord)),
                      rule_caputo(ord, transform(f), init), 1e-11))
      ++failures;
  }
  for (int i = 0; i < 150; ++i) {
    FracOrder ord = FracOrder::of(rng.uniform(0.01, 3.0));
    PowerSum f = PowerSum::monomial(rng.uniform(-3.0, 3.0),
                                    rng.uniform(ord.alpha() - 0.95, 5.0));
    if (!approx_equal(transform(rl_derivative(f, ord)),
                      rule_rl(ord, transform(f), rl_initial_values(f, ord)), 1e-11))
      ++failures;
  }
  // numeric cross-checks of the symbolic images
  std::vector<PowerSum> sides = {
      PowerSum::constant(1.0),
      PowerSum::monomial(1.0, 1.0),
      PowerSum::monomial(reciprocal_gamma(0.5), -0.5),
      rl_integral(PowerSum::monomial(1.0, 1.0), FracOrder::of(0.5)),
      caputo_derivative(PowerSum::monomial(1.0, 1.0), FracOrder::of(0.5)),
      rl_derivative(PowerSum{{1.0, 0.0}, {1.0, 1.0}}, FracOrder::of(0.5)),
  };
  for (const PowerSum& g : sides) {
    SPowerSum image = transform(g);
    for (double s : {0.5, 1.0, 2.0, 5.0}) {
      double numeric =
          numeric_laplace([&g](double t) { return g.evaluate(t); }, s, 40.0 / s + 40.0, 1e-8);
      if (std::fabs(numeric - image.evaluate(s)) > 1e-6) ++failures;
    }
  }
  char detail[64];
  std::snprintf(detail, sizeof detail, "%d failures", failures);
  report(5, "transform diagrams and numeric cross-check", failures == 0, detail);
}

// 6. grid convergence orders in [1.8, 2.2]; J^1/2 t at t=1 within 1e-4 in < 1 s
void criterion_numeric_convergence() {
  const std::vector<int> grids = {64, 128, 256, 512, 1024};
  bool ok = true;
  std::string detail;

  PowerSum jref = rl_integral(PowerSum::monomial(1.0, 2.0), FracOrder::of(0.5));
  ConvergenceOptions jopt;
  jopt.exact = [jref](double t) { return t > 0.0 ? jref.evaluate(t) : 0.0; };
  ConvergenceResult rj = convergence_order(NumericOperator::Integral,
                                           [](double t) { return t * t; }, FracOrder::of(0.5),
                                           grids, jopt);
  if (!(rj.slope >= 1.8 && rj.slope <= 2.2)) {
    ok = false;
    detail += "J order " + std::to_string(rj.slope) + "; ";
  }

  PowerSum cref = caputo_derivative(PowerSum::monomial(1.0, 3.0), FracOrder::of(0.5));
  ConvergenceOptions copt;
  copt.exact = [cref](double t) { return t > 0.0 ? cref.evaluate(t) : 0.0; };
  copt.mth_derivative = [](double t) { return 3.0 * t * t; };
  ConvergenceResult rc = convergence_order(NumericOperator::Caputo,
                                           [](double t) { return t * t * t; }, FracOrder::of(0.5),
                                           grids, copt);
  if (!(rc.slope >= 1.8 && rc.slope <= 2.2)) {
    ok = false;
    detail += "Caputo order " + std::to_string(rc.slope) + "; ";
  }

  auto start = std::chrono::steady_clock::now();
  SampledFunction f = SampledFunction::sample([](double t) { return t; }, 1.0, 1024);
  SampledFunction j = rl_integral_numeric(f, FracOrder::of(0.5));
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  double err = std::fabs(j.values().back() - 0.75225277806367504);
  if (err > 1e-4) { ok = false; detail += "value error " + std::to_string(err) + "; "; }
  if (elapsed >= 1.0) { ok = false; detail += "took " + std::to_string(elapsed) + " s; "; }

  char slopes[96];
  std::snprintf(slopes, sizeof slopes, "orders %.2f / %.2f, value err %.1e, %.3f s",
                rj.slope, rc.slope, err, elapsed);
  report(6, "grid convergence and anchor value", ok, detail.empty() ? slopes : detail);
}

// 7. half-line closed forms at 1e-12 plus truncated-quadrature agreement at 1e-6
void criterion_liouville_weyl() {
  FracOrder half = FracOrder::of(0.5);
  bool ok = true;
  std::string detail;

  LiouvilleTerm je = liouville_integral(LiouvilleTerm::exponential(1.0, 2.0), half);
  if (std::fabs(je.coeff() - 1.0 / std::sqrt(2.0)) > 1e-12) { ok = false; detail += "J e^2t; "; }
  LiouvilleTerm de = liouville_derivative(LiouvilleTerm::exponential(1.0, 2.0), half);
  if (std::fabs(de.coeff() - std::sqrt(2.0)) > 1e-12) { ok = false; detail += "D e^2t; "; }
  LiouvilleTerm jp = liouville_integral(LiouvilleTerm::power_of_abs(1.0, 2.0), half);
  if (std::fabs(jp.coeff() - kSqrtPiHalf) > 1e-12 || std::fabs(jp.delta() - 1.5) > 1e-12) {
    ok = false;
    detail += "J |t|^-2; ";
  }
  LiouvilleTerm dp = liouville_derivative(LiouvilleTerm::power_of_abs(1.0, 1.0), half);
  if (std::fabs(dp.coeff() - kSqrtPiHalf) > 1e-12) { ok = false; detail += "D |t|^-1; "; }
  WeylTerm we = weyl_integral(WeylTerm::decaying_exponential(1.0, 2.0), half);
  if (std::fabs(we.coeff() - 1.0 / std::sqrt(2.0)) > 1e-12) { ok = false; detail += "W e^-2t; "; }
  WeylTerm wp = weyl_integral(WeylTerm::inverse_power(1.0, 2.0), half);
  if (std::fabs(wp.coeff() - kSqrtPiHalf) > 1e-12) { ok = false; detail += "W t^-2; "; }

  double q1 = liouville_quadrature(LiouvilleTerm::exponential(1.0, 1.0), half, 0.0, 20.0, 1e-8);
  if (std::fabs(q1 - 1.0) > 1e-6) { ok = false; detail += "exp quadrature; "; }
  double q2 =
      liouville_quadrature(LiouvilleTerm::power_of_abs(1.0, 2.0), half, -1.0, 20000.0, 1e-7);
  if (std::fabs(q2 - kSqrtPiHalf) > 1e-6) { ok = false; detail += "power quadrature; "; }
  double q3 = weyl_quadrature(WeylTerm::decaying_exponential(1.0, 2.0), half, 0.5, 20.0, 1e-8);
  if (std::fabs(q3 - std::exp(-1.0) / std::sqrt(2.0)) > 1e-6) { ok = false; detail += "Weyl exp; "; }
  double q4 = weyl_quadrature(WeylTerm::inverse_power(1.0, 2.0), half, 1.0, 20000.0, 1e-7);
  if (std::fabs(q4 - kSqrtPiHalf) > 1e-6) { ok = false; detail += "Weyl power; "; }

  report(7, "half-line closed forms and quadrature", ok, detail);
}

// 8. law-of-exponents counterexamples, composition sweep, solution spaces
void criterion_exponent_law() {
  bool ok = true;
  std::string detail;

  PowerSum f = PowerSum::monomial(1.0, -0.5);
  if (!apply_word(OperatorWord::parse("D:0.5,D:0.5"), f).is_zero() ||
      !approx_equal(apply_word(OperatorWord::parse("D:1"), f), PowerSum::monomial(-0.5, -1.5),
                    1e-12)) {
    ok = false;
    detail += "first counterexample; ";
  }
  PowerSum g = PowerSum::monomial(1.0, 0.5);
  PowerSum ab = apply_word(OperatorWord::parse("D:0.5,D:1.5"), g);
  PowerSum ba = apply_word(OperatorWord::parse("D:1.5,D:0.5"), g);
  if (!ab.is_zero() || !approx_equal(ba, apply_word(OperatorWord::parse("D:2"), g), 1e-11) ||
      approx_equal(ab, ba)) {
    ok = false;
    detail += "second counterexample; ";
  }

  verify::Options opt;
  verify::SuiteResult sweep = verify::run_theorem3(opt);  // 200 tuples per case
  if (!sweep.ok()) { ok = false; detail += "composition sweep; "; }

  verify::Rng rng(707);
  int failures = 0;
  for (int i = 0; i < 50; ++i) {
    double alpha = rng.uniform(0.05, 0.95);
    if (std::fabs(alpha - 0.5) < 0.01) alpha += 0.05;
    double beta = 1.0 - alpha;
    PowerSum rhs = PowerSum::monomial(rng.uniform(-2.0, 2.0), rng.uniform(-0.9, 3.0));
    std::vector<double> cs = {rng.uniform(-3.0, 3.0), rng.uniform(0.5, 3.0)};
    for (auto variant :
         {SequentialProblem::Variant::OuterAlpha, SequentialProblem::Variant::OuterBeta}) {
      SequentialProblem p = SequentialProblem::split(variant, alpha, beta, rhs, cs);
      if (!verify_sequential(p, solve_sequential(p)).ok) ++failures;
      if (sequential_null_basis(p).size() != 2) ++failures;
      for (const PowerSum& b : sequential_null_basis(p))
        if (!apply_word(word_of(p), b).is_zero()) ++failures;
    }
    SequentialProblem c = SequentialProblem::first_order(rhs, cs[0]);
    if (!verify_sequential(c, solve_sequential(c)).ok) ++failures;
    if (sequential_null_basis(c).size() != 1) ++failures;
    SequentialProblem a = SequentialProblem::split(SequentialProblem::Variant::OuterAlpha,
                                                   alpha, beta, rhs, cs);
    PowerSum wrong = rl_integral(rhs, FracOrder::of(1.0)) + PowerSum::constant(cs[0]) +
                     PowerSum::monomial(cs[1], alpha - 1.0);
    try {
      if (verify_sequential(a, wrong).ok) ++failures;
    } catch (const NotIntegrableError&) {
      // the swapped singular term is not even admissible for the word
    }
  }
  if (failures > 0) {
    ok = false;
    detail += std::to_string(failures) + " sequential failures; ";
  }
  report(8, "law-of-exponents lab", ok, detail);
}

// 9. order limits improve monotonically as eps shrinks through 1e-2, 1e-3, 1e-4
void criterion_limits() {
  bool ok = true;
  std::string detail;
  for (int m = 1; m <= 3; ++m) {
    PowerSum f;
    for (int k = 0; k < m; ++k) f += PowerSum::monomial(k + 1.0, double(k));
    f += PowerSum::monomial(1.5, m - 0.3);
    PowerSum rl_target = classical_derivative(f, m - 1);
    PowerSum cap_target = rl_target - PowerSum::constant(taylor_at_zero(f, m)[m - 1]);
    double prev_rl = 1e300, prev_cap = 1e300;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
      FracOrder ord = FracOrder::of(m - 1 + eps);
      double rl_err = 0.0, cap_err = 0.0;
      for (double t : {0.5, 1.0, 2.0}) {
        rl_err = std::max(rl_err, std::fabs(rl_derivative(f, ord).evaluate(t) -
                                            rl_target.evaluate(t)));
        cap_err = std::max(cap_err, std::fabs(caputo_derivative(f, ord).evaluate(t) -
                                              cap_target.evaluate(t)));
      }
      if (!(rl_err < prev_rl) || !(cap_err < prev_cap)) {
        ok = false;
        detail += "m=" + std::to_string(m) + " eps=" + std::to_string(eps) + "; ";
      }
      prev_rl = rl_err;
      prev_cap = cap_err;
    }
  }
  report(9, "limit behavior toward integer order", ok, detail);
}

}  // namespace

int main() {
  criterion_worked_examples();
  criterion_semigroup_inverse();
  criterion_right_inverse_null_space();
  criterion_decompose_jump();
  criterion_laplace();
  criterion_numeric_convergence();
  criterion_liouville_weyl();
  criterion_exponent_law();
  criterion_limits();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
