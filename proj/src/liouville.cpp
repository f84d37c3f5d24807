#include "fracops/liouville.hpp"

#include <cmath>
#include <string>

#include "fracops/errors.hpp"
#include "fracops/fractional_ops.hpp"
#include "fracops/quadrature.hpp"
#include "fracops/special_functions.hpp"

namespace fracops {

LiouvilleTerm LiouvilleTerm::power_of_abs(double coeff, double delta) {
  if (!(delta > 0.0)) throw DomainError("LiouvilleTerm: delta must be positive");
  if (!std::isfinite(coeff)) throw DomainError("LiouvilleTerm: coefficient must be finite");
  return LiouvilleTerm(Kind::PowerOfAbs, coeff, delta);
}

LiouvilleTerm LiouvilleTerm::exponential(double coeff, double rate) {
  if (!(rate > 0.0)) throw DomainError("LiouvilleTerm: rate must be positive");
  if (!std::isfinite(coeff)) throw DomainError("LiouvilleTerm: coefficient must be finite");
  return LiouvilleTerm(Kind::Exponential, coeff, rate);
}

double LiouvilleTerm::delta() const {
  if (kind_ != Kind::PowerOfAbs) throw DomainError("LiouvilleTerm: not a power term");
  return param_;
}

double LiouvilleTerm::rate() const {
  if (kind_ != Kind::Exponential) throw DomainError("LiouvilleTerm: not an exponential term");
  return param_;
}

double LiouvilleTerm::evaluate(double t) const {
  if (kind_ == Kind::Exponential) return coeff_ * std::exp(param_ * t);
  if (!(t < 0.0)) throw DomainError("LiouvilleTerm: |t|^-delta terms live on t < 0");
  return coeff_ * std::pow(-t, -param_);
}

WeylTerm WeylTerm::inverse_power(double coeff, double delta) {
  if (!(delta > 0.0)) throw DomainError("WeylTerm: delta must be positive");
  if (!std::isfinite(coeff)) throw DomainError("WeylTerm: coefficient must be finite");
  return WeylTerm(Kind::InversePower, coeff, delta);
}

WeylTerm WeylTerm::decaying_exponential(double coeff, double rate) {
  if (!(rate > 0.0)) throw DomainError("WeylTerm: rate must be positive");
  if (!std::isfinite(coeff)) throw DomainError("WeylTerm: coefficient must be finite");
  return WeylTerm(Kind::DecayingExponential, coeff, rate);
}

double WeylTerm::delta() const {
  if (kind_ != Kind::InversePower) throw DomainError("WeylTerm: not a power term");
  return param_;
}

double WeylTerm::rate() const {
  if (kind_ != Kind::DecayingExponential) throw DomainError("WeylTerm: not an exponential term");
  return param_;
}

double WeylTerm::evaluate(double t) const {
  if (kind_ == Kind::DecayingExponential) return coeff_ * std::exp(-param_ * t);
  if (!(t > 0.0)) throw DomainError("WeylTerm: t^-delta terms live on t > 0");
  return coeff_ * std::pow(t, -param_);
}

WeylTerm reflect(const LiouvilleTerm& f) {
  if (f.kind() == LiouvilleTerm::Kind::PowerOfAbs)
    return WeylTerm::inverse_power(f.coeff(), f.delta());
  return WeylTerm::decaying_exponential(f.coeff(), f.rate());
}

LiouvilleTerm reflect(const WeylTerm& g) {
  if (g.kind() == WeylTerm::Kind::InversePower)
    return LiouvilleTerm::power_of_abs(g.coeff(), g.delta());
  return LiouvilleTerm::exponential(g.coeff(), g.rate());
}

LiouvilleTerm liouville_integral(const LiouvilleTerm& f, const FracOrder& ord) {
  const double alpha = ord.alpha();
  if (f.kind() == LiouvilleTerm::Kind::Exponential)
    return LiouvilleTerm::exponential(f.coeff() * std::pow(f.rate(), -alpha), f.rate());
  if (!(f.delta() > alpha))
    throw NotLiouvilleClassError("liouville_integral: needs delta > alpha, got delta = " +
                                 std::to_string(f.delta()) + ", alpha = " + std::to_string(alpha));
  if (alpha == 0.0) return f;
  double c = f.coeff() * gamma_ratio(f.delta() - alpha, f.delta());
  return LiouvilleTerm::power_of_abs(c, f.delta() - alpha);
}

LiouvilleTerm liouville_derivative(const LiouvilleTerm& f, const FracOrder& ord) {
  const double alpha = ord.alpha();
  if (f.kind() == LiouvilleTerm::Kind::Exponential)
    return LiouvilleTerm::exponential(f.coeff() * std::pow(f.rate(), alpha), f.rate());
  if (alpha == 0.0) return f;
  double c = f.coeff() * gamma_ratio(f.delta() + alpha, f.delta());
  return LiouvilleTerm::power_of_abs(c, f.delta() + alpha);
}

WeylTerm weyl_integral(const WeylTerm& g, const FracOrder& ord) {
  return reflect(liouville_integral(reflect(g), ord));
}

const char* to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::Riemann: return "Riemann";
    case FunctionClass::Liouville: return "Liouville";
    case FunctionClass::Neither: return "Neither";
  }
  return "Neither";
}

FunctionClass classify(const PowerTerm& term, const FracOrder&) {
  return term.exponent > -1.0 ? FunctionClass::Riemann : FunctionClass::Neither;
}

FunctionClass classify(const LiouvilleTerm& term, const FracOrder& ord) {
  if (term.kind() == LiouvilleTerm::Kind::Exponential) return FunctionClass::Liouville;
  return term.delta() > ord.alpha() ? FunctionClass::Liouville : FunctionClass::Neither;
}

FunctionClass classify(const WeylTerm& term, const FracOrder& ord) {
  return classify(reflect(term), ord);
}

JumpIdentityResult causal_jump_identity_check(const PowerSum& f, const FracOrder& ord, double t) {
  if (!(ord.alpha() > 0.0) || !(ord.alpha() < 1.0))
    throw DomainError("causal_jump_identity_check: needs 0 < alpha < 1");
  if (!is_caputo_admissible(f, ord))
    throw NotCaputoAdmissibleError("causal_jump_identity_check: input is not Caputo-admissible");
  double f0 = taylor_at_zero(f, 1)[0];
  JumpIdentityResult r;
  r.lhs = f0 * reciprocal_gamma(1.0 - ord.alpha()) * std::pow(t, -ord.alpha()) +
          caputo_derivative(f, ord).evaluate(t);
  r.rhs = rl_derivative(f, ord).evaluate(t);
  r.diff = std::fabs(r.lhs - r.rhs);
  return r;
}

double liouville_quadrature(const LiouvilleTerm& f, const FracOrder& ord,
                            double t, double T, double tol) {
  const double alpha = ord.alpha();
  if (!(alpha > 0.0)) throw DomainError("liouville_quadrature: order must be positive");
  if (!(T + t > 0.0)) throw DomainError("liouville_quadrature: empty truncated range");
  auto integrand = [&](double u) { return std::pow(u, alpha - 1.0) * f.evaluate(t - u); };
  double len = t + T;
  int grade = std::max(2, static_cast<int>(std::ceil(3.0 / alpha)));
  double raw_tol = 0.5 * tol * gamma(alpha);
  double split = std::min(1.0, len);
  double value = quad::graded_left(integrand, split, grade, raw_tol);
  if (len > split) value += quad::refine_geometric(integrand, split, len, raw_tol);
  return value * reciprocal_gamma(alpha);
}

double weyl_quadrature(const WeylTerm& g, const FracOrder& ord,
                       double t, double T, double tol) {
  const double alpha = ord.alpha();
  if (!(alpha > 0.0)) throw DomainError("weyl_quadrature: order must be positive");
  if (!(T > t)) throw DomainError("weyl_quadrature: truncation T must exceed t");
  auto integrand = [&](double u) { return std::pow(u, alpha - 1.0) * g.evaluate(t + u); };
  double len = T - t;
  int grade = std::max(2, static_cast<int>(std::ceil(3.0 / alpha)));
  double raw_tol = 0.5 * tol * gamma(alpha);
  double split = std::min(1.0, len);
  double value = quad::graded_left(integrand, split, grade, raw_tol);
  if (len > split) value += quad::refine_geometric(integrand, split, len, raw_tol);
  return value * reciprocal_gamma(alpha);
}

}  // namespace fracops
