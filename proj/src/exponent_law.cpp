#include "fracops/exponent_law.hpp"

#include <cmath>
#include <cstdio>

#include "fracops/errors.hpp"
#include "fracops/fractional_ops.hpp"

namespace fracops {
namespace {

PowerSum apply_step(const OperatorStep& step, const PowerSum& f) {
  switch (step.kind) {
    case StepKind::Integral: return rl_integral(f, step.order);
    case StepKind::RlDerivative: return rl_derivative(f, step.order);
    case StepKind::CaputoDerivative: return caputo_derivative(f, step.order);
  }
  throw DomainError("apply_step: unknown operator kind");
}

std::string step_label(const OperatorStep& s) {
  const char* name = s.kind == StepKind::Integral ? "J"
                     : s.kind == StepKind::RlDerivative ? "D"
                                                        : "Dc";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s:%.12g", name, s.order.alpha());
  return buf;
}

PowerSum eta_power_sum(double lambda, const std::vector<double>& eta_coeffs) {
  if (!(lambda > -1.0)) throw DomainError("check_theorem3: lambda must exceed -1");
  std::vector<PowerTerm> terms;
  for (std::size_t n = 0; n < eta_coeffs.size(); ++n)
    if (eta_coeffs[n] != 0.0) terms.push_back({eta_coeffs[n], lambda + static_cast<double>(n)});
  return PowerSum(std::move(terms));
}

}  // namespace

OperatorWord::OperatorWord(std::vector<OperatorStep> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw DomainError("OperatorWord: at least one step required");
}

OperatorWord OperatorWord::parse(std::string_view text) {
  std::vector<OperatorStep> steps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                              : comma - pos);
    std::size_t colon = piece.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("operator step needs the form kind:order", pos);
    std::string_view kind = piece.substr(0, colon);
    StepKind k;
    if (kind == "J") k = StepKind::Integral;
    else if (kind == "D") k = StepKind::RlDerivative;
    else if (kind == "Dc") k = StepKind::CaputoDerivative;
    else throw ParseError("expected step kind J, D or Dc", pos);
    std::string order_text(piece.substr(colon + 1));
    char* end = nullptr;
    double alpha = std::strtod(order_text.c_str(), &end);
    if (end == order_text.c_str() || *end != '\0')
      throw ParseError("expected a numeric order", pos + colon + 1);
    steps.push_back({k, FracOrder::of(alpha)});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return OperatorWord(std::move(steps));
}

std::string OperatorWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) out += ',';
    out += step_label(steps_[i]);
  }
  return out;
}

WordTrace apply_word_trace(const OperatorWord& word, const PowerSum& f) {
  WordTrace trace;
  PowerSum current = f;
  const auto& steps = word.steps();
  for (std::size_t i = steps.size(); i-- > 0;) {
    std::string where = "step " + std::to_string(steps.size() - i) + " (" +
                        step_label(steps[i]) + "): ";
    try {
      current = apply_step(steps[i], current);
    } catch (const NotIntegrableError& e) {
      throw NotIntegrableError(where + e.what());
    } catch (const NotCaputoAdmissibleError& e) {
      throw NotCaputoAdmissibleError(where + e.what());
    }
    trace.stages.push_back(current);
  }
  trace.result = current;
  return trace;
}

PowerSum apply_word(const OperatorWord& word, const PowerSum& f) {
  return apply_word_trace(word, f).result;
}

bool check_theorem3(double lambda, const std::vector<double>& eta_coeffs,
                    double mu, double nu, int case_id) {
  PowerSum f = eta_power_sum(lambda, eta_coeffs);
  switch (case_id) {
    case 1: {
      if (!(mu >= 0.0 && nu >= 0.0 && nu <= mu))
        throw PreconditionError("theorem3 case 1 needs mu >= 0 and 0 <= nu <= mu");
      PowerSum lhs = rl_derivative(rl_integral(f, FracOrder::of(mu)), FracOrder::of(nu));
      PowerSum rhs = rl_integral(f, FracOrder::of(mu - nu));
      return approx_equal(lhs, rhs);
    }
    case 2: {
      if (!(mu >= 0.0 && nu > mu))
        throw PreconditionError("theorem3 case 2 needs mu >= 0 and nu > mu");
      PowerSum lhs = rl_derivative(rl_integral(f, FracOrder::of(mu)), FracOrder::of(nu));
      PowerSum rhs = rl_derivative(f, FracOrder::of(nu - mu));
      return approx_equal(lhs, rhs);
    }
    case 3: {
      if (!(mu >= 0.0 && mu < lambda + 1.0 && nu >= 0.0))
        throw PreconditionError("theorem3 case 3 needs 0 <= mu < lambda+1 and nu >= 0");
      PowerSum lhs = rl_derivative(rl_derivative(f, FracOrder::of(mu)), FracOrder::of(nu));
      PowerSum rhs = rl_derivative(f, FracOrder::of(mu + nu));
      return approx_equal(lhs, rhs);
    }
    default:
      throw DomainError("check_theorem3: case must be 1, 2 or 3");
  }
}

SequentialProblem SequentialProblem::split(Variant v, double alpha, double beta, PowerSum rhs,
                                           std::vector<double> constants) {
  if (v == Variant::FirstOrder)
    throw DomainError("SequentialProblem::split: use first_order for the D u = f problem");
  if (!(alpha > 0.0) || !(beta > 0.0) || std::fabs(alpha + beta - 1.0) > 1e-12)
    throw DomainError("SequentialProblem: needs alpha, beta > 0 with alpha + beta = 1");
  if (constants.size() != 2)
    throw LengthError("SequentialProblem: split problems carry two constants");
  return SequentialProblem(v, alpha, beta, std::move(rhs), std::move(constants));
}

SequentialProblem SequentialProblem::first_order(PowerSum rhs, double constant) {
  return SequentialProblem(Variant::FirstOrder, 1.0, 0.0, std::move(rhs), {constant});
}

PowerSum solve_sequential(const SequentialProblem& p) {
  if (!p.rhs().is_riemann_class())
    throw NotIntegrableError("solve_sequential: right-hand side must be of Riemann class");
  PowerSum u = rl_integral(p.rhs(), FracOrder::of(1.0));
  const std::vector<double>& c = p.constants();
  u += PowerSum::constant(c[0]);
  if (p.variant() == SequentialProblem::Variant::OuterAlpha)
    u += PowerSum::monomial(c[1], p.beta() - 1.0);
  else if (p.variant() == SequentialProblem::Variant::OuterBeta)
    u += PowerSum::monomial(c[1], p.alpha() - 1.0);
  return u;
}

OperatorWord word_of(const SequentialProblem& p) {
  switch (p.variant()) {
    case SequentialProblem::Variant::OuterAlpha:
      return OperatorWord({{StepKind::RlDerivative, FracOrder::of(p.alpha())},
                           {StepKind::RlDerivative, FracOrder::of(p.beta())}});
    case SequentialProblem::Variant::OuterBeta:
      return OperatorWord({{StepKind::RlDerivative, FracOrder::of(p.beta())},
                           {StepKind::RlDerivative, FracOrder::of(p.alpha())}});
    case SequentialProblem::Variant::FirstOrder:
      return OperatorWord({{StepKind::RlDerivative, FracOrder::of(1.0)}});
  }
  throw DomainError("word_of: unknown problem variant");
}

std::vector<PowerSum> sequential_null_basis(const SequentialProblem& p) {
  std::vector<PowerSum> basis;
  basis.push_back(PowerSum::constant(1.0));
  if (p.variant() == SequentialProblem::Variant::OuterAlpha)
    basis.push_back(PowerSum::monomial(1.0, p.beta() - 1.0));
  else if (p.variant() == SequentialProblem::Variant::OuterBeta)
    basis.push_back(PowerSum::monomial(1.0, p.alpha() - 1.0));
  return basis;
}

SequentialCheck verify_sequential(const SequentialProblem& p, const PowerSum& candidate) {
  SequentialCheck check;
  PowerSum applied = apply_word(word_of(p), candidate);
  check.residual = applied - p.rhs();
  check.ok = approx_equal(applied, p.rhs());
  return check;
}

}  // namespace fracops
