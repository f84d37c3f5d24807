#include "fracops/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracops/errors.hpp"
#include "fracops/fractional_ops.hpp"
#include "fracops/quadrature.hpp"
#include "fracops/special_functions.hpp"

namespace fracops {

SPowerSum::SPowerSum(std::initializer_list<STerm> terms) : terms_(terms) { canonicalize(); }

SPowerSum::SPowerSum(std::vector<STerm> terms) : terms_(std::move(terms)) { canonicalize(); }

SPowerSum SPowerSum::monomial(double coeff, double s_exponent) {
  return SPowerSum({STerm{coeff, s_exponent}});
}

void SPowerSum::canonicalize() {
  for (const STerm& t : terms_) {
    if (!std::isfinite(t.coeff) || !std::isfinite(t.s_exponent))
      throw DomainError("SPowerSum: coefficients and exponents must be finite");
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const STerm& a, const STerm& b) { return a.s_exponent > b.s_exponent; });
  std::vector<STerm> merged;
  merged.reserve(terms_.size());
  for (const STerm& t : terms_) {
    if (!merged.empty() && std::fabs(t.s_exponent - merged.back().s_exponent) <= exponent_merge_eps)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const STerm& t) { return t.coeff == 0.0; }),
               merged.end());
  terms_ = std::move(merged);
}

double SPowerSum::evaluate(double s) const {
  if (!(s > 0.0)) throw DomainError("SPowerSum::evaluate: s must be positive");
  double sum = 0.0;
  for (const STerm& t : terms_) sum += t.coeff * std::pow(s, t.s_exponent);
  return sum;
}

bool approx_equal(const SPowerSum& a, const SPowerSum& b, double rel, double abs_floor) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const STerm& ta = a.terms()[i];
    const STerm& tb = b.terms()[i];
    if (std::fabs(ta.s_exponent - tb.s_exponent) > exponent_merge_eps) return false;
    double tol = std::max(abs_floor, rel * std::max(std::fabs(ta.coeff), std::fabs(tb.coeff)));
    if (std::fabs(ta.coeff - tb.coeff) > tol) return false;
  }
  return true;
}

SPowerSum transform(const PowerSum& f) {
  std::vector<STerm> out;
  out.reserve(f.size());
  for (const PowerTerm& t : f.terms()) {
    if (t.exponent <= -1.0)
      throw NotTransformableError("transform: exponent " + std::to_string(t.exponent) +
                                  " <= -1 has no Laplace image");
    out.push_back({t.coeff * gamma(t.exponent + 1.0), -(t.exponent + 1.0)});
  }
  return SPowerSum(std::move(out));
}

SPowerSum rule_j(const FracOrder& ord, const SPowerSum& ftilde) {
  std::vector<STerm> out = ftilde.terms();
  for (STerm& t : out) t.s_exponent -= ord.alpha();
  return SPowerSum(std::move(out));
}

SPowerSum rule_caputo(const FracOrder& ord, const SPowerSum& ftilde, const InitialData& init) {
  if (static_cast<int>(init.derivs.size()) != ord.m())
    throw LengthError("rule_caputo: expected " + std::to_string(ord.m()) +
                      " initial values, got " + std::to_string(init.derivs.size()));
  std::vector<STerm> out = ftilde.terms();
  for (STerm& t : out) t.s_exponent += ord.alpha();
  for (int k = 0; k < ord.m(); ++k)
    out.push_back({-init.derivs[static_cast<std::size_t>(k)], ord.alpha() - (k + 1.0)});
  return SPowerSum(std::move(out));
}

SPowerSum rule_rl(const FracOrder& ord, const SPowerSum& ftilde,
                  const std::vector<double>& rl_init) {
  if (static_cast<int>(rl_init.size()) != ord.m())
    throw LengthError("rule_rl: expected " + std::to_string(ord.m()) +
                      " initial values, got " + std::to_string(rl_init.size()));
  std::vector<STerm> out = ftilde.terms();
  for (STerm& t : out) t.s_exponent += ord.alpha();
  for (int k = 0; k < ord.m(); ++k)
    out.push_back({-rl_init[static_cast<std::size_t>(k)], static_cast<double>(ord.m() - 1 - k)});
  return SPowerSum(std::move(out));
}

std::vector<double> rl_initial_values(const PowerSum& f, const FracOrder& ord) {
  if (!f.is_riemann_class())
    throw NotIntegrableError("rl_initial_values: input must be of Riemann class");
  const int m = ord.m();
  PowerSum g = rl_integral(f, FracOrder::of(static_cast<double>(m) - ord.alpha()));
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    PowerSum dk = classical_derivative(g, k);
    double limit = 0.0;
    for (const PowerTerm& t : dk.terms()) {
      if (t.exponent < -exponent_merge_eps)
        throw UnboundedInitialValueError(
            "rl_initial_values: limit of derivative " + std::to_string(k) +
            " diverges at 0+ (exponent " + std::to_string(t.exponent) + ")");
      if (std::fabs(t.exponent) <= exponent_merge_eps) limit = t.coeff;
    }
    values.push_back(limit);
  }
  return values;
}

double numeric_laplace(const std::function<double(double)>& f, double s, double horizon,
                       double tol, std::optional<double> tail_bound_coeff) {
  if (!(s > 0.0)) throw DomainError("numeric_laplace: s must be positive");
  if (!(horizon > 0.0)) throw DomainError("numeric_laplace: horizon must be positive");
  if (!(tol > 0.0)) throw DomainError("numeric_laplace: tol must be positive");

  auto integrand = [&f, s](double t) { return std::exp(-s * t) * f(t); };

  double tail = 0.0;
  if (tail_bound_coeff) {
    tail = *tail_bound_coeff * std::exp(-s * horizon);
  } else {
    // power-law extrapolation of |f| past the horizon
    double fh = std::fabs(f(horizon));
    double fh2 = std::fabs(f(0.5 * horizon));
    if (fh > 0.0) {
      double p = fh2 > 0.0 ? std::log(fh / fh2) / std::log(2.0) : 0.0;
      double rate = s - std::max(p, 0.0) / horizon;
      if (rate <= 0.0)
        throw TailBoundError("numeric_laplace: growth past the horizon outruns exp(-st)");
      tail = fh * std::exp(-s * horizon) / rate;
    }
  }
  if (tail > tol)
    throw TailBoundError("numeric_laplace: tail bound " + std::to_string(tail) +
                         " exceeds tol " + std::to_string(tol));

  // graded toward 0 to absorb a t^(eps-1) singularity, then geometric panels
  double split = std::min(1.0, horizon);
  double value = quad::graded_left(integrand, split, 8, tol / 3.0);
  if (horizon > split) value += quad::refine_geometric(integrand, split, horizon, tol / 3.0);
  return value;
}

}  // namespace fracops
