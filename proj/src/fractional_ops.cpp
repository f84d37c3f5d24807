#include "fracops/fractional_ops.hpp"

#include <cmath>
#include <string>

#include "fracops/errors.hpp"
#include "fracops/special_functions.hpp"

namespace fracops {
namespace {

void require_riemann(const PowerSum& f, const char* op) {
  for (const PowerTerm& t : f.terms()) {
    if (t.exponent <= -1.0)
      throw NotIntegrableError(std::string(op) + ": exponent " + std::to_string(t.exponent) +
                               " <= -1 is not locally integrable");
  }
}

bool near_nonneg_int(double e, int& k) {
  double n = std::nearbyint(e);
  if (n < 0.0 || std::fabs(e - n) > exponent_merge_eps) return false;
  k = static_cast<int>(n);
  return true;
}

}  // namespace

PowerSum rl_integral(const PowerSum& f, const FracOrder& ord) {
  require_riemann(f, "rl_integral");
  if (ord.alpha() == 0.0) return f;
  std::vector<PowerTerm> out;
  out.reserve(f.size());
  for (const PowerTerm& t : f.terms()) {
    double c = t.coeff * gamma_ratio(t.exponent + 1.0, t.exponent + 1.0 + ord.alpha());
    out.push_back({c, t.exponent + ord.alpha()});
  }
  return PowerSum(std::move(out));
}

PowerSum rl_derivative(const PowerSum& f, const FracOrder& ord) {
  require_riemann(f, "rl_derivative");
  if (ord.alpha() == 0.0) return f;
  std::vector<PowerTerm> out;
  out.reserve(f.size());
  for (const PowerTerm& t : f.terms()) {
    double e = t.exponent - ord.alpha();
    double c = t.coeff * gamma(t.exponent + 1.0) * reciprocal_gamma(e + 1.0);
    if (std::isinf(c))
      throw OverflowError("rl_derivative: coefficient overflows double");
    out.push_back({c, e});
  }
  return PowerSum(std::move(out));
}

PowerSum classical_derivative(const PowerSum& f, int n) {
  if (n < 0) throw DomainError("classical_derivative: order must be >= 0");
  std::vector<PowerTerm> out;
  out.reserve(f.size());
  for (const PowerTerm& t : f.terms()) {
    double c = t.coeff;
    bool vanished = false;
    for (int j = 0; j < n; ++j) {
      double factor = t.exponent - j;
      if (std::fabs(factor) <= exponent_merge_eps) {  // integer power differentiated away
        vanished = true;
        break;
      }
      c *= factor;
    }
    if (!vanished) out.push_back({c, t.exponent - n});
  }
  return PowerSum(std::move(out));
}

bool is_caputo_admissible(const PowerSum& f, const FracOrder& ord) {
  const int m = ord.m();
  for (const PowerTerm& t : f.terms()) {
    int k = 0;
    if (near_nonneg_int(t.exponent, k) && k < m) continue;
    if (t.exponent > static_cast<double>(m - 1)) continue;
    return false;
  }
  return true;
}

std::vector<double> taylor_at_zero(const PowerSum& f, int m) {
  std::vector<double> derivs(static_cast<std::size_t>(m), 0.0);
  for (const PowerTerm& t : f.terms()) {
    int k = 0;
    if (near_nonneg_int(t.exponent, k) && k < m)
      derivs[static_cast<std::size_t>(k)] = t.coeff * factorial(k);
  }
  return derivs;
}

PowerSum caputo_derivative(const PowerSum& f, const FracOrder& ord) {
  if (!is_caputo_admissible(f, ord))
    throw NotCaputoAdmissibleError(
        "caputo_derivative: exponents must be non-negative integers below m or exceed m-1");
  if (ord.alpha() == 0.0) return f;
  const int m = ord.m();
  PowerSum regularized = f;
  for (const PowerTerm& t : f.terms()) {
    int k = 0;
    if (near_nonneg_int(t.exponent, k) && k < m)
      regularized -= PowerSum::monomial(t.coeff, t.exponent);
  }
  return rl_derivative(regularized, ord);
}

Decomposition decompose_rl_caputo(const PowerSum& f, const FracOrder& ord) {
  if (!is_caputo_admissible(f, ord))
    throw NotCaputoAdmissibleError("decompose_rl_caputo: input is not Caputo-admissible");
  Decomposition d;
  d.caputo_part = caputo_derivative(f, ord);
  std::vector<double> derivs = taylor_at_zero(f, ord.m());
  std::vector<PowerTerm> corr;
  for (int k = 0; k < ord.m(); ++k) {
    double e = static_cast<double>(k) - ord.alpha();
    double c = derivs[static_cast<std::size_t>(k)] * reciprocal_gamma(e + 1.0);
    corr.push_back({c, e});
  }
  d.correction = PowerSum(std::move(corr));
  return d;
}

std::vector<PowerSum> null_space_basis(DerivativeKind kind, const FracOrder& ord) {
  if (ord.alpha() == 0.0)
    throw DomainError("null_space_basis: order 0 operator is the identity");
  std::vector<PowerSum> basis;
  basis.reserve(static_cast<std::size_t>(ord.m()));
  for (int j = 1; j <= ord.m(); ++j) {
    double e = kind == DerivativeKind::RiemannLiouville ? ord.alpha() - j
                                                        : static_cast<double>(ord.m() - j);
    basis.push_back(PowerSum::monomial(1.0, e));
  }
  return basis;
}

}  // namespace fracops
