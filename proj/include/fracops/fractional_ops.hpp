#ifndef FRACOPS_FRACTIONAL_OPS_HPP
#define FRACOPS_FRACTIONAL_OPS_HPP

#include <vector>

#include "fracops/power_sum.hpp"

namespace fracops {

// Exact fractional operators on the power-sum algebra. The power rule maps
// t^g to ratios of Gamma values; degenerate denominators are handled by
// reciprocal_gamma returning 0, so whole terms vanish instead of blowing up.

/// J^alpha: termwise t^g -> Gamma(g+1)/Gamma(g+1+alpha) t^{g+alpha}.
/// Requires every exponent > -1 (NotIntegrableError); order 0 is the identity.
PowerSum rl_integral(const PowerSum& f, const FracOrder& ord);

/// D^alpha: termwise t^g -> Gamma(g+1)/Gamma(g+1-alpha) t^{g-alpha}.
/// Input exponents must be > -1; the result may leave that class.
PowerSum rl_derivative(const PowerSum& f, const FracOrder& ord);

/// D_*^alpha: D^alpha applied to f minus its Taylor polynomial of degree m-1
/// at 0+. Annihilates constants. NotCaputoAdmissibleError unless every
/// exponent is a non-negative integer below m or exceeds m-1.
PowerSum caputo_derivative(const PowerSum& f, const FracOrder& ord);

/// n-fold classical power-rule derivative.
PowerSum classical_derivative(const PowerSum& f, int n);

struct Decomposition {
  PowerSum caputo_part;
  PowerSum correction;  // sum of f^(k)(0+) t^{k-alpha}/Gamma(k-alpha+1)
};

/// Splits D^alpha f into the Caputo part plus the initial-value correction;
/// the two added back give rl_derivative(f, ord).
Decomposition decompose_rl_caputo(const PowerSum& f, const FracOrder& ord);

enum class DerivativeKind { RiemannLiouville, Caputo };

/// Basis of the null space: t^{alpha-j} (RL) or t^{m-j} (Caputo), j = 1..m.
/// DomainError for order 0.
std::vector<PowerSum> null_space_basis(DerivativeKind kind, const FracOrder& ord);

/// Exponent test behind the Caputo precondition.
bool is_caputo_admissible(const PowerSum& f, const FracOrder& ord);

/// f^(k)(0+) for k = 0..m-1. Caller guarantees Caputo admissibility, which
/// makes every one of these limits finite.
std::vector<double> taylor_at_zero(const PowerSum& f, int m);

}  // namespace fracops

#endif
