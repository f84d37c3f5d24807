#ifndef FRACOPS_LAPLACE_HPP
#define FRACOPS_LAPLACE_HPP

#include <functional>
#include <initializer_list>
#include <optional>
#include <vector>

#include "fracops/power_sum.hpp"
#include "fracops/sampled_function.hpp"

namespace fracops {

struct STerm {
  double coeff = 0.0;
  double s_exponent = 0.0;
};

// Laplace image restricted to the real axis s > 0: a finite combination of
// real powers of s, canonical with strictly decreasing exponents.
class SPowerSum {
 public:
  SPowerSum() = default;
  SPowerSum(std::initializer_list<STerm> terms);
  explicit SPowerSum(std::vector<STerm> terms);

  static SPowerSum monomial(double coeff, double s_exponent);

  const std::vector<STerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  double evaluate(double s) const;  // s > 0

 private:
  void canonicalize();
  std::vector<STerm> terms_;
};

bool approx_equal(const SPowerSum& a, const SPowerSum& b,
                  double rel = 1e-11, double abs_floor = 1e-14);

/// Termwise transform t^g -> Gamma(g+1) s^-(g+1).
/// NotTransformableError when an exponent is <= -1.
SPowerSum transform(const PowerSum& f);

/// Image of J^alpha: divide by s^alpha.
SPowerSum rule_j(const FracOrder& ord, const SPowerSum& ftilde);

/// Image of the Caputo derivative:
///   s^alpha ftilde - sum_k f^(k)(0+) s^(alpha-1-k), k = 0..m-1.
SPowerSum rule_caputo(const FracOrder& ord, const SPowerSum& ftilde, const InitialData& init);

/// Image of the Riemann-Liouville derivative:
///   s^alpha ftilde - sum_k (D^k J^(m-alpha) f)(0+) s^(m-1-k).
/// The initial values arrive as data; rl_initial_values supplies them
/// symbolically when they exist.
SPowerSum rule_rl(const FracOrder& ord, const SPowerSum& ftilde,
                  const std::vector<double>& rl_init);

/// The bounded limits (D^k J^(m-alpha) f)(0+) for k = 0..m-1, computed on the
/// symbolic algebra. UnboundedInitialValueError when any limit diverges.
std::vector<double> rl_initial_values(const PowerSum& f, const FracOrder& ord);

/// Numeric transform: integral over [0, horizon] by graded panels plus an
/// analytic tail bound. The tail uses `tail_bound_coeff` * exp(-s*horizon)
/// when supplied, otherwise a power-law extrapolation of f past the horizon;
/// TailBoundError when the bound exceeds tol.
double numeric_laplace(const std::function<double(double)>& f, double s, double horizon,
                       double tol, std::optional<double> tail_bound_coeff = {});

}  // namespace fracops

#endif
