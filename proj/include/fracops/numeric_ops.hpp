#ifndef FRACOPS_NUMERIC_OPS_HPP
#define FRACOPS_NUMERIC_OPS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "fracops/power_sum.hpp"
#include "fracops/sampled_function.hpp"

namespace fracops {

// Grid approximations of the fractional operators. The integral uses product
// integration: the piecewise-linear interpolant of f is integrated exactly
// against the kernel (t - tau)^(alpha-1), giving second order for smooth f
// with no extra error from the kernel singularity. Weight precomputation is
// O(N), evaluation O(N^2); no fast-convolution path.

/// J^alpha on the grid. Order 0 is the identity; negative orders rejected.
SampledFunction rl_integral_numeric(const SampledFunction& f, const FracOrder& ord);

/// Caputo derivative: J^(m-alpha) applied to the m-th derivative of f. The
/// derivative comes from `mth_deriv` when supplied, otherwise from
/// second-order finite differences (m limited to 1 or 2 in that case, and f
/// needs at least N = 4 intervals). Integer orders fall through to the
/// differences alone.
SampledFunction caputo_derivative_numeric(const SampledFunction& f, const FracOrder& ord,
                                          const std::optional<SampledFunction>& mth_deriv = {});

/// Riemann-Liouville derivative: the Caputo result plus the initial-value
/// correction sum evaluated at the grid nodes. Node 0 becomes a NaN marker
/// whenever a correction term with negative exponent survives.
SampledFunction rl_derivative_numeric(const SampledFunction& f, const FracOrder& ord,
                                      const InitialData& init,
                                      const std::optional<SampledFunction>& mth_deriv = {});

/// Brute-force check of the convolution integral: doubly graded panels with
/// refinement until successive estimates agree to `tol`. Shares nothing with
/// the product-integration weights above.
double oracle_quadrature(const std::function<double(double)>& f, const FracOrder& ord,
                         double t, double tol);

enum class NumericOperator { Integral, Caputo, RiemannLiouville };

struct ConvergenceOptions {
  double T = 1.0;
  std::function<double(double)> exact;           // reference solution
  std::function<double(double)> mth_derivative;  // exact derivative for Caputo/RL
  InitialData init;                              // for the RL operator
};

struct ConvergenceResult {
  double slope = 0.0;
  bool degenerate = false;  // error already at the rounding floor
  std::vector<double> steps;
  std::vector<double> errors;
};

/// Least-squares slope of log(max-node error) against log(step) over the
/// given grid sizes. Uses options.exact as reference when present; for the
/// integral operator it falls back to oracle_quadrature.
ConvergenceResult convergence_order(NumericOperator op, const std::function<double(double)>& f,
                                    const FracOrder& ord, const std::vector<int>& grid_sizes,
                                    const ConvergenceOptions& options = {});

}  // namespace fracops

#endif
