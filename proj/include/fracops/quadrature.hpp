#ifndef FRACOPS_QUADRATURE_HPP
#define FRACOPS_QUADRATURE_HPP

#include <functional>

namespace fracops::quad {

using Fn = std::function<double(double)>;

/// 5-point Gauss-Legendre on [a, b]. Open rule: endpoints are never sampled.
double gauss5(const Fn& f, double a, double b);

double composite_gauss5(const Fn& f, double a, double b, int panels);

/// Doubles the panel count until two successive composite estimates agree to
/// `tol` (absolute). NonConvergenceError past max_panels, reporting the last
/// two estimates.
double refine(const Fn& f, double a, double b, double tol,
              int start_panels = 4, int max_panels = 1 << 18);

/// Integral of f over [0, length] under the substitution x = length * u^grade,
/// which clusters nodes at 0 so integrable endpoint singularities transform to
/// smooth integrands. Refined to `tol`.
double graded_left(const Fn& f, double length, int grade, double tol,
                   int max_panels = 1 << 18);

/// Integral over [a, b] split into geometrically growing segments
/// [a, 2a], [2a, 4a], ...; suited to slowly decaying tails. Each segment is
/// refined to its share of `tol`.
double refine_geometric(const Fn& f, double a, double b, double tol);

}  // namespace fracops::quad

#endif
