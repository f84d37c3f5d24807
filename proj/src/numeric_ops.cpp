#include "fracops/numeric_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fracops/errors.hpp"
#include "fracops/quadrature.hpp"
#include "fracops/special_functions.hpp"

namespace fracops {
namespace {

// Convolution weights of the product-trapezoidal rule:
//   J^a f(t_n) ~ h^a / Gamma(a+2) [ a0(n) f_0 + sum_{j=1}^{n-1} b_{n-j} f_j + f_n ]
// with b_k = (k+1)^{a+1} - 2 k^{a+1} + (k-1)^{a+1}. The second difference
// cancels badly for large k, so it is formed in long double.
std::vector<double> interior_weights(double alpha, int n_max) {
  long double a1 = static_cast<long double>(alpha) + 1.0L;
  std::vector<double> b(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int k = 1; k <= n_max; ++k) {
    long double kk = static_cast<long double>(k);
    long double val = std::pow(kk + 1.0L, a1) - 2.0L * std::pow(kk, a1) +
                      std::pow(kk - 1.0L, a1);
    b[static_cast<std::size_t>(k)] = static_cast<double>(val);
  }
  return b;
}

double left_end_weight(double alpha, int n) {
  long double a = static_cast<long double>(alpha);
  long double nn = static_cast<long double>(n);
  long double val = std::pow(nn - 1.0L, a + 1.0L) - std::pow(nn, a) * (nn - a - 1.0L);
  return static_cast<double>(val);
}

// Second-order finite differences written as nested differences, so a
// constant input reconstructs to exactly zero.
std::vector<double> first_derivative(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  d[0] = (3.0 * (f[1] - f[0]) - (f[2] - f[1])) / (2.0 * h);
  for (std::size_t j = 1; j + 1 < n; ++j) d[j] = (f[j + 1] - f[j - 1]) / (2.0 * h);
  d[n - 1] = (3.0 * (f[n - 1] - f[n - 2]) - (f[n - 2] - f[n - 3])) / (2.0 * h);
  return d;
}

std::vector<double> second_derivative(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  auto dd = [&f](std::size_t j) { return (f[j + 1] - f[j]) - (f[j] - f[j - 1]); };
  for (std::size_t j = 1; j + 1 < n; ++j) d[j] = dd(j) / (h * h);
  // one-sided: second difference minus third difference at the boundary
  double d3_left = ((f[3] - f[2]) - (f[2] - f[1])) - ((f[2] - f[1]) - (f[1] - f[0]));
  d[0] = (dd(1) - d3_left) / (h * h);
  std::size_t e = n - 1;
  double d3_right =
      ((f[e] - f[e - 1]) - (f[e - 1] - f[e - 2])) - ((f[e - 1] - f[e - 2]) - (f[e - 2] - f[e - 3]));
  d[e] = (dd(e - 1) + d3_right) / (h * h);
  return d;
}

std::vector<double> reconstruct_mth_derivative(const SampledFunction& f, int m) {
  if (f.max_index() < 4)
    throw DomainError("caputo_derivative_numeric: need N >= 4 to reconstruct the derivative");
  if (m == 1) return first_derivative(f.values(), f.step());
  if (m == 2) return second_derivative(f.values(), f.step());
  throw UnsupportedOrderError(
      "caputo_derivative_numeric: orders above 2 need the m-th derivative supplied");
}

}  // namespace

SampledFunction rl_integral_numeric(const SampledFunction& f, const FracOrder& ord) {
  f.require_finite("rl_integral_numeric");
  const double alpha = ord.alpha();
  if (alpha == 0.0) return f;
  if (alpha < 0.0) throw DomainError("rl_integral_numeric: negative order");

  const int N = f.max_index();
  const double h = f.step();
  const std::vector<double>& v = f.values();
  const std::vector<double> b = interior_weights(alpha, N);
  const double scale = std::pow(h, alpha) * reciprocal_gamma(alpha + 2.0);

  std::vector<double> out(v.size(), 0.0);
  for (int n = 1; n <= N; ++n) {
    double acc = left_end_weight(alpha, n) * v[0];
    for (int j = 1; j < n; ++j) acc += b[static_cast<std::size_t>(n - j)] * v[static_cast<std::size_t>(j)];
    acc += v[static_cast<std::size_t>(n)];
    out[static_cast<std::size_t>(n)] = scale * acc;
  }
  return SampledFunction(h, std::move(out));
}

SampledFunction caputo_derivative_numeric(const SampledFunction& f, const FracOrder& ord,
                                          const std::optional<SampledFunction>& mth_deriv) {
  f.require_finite("caputo_derivative_numeric");
  const double alpha = ord.alpha();
  if (alpha == 0.0) return f;
  const int m = ord.m();

  std::vector<double> deriv;
  if (mth_deriv) {
    mth_deriv->require_finite("caputo_derivative_numeric (supplied derivative)");
    if (mth_deriv->node_count() != f.node_count() ||
        std::fabs(mth_deriv->step() - f.step()) > 1e-12 * f.step())
      throw DomainError("caputo_derivative_numeric: supplied derivative grid does not match");
    deriv = mth_deriv->values();
  } else {
    if (alpha > 2.0)
      throw UnsupportedOrderError(
          "caputo_derivative_numeric: order > 2 requires the m-th derivative");
    deriv = reconstruct_mth_derivative(f, m);
  }

  SampledFunction dm(f.step(), std::move(deriv));
  if (ord.is_integer()) return dm;
  return rl_integral_numeric(dm, FracOrder::of(static_cast<double>(m) - alpha));
}

SampledFunction rl_derivative_numeric(const SampledFunction& f, const FracOrder& ord,
                                      const InitialData& init,
                                      const std::optional<SampledFunction>& mth_deriv) {
  if (static_cast<int>(init.derivs.size()) != ord.m())
    throw LengthError("rl_derivative_numeric: expected " + std::to_string(ord.m()) +
                      " initial values, got " + std::to_string(init.derivs.size()));
  SampledFunction out = caputo_derivative_numeric(f, ord, mth_deriv);
  bool singular_at_zero = false;
  for (int k = 0; k < ord.m(); ++k) {
    double e = static_cast<double>(k) - ord.alpha();
    double c = init.derivs[static_cast<std::size_t>(k)] * reciprocal_gamma(e + 1.0);
    if (c == 0.0) continue;
    if (e < 0.0) singular_at_zero = true;
    for (int j = 1; j <= out.max_index(); ++j)
      out.values()[static_cast<std::size_t>(j)] += c * std::pow(out.time_at(j), e);
  }
  if (singular_at_zero)
    out.values()[0] = std::numeric_limits<double>::quiet_NaN();
  return out;
}

double oracle_quadrature(const std::function<double(double)>& f, const FracOrder& ord,
                         double t, double tol) {
  const double alpha = ord.alpha();
  if (!(alpha > 0.0)) throw DomainError("oracle_quadrature: order must be positive");
  if (!(t > 0.0)) throw DomainError("oracle_quadrature: t must be positive");
  if (!(tol > 0.0)) throw DomainError("oracle_quadrature: tol must be positive");

  const double half = 0.5 * t;
  const double raw_tol = 0.5 * tol * gamma(alpha);
  // Near tau = 0 the grading tames whatever integrable singularity f has;
  // near tau = t the grade is matched to the kernel exponent.
  const int grade_f = 6;
  const int grade_kernel = std::max(2, static_cast<int>(std::ceil(3.0 / alpha)));

  double left = quad::graded_left(
      [&](double tau) { return std::pow(t - tau, alpha - 1.0) * f(tau); }, half, grade_f, raw_tol);
  double right = quad::graded_left(
      [&](double u) { return std::pow(u, alpha - 1.0) * f(t - u); }, half, grade_kernel, raw_tol);
  return (left + right) * reciprocal_gamma(alpha);
}

ConvergenceResult convergence_order(NumericOperator op, const std::function<double(double)>& f,
                                    const FracOrder& ord, const std::vector<int>& grid_sizes,
                                    const ConvergenceOptions& options) {
  if (grid_sizes.size() < 3)
    throw DomainError("convergence_order: need at least 3 grid sizes");
  for (std::size_t i = 1; i < grid_sizes.size(); ++i)
    if (grid_sizes[i] <= grid_sizes[i - 1])
      throw DomainError("convergence_order: grid sizes must be strictly increasing");

  ConvergenceResult result;
  double ref_scale = 1.0;
  for (int n : grid_sizes) {
    SampledFunction grid = SampledFunction::sample(f, options.T, n);
    std::optional<SampledFunction> dm;
    if (options.mth_derivative)
      dm = SampledFunction::sample(options.mth_derivative, options.T, n);

    SampledFunction approx = [&] {
      switch (op) {
        case NumericOperator::Integral:
          return rl_integral_numeric(grid, ord);
        case NumericOperator::Caputo:
          return caputo_derivative_numeric(grid, ord, dm);
        case NumericOperator::RiemannLiouville:
          return rl_derivative_numeric(grid, ord, options.init, dm);
      }
      throw DomainError("convergence_order: unknown operator");
    }();

    double err = 0.0;
    for (int j = 1; j <= n; ++j) {
      double tj = grid.time_at(j);
      double ref;
      if (options.exact) {
        ref = options.exact(tj);
      } else if (op == NumericOperator::Integral) {
        ref = oracle_quadrature(f, ord, tj, 1e-10);
      } else {
        throw DomainError("convergence_order: exact reference required for derivative operators");
      }
      double got = approx.values()[static_cast<std::size_t>(j)];
      if (!std::isfinite(ref) || !std::isfinite(got)) continue;
      err = std::max(err, std::fabs(got - ref));
      ref_scale = std::max(ref_scale, std::fabs(ref));
    }
    result.steps.push_back(grid.step());
    result.errors.push_back(err);
  }

  result.degenerate = *std::max_element(result.errors.begin(), result.errors.end()) <
                      1e-13 * ref_scale;

  // least-squares slope of log(err) vs log(step)
  const std::size_t n = result.steps.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::log(result.steps[i]);
    double y = std::log(std::max(result.errors[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  result.slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
  return result;
}

}  // namespace fracops
