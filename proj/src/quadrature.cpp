#include "fracops/quadrature.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fracops/errors.hpp"

namespace fracops::quad {
namespace {

constexpr double kNodes[5] = {
    -0.90617984593866399280, -0.53846931010568309104, 0.0,
    0.53846931010568309104, 0.90617984593866399280};
constexpr double kWeights[5] = {
    0.23692688505618908751, 0.47862867049936646804, 0.56888888888888888889,
    0.47862867049936646804, 0.23692688505618908751};

}  // namespace

double gauss5(const Fn& f, double a, double b) {
  double mid = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) sum += kWeights[i] * f(mid + half * kNodes[i]);
  return half * sum;
}

double composite_gauss5(const Fn& f, double a, double b, int panels) {
  double h = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) sum += gauss5(f, a + i * h, a + (i + 1) * h);
  return sum;
}

double refine(const Fn& f, double a, double b, double tol, int start_panels, int max_panels) {
  if (!(b > a)) return 0.0;
  double prev = composite_gauss5(f, a, b, start_panels);
  for (int n = 2 * start_panels; n <= max_panels; n *= 2) {
    double cur = composite_gauss5(f, a, b, n);
    if (std::fabs(cur - prev) <= tol) return cur;
    prev = cur;
  }
  double last = composite_gauss5(f, a, b, 2 * max_panels);
  throw NonConvergenceError("quadrature did not converge to " + std::to_string(tol) +
                            "; last two estimates " + std::to_string(prev) + ", " +
                            std::to_string(last));
}

double graded_left(const Fn& f, double length, int grade, double tol, int max_panels) {
  if (!(length > 0.0)) return 0.0;
  Fn g = [&f, length, grade](double u) {
    double x = length * std::pow(u, grade);
    return f(x) * length * grade * std::pow(u, grade - 1);
  };
  return refine(g, 0.0, 1.0, tol, 4, max_panels);
}

double refine_geometric(const Fn& f, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  std::vector<std::pair<double, double>> segments;
  double lo = a;
  while (lo < b) {
    double hi = std::min(b, lo * 2.0);
    if (!(hi > lo)) hi = b;  // guards a == 0 or denormal growth
    segments.emplace_back(lo, hi);
    lo = hi;
  }
  double per_tol = tol / static_cast<double>(segments.size());
  double sum = 0.0;
  for (auto [s, e] : segments) sum += refine(f, s, e, per_tol);
  return sum;
}

}  // namespace fracops::quad
