#ifndef FRACOPS_POWER_SUM_HPP
#define FRACOPS_POWER_SUM_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fracops {

// Exponents closer than this are considered equal; canonicalization merges
// them, and the equality predicate compares against the same width. Absorbs
// rounding in chained exponent arithmetic like (g + a) - a.
inline constexpr double exponent_merge_eps = 1e-12;

struct PowerTerm {
  double coeff = 0.0;
  double exponent = 0.0;
};

// Finite linear combination of real powers of t, kept canonical: exponents
// strictly increasing, near-duplicates merged, zero coefficients dropped.
// The empty sum is the zero function. Values are immutable once built, so
// sharing across threads is safe.
class PowerSum {
 public:
  PowerSum() = default;
  PowerSum(std::initializer_list<PowerTerm> terms);
  explicit PowerSum(std::vector<PowerTerm> terms);

  static PowerSum monomial(double coeff, double exponent);
  static PowerSum constant(double value) { return monomial(value, 0.0); }

  const std::vector<PowerTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// All exponents > -1, the class on which the convolution from 0 converges.
  bool is_riemann_class() const;

  /// Smallest exponent present; DomainError on the zero sum.
  double lowest_exponent() const;

  /// Pointwise value; defined for t > 0 only (DomainError otherwise).
  double evaluate(double t) const;

  PowerSum& operator+=(const PowerSum& rhs);
  PowerSum& operator-=(const PowerSum& rhs);
  PowerSum& operator*=(double factor);
  PowerSum operator-() const;

  friend PowerSum operator+(PowerSum a, const PowerSum& b) { a += b; return a; }
  friend PowerSum operator-(PowerSum a, const PowerSum& b) { a -= b; return a; }
  friend PowerSum operator*(PowerSum a, double f) { a *= f; return a; }
  friend PowerSum operator*(double f, PowerSum a) { a *= f; return a; }

 private:
  void canonicalize();
  std::vector<PowerTerm> terms_;
};

// The one equality every identity test reduces to: equal canonical term
// counts, exponents within exponent_merge_eps, coefficients within `rel`
// relative with an `abs_floor` absolute floor.
bool approx_equal(const PowerSum& a, const PowerSum& b,
                  double rel = 1e-11, double abs_floor = 1e-14);

// Order alpha >= 0 bundled with the integer m such that m-1 < alpha <= m
// (m = 0 exactly when alpha = 0).
class FracOrder {
 public:
  static FracOrder of(double alpha);

  double alpha() const { return alpha_; }
  int m() const { return m_; }
  bool is_integer() const { return alpha_ == static_cast<double>(m_); }

 private:
  FracOrder(double alpha, int m) : alpha_(alpha), m_(m) {}
  double alpha_;
  int m_;
};

}  // namespace fracops

#endif
