#ifndef FRACOPS_LIOUVILLE_HPP
#define FRACOPS_LIOUVILLE_HPP

#include "fracops/power_sum.hpp"

namespace fracops {

// Closed forms for the operators with lower limit -infinity (Liouville) and
// upper limit +infinity (Weyl). The algebra is deliberately term-level: the
// class conditions are per-term, so sums are not represented.

// Either c |t|^(-delta) on t < 0 (delta > 0), or c e^(rate t) with rate > 0.
class LiouvilleTerm {
 public:
  enum class Kind { PowerOfAbs, Exponential };

  static LiouvilleTerm power_of_abs(double coeff, double delta);
  static LiouvilleTerm exponential(double coeff, double rate);

  Kind kind() const { return kind_; }
  double coeff() const { return coeff_; }
  double delta() const;  // PowerOfAbs only
  double rate() const;   // Exponential only

  /// Pointwise value; PowerOfAbs terms live on t < 0 only.
  double evaluate(double t) const;

 private:
  LiouvilleTerm(Kind k, double c, double p) : kind_(k), coeff_(c), param_(p) {}
  Kind kind_;
  double coeff_;
  double param_;
};

// The reflected class g(t') = f(-t'): c t'^(-delta) on t' > 0, or c e^(-rate t').
class WeylTerm {
 public:
  enum class Kind { InversePower, DecayingExponential };

  static WeylTerm inverse_power(double coeff, double delta);
  static WeylTerm decaying_exponential(double coeff, double rate);

  Kind kind() const { return kind_; }
  double coeff() const { return coeff_; }
  double delta() const;
  double rate() const;

  double evaluate(double t) const;  // InversePower terms live on t > 0

 private:
  WeylTerm(Kind k, double c, double p) : kind_(k), coeff_(c), param_(p) {}
  Kind kind_;
  double coeff_;
  double param_;
};

WeylTerm reflect(const LiouvilleTerm& f);
LiouvilleTerm reflect(const WeylTerm& g);

/// J^alpha from -infinity: Gamma(delta-alpha)/Gamma(delta) |t|^(alpha-delta),
/// or c^(-alpha) e^(ct). NotLiouvilleClassError unless delta > alpha.
LiouvilleTerm liouville_integral(const LiouvilleTerm& f, const FracOrder& ord);

/// D^alpha from -infinity: Gamma(delta+alpha)/Gamma(delta) |t|^(-delta-alpha),
/// or c^alpha e^(ct). Exact inverse of liouville_integral on the class.
LiouvilleTerm liouville_derivative(const LiouvilleTerm& f, const FracOrder& ord);

/// W^alpha to +infinity, computed through reflection of the Liouville form.
WeylTerm weyl_integral(const WeylTerm& g, const FracOrder& ord);

enum class FunctionClass { Riemann, Liouville, Neither };
const char* to_string(FunctionClass c);

FunctionClass classify(const PowerTerm& term, const FracOrder& ord);
FunctionClass classify(const LiouvilleTerm& term, const FracOrder& ord);
FunctionClass classify(const WeylTerm& term, const FracOrder& ord);

struct JumpIdentityResult {
  double lhs = 0.0;  // t^-alpha/Gamma(1-alpha) f(0+) + Caputo derivative at t
  double rhs = 0.0;  // Riemann-Liouville derivative at t
  double diff = 0.0;
};

/// Both sides of the jump identity for a causal f with f(0+) != 0, m = 1.
JumpIdentityResult causal_jump_identity_check(const PowerSum& f, const FracOrder& ord, double t);

// Truncated improper integrals used to verify the closed forms numerically;
// the caller picks the truncation T, whose tail bound is e^(-rate T) for the
// exponential variant and T^(alpha-delta)/(delta-alpha) for the power one.
double liouville_quadrature(const LiouvilleTerm& f, const FracOrder& ord,
                            double t, double T, double tol);
double weyl_quadrature(const WeylTerm& g, const FracOrder& ord,
                       double t, double T, double tol);

}  // namespace fracops

#endif
