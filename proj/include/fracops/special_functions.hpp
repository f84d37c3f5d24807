#ifndef FRACOPS_SPECIAL_FUNCTIONS_HPP
#define FRACOPS_SPECIAL_FUNCTIONS_HPP

namespace fracops {

// Real Gamma and Beta functions with explicit pole handling.
//
// Two views of the poles are exposed on purpose:
//   - gamma() refuses non-positive integers (PoleError), for direct evaluation;
//   - reciprocal_gamma() is the entire function 1/Gamma and returns exactly 0
//     there, which is what the power-rule coefficient formulas rely on to make
//     degenerate terms vanish without special-casing the exponent arithmetic.
//
// reciprocal_gamma snaps arguments within `degenerate_eps` of a non-positive
// integer to the pole, absorbing rounding from chained exponent arithmetic
// such as (gamma + alpha) - alpha.

inline constexpr double degenerate_eps = 1e-12;

/// Gamma(x). Throws PoleError at 0,-1,-2,... and OverflowError when the
/// value exceeds the double range (|x| beyond roughly 171.6).
double gamma(double x);

/// 1/Gamma(x); total over the finite reals, exactly 0 at non-positive
/// integers (and within degenerate_eps of them).
double reciprocal_gamma(double x);

/// Euler Beta B(p,q) = Gamma(p)Gamma(q)/Gamma(p+q); requires p, q > 0.
double beta(double p, double q);

/// log|Gamma(x)|; throws PoleError at the poles.
double log_abs_gamma(double x);

/// Sign of Gamma(x): +1 or -1; 0 at the poles.
int gamma_sign(double x);

/// Gamma(a)/Gamma(b) for a, b > 0, evaluated via the log form when either
/// argument is large so that stress-range exponents do not overflow
/// intermediates. Small arguments take the direct quotient.
double gamma_ratio(double a, double b);

/// Exact n! as a double for 0 <= n <= 170; OverflowError beyond.
double factorial(int n);

/// True when x is exactly a non-positive integer.
bool is_gamma_pole(double x);

/// True when x lies within degenerate_eps of a non-positive integer.
bool is_degenerate_gamma_arg(double x);

}  // namespace fracops

#endif
