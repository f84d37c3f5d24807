#ifndef FRACOPS_EXPONENT_LAW_HPP
#define FRACOPS_EXPONENT_LAW_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fracops/power_sum.hpp"

namespace fracops {

// Sequential composition of fractional operators. Words evaluate strictly
// rightmost-first with no algebraic rewriting beforehand; the order
// sensitivity is the phenomenon under study.

enum class StepKind { Integral, RlDerivative, CaputoDerivative };

struct OperatorStep {
  StepKind kind;
  FracOrder order;
};

class OperatorWord {
 public:
  explicit OperatorWord(std::vector<OperatorStep> steps);

  /// CLI syntax: comma-separated "J:0.5", "D:1.5", "Dc:0.25", written
  /// leftmost-first and applied right to left.
  static OperatorWord parse(std::string_view text);

  const std::vector<OperatorStep>& steps() const { return steps_; }
  std::string to_string() const;

 private:
  std::vector<OperatorStep> steps_;
};

struct WordTrace {
  PowerSum result;
  std::vector<PowerSum> stages;  // after each applied step, rightmost first
};

/// Applies the word to f. Errors from individual steps propagate with the
/// step position prepended.
PowerSum apply_word(const OperatorWord& word, const PowerSum& f);
WordTrace apply_word_trace(const OperatorWord& word, const PowerSum& f);

/// The three composition laws for f = t^lambda * eta(t), eta a polynomial
/// with the given coefficients:
///   case 1: mu >= 0, 0 <= nu <= mu  =>  D^nu J^mu f = J^(mu-nu) f
///   case 2: mu >= 0, nu > mu        =>  D^nu J^mu f = D^(nu-mu) f
///   case 3: 0 <= mu < lambda+1, nu >= 0  =>  D^nu D^mu f = D^(mu+nu) f
/// Returns whether both sides agree; PreconditionError when the case
/// hypothesis itself fails (violations are reported, not tested).
bool check_theorem3(double lambda, const std::vector<double>& eta_coeffs,
                    double mu, double nu, int case_id);

// A sequential problem with split order alpha + beta = 1:
//   OuterAlpha:  D^alpha D^beta u = f
//   OuterBeta:   D^beta D^alpha v = f
//   FirstOrder:  D w = f
class SequentialProblem {
 public:
  enum class Variant { OuterAlpha, OuterBeta, FirstOrder };

  static SequentialProblem split(Variant v, double alpha, double beta, PowerSum rhs,
                                 std::vector<double> constants);  // 2 constants
  static SequentialProblem first_order(PowerSum rhs, double constant);

  Variant variant() const { return variant_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const PowerSum& rhs() const { return rhs_; }
  const std::vector<double>& constants() const { return constants_; }

 private:
  SequentialProblem(Variant v, double a, double b, PowerSum rhs, std::vector<double> c)
      : variant_(v), alpha_(a), beta_(b), rhs_(std::move(rhs)), constants_(std::move(c)) {}
  Variant variant_;
  double alpha_;
  double beta_;
  PowerSum rhs_;
  std::vector<double> constants_;
};

/// General-solution representative with the problem's constants filled in:
///   OuterAlpha: J f + c0 + c1 t^(beta-1)
///   OuterBeta:  J f + c0 + c1 t^(alpha-1)
///   FirstOrder: J f + c0
PowerSum solve_sequential(const SequentialProblem& problem);

/// Operator word of the problem's left-hand side.
OperatorWord word_of(const SequentialProblem& problem);

/// Functions annihilated by the problem's word: the span of these is what
/// makes the solution spaces two- (split) or one-dimensional (first order).
std::vector<PowerSum> sequential_null_basis(const SequentialProblem& problem);

struct SequentialCheck {
  PowerSum residual;
  bool ok = false;
};

/// Applies the problem's word to the candidate and compares with the rhs.
SequentialCheck verify_sequential(const SequentialProblem& problem, const PowerSum& candidate);

}  // namespace fracops

#endif
