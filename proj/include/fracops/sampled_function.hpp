#ifndef FRACOPS_SAMPLED_FUNCTION_HPP
#define FRACOPS_SAMPLED_FUNCTION_HPP

#include <functional>
#include <iosfwd>
#include <vector>

namespace fracops {

// Values of a causal function on the uniform grid t_j = j * step, j = 0..N.
// Operator inputs must be finite everywhere (require_finite); operator
// outputs that are singular at t = 0 carry a quiet-NaN marker at node 0 and
// are defined on the interior nodes only.
class SampledFunction {
 public:
  SampledFunction(double step, std::vector<double> values);

  /// Samples f on [0, T] with n intervals (n + 1 nodes).
  static SampledFunction sample(const std::function<double(double)>& f, double T, int n);

  double step() const { return step_; }
  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  std::size_t node_count() const { return values_.size(); }
  double time_at(int j) const { return step_ * j; }

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  /// DomainError when any value is NaN or infinite; `what` names the caller.
  void require_finite(const char* what) const;

  /// CSV with header "t,value" and 17-significant-digit rendering.
  void write_csv(std::ostream& out) const;

  /// Reads the CSV form back; validates uniform spacing to 1e-9 relative.
  static SampledFunction read_csv(std::istream& in);

 private:
  double step_;
  std::vector<double> values_;
};

// Initial data f^(k)(0+), k = 0..m-1, accompanying a derivative of order m.
struct InitialData {
  std::vector<double> derivs;
};

}  // namespace fracops

#endif
