#ifndef FRACOPS_VERIFY_HPP
#define FRACOPS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fracops::verify {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;  // one per failure
  bool ok() const { return failures == 0 && checks > 0; }
};

struct Options {
  std::uint64_t seed = 20250808;
  int trials = 500;          // randomized identity batteries
  double tol = 1e-11;        // coefficient comparisons
  double laplace_tol = 1e-6; // numeric transform cross-checks
};

// Each suite batch-checks one family of identities on randomized inputs.
SuiteResult run_semigroup(const Options& opt = {});     // composition and commutation of J
SuiteResult run_inverse(const Options& opt = {});       // left inverse, non-right-inverse, null spaces
SuiteResult run_decompose(const Options& opt = {});     // derivative decomposition, jump identity, order limits
SuiteResult run_laplace(const Options& opt = {});       // transform diagrams plus numeric cross-checks
SuiteResult run_exponent_law(const Options& opt = {});  // integer law, counterexamples, solution spaces
SuiteResult run_theorem3(const Options& opt = {});      // the three composition cases
SuiteResult run_convergence(const Options& opt = {});   // grid orders, oracle agreement, linearity

std::vector<std::string> suite_names();  // includes "all"
std::vector<SuiteResult> run_suites(const std::string& name, const Options& opt = {});

// Deterministic generator used by the suites (identical streams on every
// platform, unlike std::uniform_real_distribution).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive bounds

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

}  // namespace fracops::verify

#endif
