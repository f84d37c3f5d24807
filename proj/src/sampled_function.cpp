#include "fracops/sampled_function.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "fracops/errors.hpp"

namespace fracops {

SampledFunction::SampledFunction(double step, std::vector<double> values)
    : step_(step), values_(std::move(values)) {
  if (!(step > 0.0) || !std::isfinite(step))
    throw DomainError("SampledFunction: step must be positive and finite");
  if (values_.size() < 3)
    throw DomainError("SampledFunction: need at least N = 2 intervals (3 nodes)");
}

SampledFunction SampledFunction::sample(const std::function<double(double)>& f, double T, int n) {
  if (!(T > 0.0) || n < 2) throw DomainError("SampledFunction::sample: T > 0 and n >= 2 required");
  double h = T / n;
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = f(h * j);
  return SampledFunction(h, std::move(v));
}

void SampledFunction::require_finite(const char* what) const {
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!std::isfinite(values_[j]))
      throw DomainError(std::string(what) + ": input value at node " + std::to_string(j) +
                        " is not finite");
  }
}

void SampledFunction::write_csv(std::ostream& out) const {
  out << "t,value\n";
  char line[96];
  for (std::size_t j = 0; j < values_.size(); ++j) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", step_ * static_cast<double>(j), values_[j]);
    out << line;
  }
}

SampledFunction SampledFunction::read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "t,value")
    throw ParseError("expected CSV header \"t,value\"", 0);
  std::vector<double> times;
  std::vector<double> values;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    double t = 0.0, v = 0.0;
    char comma = 0;
    if (!(row >> t >> comma >> v) || comma != ',')
      throw ParseError("malformed CSV row on line " + std::to_string(lineno), 0);
    times.push_back(t);
    values.push_back(v);
  }
  if (times.size() < 3) throw DomainError("read_csv: need at least 3 rows");
  double step = times[1] - times[0];
  if (!(step > 0.0)) throw DomainError("read_csv: grid must be increasing");
  for (std::size_t j = 1; j < times.size(); ++j) {
    double gap = times[j] - times[j - 1];
    if (std::fabs(gap - step) > 1e-9 * step)
      throw DomainError("read_csv: non-uniform spacing at row " + std::to_string(j + 1));
  }
  return SampledFunction(step, std::move(values));
}

}  // namespace fracops
