#include "fracops/power_sum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracops/errors.hpp"

namespace fracops {

PowerSum::PowerSum(std::initializer_list<PowerTerm> terms)
    : terms_(terms) {
  canonicalize();
}

PowerSum::PowerSum(std::vector<PowerTerm> terms) : terms_(std::move(terms)) {
  canonicalize();
}

PowerSum PowerSum::monomial(double coeff, double exponent) {
  return PowerSum({PowerTerm{coeff, exponent}});
}

void PowerSum::canonicalize() {
  for (const PowerTerm& t : terms_) {
    if (!std::isfinite(t.coeff) || !std::isfinite(t.exponent))
      throw DomainError("PowerSum: coefficients and exponents must be finite");
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const PowerTerm& a, const PowerTerm& b) { return a.exponent < b.exponent; });
  std::vector<PowerTerm> merged;
  merged.reserve(terms_.size());
  for (const PowerTerm& t : terms_) {
    if (!merged.empty() && std::fabs(t.exponent - merged.back().exponent) <= exponent_merge_eps) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const PowerTerm& t) { return t.coeff == 0.0; }),
               merged.end());
  terms_ = std::move(merged);
}

bool PowerSum::is_riemann_class() const {
  for (const PowerTerm& t : terms_)
    if (t.exponent <= -1.0) return false;
  return true;
}

double PowerSum::lowest_exponent() const {
  if (terms_.empty()) throw DomainError("lowest_exponent: zero function");
  return terms_.front().exponent;
}

double PowerSum::evaluate(double t) const {
  if (!(t > 0.0))
    throw DomainError("PowerSum::evaluate: defined for t > 0 only, got t = " + std::to_string(t));
  double sum = 0.0;
  for (const PowerTerm& term : terms_) sum += term.coeff * std::pow(t, term.exponent);
  return sum;
}

PowerSum& PowerSum::operator+=(const PowerSum& rhs) {
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  canonicalize();
  return *this;
}

PowerSum& PowerSum::operator-=(const PowerSum& rhs) {
  terms_.reserve(terms_.size() + rhs.terms_.size());
  for (const PowerTerm& t : rhs.terms_) terms_.push_back({-t.coeff, t.exponent});
  canonicalize();
  return *this;
}

PowerSum& PowerSum::operator*=(double factor) {
  if (!std::isfinite(factor)) throw DomainError("PowerSum: scale factor must be finite");
  for (PowerTerm& t : terms_) t.coeff *= factor;
  canonicalize();
  return *this;
}

PowerSum PowerSum::operator-() const {
  PowerSum out = *this;
  out *= -1.0;
  return out;
}

bool approx_equal(const PowerSum& a, const PowerSum& b, double rel, double abs_floor) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const PowerTerm& ta = a.terms()[i];
    const PowerTerm& tb = b.terms()[i];
    if (std::fabs(ta.exponent - tb.exponent) > exponent_merge_eps) return false;
    double tol = std::max(abs_floor, rel * std::max(std::fabs(ta.coeff), std::fabs(tb.coeff)));
    if (std::fabs(ta.coeff - tb.coeff) > tol) return false;
  }
  return true;
}

FracOrder FracOrder::of(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw DomainError("FracOrder: order must be finite and >= 0, got " + std::to_string(alpha));
  int m = alpha == 0.0 ? 0 : static_cast<int>(std::ceil(alpha));
  return FracOrder(alpha, m);
}

}  // namespace fracops
