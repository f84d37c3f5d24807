#ifndef FRACOPS_EXPRESSION_HPP
#define FRACOPS_EXPRESSION_HPP

#include <string>
#include <string_view>
#include <variant>

#include "fracops/laplace.hpp"
#include "fracops/liouville.hpp"
#include "fracops/power_sum.hpp"

namespace fracops {

// CLI expression grammar:
//   expr := term (('+'|'-') term)*
//   term := [number '*'] atom | number
//   atom := 't' ['^' signed-number]
//         | 'abs(t)' '^' signed-number        (negative exponent; t < 0 branch)
//         | 'exp(' number '*t' ')'
// Whitespace-insensitive; numbers are decimal literals with optional sign and
// exponent notation. Power terms may be summed; abs/exp atoms stand alone
// because the half-line algebra is term-level only. exp with a negative rate
// parses to the reflected (decaying) class.
struct Expression {
  std::string source;
  std::variant<PowerSum, LiouvilleTerm, WeylTerm> parsed;
};

Expression parse_expression(std::string_view source);

/// Same grammar restricted to power sums; ParseError otherwise.
PowerSum parse_power_sum(std::string_view source);

// Canonical text forms; parse(render(x)) restores x exactly (coefficients are
// rendered with 17 significant digits).
std::string render(const PowerSum& f);
std::string render(const LiouvilleTerm& f);
std::string render(const WeylTerm& f);
std::string render(const SPowerSum& f);
std::string render(const Expression& e);

}  // namespace fracops

#endif
