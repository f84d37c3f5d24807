#include "fracops/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <vector>

#include "fracops/errors.hpp"

namespace fracops {
namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// One parsed summand: either a power of t, or a standalone half-line atom.
struct RawTerm {
  enum class Kind { Power, Abs, Exp } kind = Kind::Power;
  double coeff = 1.0;
  double value = 0.0;  // exponent (Power/Abs) or rate (Exp)
  std::size_t offset = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (at_end()) throw ParseError("expected an expression", pos_);
    terms.push_back(term(std::nullopt));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-')
        throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      terms.push_back(term(op == '-' ? -1.0 : +1.0));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool literal(std::string_view word) {
    if (src_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view word) {
    if (!literal(word))
      throw ParseError("expected '" + std::string(word) + "'", pos_);
  }

  std::optional<double> try_number() {
    skip_ws();
    std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
    std::size_t digits_from = p;
    while (p < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[p])) || src_[p] == '.'))
      ++p;
    if (p == digits_from) return std::nullopt;
    if (p < src_.size() && (src_[p] == 'e' || src_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < src_.size() && (src_[q] == '+' || src_[q] == '-')) ++q;
      std::size_t exp_from = q;
      while (q < src_.size() && std::isdigit(static_cast<unsigned char>(src_[q]))) ++q;
      if (q > exp_from) p = q;
    }
    std::string text(src_.substr(start, p - start));
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
      throw ParseError("malformed number", start);
    pos_ = p;
    return v;
  }

  double number(const char* what) {
    std::size_t at = pos_;
    auto v = try_number();
    if (!v) throw ParseError(std::string("expected ") + what, at);
    return *v;
  }

  // term := [number '*'] atom | number, with an optional sign handed down
  // from the expression level (nullopt for the leading term, which may carry
  // its own bare '-').
  RawTerm term(std::optional<double> sign) {
    skip_ws();
    double outer = sign.value_or(1.0);
    if (!sign && !at_end() && peek() == '-' &&
        !(pos_ + 1 < src_.size() &&
          (std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])) || src_[pos_ + 1] == '.'))) {
      ++pos_;
      outer = -1.0;
    }
    std::size_t at = pos_;
    auto coeff = try_number();
    skip_ws();
    if (coeff && !at_end() && peek() == '*') {
      ++pos_;
      RawTerm t = atom();
      t.coeff = outer * *coeff;
      return t;
    }
    if (coeff) return RawTerm{RawTerm::Kind::Power, outer * *coeff, 0.0, at};
    RawTerm t = atom();
    t.coeff *= outer;
    return t;
  }

  RawTerm atom() {
    skip_ws();
    std::size_t at = pos_;
    if (literal("abs")) {
      skip_ws(); expect("(");
      skip_ws(); expect("t");
      skip_ws(); expect(")");
      skip_ws(); expect("^");
      double e = number("a signed exponent after abs(t)^");
      if (!(e < 0.0))
        throw ParseError("abs(t) takes a negative exponent", at);
      return RawTerm{RawTerm::Kind::Abs, 1.0, -e, at};
    }
    if (literal("exp")) {
      skip_ws(); expect("(");
      double rate = number("a rate in exp(rate*t)");
      skip_ws(); expect("*");
      skip_ws(); expect("t");
      skip_ws(); expect(")");
      if (rate == 0.0) throw ParseError("exp() rate must be nonzero", at);
      return RawTerm{RawTerm::Kind::Exp, 1.0, rate, at};
    }
    if (literal("t")) {
      skip_ws();
      double e = 1.0;
      if (!at_end() && peek() == '^') {
        ++pos_;
        e = number("a signed exponent after ^");
      }
      return RawTerm{RawTerm::Kind::Power, 1.0, e, at};
    }
    throw ParseError("expected 't', 'abs(t)', 'exp(' or a number", pos_);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view source) {
  std::vector<RawTerm> raw = Parser(source).parse();

  bool has_half_line = false;
  for (const RawTerm& t : raw)
    if (t.kind != RawTerm::Kind::Power) has_half_line = true;

  Expression expr;
  expr.source = std::string(source);
  if (!has_half_line) {
    std::vector<PowerTerm> terms;
    terms.reserve(raw.size());
    for (const RawTerm& t : raw) terms.push_back({t.coeff, t.value});
    expr.parsed = PowerSum(std::move(terms));
    return expr;
  }
  if (raw.size() != 1)
    throw ParseError("abs/exp terms cannot be combined into sums", raw.back().offset);
  const RawTerm& t = raw.front();
  if (t.kind == RawTerm::Kind::Abs) {
    expr.parsed = LiouvilleTerm::power_of_abs(t.coeff, t.value);
  } else if (t.value > 0.0) {
    expr.parsed = LiouvilleTerm::exponential(t.coeff, t.value);
  } else {
    expr.parsed = WeylTerm::decaying_exponential(t.coeff, -t.value);
  }
  return expr;
}

PowerSum parse_power_sum(std::string_view source) {
  Expression e = parse_expression(source);
  if (!std::holds_alternative<PowerSum>(e.parsed))
    throw ParseError("expected a power-sum expression", 0);
  return std::get<PowerSum>(e.parsed);
}

std::string render(const PowerSum& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += " + ";
    out += num(f.terms()[i].coeff) + "*t^" + num(f.terms()[i].exponent);
  }
  return out;
}

std::string render(const LiouvilleTerm& f) {
  if (f.kind() == LiouvilleTerm::Kind::PowerOfAbs)
    return num(f.coeff()) + "*abs(t)^-" + num(f.delta());
  return num(f.coeff()) + "*exp(" + num(f.rate()) + "*t)";
}

std::string render(const WeylTerm& f) {
  if (f.kind() == WeylTerm::Kind::InversePower)
    return num(f.coeff()) + "*t^-" + num(f.delta());
  return num(f.coeff()) + "*exp(-" + num(f.rate()) + "*t)";
}

std::string render(const SPowerSum& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += " + ";
    out += num(f.terms()[i].coeff) + "*s^" + num(f.terms()[i].s_exponent);
  }
  return out;
}

std::string render(const Expression& e) {
  if (std::holds_alternative<PowerSum>(e.parsed)) return render(std::get<PowerSum>(e.parsed));
  if (std::holds_alternative<LiouvilleTerm>(e.parsed))
    return render(std::get<LiouvilleTerm>(e.parsed));
  return render(std::get<WeylTerm>(e.parsed));
}

}  // namespace fracops
