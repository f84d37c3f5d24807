#include "fracops/cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracops/errors.hpp"
#include "fracops/exponent_law.hpp"
#include "fracops/expression.hpp"
#include "fracops/fractional_ops.hpp"
#include "fracops/laplace.hpp"
#include "fracops/liouville.hpp"
#include "fracops/numeric_ops.hpp"
#include "fracops/special_functions.hpp"
#include "fracops/verify.hpp"

namespace fracops::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string plain(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.14g", v);
  return buf;
}

std::optional<double> env_tolerance() {
  const char* raw = std::getenv("FRACOPS_TOL");
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0))
    throw DomainError("FRACOPS_TOL must be a positive decimal literal");
  return v;
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    char* end = nullptr;
    double v = std::strtod(piece.c_str(), &end);
    if (end == piece.c_str() || *end != '\0')
      throw DomainError(std::string(what) + ": expected comma-separated numbers");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError(std::string(what) + ": empty list");
  return out;
}

enum class Format { Plain, Csv, Json };

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::Plain;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw DomainError("unknown format '" + name + "'");
}

void emit_table(Format fmt, const std::vector<std::pair<double, double>>& rows,
                std::ostream& out) {
  if (fmt == Format::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (auto [t, v] : rows) j.push_back({{"t", t}, {"value", v}});
    out << j.dump() << "\n";
    return;
  }
  if (fmt == Format::Csv) out << "t,value\n";
  for (auto [t, v] : rows) {
    if (fmt == Format::Csv) {
      char buf[80];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", t, v);
      out << buf;
    } else {
      out << plain(t) << " " << plain(v) << "\n";
    }
  }
}

struct EvalArgs {
  std::string op = "D";
  double alpha = 0.0;
  std::string expr;
  std::optional<double> t;
  std::vector<double> grid;  // T N
  std::optional<std::string> init;
};

// symbolic application of one operator to a power sum
PowerSum apply_symbolic(const std::string& op, const FracOrder& ord, const PowerSum& f) {
  if (op == "J") return rl_integral(f, ord);
  if (op == "D") return rl_derivative(f, ord);
  if (op == "Dc") return caputo_derivative(f, ord);
  throw DomainError("operator '" + op + "' does not apply to power sums");
}

int cmd_eval(const EvalArgs& a, Format fmt, std::ostream& out) {
  FracOrder ord = FracOrder::of(a.alpha);
  Expression expr = parse_expression(a.expr);

  if (std::holds_alternative<LiouvilleTerm>(expr.parsed)) {
    const auto& term = std::get<LiouvilleTerm>(expr.parsed);
    LiouvilleTerm result = a.op == "J"   ? liouville_integral(term, ord)
                           : a.op == "D" ? liouville_derivative(term, ord)
                                         : throw DomainError(
                                               "half-line terms support J and D only");
    if (a.t) out << plain(result.evaluate(*a.t)) << "\n";
    else out << render(result) << "\n";
    return kExitOk;
  }
  if (std::holds_alternative<WeylTerm>(expr.parsed) || a.op == "W") {
    WeylTerm term = [&] {
      if (std::holds_alternative<WeylTerm>(expr.parsed))
        return std::get<WeylTerm>(expr.parsed);
      const PowerSum& ps = std::get<PowerSum>(expr.parsed);
      if (ps.size() != 1 || ps.terms()[0].exponent >= 0.0)
        throw DomainError("W expects a decaying term: c*t^-d or exp(-c*t)");
      return WeylTerm::inverse_power(ps.terms()[0].coeff, -ps.terms()[0].exponent);
    }();
    if (a.op != "W" && a.op != "J")
      throw DomainError("decaying terms support the Weyl integral (op W) only");
    WeylTerm result = weyl_integral(term, ord);
    if (a.t) out << plain(result.evaluate(*a.t)) << "\n";
    else out << render(result) << "\n";
    return kExitOk;
  }

  const PowerSum& f = std::get<PowerSum>(expr.parsed);
  if (a.t) {
    PowerSum result = apply_symbolic(a.op, ord, f);
    out << plain(result.is_zero() ? 0.0 : result.evaluate(*a.t)) << "\n";
    return kExitOk;
  }

  // grid mode: run the numeric operators on the sampled expression
  double T = 1.0;
  int n = 1024;
  if (!a.grid.empty()) {
    if (a.grid.size() != 2) throw DomainError("--grid expects T N");
    T = a.grid[0];
    n = static_cast<int>(a.grid[1]);
  }
  if (!f.is_zero() && f.lowest_exponent() < 0.0)
    throw DomainError("grid path needs exponents >= 0; the input is singular at t = 0");
  double value_at_zero = 0.0;
  for (const PowerTerm& term : f.terms())
    if (std::fabs(term.exponent) <= exponent_merge_eps) value_at_zero = term.coeff;
  SampledFunction samples = SampledFunction::sample(
      [&f, value_at_zero](double t) { return t > 0.0 ? f.evaluate(t) : value_at_zero; }, T, n);
  SampledFunction result = [&] {
    if (a.op == "J") return rl_integral_numeric(samples, ord);
    if (a.op == "Dc") return caputo_derivative_numeric(samples, ord);
    if (a.op == "D") {
      InitialData init;
      if (a.init) init.derivs = parse_double_list(*a.init, "--init");
      else init.derivs = taylor_at_zero(f, ord.m());
      return rl_derivative_numeric(samples, ord, init);
    }
    throw DomainError("operator '" + a.op + "' does not apply to sampled input");
  }();
  std::vector<std::pair<double, double>> rows;
  rows.reserve(result.node_count());
  for (int j = 0; j <= result.max_index(); ++j)
    rows.emplace_back(result.time_at(j), result.values()[static_cast<std::size_t>(j)]);
  emit_table(fmt, rows, out);
  return kExitOk;
}

int cmd_word(const std::string& steps, const std::string& expr_text,
             std::optional<double> t, bool trace, std::ostream& out) {
  OperatorWord word = OperatorWord::parse(steps);
  PowerSum f = parse_power_sum(expr_text);
  WordTrace result = apply_word_trace(word, f);
  if (trace) {
    for (std::size_t i = 0; i < result.stages.size(); ++i)
      out << "after step " << (i + 1) << ": " << render(result.stages[i]) << "\n";
  }
  out << render(result.result) << "\n";
  if (t) out << plain(result.result.is_zero() ? 0.0 : result.result.evaluate(*t)) << "\n";
  return kExitOk;
}

int cmd_laplace(const std::string& expr_text, const std::string& s_list, bool check,
                double tol, Format fmt, std::ostream& out) {
  PowerSum f = parse_power_sum(expr_text);
  SPowerSum image = transform(f);
  out << render(image) << "\n";
  if (!check) return kExitOk;

  bool ok = true;
  if (fmt == Format::Csv) out << "s,symbolic,numeric,diff\n";
  for (double s : parse_double_list(s_list, "--s")) {
    double symbolic = image.evaluate(s);
    double numeric = numeric_laplace([&f](double t) { return f.evaluate(t); }, s,
                                     40.0 / s + 40.0, std::max(tol * 0.1, 1e-10));
    double diff = std::fabs(numeric - symbolic);
    if (diff > tol) ok = false;
    if (fmt == Format::Csv) {
      char buf[140];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s, symbolic, numeric, diff);
      out << buf;
    } else {
      out << "s=" << plain(s) << " symbolic=" << plain(symbolic)
          << " numeric=" << plain(numeric) << " diff=" << plain(diff) << "\n";
    }
  }
  return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_classify(const std::string& expr_text, double alpha, Format fmt, std::ostream& out) {
  FracOrder ord = FracOrder::of(alpha);
  Expression expr = parse_expression(expr_text);
  FunctionClass cls = FunctionClass::Neither;
  if (std::holds_alternative<PowerSum>(expr.parsed)) {
    const PowerSum& ps = std::get<PowerSum>(expr.parsed);
    if (ps.size() != 1)
      throw DomainError("classify expects a single term");
    cls = classify(ps.terms()[0], ord);
  } else if (std::holds_alternative<LiouvilleTerm>(expr.parsed)) {
    cls = classify(std::get<LiouvilleTerm>(expr.parsed), ord);
  } else {
    cls = classify(std::get<WeylTerm>(expr.parsed), ord);
  }
  if (fmt == Format::Csv)
    out << "expression,alpha,class\n" << expr_text << "," << plain(alpha) << ","
        << to_string(cls) << "\n";
  else
    out << to_string(cls) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials,
               std::optional<double> tol_override, std::ostream& out) {
  verify::Options opt;
  opt.seed = seed;
  if (trials > 0) opt.trials = trials;
  if (tol_override) opt.tol = *tol_override;
  bool all_ok = true;
  for (const verify::SuiteResult& r : verify::run_suites(suite, opt)) {
    out << (r.ok() ? "[ok]   " : "[FAIL] ") << r.name << ": " << r.checks << " checks, "
        << r.failures << " failures\n";
    for (const std::string& msg : r.messages) out << "       " << msg << "\n";
    all_ok = all_ok && r.ok();
  }
  return all_ok ? kExitOk : kExitVerificationFailure;
}

int cmd_table(double tol, std::ostream& out) {
  struct Row {
    const char* label;
    PowerSum result;
    PowerSum expected;
  };
  FracOrder half = FracOrder::of(0.5);
  const Row rows[] = {
      {"D^0.5 t^0.5", rl_derivative(PowerSum::monomial(1.0, 0.5), half),
       PowerSum::constant(0.88622692545275801365)},
      {"D^0.5 t^-0.5", rl_derivative(PowerSum::monomial(1.0, -0.5), half), PowerSum()},
      {"D^1 t^-0.5", rl_derivative(PowerSum::monomial(1.0, -0.5), FracOrder::of(1.0)),
       PowerSum::monomial(-0.5, -1.5)},
      {"D^1.5 t^0.5", rl_derivative(PowerSum::monomial(1.0, 0.5), FracOrder::of(1.5)),
       PowerSum()},
      {"D^0.5 1", rl_derivative(PowerSum::constant(1.0), half),
       PowerSum::monomial(0.56418958354775628695, -0.5)},
  };
  bool all_ok = true;
  for (const Row& r : rows) {
    bool ok = r.expected.is_zero() ? r.result.is_zero()
                                   : approx_equal(r.result, r.expected, tol, tol);
    all_ok = all_ok && ok;
    out << (ok ? "[ok]   " : "[FAIL] ") << r.label << " = " << render(r.result) << "\n";
  }
  return all_ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fractional-calculus workbench"};
  app.require_subcommand(1);
  std::string format_name = "plain";
  app.add_option("--format", format_name, "output format: plain, csv or json");

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "apply one operator and print values");
  eval->add_option("--op", eval_args.op, "J, D, Dc or W")->required();
  eval->add_option("--alpha", eval_args.alpha, "operator order")->required();
  eval->add_option("--expr", eval_args.expr, "expression")->required();
  double eval_t = 0.0;
  CLI::Option* eval_t_opt = eval->add_option("--t", eval_t, "evaluate at a single point");
  eval->add_option("--grid", eval_args.grid, "grid as T N (numeric path)")->expected(2);
  std::string eval_init;
  CLI::Option* eval_init_opt =
      eval->add_option("--init", eval_init, "initial values for the RL grid path");

  std::string word_steps, word_expr;
  double word_t = 0.0;
  bool word_trace = false;
  CLI::App* word = app.add_subcommand("word", "apply an operator word (rightmost first)");
  word->add_option("--steps", word_steps, "e.g. D:0.5,D:1.5")->required();
  word->add_option("--expr", word_expr, "power-sum expression")->required();
  CLI::Option* word_t_opt = word->add_option("--t", word_t, "also evaluate the result");
  word->add_flag("--trace", word_trace, "print intermediate stages");

  std::string lap_expr, lap_s = "0.5,1,2,5";
  bool lap_check = false;
  CLI::App* laplace_cmd = app.add_subcommand("laplace", "transform to the s-domain");
  laplace_cmd->add_option("--expr", lap_expr, "power-sum expression")->required();
  laplace_cmd->add_option("--s", lap_s, "s values for the numeric cross-check");
  laplace_cmd->add_flag("--check", lap_check, "run the numeric cross-check");

  std::string cls_expr;
  double cls_alpha = 0.5;
  CLI::App* classify_cmd = app.add_subcommand("classify", "Riemann / Liouville / Neither");
  classify_cmd->add_option("--expr", cls_expr, "single-term expression")->required();
  classify_cmd->add_option("--alpha", cls_alpha, "operator order")->required();

  std::string verify_suite = "all";
  std::uint64_t verify_seed = 20250808;
  int verify_trials = 0;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run an identity suite");
  verify_cmd->add_option("--suite", verify_suite,
                         "semigroup|inverse|decompose|laplace|exponent-law|theorem3|convergence|all");
  verify_cmd->add_option("--seed", verify_seed, "random seed");
  verify_cmd->add_option("--trials", verify_trials, "randomized trials per battery");

  CLI::App* table_cmd = app.add_subcommand("table", "print the worked-example table");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("fracops");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::optional<double> env_tol = env_tolerance();
    Format fmt = parse_format(format_name);
    if (eval->parsed()) {
      if (*eval_t_opt) eval_args.t = eval_t;
      if (*eval_init_opt) eval_args.init = eval_init;
      return cmd_eval(eval_args, fmt, out);
    }
    if (word->parsed())
      return cmd_word(word_steps, word_expr,
                      *word_t_opt ? std::optional<double>(word_t) : std::nullopt,
                      word_trace, out);
    if (laplace_cmd->parsed())
      return cmd_laplace(lap_expr, lap_s, lap_check, env_tol.value_or(1e-6), fmt, out);
    if (classify_cmd->parsed()) return cmd_classify(cls_expr, cls_alpha, fmt, out);
    if (verify_cmd->parsed())
      return cmd_verify(verify_suite, verify_seed, verify_trials, env_tol, out);
    if (table_cmd->parsed()) return cmd_table(env_tol.value_or(1e-12), out);
    err << "usage error: no subcommand\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace fracops::cli
