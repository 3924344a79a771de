#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mxsum/mxsum.hpp"

namespace {

using namespace mxsum;
using mxsum::harness::ReportRow;

enum ExitCode : int {
  exit_ok = 0,
  exit_rows_failed = 1,
  exit_bad_arguments = 2,
  exit_precondition = 3,
  exit_no_convergence = 4,
};

enum class OutputFormat { csv, json, text };

struct CliConfig {
  std::string sign = "minus";
  double mu = 0.5;
  double lambda = 1.0;
  double a_re = 1.0;
  double a_im = 0.0;
  std::string method;
  std::optional<int> K;
  double tol = 1e-12;
  OutputFormat format = OutputFormat::text;
  std::string output = "-";
  int table_id = 0;
  std::string convention = "pi_phi";
  std::string coeff_kind;
};

const std::map<std::string, OutputFormat> format_names{
    {"csv", OutputFormat::csv}, {"json", OutputFormat::json}, {"text", OutputFormat::text}};

std::string num(double x) { return harness::format_number(x); }

std::string short_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

void write_text(const std::string& text, const std::string& destination) {
  if (destination.empty() || destination == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw io_error("cannot open " + destination);
  file << text;
  if (!file) throw io_error("failed writing " + destination);
}

SeriesParams params_from(const CliConfig& c) {
  SeriesParams p;
  p.sign = c.sign == "plus" ? Sign::plus : Sign::minus;
  p.mu = c.mu;
  p.lambda = c.lambda;
  p.a = complex(c.a_re, c.a_im);
  return p;
}

Evaluation dispatch(const SeriesParams& p, const std::string& method, const CliConfig& c) {
  const bool minus = p.sign == Sign::minus;
  if (method == "oracle") return direct_sum(p, c.tol);
  if (method == "small-a") {
    if (!minus) throw precondition_error("small-a: only the alternating sum has this series");
    return small_a_minus(p, c.K.value_or(small_a_default_terms));
  }
  if (method == "algebraic") {
    const int K = c.K.value_or(8);
    return minus ? algebraic_minus(p, K) : algebraic_plus(p, K);
  }
  if (method == "full") return minus ? full_minus(p) : full_plus(p);
  if (method == "tail") {
    const int n = c.K.value_or(tail_default_terms);
    return (minus ? bessel_tail_minus(p, n) : bessel_tail_plus(p, n)).evaluation;
  }
  if (method == "j-mu") return j_mu_quadrature(p, std::max(c.tol, 1e-16));
  if (method == "integer-mu") {
    if (!is_integer(p.mu)) throw precondition_error("integer-mu: mu must be an integer in 0..5");
    return integer_mu_closed_form(static_cast<int>(p.mu), p);
  }
  if (method == "lambda0") {
    if (p.lambda != 0.0) throw precondition_error("lambda0: requires lambda = 0");
    const int n = c.K.value_or(tail_default_terms);
    return minus ? olver_lambda0_minus(p.mu, p.a, n) : lambda0_plus(p.mu, p.a, n);
  }
  throw precondition_error("unknown method " + method);
}

std::string render_evaluation(const Evaluation& e, OutputFormat format) {
  const std::string method(to_string(e.method));
  if (format == OutputFormat::json) {
    nlohmann::json j;
    j["value_re"] = e.value.real();
    j["value_im"] = e.value.imag();
    j["method"] = method;
    j["error_estimate"] = e.error_estimate;
    j["truncation_index"] = e.truncation_index;
    j["tail_terms_used"] = e.tail_terms_used;
    j["first_increasing_term"] = e.first_increasing_term;
    j["notes"] = e.notes;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == OutputFormat::csv) {
    out << "value_re,value_im,method,error_estimate,truncation_index,tail_terms_used,first_increasing_term\n"
        << num(e.value.real()) << ',' << num(e.value.imag()) << ',' << method << ',' << num(e.error_estimate) << ','
        << e.truncation_index << ',' << e.tail_terms_used << ',' << e.first_increasing_term << '\n';
    return out.str();
  }
  out << "value                 " << num(e.value.real());
  if (e.value.imag() != 0.0) out << (e.value.imag() < 0 ? " - " : " + ") << num(std::abs(e.value.imag())) << "i";
  out << "\nmethod                " << method << "\nerror_estimate        " << num(e.error_estimate)
      << "\ntruncation_index      " << e.truncation_index << "\ntail_terms_used       " << e.tail_terms_used
      << "\nfirst_increasing_term " << e.first_increasing_term << "\n";
  if (!e.notes.empty()) out << "notes                 " << e.notes << "\n";
  return out.str();
}

std::string render_rows(const std::vector<ReportRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) return harness::render_report(rows, harness::ReportFormat::json);
  if (format == OutputFormat::csv) return harness::render_report(rows, harness::ReportFormat::csv);
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-8s %-14s %-6s %-24s %-4s %-24s %-24s %-12s %s\n", "table", "row", "sign", "a",
                "k", "computed", "reference", "rel_error", "pass");
  out << line;
  for (const auto& r : rows) {
    char a[64];
    if (r.a.imag() == 0.0) {
      std::snprintf(a, sizeof a, "%.10g", r.a.real());
    } else {
      std::snprintf(a, sizeof a, "%.6g%+.6gi", r.a.real(), r.a.imag());
    }
    std::snprintf(line, sizeof line, "%-8s %-14s %-6s %-24s %-4s %-24.17g %-24s %-12s %s\n", r.table.c_str(),
                  r.row_id.c_str(), std::string(to_string(r.sign)).c_str(), a,
                  r.k ? std::to_string(*r.k).c_str() : "-", r.computed,
                  r.reference ? num(*r.reference).c_str() : "-",
                  std::isnan(r.rel_error) ? "-" : short_num(r.rel_error).c_str(),
                  r.pass ? "true" : "false");
    out << line;
  }
  return out.str();
}

int cmd_eval(const CliConfig& c) {
  const SeriesParams p = params_from(c);
  try {
    p.validate();
  } catch (const error& e) {
    std::cerr << "mxsum eval: invalid parameters: " << e.what() << "\n";
    return exit_bad_arguments;
  }
  std::string method = c.method;
  if (method.empty()) method = (p.mu > 0.0 && p.mu < 1.0) ? "full" : "oracle";
  const Evaluation e = dispatch(p, method, c);
  write_text(render_evaluation(e, c.format), c.output);
  return exit_ok;
}

int cmd_table(const CliConfig& c) {
  const auto convention = harness::parse_convention(c.convention);
  const auto rows = harness::reproduce_table(c.table_id, *convention);
  write_text(render_rows(rows, c.format), c.output);
  std::size_t passed = 0;
  for (const auto& r : rows) passed += r.pass ? 1 : 0;
  std::cerr << "table " << c.table_id;
  if (c.table_id == 2) std::cerr << " (convention " << c.convention << ")";
  std::cerr << ": " << passed << "/" << rows.size() << " cells within tolerance\n";
  return passed == rows.size() ? exit_ok : exit_rows_failed;
}

int cmd_coeffs(const CliConfig& c) {
  CoefficientKind kind = CoefficientKind::B;
  if (c.coeff_kind == "A") kind = CoefficientKind::A;
  if (c.coeff_kind == "Bhat") kind = CoefficientKind::Bhat;
  const CoefficientTable t = coefficients(kind, c.lambda, c.K.value_or(8));
  std::ostringstream out;
  out << "kind,k,lambda,value\n";
  for (int k = 0; k <= t.K; ++k) {
    out << to_string(kind) << ',' << k << ',' << num(t.lambda) << ',' << num(t.values[static_cast<std::size_t>(k)])
        << '\n';
  }
  write_text(out.str(), c.output);
  return exit_ok;
}

std::vector<ReportRow> run_checks() {
  std::vector<ReportRow> rows;
  rows.push_back(harness::tail_agreement_check(3.0));
  rows.push_back(harness::tail_agreement_check(4.0));

  const std::vector<double> grid{5, 6, 7, 8, 9, 10};
  const double pi = std::numbers::pi;
  auto fit_row = [&](Sign sign, double mu, double expected) {
    ReportRow r;
    r.table = "check";
    r.row_id = sign == Sign::minus ? "decay-minus" : "decay-plus";
    r.sign = sign;
    r.mu = mu;
    r.lambda = 1.0;
    r.a = complex(grid.front(), 0.0);
    r.computed = harness::decay_rate_fit(sign, mu, 1.0, grid);
    r.reference = expected;
    harness::grade(r, 0.02);
    return r;
  };
  rows.push_back(fit_row(Sign::minus, 0.5, -pi));
  rows.push_back(fit_row(Sign::plus, 0.25, -2.0 * pi));

  const SeriesParams p{0.5, 1.0, {4.0, 0.0}, Sign::minus};
  const double d1 = mu_step_check(p, 1e-4);
  const double d2 = mu_step_check(p, 5e-5);
  ReportRow step;
  step.table = "check";
  step.row_id = "mu-step";
  step.mu = p.mu;
  step.lambda = p.lambda;
  step.a = p.a;
  step.computed = d1;
  step.tolerance_used = 1e-7;
  step.pass = d1 <= 1e-7;
  rows.push_back(step);
  ReportRow ratio = step;
  ratio.row_id = "mu-step-ratio";
  ratio.computed = d1 / d2;
  ratio.reference = 4.0;
  harness::grade(ratio, 0.125);
  rows.push_back(ratio);
  return rows;
}

int cmd_check(const CliConfig& c) {
  const auto rows = run_checks();
  write_text(render_rows(rows, c.format), c.output);
  return harness::all_pass(rows) ? exit_ok : exit_rows_failed;
}

void add_param_flags(CLI::App* cmd, CliConfig& c) {
  cmd->add_option("--sign", c.sign, "Sign pattern: minus (alternating) or plus")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  cmd->add_option("--mu", c.mu, "Exponent mu >= 0")->capture_default_str();
  cmd->add_option("--lambda", c.lambda, "Exponential decay rate lambda >= 0")->capture_default_str();
  cmd->add_option("--a", c.a_re, "Real part of a (must be > 0)")->capture_default_str();
  cmd->add_option("--a-im", c.a_im, "Imaginary part of a")->capture_default_str();
}

void add_output_flags(CLI::App* cmd, CliConfig& c) {
  cmd->add_option("--format", c.format, "Output format: csv, json or text")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  cmd->add_option("--output", c.output, "Output file, or - for standard output")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mathieu-exponential series S_mu^{+-}(a; lambda): evaluation, coefficients and reference tables"};
  app.require_subcommand(1);
  CliConfig c;

  auto* eval = app.add_subcommand("eval", "Evaluate the series at one parameter point");
  add_param_flags(eval, c);
  eval->add_option("--method", c.method,
                   "Route: oracle, small-a, algebraic, full, tail, j-mu, integer-mu, lambda0 "
                   "(default: full for 0 < mu < 1, otherwise oracle)")
      ->check(CLI::IsMember({"oracle", "small-a", "algebraic", "full", "tail", "j-mu", "integer-mu", "lambda0"}));
  eval->add_option("--K", c.K, "Truncation index or term count for the chosen route")->check(CLI::NonNegativeNumber);
  eval->add_option("--tol", c.tol, "Relative tolerance for summation and quadrature")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flags(eval, c);

  auto* table = app.add_subcommand("table", "Reproduce a reference error table (1, 2 or 3)");
  table->add_option("id", c.table_id, "Table number")->required()->check(CLI::IsMember({1, 2, 3}));
  table->add_option("--convention", c.convention, "Angle convention for table 2: pi_phi (a = 6e^{i pi phi}) or phi")
      ->check(CLI::IsMember({"pi_phi", "phi"}))
      ->capture_default_str();
  add_output_flags(table, c);

  auto* coeffs = app.add_subcommand("coeffs", "Print expansion coefficients as CSV (kind,k,lambda,value)");
  coeffs->add_option("kind", c.coeff_kind, "Coefficient family: A, B or Bhat")
      ->required()
      ->check(CLI::IsMember({"A", "B", "Bhat"}));
  coeffs->add_option("--lambda", c.lambda, "lambda > 0")->capture_default_str();
  coeffs->add_option("--K", c.K, "Highest index (A: <= 60, B and Bhat: <= 100; default 8)")
      ->check(CLI::NonNegativeNumber);
  coeffs->add_option("--output", c.output, "Output file, or - for standard output")->capture_default_str();

  auto* check = app.add_subcommand("check", "Run the tail agreement, decay-rate and mu-step checks");
  add_output_flags(check, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_bad_arguments;
  }
  if (table->parsed() && !table->count("--format")) c.format = OutputFormat::csv;

  try {
    if (eval->parsed()) return cmd_eval(c);
    if (table->parsed()) return cmd_table(c);
    if (coeffs->parsed()) return cmd_coeffs(c);
    if (check->parsed()) return cmd_check(c);
  } catch (const convergence_error& e) {
    std::cerr << "mxsum: no convergence: " << e.what() << "\n";
    return exit_no_convergence;
  } catch (const integrand_error& e) {
    std::cerr << "mxsum: no convergence: " << e.what() << "\n";
    return exit_no_convergence;
  } catch (const io_error& e) {
    std::cerr << "mxsum: " << e.what() << "\n";
    return exit_bad_arguments;
  } catch (const error& e) {
    std::cerr << "mxsum: precondition violated: " << e.what() << "\n";
    return exit_precondition;
  }
  return exit_bad_arguments;
}
