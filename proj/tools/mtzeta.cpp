// Command-line front end: reduce Mordell-Tornheim values to multiple zeta
// values, verify reductions by exact truncation, evaluate numerically with
// certified bounds, and check convergence criteria.
//
// Exit codes: 0 success, 1 verification/criterion failure, 2 usage or parse
// error (including tolerances that cannot be met).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtzeta/mtzeta.hpp"

using namespace mtzeta;

namespace {

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + output_path);
  out << text;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

mt_index expect_mt(const std::string& text, const char* command) {
  term_literal literal = parse_literal(text);
  if (const mt_index* t = std::get_if<mt_index>(&literal)) return *t;
  throw std::invalid_argument(std::string(command) + " expects a T(...) literal");
}

std::string format_combination(const mzv_combination& c, const std::string& format,
                               const std::string& input, int weight, int depth) {
  if (format == "plain") return render_plain(c) + "\n";
  if (format == "latex") return render_latex(c) + "\n";
  nlohmann::ordered_json doc;
  doc["input"] = input;
  doc["weight"] = weight;
  doc["depth"] = depth;
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [key, coeff] : c) {
    nlohmann::ordered_json term;
    term["zeta"] = key.args();
    term["coeff"] = to_string(coeff);
    doc["terms"].push_back(term);
  }
  return doc.dump(2) + "\n";
}

int run_reduce(const std::string& input, const std::string& format,
               const std::string& output) {
  const mt_index t = expect_mt(input, "reduce");
  emit(format_combination(reduce(t), format, render(t), t.weight(), t.depth()),
       output);
  return 0;
}

int run_verify(const std::string& input, const std::string& cutoffs_text,
               const std::string& output) {
  const mt_index t = expect_mt(input, "verify");
  std::vector<long> cutoffs;
  for (const std::string& part : split_commas(cutoffs_text)) {
    const rational value = parse_rational(part);
    if (!is_integer(value) || value < 1) {
      throw std::invalid_argument("verify: cutoffs must be positive integers");
    }
    cutoffs.push_back(numerator(value).convert_to<long>());
  }
  const verification_report report = verify_reduction(t, cutoffs);
  std::ostringstream out;
  out << "input:   " << render(t) << "\n";
  out << "reduced: " << render_plain(report.reduced) << "\n";
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    out << "N=" << cutoffs[i] << ": lhs = " << to_string(report.lhs[i])
        << ", rhs = " << to_string(report.rhs[i]) << ", "
        << (report.lhs[i] == report.rhs[i] ? "OK" : "MISMATCH") << "\n";
  }
  out << (report.verified ? "verified: exact agreement at every cutoff"
                          : "FAILED: truncated values disagree")
      << "\n";
  emit(out.str(), output);
  return report.verified ? 0 : 1;
}

int run_eval(const std::string& input, double eps, const std::string& output) {
  term_literal literal = parse_literal(input);
  float_eval result;
  std::string name;
  if (const mt_index* t = std::get_if<mt_index>(&literal)) {
    result = eval_mt(*t, eps);
    name = render(*t);
  } else if (const mzv_index* z = std::get_if<mzv_index>(&literal)) {
    result = eval_mzv(*z, eps);
    name = render(*z);
  } else {
    throw std::invalid_argument("eval expects a T(...) or Z(...) literal");
  }
  char value_text[64];
  std::snprintf(value_text, sizeof value_text, "%.15g", result.value);
  char bound_text[32];
  std::snprintf(bound_text, sizeof bound_text, "%.2e", result.error_bound);
  emit(name + " = " + value_text + " +/- " + bound_text + " (cutoff " +
           std::to_string(result.cutoff) + ")\n",
       output);
  return 0;
}

int run_converges(const std::string& sigmas_text, const std::string& sigma_text,
                  bool has_sigma, const std::string& output) {
  std::vector<rational> sigmas;
  for (const std::string& part : split_commas(sigmas_text)) {
    sigmas.push_back(parse_rational(part));
  }
  const std::optional<int> violation =
      has_sigma ? mt_criterion_violation(sigmas, parse_rational(sigma_text))
                : mzv_criterion_violation(sigmas);
  if (!violation) {
    emit("certified-convergent\n", output);
    return 0;
  }
  emit("criterion-fails at k=" + std::to_string(*violation) + "\n", output);
  return 1;
}

int run_product(const std::string& input, const std::string& format,
                const std::string& output) {
  term_literal literal = parse_literal(input);
  const zeta_product_expr* p = std::get_if<zeta_product_expr>(&literal);
  if (p == nullptr) throw std::invalid_argument("product expects a P(...) literal");
  for (int e : p->exponents) {
    if (e < 2) throw std::invalid_argument("divergent factor zeta(1)");
  }
  const int weight = std::accumulate(p->exponents.begin(), p->exponents.end(), 0);
  emit(format_combination(zeta_product(p->exponents), format, render(*p), weight,
                          static_cast<int>(p->exponents.size())),
       output);
  return 0;
}

int run_closed_form(int depth, int last, const std::string& format,
                    const std::string& output) {
  const mt_index input(std::vector<int>(depth, 1), last);
  emit(format_combination(all_ones_reduction(depth, last), format, render(input),
                          input.weight(), input.depth()),
       output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reduction of Mordell-Tornheim zeta values to multiple zeta values"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"json", "latex", "plain"};

  std::string reduce_input, reduce_format = "plain", reduce_output;
  CLI::App* cmd_reduce =
      app.add_subcommand("reduce", "Reduce T(s1,...,sr;s) to multiple zeta values");
  cmd_reduce->add_option("literal", reduce_input, "MT literal, e.g. \"T(2,1;2)\"")
      ->required();
  cmd_reduce->add_option("--format", reduce_format, "Output format")
      ->check(CLI::IsMember(formats));
  cmd_reduce->add_option("--output", reduce_output, "Write output to a file");

  std::string verify_input, verify_cutoffs = "10,25", verify_output;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "Check a reduction by exact truncated summation");
  cmd_verify->add_option("literal", verify_input, "MT literal")->required();
  cmd_verify->add_option("--n", verify_cutoffs, "Comma-separated cutoffs");
  cmd_verify->add_option("--output", verify_output, "Write output to a file");

  std::string eval_input, eval_output;
  double eval_eps = 1e-6;
  CLI::App* cmd_eval = app.add_subcommand(
      "eval", "Evaluate a T(...) or Z(...) value with a certified error bound");
  cmd_eval->add_option("literal", eval_input, "T or Z literal")->required();
  cmd_eval->add_option("--eps", eval_eps, "Absolute error tolerance");
  cmd_eval->add_option("--output", eval_output, "Write output to a file");

  std::string conv_sigmas, conv_sigma, conv_output;
  CLI::App* cmd_converges = app.add_subcommand(
      "converges", "Convergence certificate for rational exponent tuples");
  cmd_converges
      ->add_option("--sigmas", conv_sigmas,
                   "Comma-separated exponents (rationals allowed)")
      ->required();
  CLI::Option* sigma_option = cmd_converges->add_option(
      "--sigma", conv_sigma, "Trailing exponent; selects the free-variable test");
  cmd_converges->add_option("--output", conv_output, "Write output to a file");

  std::string product_input, product_format = "plain", product_output;
  CLI::App* cmd_product = app.add_subcommand(
      "product", "Expand a product of single zetas into multiple zeta values");
  cmd_product->add_option("literal", product_input, "Product literal, e.g. \"P(2,3)\"")
      ->required();
  cmd_product->add_option("--format", product_format, "Output format")
      ->check(CLI::IsMember(formats));
  cmd_product->add_option("--output", product_output, "Write output to a file");

  int cf_depth = 0, cf_last = 0;
  std::string cf_format = "plain", cf_output;
  CLI::App* cmd_closed_form = app.add_subcommand(
      "closed-form", "Single-term reduction of the all-ones value T(1,...,1;s)");
  cmd_closed_form->add_option("depth", cf_depth, "Number of ones r")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_closed_form->add_option("last", cf_last, "Trailing exponent s")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_closed_form->add_option("--format", cf_format, "Output format")
      ->check(CLI::IsMember(formats));
  cmd_closed_form->add_option("--output", cf_output, "Write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_reduce)) {
      return run_reduce(reduce_input, reduce_format, reduce_output);
    }
    if (app.got_subcommand(cmd_verify)) {
      return run_verify(verify_input, verify_cutoffs, verify_output);
    }
    if (app.got_subcommand(cmd_eval)) {
      return run_eval(eval_input, eval_eps, eval_output);
    }
    if (app.got_subcommand(cmd_converges)) {
      return run_converges(conv_sigmas, conv_sigma, sigma_option->count() > 0,
                           conv_output);
    }
    if (app.got_subcommand(cmd_product)) {
      return run_product(product_input, product_format, product_output);
    }
    if (app.got_subcommand(cmd_closed_form)) {
      return run_closed_form(cf_depth, cf_last, cf_format, cf_output);
    }
  } catch (const precision_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
