#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "clf/commands.hpp"

// Exit codes: 0 success, 1 validation/computation failure, 2 usage error.

int main(int argc, char** argv) {
  CLI::App app{"Catalan-Larcombe-French sequence toolkit: exact values, "
               "asymptotic expansion coefficients, and cross-method validation"};
  app.require_subcommand(1);

  std::string format = "pretty";
  unsigned long n_max = 10;
  std::string method = "exact";
  std::string which = "final";
  int order = 5;
  double tol = 1e-8;
  std::vector<unsigned long> n_list;

  const std::vector<std::string> formats{"json", "csv", "pretty"};
  const std::vector<std::string> methods{"exact",  "p2",           "p4",
                                         "quad2d", "quad1d-legendre", "quad1d-2f1",
                                         "saddle", "expansion"};
  const std::vector<std::string> tables{"ck", "Ck", "gamma", "final", "all"};

  auto* seq = app.add_subcommand("seq", "P_n, f(n), F_n table, identity-checked per row");
  seq->add_option("--n-max", n_max, "largest index")->capture_default_str();
  seq->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  auto* fcmd = app.add_subcommand("f", "evaluate f(n) through one computation route");
  fcmd->add_option("--n-max", n_max)->capture_default_str();
  fcmd->add_option("--method", method)->check(CLI::IsMember(methods))->capture_default_str();
  fcmd->add_option("--order", order, "truncation order for --method expansion")
      ->capture_default_str();
  fcmd->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  auto* coeffs = app.add_subcommand("coeffs", "expansion coefficient tables");
  coeffs->add_option("--order", order)->capture_default_str();
  coeffs->add_option("--which", which)->check(CLI::IsMember(tables))->capture_default_str();
  coeffs->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  auto* validate = app.add_subcommand("validate", "compare every route against exact values");
  validate->add_option("--n-max", n_max)->capture_default_str();
  validate->add_option("--tol", tol, "tolerance for guaranteed methods")->capture_default_str();
  validate->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  auto* remainder = app.add_subcommand("remainder", "expansion truncation remainder study");
  remainder->add_option("--order", order)->capture_default_str();
  remainder->add_option("--n", n_list, "indices to study (repeatable)");
  remainder->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    clf::CommandResult result;
    const clf::Format fmt = clf::parse_format(format);
    if (seq->parsed()) {
      result = clf::cmd_seq(n_max, fmt);
    } else if (fcmd->parsed()) {
      result = clf::cmd_f(n_max, method, order, fmt);
    } else if (coeffs->parsed()) {
      result = clf::cmd_coeffs(order, which, fmt);
    } else if (validate->parsed()) {
      result = clf::cmd_validate(n_max, tol, fmt);
    } else if (remainder->parsed()) {
      if (n_list.empty()) n_list = {16, 32, 64, 128};
      result = clf::cmd_remainder(order, n_list, fmt);
    }
    std::cout << result.envelope.render();
    return result.exit_code;
  } catch (const clf::OrderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
