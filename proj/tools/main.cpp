#include <iostream>

#include <CLI11.hpp>

#include "rpm/cli.hpp"
#include "rpm/errors.hpp"

namespace {

void add_common(CLI::App* cmd, rpm::RunConfig& c, std::string& digits, std::string& format) {
  cmd->add_option("--dmax", c.d_max, "largest determinant dimension")->capture_default_str();
  cmd->add_option("--digits", digits, "working precision in decimal digits, or 'auto' (30 + 5 D_max); "
                                      "default from $RPM_DIGITS, else auto");
  cmd->add_option("--format", format, "output format: text, json, or csv (comma-separated, '.' decimal point, "
                                      "no grouping; one header row naming the columns)")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

void add_problem(CLI::App* cmd, rpm::RunConfig& c) {
  cmd->add_option("--potential", c.potential,
                  "gaussian | poschl-teller | yukawa | rational:m=<m> | custom:<w0>,<w1>,... "
                  "(default: gaussian for critical, rational:m=2 otherwise)");
  cmd->add_option("--geometry", c.geometry, "parity=0 | parity=1 | l=<n>");
  cmd->add_option("--ansatz", c.ansatz, "f (logarithmic derivative) or g (Riccati for 1/f)")
      ->check(CLI::IsMember({"f", "g"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical depths, eigenvalue brackets and threshold expansions from Hankel determinants"};
  app.require_subcommand(1);
  rpm::RunConfig c;
  std::string digits, format = "text";

  auto* crit = app.add_subcommand("critical", "critical depths of a well, tracked over determinant dimension.\n"
                                              "Columns: n, v0, est_digits, status [, target, agree_digits]");
  add_problem(crit, c);
  add_common(crit, c, digits, format);
  crit->add_option("--n", c.count, "number of critical depths")->capture_default_str();
  crit->add_option("--dmin", c.d_min, "dimension roots are discovered at (0: min(D_max - 6, 12))");
  crit->add_option("--offset", c.offsets, "Hankel offset d");
  crit->add_option("--targets", c.targets_file, "file of reference values, one per line");

  auto* eig = app.add_subcommand("eigen", "bracket a bound-state energy between the d=1 and d=0 sequences.\n"
                                          "Columns: state, lower, upper, width, partial");
  add_problem(eig, c);
  add_common(eig, c, digits, format);
  eig->add_option("--v0", c.v0, "well depth (exact rational, e.g. 3/2)")->required();
  eig->add_option("--state", c.state, "level index n, counting from 0")->capture_default_str();
  eig->add_option("--dmin", c.d_min, "dimension roots are discovered at");

  int pert_dim = 5;
  auto* per = app.add_subcommand("perturb", "exact expansion E = sum E_k xi^k about a critical depth.\n"
                                            "Columns: branch, stable_from, slope_check, E1 .. EK");
  add_problem(per, c);
  per->add_option("--v0", c.v0, "critical depth (exact rational)")->required();
  per->add_option("--order", c.order, "highest order K")->capture_default_str();
  per->add_option("--dimension", pert_dim, "determinant dimension")->capture_default_str();
  per->add_option("--offset", c.offsets, "Hankel offset d");
  per->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* tab = app.add_subcommand("table", "reproduce a published table against the golden data.\n"
                                          "Columns: row key, v0, printed, abs_delta, agree_digits, est_digits, "
                                          "status, match (tables 5-6 add wkb, variational and log-error columns)");
  tab->add_option("id", c.table, "table number 1..6")->required()->check(CLI::Range(1, 6));
  add_common(tab, c, digits, format);
  tab->add_option("--rows", c.rows, "reproduce only the first N rows");
  tab->add_option("--golden-dir", c.golden_dir, "directory holding table<N>.csv (default $RPM_GOLDEN_DIR or the "
                                                "build-time data directory)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (per->parsed()) c.d_max = pert_dim;
    c.command = app.get_subcommands().front()->get_name();
    if (!digits.empty() && digits != "auto") c.digits = std::stoi(digits);
    if (digits == "auto") c.digits = rpm::auto_digits(c.d_max);
    c.format = rpm::parse_format(format);
    const rpm::CommandResult r = rpm::run_command(c);
    std::cout << rpm::render(r.report, c.format);
    return r.exit_code;
  } catch (const rpm::StateNotBound& e) {
    std::cerr << "state not bound: " << e.what() << "\n";
    return rpm::exit_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rpm::exit_error;
  }
}
