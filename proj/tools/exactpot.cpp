// exactpot: tabulate and check the hypergeometric family of exactly solvable potentials.
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "exactpot/commands.hpp"

using namespace exactpot;

namespace {

struct Flags {
  int case_number = 0;
  std::string alpha = "0", beta = "0", gamma = "1", c1 = "1", c2 = "0";
  double rmin = 0.05, rmax = 10.0;
  int n = 500;
  std::string format = "csv";
  std::string output;
  std::string table = "corrected";
  int count = 6;
  double tol = -1.0;
  int draws = 100;
  std::uint64_t seed = 20240611;
  std::string input;
};

void add_model_flags(CLI::App* sub, Flags& f, bool needs_grid) {
  sub->add_option("--case", f.case_number, "case number 1..6")->check(CLI::Range(1, 6));
  sub->add_option("--alpha", f.alpha, "alpha (real or complex literal)");
  sub->add_option("--beta", f.beta, "beta");
  sub->add_option("--gamma", f.gamma, "gamma");
  sub->add_option("--c1", f.c1, "c1, e.g. 2 or i for PT mode");
  sub->add_option("--c2", f.c2, "c2");
  sub->add_option("--table", f.table, "coefficients: printed, corrected or oracle")
      ->check(CLI::IsMember({"printed", "corrected", "oracle"}));
  if (needs_grid) {
    sub->add_option("--rmin", f.rmin, "grid start");
    sub->add_option("--rmax", f.rmax, "grid end");
    sub->add_option("--n", f.n, "grid points");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exactpot: hypergeometric exactly solvable potentials"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("-o,--output", f.output, "output file ('-' for stdout; relative to $EXACTPOT_OUTPUT_DIR if set)");

  const std::map<std::string, Command> commands = {
      {"potential", Command::potential}, {"wavefunction", Command::wavefunction}, {"verify", Command::verify},
      {"spectrum", Command::spectrum},   {"audit", Command::audit},               {"pt-check", Command::pt_check},
      {"convert", Command::convert}};
  std::map<std::string, CLI::App*> subs;
  subs["potential"] = app.add_subcommand("potential", "tabulate r, Re V, Im V, E");
  subs["wavefunction"] = app.add_subcommand("wavefunction", "tabulate r, Re psi, Im psi, residual");
  subs["verify"] = app.add_subcommand("verify", "residual, consistency and Schwarzian checks");
  subs["spectrum"] = app.add_subcommand("spectrum", "finite-difference Dirichlet spectrum of V");
  subs["audit"] = app.add_subcommand("audit", "recover (A, B, C) from the oracle and diff the tables");
  subs["pt-check"] = app.add_subcommand("pt-check", "PT defect and symmetry centre for imaginary c1");
  subs["convert"] = app.add_subcommand("convert", "re-read a JSON table and write it again");

  for (const char* name : {"potential", "wavefunction", "verify", "spectrum"}) add_model_flags(subs[name], f, true);
  add_model_flags(subs["pt-check"], f, false);
  subs["spectrum"]->add_option("--count", f.count, "eigenvalues to compute");
  subs["spectrum"]->add_option("--tol", f.tol, "exit 1 unless some |E_i - C| <= tol max(1, |C|)");
  subs["audit"]->add_option("--case", f.case_number, "case number 1..6 (default: all)")->check(CLI::Range(1, 6));
  subs["audit"]->add_option("--draws", f.draws, "random parameter draws per case");
  subs["audit"]->add_option("--seed", f.seed, "random seed");
  subs["convert"]->add_option("--input", f.input, "JSON table")->required();
  for (auto& [name, sub] : subs) {
    sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-o,--output", f.output, "output file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  RunConfig config;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) config.command = commands.at(name);
  }
  try {
    if (f.case_number != 0) config.case_id = case_from_number(f.case_number);
    config.params = {parse_complex(f.alpha), parse_complex(f.beta), parse_complex(f.gamma), parse_complex(f.c1),
                     parse_complex(f.c2)};
  } catch (const Error& e) {
    std::cerr << "exactpot: " << e.what() << '\n';
    return kExitValidation;
  }
  config.grid = Grid{f.rmin, f.rmax, f.n};
  config.format = f.format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (!f.output.empty()) config.output_path = f.output;
  config.coefficients = f.table == "printed"  ? CoefficientChoice::printed
                        : f.table == "oracle" ? CoefficientChoice::oracle
                                              : CoefficientChoice::corrected;
  config.count = f.count;
  if (f.tol >= 0.0) config.tolerance = f.tol;
  config.draws = f.draws;
  config.seed = f.seed;
  config.input_path = f.input;
  return run(config, std::cout, std::cerr);
}
