#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "parcount/cli.hpp"

namespace {

void add_common(CLI::App* cmd, parcount::RunConfig& cfg) {
  cmd->add_option("--group", cfg.group, "group, e.g. GL2 or SL3");
  cmd->add_option("--q", cfg.qs, "field sizes (prime powers)")->delimiter(',');
  cmd->add_option("--parabolic", cfg.parabolic, "composition of n, e.g. 1,1")->delimiter(',');
  cmd->add_option("--budget", cfg.budget, "enumeration budget (elements)");
  cmd->add_option("--format", cfg.format, "json | csv | markdown");
  cmd->add_option("--out", cfg.out_path, "output path (atomic write); stdout if omitted");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual-engine class counting in finite general linear groups and their Lie algebras"};
  app.require_subcommand(1);
  parcount::RunConfig cfg;

  CLI::App* count = app.add_subcommand("count", "count classes with the brute and/or formula engine");
  add_common(count, cfg);
  count->add_option("--quantity", cfg.quantity, "group | lie | nil");
  count->add_option("--engine", cfg.engine, "brute | formula | both");

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  add_common(verify, cfg);

  CLI::App* porc = app.add_subcommand("porc", "sweep q, fit residue-class polynomials, validate held-out");
  add_common(porc, cfg);
  porc->add_option("--quantity", cfg.quantity, "group | lie | nil");
  porc->add_option("--modulus", cfg.modulus, "residue modulus; 0 = automatic over 1,2,6");
  porc->add_option("--degree-bound", cfg.degree_bound, "max fitted degree; 0 = n^2");
  porc->add_flag("--probe", cfg.probe, "fit additive fiber sizes per type instead of a count");

  CLI::App* green = app.add_subcommand("green", "export the Green polynomial table as CSV");
  green->add_option("--n", cfg.green_n, "rank");
  green->add_option("--out", cfg.out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : parcount::kConfigError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  return parcount::run_cli(cfg, std::cout, std::cerr);
}
