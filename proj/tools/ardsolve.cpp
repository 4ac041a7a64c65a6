#include <iostream>

#include "CLI11.hpp"
#include "ard/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"satisfiability and quantifier-free interpolation for arrays with maxdiff"};
  app.require_subcommand(1);

  ard::CliConfig cfg;
  std::string file_a, file_b, file_itp;

  auto* sat = app.add_subcommand("sat", "decide satisfiability of a constraint file");
  sat->add_option("file", file_a, "problem file")->required();
  sat->add_flag("--check", cfg.check_answers, "verify the answer with the finite-model oracle");
  sat->add_flag("--full-dnf", cfg.full_dnf, "use the global DNF fallback for disjunctions");
  sat->add_option("--max-oracle-chain", cfg.max_oracle_chain, "oracle chain bound for --check");
  sat->add_option("--max-oracle-elems", cfg.max_oracle_elems, "oracle token bound for --check");

  auto* itp = app.add_subcommand("interpolate", "interpolate an inconsistent A/B pair");
  itp->add_option("afile", file_a, "A-side file")->required();
  itp->add_option("bfile", file_b, "B-side file (same header)")->required();
  itp->add_flag("--check", cfg.check_answers, "validate the interpolant before printing");
  itp->add_flag("--full-dnf", cfg.full_dnf, "use the global DNF fallback for disjunctions");
  itp->add_flag("--let-sharing", cfg.let_sharing, "print with let-bound shared subterms");
  itp->add_option("--budget", cfg.instantiation_budget, "IDL instantiation budget (max N)");

  auto* chk = app.add_subcommand("check", "validate a candidate interpolant");
  chk->add_option("afile", file_a)->required();
  chk->add_option("bfile", file_b)->required();
  chk->add_option("itpfile", file_itp, "header plus one asserted formula")->required();

  CLI11_PARSE(app, argc, argv);

  if (sat->parsed()) {
    cfg.mode = ard::CliConfig::Mode::Sat;
    cfg.inputs = {file_a};
  } else if (itp->parsed()) {
    cfg.mode = ard::CliConfig::Mode::Interpolate;
    cfg.inputs = {file_a, file_b};
  } else {
    cfg.mode = ard::CliConfig::Mode::Check;
    cfg.inputs = {file_a, file_b, file_itp};
  }
  return ard::run_cli(cfg, std::cout, std::cerr);
}
