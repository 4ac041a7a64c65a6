#pragma once

#include <iosfwd>

#include "ard/problem.hpp"

namespace ard {

struct CliConfig {
  enum class Mode : std::uint8_t { Sat, Interpolate, Check } mode = Mode::Sat;
  std::vector<std::string> inputs;  // sat: 1 file; interpolate: A B; check: A B itp
  bool check_answers = false;
  bool full_dnf = false;
  bool let_sharing = false;
  unsigned instantiation_budget = 6;  // max N in IDL mode
  unsigned max_oracle_chain = 5;      // verification bounds for --check
  unsigned max_oracle_elems = 8;
};

// Exit codes: 0 definitive answer (sat/unsat/interpolant/report-all-pass),
// 2 unknown (IDL budget exhausted), 3 check-mode failures, 1 errors.
int run_cli(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace ard
