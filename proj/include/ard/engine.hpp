#pragma once

#include "ard/oracle.hpp"

namespace ard {

struct DecideResult {
  enum class Kind : std::uint8_t { Sat, Unsat } kind;
  std::optional<FiniteArrayModel> model;  // Sat
};

// Satisfiability pipeline: flatten, rewrite array equalities, split into
// separated pairs, 0-instantiate, decide the ground reduction; a sat verdict
// carries the minimal functional model, post-checked by evaluation.
DecideResult decide(TermStore& s, const Fml& assertion, IndexTheory theory,
                    bool full_dnf = false);

}  // namespace ard
