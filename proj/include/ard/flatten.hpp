#pragma once

#include "ard/formula.hpp"

namespace ard {

struct FlattenResult {
  std::vector<Literal> defs;    // definitional flat literals x = t, c(t) <= 1
  Fml body;                     // input with every atom rewritten to flat shape
  std::vector<TermId> fresh;    // abstraction variables, one per distinct subterm
};

// Equisatisfiable flattening by repeated subterm abstraction. The result's
// defs /\ body has the same models as the input over the original variables.
FlattenResult flatten(TermStore& s, const Fml& input);

// Literal-set convenience: returns the flat literals (defs plus rewritten
// input literals) and the fresh variables.
std::pair<std::vector<Literal>, std::vector<TermId>> flatten_literals(
    TermStore& s, const std::vector<Literal>& lits);

// Syntactic flat-literal predicate: x = t with c(t) <= 1 and atomic arguments,
// x != y over atomics, or an order atom over atomics.
bool is_flat(const TermStore& s, const Literal& l);

}  // namespace ard
