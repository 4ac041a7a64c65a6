#pragma once

#include <memory>
#include <vector>

#include "ard/literal.hpp"

namespace ard {

class Formula;
using Fml = std::shared_ptr<const Formula>;

class Formula {
 public:
  enum class Kind : std::uint8_t { True, False, Lit, And, Or, Not };

  Kind kind;
  Literal lit{};
  std::vector<Fml> kids;

  bool is(Kind k) const { return kind == k; }
};

Fml f_true();
Fml f_false();
Fml f_lit(const Literal& l);
// And/Or flatten nested nodes of the same kind, fold constants and drop
// structural duplicates; a single survivor is returned unwrapped.
Fml f_and(std::vector<Fml> kids);
Fml f_or(std::vector<Fml> kids);
Fml f_not(Fml f);
Fml f_implies(const Fml& a, const Fml& b);

bool equal(const Fml& a, const Fml& b);
std::size_t fml_hash(const Fml& f);

// Negation normal form; Not survives only through literal polarity.
Fml nnf(const Fml& f);

Fml substitute(TermStore& s, const Fml& f, const std::map<TermId, TermId>& sub);
void collect_vars(const TermStore& s, const Fml& f, std::set<TermId>& out);

// Free variables of a formula; theory constants 0, eps, bot never appear
// (they are not variables and are always shared).
std::set<TermId> free_symbols(const TermStore& s, const Fml& f);

// Conjunctive clause form of an NNF formula: conjunction of disjunctions of
// literals, by distribution. Inputs here are small (instances and guards).
std::vector<std::vector<Literal>> clausify(const Fml& f);

// Constant folding plus duplicate-conjunct removal; resolves literally
// true/false atoms. The only simplification applied to interpolants.
Fml simplify(const Fml& f);

}  // namespace ard
