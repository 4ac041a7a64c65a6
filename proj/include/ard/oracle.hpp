#pragma once

#include "ard/ground.hpp"
#include "ard/instantiate.hpp"

namespace ard {

// Finite functional model: a finite index chain containing 0, abstract element
// tokens with 0 = bot, and finite-support positive arrays (sparse tables hold
// the non-bot entries at indexes >= 0; everything else reads bot).
struct FiniteArrayModel {
  std::vector<long> chain;  // strictly increasing, contains 0
  unsigned n_tokens = 1;    // tokens 0..n_tokens-1
  std::map<TermId, std::map<long, unsigned>> arrays;
  std::map<TermId, long> index_assign;
  std::map<TermId, unsigned> elem_assign;
};

long eval_index_term(const TermStore& s, const FiniteArrayModel& m, TermId t);
unsigned eval_elem_term(const TermStore& s, const FiniteArrayModel& m, TermId t);
std::map<long, unsigned> eval_array_term(const TermStore& s, const FiniteArrayModel& m, TermId t);
// diff = the greatest index where the two arrays differ, 0 when equal.
long eval_diff(const std::map<long, unsigned>& a, const std::map<long, unsigned>& b);

bool evaluate(const TermStore& s, const FiniteArrayModel& m, const Fml& f);

// Universal clause evaluated by exhausting the hole over the finite chain.
bool evaluate_template(const TermStore& s, const FiniteArrayModel& m, const Template& t);

// Pseudo-metric laws of diff over all array terms assigned in the model;
// throws internal_error on violation.
void assert_metric_laws(const TermStore& s, const FiniteArrayModel& m);

struct OracleBounds {
  unsigned max_chain = 0;
  unsigned max_elems = 0;
};

// Completeness threshold for TO-mode flat constraints: chain <= #index vars
// + 1, elems <= #elem vars + #read subterms + 1.
OracleBounds completeness_bounds(const TermStore& s, const Fml& f);

struct BfcResult {
  bool sat = false;
  FiniteArrayModel model;       // when sat
  bool below_threshold = false; // bounds below the completeness threshold
  unsigned long long models_tried = 0;
};

// Bounded enumeration of finite models: index chains up to max_chain, token
// sets up to max_elems, finite-support tables over the chain. For TO-mode
// inputs within the completeness threshold the verdict coincides with
// ARD-satisfiability.
BfcResult brute_force_check(TermStore& s, const Fml& constraint, OracleBounds bounds);

// Minimal functional model built from a ground model of phi2: chain is the
// assigned index values plus 0, arrays read the ground tables there and bot
// elsewhere. Post-checked by evaluate against the pair.
FiniteArrayModel model_from_ground(TermStore& s, const SeparatedPair& pair, const GroundModel& gm);

std::string print_model(const TermStore& s, const FiniteArrayModel& m,
                        const std::vector<TermId>& visible);

struct CheckReport {
  bool a_implies_itp = false;
  bool itp_b_unsat = false;
  bool symbols_ok = false;
  bool brute_checked_a = false;
  bool brute_checked_b = false;
  std::string detail;
  bool all_pass() const { return a_implies_itp && itp_b_unsat && symbols_ok; }
};

// Definition-style validation: A /\ not(itp) unsat, itp /\ B unsat, and the
// symbol condition; the two unsat verdicts are cross-checked by brute force
// at completeness bounds when the instance is small enough.
CheckReport check_interpolant(TermStore& s, const Fml& a, const Fml& b, const Fml& itp,
                              const std::set<TermId>& common, IndexTheory theory,
                              bool try_brute = true);

}  // namespace ard
