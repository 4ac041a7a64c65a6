#pragma once

#include <optional>
#include <string>

#include "ard/preprocess.hpp"

namespace ard {

// b_1 = b, b_{k+1} = wr(b_k, diff_k(a,b), rd(a, diff_k(a,b))),
// diff_k(a,b) = diff(a, b_k). Entry j-1 holds b_j / diff_j.
struct DiffChainTerms {
  std::vector<TermId> b_terms;
  std::vector<TermId> diff_terms;
};
DiffChainTerms diff_chain_terms(TermStore& s, TermId a, TermId b, unsigned l);

// Universal clause with one index hole, tagged with what produced it.
struct Template {
  std::string origin;
  TermId hole;
  Fml body;
};

struct GroundAndTemplate {
  std::vector<Fml> ground;
  Template tmpl;
};

// Ordering clauses for a diff chain diff_1(a,b)=ks[0], ..., diff_l(a,b)=ks[l-1]:
// ground parts order the names, force disagreement below and 0-collapse;
// the template covers all indexes above the last name.
GroundAndTemplate diff_chain_clauses(TermStore& s, TermId a, TermId b,
                                     const std::vector<TermId>& ks);

// Clauses for a = wr(b, i, e): ground read-over-write at i, template for all
// other indexes.
GroundAndTemplate write_clauses(TermStore& s, TermId a, TermId b, TermId i, TermId e);

// Substitution instance; empty when the instance is syntactically tautological
// (a disjunct true by reflexivity).
std::optional<Fml> instantiate_template_at(TermStore& s, const Template& t, TermId at);

// I_Phi^N: index terms of complexity <= N over the pair's index variables and
// 0. TO has no index functions, so the set is N-independent; IDL adds S/P
// towers up to height N.
std::vector<TermId> instance_terms(TermStore& s, const SeparatedPair& p, unsigned N,
                                   IndexTheory theory);

struct InstantiationResult {
  SeparatedPair pair;
  struct Added {
    Fml formula;
    std::string origin;
  };
  std::vector<Added> added;  // new phi2 entries relative to the input pair
};

// Phi(I_Phi^N): phi1 unchanged, phi2 closed under the ground clauses and all
// I^N-instances of the write/diff templates plus the eps and negative-index
// axiom templates. Deduplicated and idempotent at fixed N.
InstantiationResult instantiate(TermStore& s, const SeparatedPair& p, unsigned N,
                                IndexTheory theory);

// phi1 /\ phi2 as a single formula, diff chain atoms expanded into their
// defining terms. Used for oracle-side checks.
Fml pair_formula(TermStore& s, const SeparatedPair& p);

}  // namespace ard
