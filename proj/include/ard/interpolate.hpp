#pragma once

#include <optional>

#include "ard/oracle.hpp"

namespace ard {

// Symbol-side information for coloring terms and literals during
// interpolation. Common variables include the loop's fresh diff names.
struct ColorCtx {
  const TermStore* store = nullptr;
  std::set<TermId> common;
  std::set<TermId> a_vars, b_vars;

  bool is_common(TermId t) const;
  Color var_side(TermId v) const;  // for local variables
};

// Interpolant from a negative cycle: bot/top when single-colored, otherwise
// the conjunction of maximal A-path summary constraints, weakened into the
// order language (exact difference bounds via S towers in IDL mode).
Fml to_interpolate(TermStore& s, const std::vector<OrderEdge>& cycle, const ColorCtx& ctx,
                   IndexTheory theory);

// Interpolant from a congruence conflict over the colored proof path,
// summarizing factors between AB-common terms; propagated order equalities
// contribute premise summaries of the opposite color.
Fml euf_interpolate(TermStore& s, const CcConflict& conflict, const ColorCtx& ctx,
                    IndexTheory theory);

// Dispatch on the conflict shape.
Fml combine_interpolants(TermStore& s, const LeafConflict& conflict, const ColorCtx& ctx,
                         IndexTheory theory);

struct GroundItpResult {
  bool sat = false;
  GroundModel model;  // when sat
  Fml itp;            // when unsat
};

// Colored DFS over the clause structure of ground formulas: disjunction
// splits recombine with OR across A-clauses and AND across B-clauses;
// leaves are decided by solve_leaf.
GroundItpResult interpolate_ground(TermStore& s,
                                   const std::vector<std::pair<Fml, Color>>& formulas,
                                   IndexTheory theory, const ColorCtx& ctx);

// Replaces loop-introduced diff names by their defining iterated-diff terms.
Fml unname_diffs(TermStore& s, const Fml& f, const std::map<TermId, TermId>& expansions);

struct LoopTrace {
  unsigned iterations = 0;
  unsigned m = 0;  // common array variables at loop entry
  unsigned n = 0;  // index variables at loop entry
  unsigned bound = 0;
  std::vector<std::pair<TermId, TermId>> picks;  // fairness audit
};

struct InterpolateOptions {
  bool full_dnf = false;
  unsigned idl_budget = 6;  // max instantiation depth N in IDL mode
  bool check_model = true;
};

struct InterpolationOutcome {
  enum class Kind : std::uint8_t { Interpolant, Satisfiable, Unknown } kind;
  Fml interpolant;  // Interpolant: over common symbols, diff names expanded
  std::optional<FiniteArrayModel> model;  // Satisfiable
  unsigned budget_reached = 0;            // Unknown
  std::vector<LoopTrace> traces;          // one per disjunct pair
};

// Full interpolation pipeline: satisfiability precheck, per-disjunct
// diff-introduction loop with TO termination bound, TO U EUF interpolation at
// inconsistency, disjunct recombination and diff unnaming.
InterpolationOutcome ard_interpolate(TermStore& s, const Fml& a, const Fml& b,
                                     IndexTheory theory, const InterpolateOptions& opts = {});

}  // namespace ard
