#pragma once

#include <memory>
#include <variant>

#include "ard/order_graph.hpp"

namespace ard {

// TO U EUF model of a ground constraint: integer index values, abstract
// element tokens (0 is bot), per-array tables keyed by index value.
struct GroundModel {
  std::map<TermId, long> index_value;      // every index term seen
  std::map<TermId, unsigned> elem_token;   // every elem term seen
  std::map<TermId, std::map<long, unsigned>> array_table;
};

struct CLit {
  Literal lit;
  Color color = Color::A;
  unsigned origin = 0;  // caller-side formula index; ~0u for internal assumptions
};

inline constexpr unsigned internal_origin = 0xffffffffu;

// Recursive proof material for interpolation.
struct ProofStep {
  enum class Kind : std::uint8_t { Input, Order, Cong };
  Kind kind;
  TermId from = no_term, to = no_term;
  // Input
  Literal lit{};
  Color color = Color::A;
  unsigned origin = 0;
  // Order: zero cycle justifying from = to; when single_edge is set the step
  // spans exactly one cycle edge (via), the cycle kept as justification
  std::vector<OrderEdge> cycle;
  bool single_edge = false;
  OrderEdge via{};
  // Cong: argument subproof between the applications' index arguments
  std::vector<ProofStep> arg;
};

struct NegCycleConflict {
  std::vector<OrderEdge> edges;
};

struct CcConflict {
  Literal diseq;
  Color diseq_color = Color::A;
  unsigned diseq_origin = 0;
  std::vector<ProofStep> path;  // proof of diseq.lhs ~ diseq.rhs
};

struct LeafConflict {
  std::variant<NegCycleConflict, CcConflict> conflict;
  std::vector<unsigned> core;  // input origins, deduplicated, sorted
};

struct LeafOptions {
  IndexTheory theory = IndexTheory::TO;
  // IDL only: resolve index value collisions by internal trichotomy splits.
  // When false, a needed split raises unknown_error (interpolation mode).
  bool allow_splits = true;
  // representative policy for the embedded congruence closure
  CongruenceClosure::Policy policy = CongruenceClosure::Policy::Default;
  CongruenceClosure::CommonFn is_common{};
};

struct unknown_error : error {
  using error::error;
};

// Closed theory state of a satisfiable leaf, for entailment queries.
struct TheoryState {
  OrderGraph graph;
  CongruenceClosure cc;

  TheoryState(OrderGraph g, CongruenceClosure c) : graph(std::move(g)), cc(std::move(c)) {}
  bool entails(const TermStore& s, const Literal& l) const;
};

struct LeafResult {
  bool sat = false;
  GroundModel model;        // when sat
  LeafConflict conflict;    // when unsat
  std::shared_ptr<const TheoryState> state;  // when sat
};

// Decides a conjunction of ground TO/IDL U EUF literals by congruence closure
// plus the order graph with equality exchange.
LeafResult solve_leaf(TermStore& s, const std::vector<CLit>& lits, const LeafOptions& opts);

// Entailed equalities crossing the theory boundary, as single equalities:
// zero-cycle pairs from the graph and index-sorted congruence merges.
std::vector<Literal> propagate_equalities(const TermStore& s, const CongruenceClosure& cc,
                                          const OrderGraph& g);

struct UnsatCore {
  std::vector<unsigned> formula_indices;
  std::string skeleton;
  bool minimized = false;
};

struct GroundOutcome {
  bool sat = false;
  GroundModel model;
  UnsatCore core;
};

// Decides a conjunction of ground clauses/formulas (phi2 of an instantiated
// pair, rd read as unary function application) by case-split DFS over the
// clause structure with solve_leaf at the leaves.
GroundOutcome check_ground(TermStore& s, const std::vector<Fml>& formulas, IndexTheory theory,
                           bool minimize_core = false);

}  // namespace ard
