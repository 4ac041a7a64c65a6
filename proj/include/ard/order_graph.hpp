#pragma once

#include <optional>

#include "ard/congruence.hpp"
#include "ard/problem.hpp"

namespace ard {

struct OrderEdge {
  TermId u, v;  // constraint 0 <= val(v) - val(u) + w, i.e. val(v) >= val(u) - w
  int w;
  Literal lit{};
  Color color = Color::A;
  unsigned origin = 0;
  bool definitional = false;  // S/P tightness edges, valid in any color
  bool cc_derived = false;    // fed back from congruence closure (IDL)
};

// Weighted order graph over index terms. TO uses weights {0,-1} only; IDL
// also carries +/-1 definitional edges for S and P. Consistent iff no
// negative-weight cycle.
class OrderGraph {
 public:
  void add_node(TermId t);
  bool has_node(TermId t) const { return index_.count(t) != 0; }
  void add_edge(const OrderEdge& e);
  const std::vector<TermId>& nodes() const { return nodes_; }

  // (Re)computes all-pairs shortest paths; returns a negative cycle when one
  // exists. Deterministic in input order.
  std::optional<std::vector<OrderEdge>> close();

  bool reachable(TermId u, TermId v) const;
  long long dist(TermId u, TermId v) const;

  // Entailed equalities: dist(u,v) == 0 and dist(v,u) == 0.
  std::vector<std::pair<TermId, TermId>> zero_pairs() const;
  // A weight-0 edge path witnessing dist(u,v) == 0.
  std::vector<OrderEdge> zero_path(TermId u, TermId v) const;
  // The closed zero cycle justifying u = v.
  std::vector<OrderEdge> zero_cycle(TermId u, TermId v) const;

  // Integer values per node: smallest values satisfying every edge, with 0
  // pinned to the zero term's class. Distinct classes may collide; the caller
  // resolves observable collisions.
  std::map<TermId, long> values(TermId zero_term, IndexTheory theory) const;
  // Distinct ranks per quotient class respecting the edges (TO only).
  std::map<TermId, long> values_distinct(TermId zero_term) const;

 private:
  std::size_t id(TermId t) const;
  std::vector<OrderEdge> path_edges(std::size_t i, std::size_t j) const;

  std::vector<TermId> nodes_;
  std::map<TermId, std::size_t> index_;
  std::vector<OrderEdge> edges_;
  // closure state
  std::vector<std::vector<long long>> d_;
  std::vector<std::vector<int>> via_;        // intermediate node, -1 = direct edge
  std::vector<std::vector<int>> direct_;     // edge index of best direct edge, -1 none
  bool closed_ = false;
};

}  // namespace ard
