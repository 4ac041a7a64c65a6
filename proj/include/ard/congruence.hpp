#pragma once

#include <functional>
#include <tuple>

#include "ard/literal.hpp"

namespace ard {

enum class Color : std::uint8_t { A, B };

inline Color other(Color c) { return c == Color::A ? Color::B : Color::A; }

struct MergeReason {
  enum class Kind : std::uint8_t { Input, Order, Cong } kind = Kind::Input;
  Literal lit{};           // Input: the asserted equality
  Color color = Color::A;  // Input
  unsigned origin = 0;     // Input: caller-side literal index
  TermId app1 = no_term, app2 = no_term;  // Cong: the congruent applications
};

// Congruence closure over rd/S/P applications with a proof forest. Array
// symbols never merge (array equalities are rewritten away upstream), so rd
// congruence is keyed per array term. Disequalities are checked by the caller
// against find().
class CongruenceClosure {
 public:
  enum class Policy : std::uint8_t { Default, PreferCommon };
  using CommonFn = std::function<bool(TermId)>;

  explicit CongruenceClosure(const TermStore& s, Policy policy = Policy::Default,
                             CommonFn is_common = {});

  void add_term(TermId t);
  bool has_term(TermId t) const { return node_index_.count(t) != 0; }
  // Returns true when the classes were distinct; congruence consequences are
  // processed eagerly.
  bool merge(TermId a, TermId b, MergeReason r);

  TermId find(TermId t) const;
  bool same(TermId a, TermId b) const { return find(a) == find(b); }
  // Display representative of the class; under PreferCommon an AB-common
  // member whenever the class has one.
  TermId representative(TermId t) const;
  std::vector<TermId> class_members(TermId t) const;

  struct Step {
    TermId from, to;
    MergeReason reason;
  };
  // Proof-forest path between two terms of one class.
  std::vector<Step> explain(TermId a, TermId b) const;

  const std::vector<TermId>& registered() const { return order_; }
  // Index-sorted class merges recorded since the last drain (for the theory
  // propagation loop).
  std::vector<std::pair<TermId, TermId>> drain_index_merges();

 private:
  struct Node {
    TermId parent;
    unsigned size = 1;
    TermId pf_parent = no_term;
    MergeReason pf_reason{};
    std::vector<TermId> uses;  // applications with an argument in this class
    TermId rep;
  };

  Node& node(TermId t);
  const Node& node(TermId t) const;
  void reroot(TermId t);
  std::tuple<Op, TermId, TermId> signature(TermId app) const;

  const TermStore& store_;
  Policy policy_;
  CommonFn is_common_;
  std::map<TermId, std::size_t> node_index_;
  std::vector<Node> nodes_;
  std::vector<TermId> order_;
  std::map<std::tuple<Op, TermId, TermId>, TermId> sig_;
  std::vector<std::pair<TermId, TermId>> index_merges_;
};

}  // namespace ard
