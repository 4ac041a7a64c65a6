#include "ard/congruence.hpp"

#include <algorithm>

namespace ard {

CongruenceClosure::CongruenceClosure(const TermStore& s, Policy policy, CommonFn is_common)
    : store_(s), policy_(policy), is_common_(std::move(is_common)) {}

CongruenceClosure::Node& CongruenceClosure::node(TermId t) {
  auto it = node_index_.find(t);
  if (it == node_index_.end()) throw internal_error("congruence: unregistered term");
  return nodes_[it->second];
}

const CongruenceClosure::Node& CongruenceClosure::node(TermId t) const {
  auto it = node_index_.find(t);
  if (it == node_index_.end()) throw internal_error("congruence: unregistered term");
  return nodes_[it->second];
}

std::tuple<Op, TermId, TermId> CongruenceClosure::signature(TermId app) const {
  const TermData& d = store_[app];
  switch (d.op) {
    case Op::Rd: return {Op::Rd, d.args[0], find(d.args[1])};
    case Op::Succ:
    case Op::Pred: return {d.op, no_term, find(d.args[0])};
    default: throw internal_error("congruence: unsupported application in ground layer");
  }
}

void CongruenceClosure::add_term(TermId t) {
  if (node_index_.count(t)) return;
  const TermData& d = store_[t];
  if (d.op == Op::Wr || d.op == Op::Diff)
    throw internal_error("congruence: wr/diff term reached the ground layer");
  TermId arg = no_term;
  if (d.op == Op::Rd) arg = d.args[1];
  if (d.op == Op::Succ || d.op == Op::Pred) arg = d.args[0];
  if (arg != no_term) add_term(arg);

  node_index_.emplace(t, nodes_.size());
  Node n;
  n.parent = t;
  n.rep = t;
  nodes_.push_back(std::move(n));
  order_.push_back(t);

  if (arg != no_term) {
    node(find(arg)).uses.push_back(t);
    auto sig = signature(t);
    auto it = sig_.find(sig);
    if (it == sig_.end()) {
      sig_.emplace(sig, t);
    } else if (!same(it->second, t)) {
      merge(t, it->second, {MergeReason::Kind::Cong, {}, Color::A, 0, t, it->second});
    }
  }
}

TermId CongruenceClosure::find(TermId t) const {
  const Node* n = &node(t);
  while (n->parent != t) {
    t = n->parent;
    n = &node(t);
  }
  return t;
}

TermId CongruenceClosure::representative(TermId t) const { return node(find(t)).rep; }

std::vector<TermId> CongruenceClosure::class_members(TermId t) const {
  std::vector<TermId> out;
  TermId r = find(t);
  for (TermId u : order_)
    if (find(u) == r) out.push_back(u);
  return out;
}

void CongruenceClosure::reroot(TermId t) {
  // reverse the proof-forest path from t to its tree root
  std::vector<TermId> path;
  TermId x = t;
  while (x != no_term) {
    path.push_back(x);
    x = node(x).pf_parent;
  }
  for (std::size_t i = path.size(); i-- > 1;) {
    Node& up = node(path[i]);
    up.pf_parent = path[i - 1];
    up.pf_reason = node(path[i - 1]).pf_reason;
  }
  node(t).pf_parent = no_term;
}

bool CongruenceClosure::merge(TermId a, TermId b, MergeReason r) {
  add_term(a);
  add_term(b);
  std::vector<std::tuple<TermId, TermId, MergeReason>> pending{{a, b, std::move(r)}};
  bool merged_any = false;
  while (!pending.empty()) {
    auto [x, y, reason] = std::move(pending.back());
    pending.pop_back();
    TermId rx = find(x), ry = find(y);
    if (rx == ry) continue;
    merged_any = true;
    if (node(rx).size > node(ry).size) {
      std::swap(rx, ry);
      std::swap(x, y);
    }
    // proof forest edge x -- y
    reroot(x);
    node(x).pf_parent = y;
    node(x).pf_reason = reason;
    // union rx into ry
    Node& small = node(rx);
    Node& big = node(ry);
    small.parent = ry;
    big.size += small.size;
    if (store_.sort_of(rx) == Sort::Index) index_merges_.emplace_back(rx, ry);
    // representative policy
    if (policy_ == Policy::PreferCommon && is_common_) {
      bool big_common = is_common_(big.rep), small_common = is_common_(small.rep);
      if (!big_common && small_common) big.rep = small.rep;
    } else if (small.rep < big.rep) {
      big.rep = small.rep;
    }
    // re-key applications using the absorbed class
    std::vector<TermId> uses = std::move(small.uses);
    small.uses.clear();
    for (TermId app : uses) {
      auto sig = signature(app);
      auto it = sig_.find(sig);
      if (it == sig_.end()) {
        sig_.emplace(sig, app);
      } else if (!same(it->second, app)) {
        pending.push_back({app, it->second,
                           {MergeReason::Kind::Cong, {}, Color::A, 0, app, it->second}});
      }
      node(ry).uses.push_back(app);
    }
  }
  return merged_any;
}

std::vector<CongruenceClosure::Step> CongruenceClosure::explain(TermId a, TermId b) const {
  if (find(a) != find(b)) throw internal_error("explain: terms not congruent");
  if (a == b) return {};
  std::map<TermId, TermId> seen;  // ancestor -> child on a's path
  TermId x = a;
  while (x != no_term) {
    seen.emplace(x, x);
    x = node(x).pf_parent;
  }
  TermId lca = b;
  while (!seen.count(lca)) {
    lca = node(lca).pf_parent;
    if (lca == no_term) throw internal_error("explain: no common ancestor");
  }
  std::vector<Step> front;
  for (TermId t = a; t != lca; t = node(t).pf_parent)
    front.push_back({t, node(t).pf_parent, node(t).pf_reason});
  std::vector<Step> back;
  for (TermId t = b; t != lca; t = node(t).pf_parent)
    back.push_back({node(t).pf_parent, t, node(t).pf_reason});
  std::reverse(back.begin(), back.end());
  front.insert(front.end(), back.begin(), back.end());
  return front;
}

std::vector<std::pair<TermId, TermId>> CongruenceClosure::drain_index_merges() {
  auto out = std::move(index_merges_);
  index_merges_.clear();
  return out;
}

}  // namespace ard
