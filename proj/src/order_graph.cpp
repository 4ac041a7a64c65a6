#include "ard/order_graph.hpp"

#include <algorithm>
#include <limits>

namespace ard {

namespace {
constexpr long long inf = std::numeric_limits<long long>::max() / 4;
}

void OrderGraph::add_node(TermId t) {
  if (index_.count(t)) return;
  index_.emplace(t, nodes_.size());
  nodes_.push_back(t);
  closed_ = false;
}

void OrderGraph::add_edge(const OrderEdge& e) {
  add_node(e.u);
  add_node(e.v);
  edges_.push_back(e);
  closed_ = false;
}

std::size_t OrderGraph::id(TermId t) const {
  auto it = index_.find(t);
  if (it == index_.end()) throw internal_error("order graph: unknown node");
  return it->second;
}

std::optional<std::vector<OrderEdge>> OrderGraph::close() {
  const std::size_t n = nodes_.size();
  // Bellman-Ford from a virtual source for negative-cycle extraction
  std::vector<long long> pot(n, 0);
  std::vector<int> parent_edge(n, -1);
  int relaxed_node = -1;
  for (std::size_t round = 0; round <= n; ++round) {
    relaxed_node = -1;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const OrderEdge& e = edges_[k];
      std::size_t iu = id(e.u), iv = id(e.v);
      if (pot[iu] + e.w < pot[iv]) {
        pot[iv] = pot[iu] + e.w;
        parent_edge[iv] = static_cast<int>(k);
        relaxed_node = static_cast<int>(iv);
      }
    }
    if (relaxed_node < 0) break;
  }
  if (relaxed_node >= 0) {
    // walk parents n times to land on the cycle, then collect it
    std::size_t x = static_cast<std::size_t>(relaxed_node);
    for (std::size_t i = 0; i < n; ++i) x = id(edges_[parent_edge[x]].u);
    std::vector<OrderEdge> cycle;
    std::size_t y = x;
    do {
      const OrderEdge& e = edges_[parent_edge[y]];
      cycle.push_back(e);
      y = id(e.u);
    } while (y != x);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
  }

  // Floyd-Warshall with path reconstruction
  d_.assign(n, std::vector<long long>(n, inf));
  via_.assign(n, std::vector<int>(n, -1));
  direct_.assign(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i) d_[i][i] = 0;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const OrderEdge& e = edges_[k];
    std::size_t iu = id(e.u), iv = id(e.v);
    if (iu == iv) continue;
    if (direct_[iu][iv] < 0 || e.w < edges_[direct_[iu][iv]].w)
      direct_[iu][iv] = static_cast<int>(k);
    if (e.w < d_[iu][iv]) d_[iu][iv] = e.w;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d_[i][k] >= inf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d_[k][j] >= inf) continue;
        if (d_[i][k] + d_[k][j] < d_[i][j]) {
          d_[i][j] = d_[i][k] + d_[k][j];
          via_[i][j] = static_cast<int>(k);
        }
      }
    }
  closed_ = true;
  return std::nullopt;
}

bool OrderGraph::reachable(TermId u, TermId v) const { return dist(u, v) < inf; }

long long OrderGraph::dist(TermId u, TermId v) const {
  if (!closed_) throw internal_error("order graph: not closed");
  return d_[id(u)][id(v)];
}

std::vector<std::pair<TermId, TermId>> OrderGraph::zero_pairs() const {
  std::vector<std::pair<TermId, TermId>> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j = i + 1; j < nodes_.size(); ++j)
      if (d_[i][j] == 0 && d_[j][i] == 0) out.emplace_back(nodes_[i], nodes_[j]);
  return out;
}

std::vector<OrderEdge> OrderGraph::path_edges(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  int k = via_[i][j];
  if (k < 0) {
    if (direct_[i][j] < 0) throw internal_error("order graph: no path to reconstruct");
    return {edges_[direct_[i][j]]};
  }
  auto left = path_edges(i, static_cast<std::size_t>(k));
  auto right = path_edges(static_cast<std::size_t>(k), j);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

std::vector<OrderEdge> OrderGraph::zero_path(TermId u, TermId v) const {
  if (dist(u, v) != 0) throw internal_error("zero_path: distance not zero");
  return path_edges(id(u), id(v));
}

std::vector<OrderEdge> OrderGraph::zero_cycle(TermId u, TermId v) const {
  auto c = zero_path(u, v);
  auto back = zero_path(v, u);
  c.insert(c.end(), back.begin(), back.end());
  return c;
}

std::map<TermId, long> OrderGraph::values(TermId zero_term, IndexTheory theory) const {
  if (!closed_) throw internal_error("order graph: not closed");
  const std::size_t n = nodes_.size();
  std::map<TermId, long> out;
  if (!index_.count(zero_term)) throw internal_error("order graph: zero node missing");

  if (theory == IndexTheory::IDL) {
    // potentials from the Bellman-Ford run are implicit in d_: use the
    // column-minimum trick: val(v) = -min_u d_[u][v] shifted to pin zero
    std::vector<long long> val(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      long long m = 0;
      for (std::size_t u = 0; u < n; ++u)
        if (d_[u][v] < m) m = d_[u][v];
      val[v] = -m;
    }
    long long shift = val[id(zero_term)];
    for (std::size_t v = 0; v < n; ++v) out[nodes_[v]] = static_cast<long>(val[v] - shift);
    return out;
  }

  // TO: smallest values per quotient class along a topological order.
  std::vector<long> val(n, 0);
  bool changed = true;
  unsigned rounds = 0;
  while (changed) {
    changed = false;
    if (++rounds > n + 2) throw internal_error("order graph: value relaxation diverged");
    for (const OrderEdge& e : edges_) {
      std::size_t iu = id(e.u), iv = id(e.v);
      long lo = val[iu] - e.w;  // val(v) >= val(u) - w
      if (val[iv] < lo) {
        val[iv] = lo;
        changed = true;
      }
    }
  }
  long shift = val[id(zero_term)];
  for (std::size_t i = 0; i < n; ++i) out[nodes_[i]] = val[i] - shift;
  return out;
}

std::map<TermId, long> OrderGraph::values_distinct(TermId zero_term) const {
  if (!closed_) throw internal_error("order graph: not closed");
  const std::size_t n = nodes_.size();
  std::map<TermId, long> out;
  std::vector<int> cls(n, -1);
  int nclasses = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = nclasses;
    for (std::size_t j = i + 1; j < n; ++j)
      if (d_[i][j] == 0 && d_[j][i] == 0) cls[j] = nclasses;
    ++nclasses;
  }
  // class order: u before v when d(u,v) <= 0 and classes differ
  std::vector<std::vector<int>> succs(nclasses);
  std::vector<int> indeg(nclasses, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (cls[i] == cls[j] || d_[i][j] >= inf) continue;
      if (d_[i][j] <= 0) succs[cls[i]].push_back(cls[j]);
    }
  for (auto& ss : succs) {
    std::sort(ss.begin(), ss.end());
    ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
    for (int t : ss) ++indeg[t];
  }
  std::vector<int> ready;
  for (int c = 0; c < nclasses; ++c)
    if (indeg[c] == 0) ready.push_back(c);
  std::vector<long> rank(nclasses, 0);
  long next = 0;
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<int>());
    int c = ready.back();
    ready.pop_back();
    rank[c] = next++;
    for (int t : succs[c])
      if (--indeg[t] == 0) ready.push_back(t);
  }
  if (next != nclasses) throw internal_error("order graph: cyclic quotient");
  long shift = rank[cls[id(zero_term)]];
  for (std::size_t i = 0; i < n; ++i) out[nodes_[i]] = rank[cls[i]] - shift;
  return out;
}

}  // namespace ard
