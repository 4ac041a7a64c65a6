#include "ard/ground.hpp"

#include <algorithm>

#include "ard/printer.hpp"

namespace ard {

namespace {

class LeafSolver {
 public:
  LeafSolver(TermStore& s, const std::vector<CLit>& lits, const LeafOptions& opts)
      : s_(s), lits_(lits), opts_(opts), cc_(s, opts.policy, opts.is_common) {
    g_.add_node(s_.zero());
    cc_.add_term(s_.zero());
    cc_.add_term(s_.bot());
  }

  LeafResult run() {
    for (const CLit& cl : lits_) register_literal(cl);
    for (const CLit& cl : lits_) assert_literal(cl);

    while (true) {
      if (auto cycle = g_.close()) return unsat_cycle(*cycle);
      for (auto [u, v] : g_.zero_pairs())
        if (!cc_.same(u, v)) {
          MergeReason r;
          r.kind = MergeReason::Kind::Order;
          cc_.merge(u, v, r);
        }
      if (opts_.theory != IndexTheory::IDL) break;  // no feedback into the graph in TO
      bool changed = false;
      for (auto [u, v] : cc_.drain_index_merges()) {
        if (g_.has_node(u) && g_.has_node(v) && (g_.dist(u, v) != 0 || g_.dist(v, u) != 0)) {
          OrderEdge e{u, v, 0, mk_eq(s_, u, v), Color::A, internal_origin, false, true};
          g_.add_edge(e);
          OrderEdge f{v, u, 0, mk_eq(s_, u, v), Color::A, internal_origin, false, true};
          g_.add_edge(f);
          changed = true;
        }
      }
      if (!changed) break;
    }

    for (const CLit& cl : lits_) {
      const Literal& l = cl.lit;
      if (l.kind == AtomKind::Eq && !l.pos && cc_.same(l.lhs, l.rhs)) return unsat_diseq(cl);
    }
    return build_model();
  }

 private:
  void register_index(TermId t) {
    if (g_.has_node(t)) return;
    g_.add_node(t);
    cc_.add_term(t);
    const TermData& d = s_[t];
    if (d.op == Op::Succ || d.op == Op::Pred) {
      if (opts_.theory != IndexTheory::IDL)
        throw internal_error("S/P term in TO-mode ground constraint");
      TermId x = d.args[0];
      register_index(x);
      int wa = d.op == Op::Succ ? -1 : 1;
      Literal def = mk_eq(s_, t, t);  // placeholder, definitional edges carry no literal
      g_.add_edge({x, t, wa, def, Color::A, internal_origin, true, false});
      g_.add_edge({t, x, -wa, def, Color::A, internal_origin, true, false});
    }
  }

  void register_term(TermId t) {
    Sort so = s_.sort_of(t);
    if (so == Sort::Index) {
      register_index(t);
      return;
    }
    if (so == Sort::Array) {
      if (!s_.is_atomic(t)) throw internal_error("compound array term in ground constraint");
      return;
    }
    const TermData& d = s_[t];
    if (d.op == Op::Rd) {
      register_index(d.args[1]);
      cc_.add_term(t);
      return;
    }
    cc_.add_term(t);
  }

  void register_literal(const CLit& cl) {
    register_term(cl.lit.lhs);
    register_term(cl.lit.rhs);
  }

  void assert_literal(const CLit& cl) {
    const Literal& l = cl.lit;
    switch (l.kind) {
      case AtomKind::Le:
        g_.add_edge({l.lhs, l.rhs, 0, l, cl.color, cl.origin});
        return;
      case AtomKind::Lt:
        g_.add_edge({l.lhs, l.rhs, -1, l, cl.color, cl.origin});
        return;
      case AtomKind::Eq:
        if (!l.pos) return;  // disequalities checked after closure
        if (s_.sort_of(l.lhs) == Sort::Index) {
          g_.add_edge({l.lhs, l.rhs, 0, l, cl.color, cl.origin});
          g_.add_edge({l.rhs, l.lhs, 0, l, cl.color, cl.origin});
        } else {
          MergeReason r;
          r.kind = MergeReason::Kind::Input;
          r.lit = l;
          r.color = cl.color;
          r.origin = cl.origin;
          cc_.merge(l.lhs, l.rhs, r);
        }
        return;
    }
  }

  LeafResult unsat_cycle(std::vector<OrderEdge> cycle) {
    LeafResult res;
    res.sat = false;
    res.conflict.conflict = NegCycleConflict{std::move(cycle)};
    collect_core(res.conflict);
    return res;
  }

  LeafResult unsat_diseq(const CLit& cl) {
    LeafResult res;
    res.sat = false;
    CcConflict c;
    c.diseq = cl.lit;
    c.diseq_color = cl.color;
    c.diseq_origin = cl.origin;
    c.path = materialize(cc_.explain(cl.lit.lhs, cl.lit.rhs));
    res.conflict.conflict = std::move(c);
    collect_core(res.conflict);
    return res;
  }

  std::vector<ProofStep> materialize(const std::vector<CongruenceClosure::Step>& steps) {
    std::vector<ProofStep> out;
    for (const auto& st : steps) {
      ProofStep p;
      p.from = st.from;
      p.to = st.to;
      switch (st.reason.kind) {
        case MergeReason::Kind::Input:
          p.kind = ProofStep::Kind::Input;
          p.lit = st.reason.lit;
          p.color = st.reason.color;
          p.origin = st.reason.origin;
          break;
        case MergeReason::Kind::Order:
          p.kind = ProofStep::Kind::Order;
          p.cycle = g_.zero_cycle(st.from, st.to);
          break;
        case MergeReason::Kind::Cong: {
          p.kind = ProofStep::Kind::Cong;
          TermId ax = index_arg(st.from), ay = index_arg(st.to);
          if (ax != ay) p.arg = materialize(cc_.explain(ax, ay));
          break;
        }
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  TermId index_arg(TermId app) const {
    const TermData& d = s_[app];
    if (d.op == Op::Rd) return d.args[1];
    if (d.op == Op::Succ || d.op == Op::Pred) return d.args[0];
    throw internal_error("index_arg: not an application");
  }

  static void core_of_steps(const std::vector<ProofStep>& steps, std::set<unsigned>& out) {
    for (const auto& p : steps) {
      switch (p.kind) {
        case ProofStep::Kind::Input: out.insert(p.origin); break;
        case ProofStep::Kind::Order:
          for (const auto& e : p.cycle) out.insert(e.origin);
          break;
        case ProofStep::Kind::Cong: core_of_steps(p.arg, out); break;
      }
    }
  }

  void collect_core(LeafConflict& c) {
    std::set<unsigned> origins;
    if (auto* nc = std::get_if<NegCycleConflict>(&c.conflict)) {
      for (const auto& e : nc->edges) origins.insert(e.origin);
    } else {
      auto& cc = std::get<CcConflict>(c.conflict);
      origins.insert(cc.diseq_origin);
      core_of_steps(cc.path, origins);
    }
    origins.erase(internal_origin);
    c.core.assign(origins.begin(), origins.end());
  }

  // A value collision between distinct index classes matters only when a
  // disequality or an array-table entry observes it.
  std::optional<std::pair<TermId, TermId>> observable_collision(
      const std::map<TermId, long>& values) {
    for (const CLit& cl : lits_) {
      const Literal& l = cl.lit;
      if (l.kind != AtomKind::Eq || l.pos || s_.sort_of(l.lhs) != Sort::Index) continue;
      if (!cc_.same(l.lhs, l.rhs) && values.at(l.lhs) == values.at(l.rhs))
        return std::make_pair(l.lhs, l.rhs);
    }
    std::map<std::pair<Op, TermId>, std::vector<TermId>> groups;
    for (TermId t : cc_.registered()) {
      const TermData& d = s_[t];
      if (d.op == Op::Rd)
        groups[{Op::Rd, d.args[0]}].push_back(t);
      else if (d.op == Op::Succ || d.op == Op::Pred)
        groups[{d.op, no_term}].push_back(t);
    }
    for (auto& [key, apps] : groups)
      for (std::size_t i = 0; i < apps.size(); ++i)
        for (std::size_t j = i + 1; j < apps.size(); ++j) {
          TermId x = s_[apps[i]].args[key.first == Op::Rd ? 1 : 0];
          TermId y = s_[apps[j]].args[key.first == Op::Rd ? 1 : 0];
          if (cc_.same(x, y) || values.at(x) != values.at(y)) continue;
          if (!cc_.same(apps[i], apps[j])) return std::make_pair(x, y);
        }
    return std::nullopt;
  }

  LeafResult build_model() {
    auto values = g_.values(s_.zero(), opts_.theory);

    if (auto pair = observable_collision(values)) {
      if (opts_.theory == IndexTheory::TO) {
        // distinct ranks always exist in TO; no arrangement split needed
        values = g_.values_distinct(s_.zero());
      } else if (opts_.allow_splits) {
        return split_on(pair->first, pair->second);
      } else {
        throw unknown_error("IDL interpolation requires an index arrangement split");
      }
    }

    LeafResult res;
    res.sat = true;
    GroundModel& m = res.model;
    for (auto& [t, v] : values) m.index_value[t] = v;

    std::map<TermId, unsigned> class_token;
    unsigned next_token = 1;
    class_token[cc_.find(s_.bot())] = 0;
    for (TermId t : cc_.registered()) {
      if (s_.sort_of(t) != Sort::Elem) continue;
      TermId r = cc_.find(t);
      auto it = class_token.find(r);
      if (it == class_token.end()) it = class_token.emplace(r, next_token++).first;
      m.elem_token[t] = it->second;
    }
    for (TermId t : cc_.registered()) {
      if (s_[t].op != Op::Rd) continue;
      TermId arr = s_[t].args[0];
      long iv = m.index_value.at(s_[t].args[1]);
      unsigned tok = m.elem_token.at(t);
      auto [it, fresh] = m.array_table[arr].emplace(iv, tok);
      if (!fresh && it->second != tok)
        throw internal_error("ground model: conflicting array table entry");
    }
    res.state = std::make_shared<TheoryState>(std::move(g_), std::move(cc_));
    return res;
  }

  LeafResult split_on(TermId u, TermId v) {
    std::vector<Literal> branches{mk_lt(s_, u, v), mk_lt(s_, v, u), mk_eq(s_, u, v)};
    std::set<unsigned> core;
    LeafResult last;
    for (const Literal& b : branches) {
      auto extended = lits_;
      extended.push_back({b, Color::A, internal_origin});
      last = solve_leaf(s_, extended, opts_);
      if (last.sat) return last;
      core.insert(last.conflict.core.begin(), last.conflict.core.end());
    }
    core.erase(internal_origin);
    last.conflict.core.assign(core.begin(), core.end());
    return last;
  }

  TermStore& s_;
  const std::vector<CLit>& lits_;
  LeafOptions opts_;
  OrderGraph g_;
  CongruenceClosure cc_;
};

}  // namespace

LeafResult solve_leaf(TermStore& s, const std::vector<CLit>& lits, const LeafOptions& opts) {
  return LeafSolver(s, lits, opts).run();
}

bool TheoryState::entails(const TermStore& s, const Literal& l) const {
  switch (l.kind) {
    case AtomKind::Le:
      return graph.has_node(l.lhs) && graph.has_node(l.rhs) && graph.dist(l.lhs, l.rhs) <= 0;
    case AtomKind::Lt:
      return graph.has_node(l.lhs) && graph.has_node(l.rhs) && graph.dist(l.lhs, l.rhs) <= -1;
    case AtomKind::Eq:
      if (!l.pos) return false;  // disequality entailment is not tracked
      (void)s;
      return cc.has_term(l.lhs) && cc.has_term(l.rhs) && cc.same(l.lhs, l.rhs);
  }
  return false;
}

std::vector<Literal> propagate_equalities(const TermStore& s, const CongruenceClosure& cc,
                                          const OrderGraph& g) {
  std::vector<Literal> out;
  for (auto [u, v] : g.zero_pairs()) out.push_back(mk_eq(s, u, v));
  std::map<TermId, TermId> seen;  // class root -> first index member
  for (TermId t : cc.registered()) {
    if (s.sort_of(t) != Sort::Index) continue;
    TermId r = cc.find(t);
    auto [it, fresh] = seen.emplace(r, t);
    if (!fresh && it->second != t) {
      Literal l = mk_eq(s, it->second, t);
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
  }
  return out;
}

namespace {

struct Clause {
  std::vector<Literal> lits;
  unsigned origin;
};

// Plain (uncolored) DFS over the clause structure; verdict, model and core.
class GroundDfs {
 public:
  GroundDfs(TermStore& s, IndexTheory theory) : s_(s), theory_(theory) {}

  void add_formula(const Fml& f, unsigned origin) {
    for (auto& c : clausify(nnf(f))) clauses_.push_back({std::move(c), origin});
  }

  GroundOutcome run() {
    GroundOutcome out;
    std::vector<CLit> assumed;
    std::set<unsigned> core;
    out.sat = dfs(assumed, core, out.model);
    if (!out.sat) {
      core.erase(internal_origin);
      out.core.formula_indices.assign(core.begin(), core.end());
      out.core.skeleton = skeleton_;
    }
    return out;
  }

 private:
  bool dfs(std::vector<CLit>& assumed, std::set<unsigned>& core, GroundModel& model) {
    LeafResult leaf = solve_leaf(s_, assumed, {theory_, true});
    if (!leaf.sat) {
      for (unsigned o : map_core(leaf.conflict.core, assumed)) core.insert(o);
      if (skeleton_.empty()) {
        if (auto* nc = std::get_if<NegCycleConflict>(&leaf.conflict.conflict)) {
          skeleton_ = "negative cycle:";
          for (const OrderEdge& e : nc->edges)
            if (!e.definitional) skeleton_ += ' ' + print_literal(s_, e.lit);
        } else {
          auto& cc = std::get<CcConflict>(leaf.conflict.conflict);
          skeleton_ = "congruence conflict on " + print_literal(s_, cc.diseq);
        }
      }
      return false;
    }
    const Clause* branch = nullptr;
    std::size_t best_live = ~std::size_t{0};
    for (const Clause& c : clauses_) {
      bool resolved = false;
      std::size_t live = 0;
      for (const Literal& l : c.lits) {
        if (assumed_has(assumed, l) || leaf.state->entails(s_, l)) {
          resolved = true;
          break;
        }
        if (!assumed_has(assumed, negated(l)) && !literally_false(l)) ++live;
      }
      if (resolved) continue;
      if (!branch || live < best_live) {
        branch = &c;
        best_live = live;
      }
    }
    if (!branch) {
      model = leaf.model;
      return true;
    }
    for (const Literal& l : branch->lits) {
      if (literally_false(l)) continue;
      assumed.push_back({l, Color::A, branch->origin});
      bool sat = dfs(assumed, core, model);
      assumed.pop_back();
      if (sat) return true;
    }
    core.insert(branch->origin);
    return false;
  }

  static bool assumed_has(const std::vector<CLit>& assumed, const Literal& l) {
    for (const CLit& a : assumed)
      if (a.lit == l) return true;
    return false;
  }

  // leaf core entries refer to assumed-literal origins already
  static std::vector<unsigned> map_core(const std::vector<unsigned>& core,
                                        const std::vector<CLit>&) {
    return core;
  }

  TermStore& s_;
  IndexTheory theory_;
  std::vector<Clause> clauses_;
  std::string skeleton_;
};

}  // namespace

GroundOutcome check_ground(TermStore& s, const std::vector<Fml>& formulas, IndexTheory theory,
                           bool minimize_core) {
  GroundDfs dfs(s, theory);
  for (std::size_t i = 0; i < formulas.size(); ++i)
    dfs.add_formula(formulas[i], static_cast<unsigned>(i));
  GroundOutcome out = dfs.run();
  if (!out.sat && minimize_core) {
    std::vector<unsigned> kept = out.core.formula_indices;
    for (std::size_t i = 0; i < kept.size();) {
      std::vector<Fml> trial;
      std::vector<unsigned> trial_idx;
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) {
          trial.push_back(formulas[kept[j]]);
          trial_idx.push_back(kept[j]);
        }
      GroundDfs re(s, theory);
      for (std::size_t j = 0; j < trial.size(); ++j) re.add_formula(trial[j], (unsigned)j);
      if (!re.run().sat)
        kept = std::move(trial_idx);
      else
        ++i;
    }
    out.core.formula_indices = kept;
    out.core.minimized = true;
  }
  return out;
}

}  // namespace ard
