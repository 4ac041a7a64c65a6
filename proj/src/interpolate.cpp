#include "ard/interpolate.hpp"

#include <algorithm>

#include "ard/engine.hpp"
#include "ard/printer.hpp"

namespace ard {

bool ColorCtx::is_common(TermId t) const {
  std::set<TermId> vars;
  store->collect_vars(t, vars);
  for (TermId v : vars)
    if (!common.count(v)) return false;
  return true;
}

Color ColorCtx::var_side(TermId v) const {
  if (common.count(v)) throw internal_error("var_side: common variable");
  if (a_vars.count(v)) return Color::A;
  if (b_vars.count(v)) return Color::B;
  throw internal_error("var_side: variable on neither side");
}

namespace {

enum class EColor : std::uint8_t { A, B, Flex };

EColor to_ecolor(Color c) { return c == Color::A ? EColor::A : EColor::B; }

EColor edge_ecolor(const OrderEdge& e) {
  if (e.cc_derived)
    throw unknown_error("interpolation through congruence-derived order edges");
  if (e.definitional) return EColor::Flex;
  return to_ecolor(e.color);
}

// 0 <= val(v) - val(u) + w as an order atom. TO weakens strict summaries to
// a single strict step; IDL keeps the exact bound via S towers.
Literal summary_literal(TermStore& s, TermId u, TermId v, long long w, IndexTheory theory) {
  if (theory == IndexTheory::TO) {
    if (w == 0) return mk_le(s, u, v);
    if (w < 0) return mk_lt(s, u, v);
    throw internal_error("summary: positive weight in TO mode");
  }
  TermId lhs = u, rhs = v;
  for (long long k = 0; k < -w; ++k) lhs = s.succ(lhs);
  for (long long k = 0; k < w; ++k) rhs = s.succ(rhs);
  return mk_le(s, lhs, rhs);
}

struct CycleRun {
  TermId from, to;
  long long weight;
  bool has_strict_other;
  std::vector<OrderEdge> edges;
};

// Maximal runs of non-c edges around the closed cycle, delimited by strictly
// c-colored edges. Requires at least one strictly-c edge.
std::vector<CycleRun> cycle_runs(const std::vector<OrderEdge>& cycle, Color c) {
  const std::size_t n = cycle.size();
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (edge_ecolor(cycle[i]) == to_ecolor(c)) {
      start = i;
      break;
    }
  if (start == n) throw internal_error("cycle_runs: no delimiter edge");
  std::vector<CycleRun> out;
  CycleRun cur{no_term, no_term, 0, false, {}};
  for (std::size_t k = 1; k <= n; ++k) {
    const OrderEdge& e = cycle[(start + k) % n];
    if (edge_ecolor(e) == to_ecolor(c)) {
      if (cur.from != no_term) {
        out.push_back(cur);
        cur = {no_term, no_term, 0, false, {}};
      }
      continue;
    }
    if (cur.from == no_term) {
      cur.from = e.u;
      cur.weight = 0;
      cur.has_strict_other = false;
      cur.edges.clear();
    }
    cur.to = e.v;
    cur.weight += e.w;
    cur.has_strict_other |= edge_ecolor(e) != EColor::Flex;
    cur.edges.push_back(e);
  }
  if (cur.from != no_term) out.push_back(cur);
  return out;
}

void require_common(const ColorCtx& ctx, TermId t, IndexTheory theory) {
  if (ctx.is_common(t)) return;
  if (theory == IndexTheory::IDL)
    throw unknown_error("interpolation summary over a non-common boundary");
  throw internal_error("mixed class without an AB-common boundary term: " +
                       print_term(*ctx.store, t));
}

// Factor-summary construction for a congruence conflict. Everything the
// A-or-B "summarizing" side derives lands in Q (guarded by P), direct
// summaries of the conflict side land in P, direct summaries of the
// summarizing side in R; the result is (P -> Q) /\ R from the perspective of
// the side opposite to the disequality.
class SumBuilder {
 public:
  SumBuilder(TermStore& s, const ColorCtx& ctx, Color conflict_side, IndexTheory theory)
      : s_(s), ctx_(ctx), kl_(conflict_side), kbar_(other(conflict_side)), th_(theory) {}

  Fml build(const std::vector<ProofStep>& path) {
    derive_path(normalize(path), kl_, 0);
    return f_and({f_implies(f_and(P_), f_and(Q_)), f_and(R_)});
  }

 private:
  EColor intrinsic(const ProofStep& st) const {
    switch (st.kind) {
      case ProofStep::Kind::Input: return to_ecolor(st.color);
      case ProofStep::Kind::Order: {
        if (st.single_edge) return edge_ecolor(st.via);
        bool a = false, b = false;
        for (const OrderEdge& e : st.cycle) {
          EColor ec = edge_ecolor(e);
          a |= ec == EColor::A;
          b |= ec == EColor::B;
        }
        if (a && b) return EColor::Flex;
        if (a) return EColor::A;
        if (b) return EColor::B;
        return EColor::Flex;
      }
      case ProofStep::Kind::Cong: {
        const TermData& d = (*store())[st.from];
        if (d.op != Op::Rd) {
          // S/P congruence follows its argument proof
          return st.arg.empty() ? EColor::Flex : path_intrinsic(st.arg);
        }
        TermId arr = d.args[0];
        if (!ctx_.is_common(arr)) return to_ecolor(ctx_.var_side(arr));
        return st.arg.empty() ? EColor::Flex : path_intrinsic(st.arg);
      }
    }
    throw internal_error("intrinsic: bad proof step");
  }

  EColor path_intrinsic(const std::vector<ProofStep>& path) const {
    bool a = false, b = false;
    for (const ProofStep& st : path) {
      EColor ec = intrinsic(st);
      a |= ec == EColor::A;
      b |= ec == EColor::B;
    }
    if (a && b) return EColor::Flex;
    if (a) return EColor::A;
    if (b) return EColor::B;
    return EColor::Flex;
  }

  const TermStore* store() const { return ctx_.store; }

  // Rewrites the proof into splittable form: a mixed zero-cycle equality is
  // cut at the cycle's color-junction nodes (each adjacent to both colors,
  // hence AB-common), leaving single-colored run pieces, every node pair on a
  // TO zero cycle being equal; congruence steps are cut at each intermediate
  // node of their argument proof.
  std::vector<ProofStep> normalize(const std::vector<ProofStep>& path) {
    std::vector<ProofStep> out;
    for (const ProofStep& st : path) {
      switch (st.kind) {
        case ProofStep::Kind::Input: out.push_back(st); break;
        case ProofStep::Kind::Order: {
          if (th_ == IndexTheory::TO && !st.single_edge &&
              intrinsic(st) == EColor::Flex) {
            std::size_t pos = st.cycle.size();
            for (std::size_t e = 0; e < st.cycle.size(); ++e)
              if (st.cycle[e].u == st.from) {
                pos = e;
                break;
              }
            if (pos == st.cycle.size())
              throw internal_error("order step source not on its cycle");
            TermId piece_start = st.from;
            OrderEdge piece_color{};
            bool have_color = false;
            auto emit = [&](TermId upto) {
              if (piece_start == upto) return;
              ProofStep piece = st;
              piece.from = piece_start;
              piece.to = upto;
              piece.single_edge = true;
              piece.via = piece_color;
              piece.via.definitional = !have_color;
              out.push_back(std::move(piece));
              piece_start = upto;
            };
            for (std::size_t k = 0; k < st.cycle.size(); ++k) {
              const OrderEdge& e = st.cycle[(pos + k) % st.cycle.size()];
              EColor ec = edge_ecolor(e);
              if (ec != EColor::Flex) {
                if (have_color && ec != to_ecolor(piece_color.color)) emit(e.u);
                piece_color = e;
                have_color = true;
              }
              if (e.v == st.to) break;
            }
            emit(st.to);
            break;
          }
          out.push_back(st);
          break;
        }
        case ProofStep::Kind::Cong: {
          std::vector<ProofStep> arg = normalize(st.arg);
          if (arg.size() <= 1) {
            ProofStep c = st;
            c.arg = std::move(arg);
            out.push_back(std::move(c));
            break;
          }
          for (const ProofStep& a : arg) {
            ProofStep c;
            c.kind = ProofStep::Kind::Cong;
            c.from = mk_app(st.from, a.from);
            c.to = mk_app(st.from, a.to);
            c.arg = {a};
            if (c.from != c.to) out.push_back(std::move(c));
          }
          break;
        }
      }
    }
    return out;
  }

  TermId mk_app(TermId proto, TermId arg) {
    const TermData& d = s_[proto];
    switch (d.op) {
      case Op::Rd: return s_.rd(d.args[0], arg);
      case Op::Succ: return s_.succ(arg);
      case Op::Pred: return s_.pred(arg);
      default: throw internal_error("mk_app: not an application");
    }
  }

  // Assigns a color per step: strict steps keep their intrinsic color; a
  // flexible segment between runs of different colors is cut at a common
  // node, otherwise it joins its neighbors (or the context color).
  std::vector<Color> assign_colors(const std::vector<ProofStep>& path, Color context) const {
    const std::size_t n = path.size();
    std::vector<Color> out(n, context);
    std::vector<EColor> in(n);
    for (std::size_t i = 0; i < n; ++i) in[i] = intrinsic(path[i]);
    std::size_t i = 0;
    while (i < n) {
      if (in[i] != EColor::Flex) {
        out[i] = in[i] == EColor::A ? Color::A : Color::B;
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < n && in[j] == EColor::Flex) ++j;
      // the path ends belong to the conflict side, so open regions lean on
      // the context color
      Color left = i > 0 ? (in[i - 1] == EColor::A ? Color::A : Color::B) : context;
      Color right = j < n ? (in[j] == EColor::A ? Color::A : Color::B) : context;
      if (left != right) {
        // cut at a common junction node: node p is the boundary between
        // step p-1 and step p
        std::size_t cut = i;
        bool found = false;
        for (std::size_t p = i; p <= j && !found; ++p) {
          TermId node = p < j ? path[p].from : path[j - 1].to;
          if (ctx_.is_common(node)) {
            cut = p;
            found = true;
          }
        }
        for (std::size_t p = i; p < j; ++p) out[p] = p < cut ? left : right;
        i = j;
        continue;
      }
      for (std::size_t p = i; p < j; ++p) out[p] = left;
      i = j;
    }
    return out;
  }

  void derive_path(const std::vector<ProofStep>& path, Color c, int depth) {
    std::vector<Color> colors = assign_colors(path, c);
    std::size_t i = 0;
    while (i < path.size()) {
      Color run_color = colors[i];
      std::size_t j = i;
      while (j < path.size() && colors[j] == run_color) ++j;
      if (run_color != c) {
        TermId u = path[i].from, v = path[j - 1].to;
        require_common(ctx_, u, th_);
        require_common(ctx_, v, th_);
        if (u != v) {
          Fml eq = f_lit(mk_eq(s_, u, v));
          (run_color == kbar_ ? Q_ : P_).push_back(eq);
        }
      }
      for (std::size_t k = i; k < j; ++k) handle_edge(path[k], run_color, depth);
      i = j;
    }
  }

  void handle_edge(const ProofStep& st, Color c, int depth) {
    switch (st.kind) {
      case ProofStep::Kind::Input: return;
      case ProofStep::Kind::Order: {
        bool has_opp = false;
        for (const OrderEdge& e : st.cycle)
          if (edge_ecolor(e) == to_ecolor(other(c))) has_opp = true;
        if (!has_opp) return;  // derivable with the run's own literals
        for (const CycleRun& run : cycle_runs(st.cycle, c)) {
          if (!run.has_strict_other) continue;
          require_common(ctx_, run.from, th_);
          require_common(ctx_, run.to, th_);
          Fml sum = f_lit(summary_literal(s_, run.from, run.to, run.weight, th_));
          (other(c) == kbar_ ? R_ : P_).push_back(sum);
        }
        return;
      }
      case ProofStep::Kind::Cong: {
        if (st.arg.empty()) return;
        if (depth >= 1) {
          if (th_ == IndexTheory::IDL)
            throw unknown_error("nested congruence interpolation beyond depth 1");
          throw internal_error("nested index congruence in TO mode");
        }
        derive_path(st.arg, c, depth + 1);
        return;
      }
    }
  }

  TermStore& s_;
  const ColorCtx& ctx_;
  Color kl_, kbar_;
  IndexTheory th_;
  std::vector<Fml> P_, Q_, R_;
};

}  // namespace

Fml to_interpolate(TermStore& s, const std::vector<OrderEdge>& cycle, const ColorCtx& ctx,
                   IndexTheory theory) {
  bool has_a = false, has_b = false;
  for (const OrderEdge& e : cycle) {
    EColor ec = edge_ecolor(e);
    has_a |= ec == EColor::A;
    has_b |= ec == EColor::B;
  }
  if (!has_b) return f_false();
  if (!has_a) return f_true();
  std::vector<Fml> conj;
  for (const CycleRun& run : cycle_runs(cycle, Color::B)) {
    if (!run.has_strict_other) continue;  // theory-only stretch, B bridges it
    require_common(ctx, run.from, theory);
    require_common(ctx, run.to, theory);
    conj.push_back(f_lit(summary_literal(s, run.from, run.to, run.weight, theory)));
  }
  return f_and(std::move(conj));
}

Fml euf_interpolate(TermStore& s, const CcConflict& conflict, const ColorCtx& ctx,
                    IndexTheory theory) {
  SumBuilder sb(s, ctx, conflict.diseq_color, theory);
  Fml sum = sb.build(conflict.path);
  return conflict.diseq_color == Color::B ? sum : f_not(sum);
}

Fml combine_interpolants(TermStore& s, const LeafConflict& conflict, const ColorCtx& ctx,
                         IndexTheory theory) {
  if (auto* nc = std::get_if<NegCycleConflict>(&conflict.conflict))
    return simplify(to_interpolate(s, nc->edges, ctx, theory));
  return simplify(euf_interpolate(s, std::get<CcConflict>(conflict.conflict), ctx, theory));
}

namespace {

struct ColoredClause {
  std::vector<Literal> lits;
  Color color;
};

class ItpDfs {
 public:
  ItpDfs(TermStore& s, IndexTheory theory, const ColorCtx& ctx) : s_(s), th_(theory), ctx_(ctx) {}

  void add_formula(const Fml& f, Color c) {
    for (auto& lits : clausify(nnf(f))) clauses_.push_back({lits, c});
  }

  GroundItpResult run() {
    std::vector<CLit> assumed;
    Out o = dfs(assumed);
    GroundItpResult res;
    res.sat = o.sat;
    res.model = std::move(o.model);
    res.itp = o.itp;
    return res;
  }

 private:
  struct Out {
    bool sat;
    Fml itp;
    GroundModel model;
  };

  Out dfs(std::vector<CLit>& assumed) {
    LeafOptions opts{th_, false, CongruenceClosure::Policy::PreferCommon,
                     [this](TermId t) { return ctx_.is_common(t); }};
    LeafResult leaf = solve_leaf(s_, assumed, opts);
    if (!leaf.sat) return {false, combine_interpolants(s_, leaf.conflict, ctx_, th_), {}};
    const ColoredClause* branch = nullptr;
    std::size_t best_live = ~std::size_t{0};
    for (const ColoredClause& c : clauses_) {
      bool resolved = false;
      std::size_t live = 0;
      for (const Literal& l : c.lits) {
        if (has(assumed, l) || leaf.state->entails(s_, l)) {
          resolved = true;
          break;
        }
        if (!has(assumed, negated(l)) && !literally_false(l)) ++live;
      }
      if (resolved) continue;
      if (!branch || live < best_live) {
        branch = &c;
        best_live = live;
      }
    }
    if (!branch) return {true, {}, std::move(leaf.model)};
    std::vector<Fml> parts;
    for (const Literal& l : branch->lits) {
      if (literally_false(l)) continue;
      assumed.push_back({l, branch->color, internal_origin});
      Out o = dfs(assumed);
      assumed.pop_back();
      if (o.sat) return o;
      parts.push_back(o.itp);
    }
    Fml itp = branch->color == Color::A ? f_or(std::move(parts)) : f_and(std::move(parts));
    return {false, simplify(itp), {}};
  }

  static bool has(const std::vector<CLit>& assumed, const Literal& l) {
    for (const CLit& a : assumed)
      if (a.lit == l) return true;
    return false;
  }

  TermStore& s_;
  IndexTheory th_;
  const ColorCtx& ctx_;
  std::vector<ColoredClause> clauses_;
};

}  // namespace

GroundItpResult interpolate_ground(TermStore& s,
                                   const std::vector<std::pair<Fml, Color>>& formulas,
                                   IndexTheory theory, const ColorCtx& ctx) {
  ItpDfs dfs(s, theory, ctx);
  for (auto& [f, c] : formulas) dfs.add_formula(f, c);
  return dfs.run();
}

Fml unname_diffs(TermStore& s, const Fml& f, const std::map<TermId, TermId>& expansions) {
  return substitute(s, f, expansions);
}

namespace {

TermId fresh_k(TermStore& s) {
  for (unsigned i = 1;; ++i) {
    std::string name = std::string(1, reserved_prefix) + "k" + std::to_string(i);
    if (s.find_var(name) == no_term) return s.var(name, Sort::Index);
  }
}

struct PairItp {
  bool unknown = false;
  unsigned reached = 0;
  Fml itp;
  LoopTrace trace;
};

PairItp interpolate_pair(TermStore& s, const SeparatedPair& pa, const SeparatedPair& pb,
                         IndexTheory theory, const InterpolateOptions& opts) {
  PairItp out;
  SeparatedPair A = instantiate(s, pa, 0, theory).pair;
  SeparatedPair B = instantiate(s, pb, 0, theory).pair;

  std::set<TermId> a_arrays = A.array_vars(s), b_arrays = B.array_vars(s);
  std::vector<TermId> commons;
  std::set_intersection(a_arrays.begin(), a_arrays.end(), b_arrays.begin(), b_arrays.end(),
                        std::back_inserter(commons));
  std::vector<std::pair<TermId, TermId>> array_pairs;
  for (std::size_t i = 0; i < commons.size(); ++i)
    for (std::size_t j = i + 1; j < commons.size(); ++j)
      array_pairs.emplace_back(commons[i], commons[j]);

  std::set<TermId> ivars = A.index_vars(s);
  for (TermId v : B.index_vars(s)) ivars.insert(v);
  out.trace.m = static_cast<unsigned>(commons.size());
  out.trace.n = static_cast<unsigned>(ivars.size());
  const unsigned m = out.trace.m;
  const unsigned bound = (m * (m - 1) / 2) * (out.trace.n + 1);
  out.trace.bound = bound;

  std::map<TermId, TermId> expansions;
  unsigned N = 0;
  std::size_t cursor = 0;
  Fml raw;
  while (true) {
    ColorCtx ctx;
    ctx.store = &s;
    ctx.a_vars = A.all_vars(s);
    ctx.b_vars = B.all_vars(s);
    std::set_intersection(ctx.a_vars.begin(), ctx.a_vars.end(), ctx.b_vars.begin(),
                          ctx.b_vars.end(), std::inserter(ctx.common, ctx.common.begin()));
    std::vector<std::pair<Fml, Color>> colored;
    for (auto& f : A.phi2) colored.emplace_back(f, Color::A);
    for (auto& f : B.phi2) colored.emplace_back(f, Color::B);
    GroundItpResult r = interpolate_ground(s, colored, theory, ctx);
    if (!r.sat) {
      raw = r.itp;
      break;
    }
    if (theory == IndexTheory::TO && N >= bound)
      throw internal_error("diff loop exceeded the termination bound on an unsat pair");
    if (theory == IndexTheory::IDL && N >= opts.idl_budget) {
      out.unknown = true;
      out.reached = N;
      return out;
    }
    if (array_pairs.empty())
      throw internal_error("diff loop has no common array pair to pick on an unsat pair");
    auto [c1, c2] = array_pairs[cursor % array_pairs.size()];
    ++cursor;
    // least level at which no single diff atom occurs in both sides
    auto shared_level = [&](unsigned l) {
      for (const DiffAtom& da : A.diffs)
        if (da.a == c1 && da.b == c2 && da.level == l &&
            B.has_diff_atom(c1, c2, l, da.idx))
          return true;
      return false;
    };
    unsigned level = 1;
    while (shared_level(level)) ++level;
    TermId k = fresh_k(s);
    expansions[k] =
        diff_chain_terms(s, c1, c2, level).diff_terms[level - 1];
    A.add_diff(s, c1, c2, level, k);
    B.add_diff(s, c1, c2, level, k);
    A = instantiate(s, A, N, theory).pair;
    B = instantiate(s, B, N, theory).pair;
    ++N;
    out.trace.picks.emplace_back(c1, c2);
    out.trace.iterations = N;
  }

  out.itp = simplify(unname_diffs(s, raw, expansions));
  return out;
}

}  // namespace

InterpolationOutcome ard_interpolate(TermStore& s, const Fml& a, const Fml& b,
                                     IndexTheory theory, const InterpolateOptions& opts) {
  InterpolationOutcome out;
  std::set<TermId> fa = free_symbols(s, a), fb = free_symbols(s, b), common;
  std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(),
                        std::inserter(common, common.begin()));

  DecideResult joint = decide(s, f_and({a, b}), theory, opts.full_dnf);
  if (joint.kind == DecideResult::Kind::Sat) {
    out.kind = InterpolationOutcome::Kind::Satisfiable;
    out.model = std::move(joint.model);
    return out;
  }

  std::vector<SeparatedPair> as = preprocess(s, a, opts.full_dnf);
  std::vector<SeparatedPair> bs = preprocess(s, b, opts.full_dnf);

  std::vector<Fml> disj;
  for (const SeparatedPair& pa : as) {
    std::vector<Fml> conj;
    for (const SeparatedPair& pb : bs) {
      try {
        PairItp r = interpolate_pair(s, pa, pb, theory, opts);
        if (r.unknown) {
          out.kind = InterpolationOutcome::Kind::Unknown;
          out.budget_reached = r.reached;
          return out;
        }
        out.traces.push_back(std::move(r.trace));
        conj.push_back(r.itp);
      } catch (const unknown_error&) {
        out.kind = InterpolationOutcome::Kind::Unknown;
        out.budget_reached = opts.idl_budget;
        return out;
      }
    }
    disj.push_back(f_and(std::move(conj)));
  }
  Fml itp = simplify(f_or(std::move(disj)));

  for (TermId v : free_symbols(s, itp))
    if (!common.count(v))
      throw internal_error("interpolant mentions a non-common symbol: " + s.var_name(v));
  out.kind = InterpolationOutcome::Kind::Interpolant;
  out.interpolant = itp;
  return out;
}

}  // namespace ard
