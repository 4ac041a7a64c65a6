#include "ard/flatten.hpp"

namespace ard {

namespace {

class Flattener {
 public:
  explicit Flattener(TermStore& s) : s_(s) {}

  // Returns an atomic term denoting t, abstracting through the cache.
  TermId atomize(TermId t) {
    if (s_.is_atomic(t)) return t;
    TermId shallow = shallow_app(t);
    auto it = cache_.find(shallow);
    if (it != cache_.end()) return it->second;
    TermId x = s_.fresh_var(s_.sort_of(t));
    res_.fresh.push_back(x);
    res_.defs.push_back(mk_eq(s_, x, shallow));
    cache_.emplace(shallow, x);
    return x;
  }

  // Rebuilds t with atomized arguments; result has complexity <= 1.
  TermId shallow_app(TermId t) {
    const TermData& d = s_[t];
    std::vector<TermId> args;
    args.reserve(d.args.size());
    for (TermId a : d.args) args.push_back(atomize(a));
    return s_.app(d.op, args);
  }

  Fml literal(const Literal& l) {
    if (l.kind != AtomKind::Eq) {
      // order atoms range over atomic index terms only
      return f_lit(l.kind == AtomKind::Le ? mk_le(s_, atomize(l.lhs), atomize(l.rhs))
                                          : mk_lt(s_, atomize(l.lhs), atomize(l.rhs)));
    }
    if (!l.pos) return f_lit(mk_eq(s_, atomize(l.lhs), atomize(l.rhs), false));
    bool la = s_.is_atomic(l.lhs), ra = s_.is_atomic(l.rhs);
    if (la && ra) return f_lit(l);
    if (la) return f_lit(mk_eq(s_, l.lhs, shallow_app(l.rhs)));
    if (ra) return f_lit(mk_eq(s_, shallow_app(l.lhs), l.rhs));
    return f_lit(mk_eq(s_, atomize(l.lhs), shallow_app(l.rhs)));
  }

  Fml walk(const Fml& f) {
    switch (f->kind) {
      case Formula::Kind::True:
      case Formula::Kind::False: return f;
      case Formula::Kind::Lit: return literal(f->lit);
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        std::vector<Fml> ks;
        for (auto& k : f->kids) ks.push_back(walk(k));
        return f->kind == Formula::Kind::And ? f_and(std::move(ks)) : f_or(std::move(ks));
      }
      case Formula::Kind::Not: throw internal_error("flatten: expects NNF input");
    }
    throw internal_error("flatten: bad formula");
  }

  FlattenResult take(Fml body) {
    res_.body = std::move(body);
    return std::move(res_);
  }

 private:
  TermStore& s_;
  FlattenResult res_;
  std::map<TermId, TermId> cache_;
};

}  // namespace

FlattenResult flatten(TermStore& s, const Fml& input) {
  Flattener fl(s);
  Fml body = fl.walk(nnf(input));
  return fl.take(std::move(body));
}

std::pair<std::vector<Literal>, std::vector<TermId>> flatten_literals(
    TermStore& s, const std::vector<Literal>& lits) {
  std::vector<Fml> fs;
  for (auto& l : lits) fs.push_back(f_lit(l));
  FlattenResult r = flatten(s, f_and(std::move(fs)));
  std::vector<Literal> out;
  for (auto& d : r.defs) out.push_back(d);
  const Fml& b = r.body;
  if (b->kind == Formula::Kind::Lit) {
    out.push_back(b->lit);
  } else if (b->kind == Formula::Kind::And) {
    for (auto& k : b->kids) {
      if (k->kind != Formula::Kind::Lit)
        throw internal_error("flatten_literals: non-literal conjunct");
      out.push_back(k->lit);
    }
  } else if (b->kind != Formula::Kind::True) {
    throw internal_error("flatten_literals: unexpected body shape");
  }
  return {std::move(out), std::move(r.fresh)};
}

bool is_flat(const TermStore& s, const Literal& l) {
  auto atomic = [&](TermId t) { return s.is_atomic(t); };
  if (l.kind != AtomKind::Eq) return atomic(l.lhs) && atomic(l.rhs);
  if (!l.pos) return atomic(l.lhs) && atomic(l.rhs);
  if (atomic(l.lhs) && atomic(l.rhs)) return true;
  auto flat_side = [&](TermId app, TermId other) {
    if (!atomic(other) || s.complexity(app) != 1) return false;
    for (TermId a : s[app].args)
      if (!atomic(a)) return false;
    return true;
  };
  return flat_side(l.rhs, l.lhs) || flat_side(l.lhs, l.rhs);
}

}  // namespace ard
