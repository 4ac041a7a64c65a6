#include "ard/preprocess.hpp"

#include <algorithm>

namespace ard {

void SeparatedPair::add_write(const WriteAtom& w) {
  if (std::find(writes.begin(), writes.end(), w) == writes.end()) writes.push_back(w);
}

void SeparatedPair::add_diff(TermStore& s, TermId a, TermId b, unsigned level, TermId idx) {
  if (level == 0) throw internal_error("add_diff: levels start at 1");
  for (unsigned l = 1; l < level; ++l)
    if (!has_diff(a, b, l)) diffs.push_back({a, b, l, s.fresh_var(Sort::Index)});
  DiffAtom atom{a, b, level, idx};
  if (std::find(diffs.begin(), diffs.end(), atom) == diffs.end()) diffs.push_back(atom);
}

bool SeparatedPair::add_phi2(const Fml& f) {
  for (auto& g : phi2)
    if (equal(f, g)) return false;
  phi2.push_back(f);
  return true;
}

bool SeparatedPair::has_diff(TermId a, TermId b, unsigned level) const {
  for (auto& d : diffs)
    if (d.a == a && d.b == b && d.level == level) return true;
  return false;
}

bool SeparatedPair::has_diff_atom(TermId a, TermId b, unsigned level, TermId idx) const {
  for (auto& d : diffs)
    if (d.a == a && d.b == b && d.level == level && d.idx == idx) return true;
  return false;
}

unsigned SeparatedPair::max_level(TermId a, TermId b) const {
  unsigned m = 0;
  for (auto& d : diffs)
    if (d.a == a && d.b == b) m = std::max(m, d.level);
  return m;
}

std::vector<TermId> SeparatedPair::chain(TermId a, TermId b) const {
  std::vector<TermId> ks(max_level(a, b), no_term);
  for (auto& d : diffs)
    if (d.a == a && d.b == b && ks[d.level - 1] == no_term) ks[d.level - 1] = d.idx;
  for (TermId k : ks)
    if (k == no_term) throw internal_error("diff chain with a gap");
  return ks;
}

std::vector<std::pair<TermId, TermId>> SeparatedPair::diff_pairs() const {
  std::vector<std::pair<TermId, TermId>> out;
  for (auto& d : diffs) {
    auto p = std::make_pair(d.a, d.b);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

std::set<TermId> SeparatedPair::index_vars(const TermStore& s) const {
  std::set<TermId> vars = all_vars(s), out;
  for (TermId v : vars)
    if (s.sort_of(v) == Sort::Index) out.insert(v);
  return out;
}

std::set<TermId> SeparatedPair::array_vars(const TermStore& s) const {
  std::set<TermId> vars = all_vars(s), out;
  for (TermId v : vars)
    if (s.sort_of(v) == Sort::Array) out.insert(v);
  return out;
}

std::set<TermId> SeparatedPair::all_vars(const TermStore& s) const {
  std::set<TermId> out;
  for (auto& w : writes) {
    s.collect_vars(w.lhs, out);
    s.collect_vars(w.arr, out);
    s.collect_vars(w.idx, out);
    s.collect_vars(w.elem, out);
  }
  for (auto& d : diffs) {
    s.collect_vars(d.a, out);
    s.collect_vars(d.b, out);
    s.collect_vars(d.idx, out);
  }
  for (auto& f : phi2) collect_vars(s, f, out);
  return out;
}

Fml rewrite_array_equalities(TermStore& s, const Fml& f, std::vector<TermId>* fresh) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False: return f;
    case Formula::Kind::Lit: {
      const Literal& l = f->lit;
      if (l.kind != AtomKind::Eq || s.sort_of(l.lhs) != Sort::Array) return f;
      if (!s.is_atomic(l.lhs) || !s.is_atomic(l.rhs)) return f;  // wr-definitions stay
      TermId a = l.lhs, b = l.rhs;
      if (l.pos) {
        return f_and({f_lit(mk_eq(s, s.diff(a, b), s.zero())),
                      f_lit(mk_eq(s, s.rd(a, s.zero()), s.rd(b, s.zero())))});
      }
      TermId k = s.fresh_var(Sort::Index);
      if (fresh) fresh->push_back(k);
      return f_and({f_lit(mk_eq(s, k, s.diff(a, b))),
                    f_or({f_lit(mk_lt(s, s.zero(), k)),
                          f_lit(mk_eq(s, s.rd(a, s.zero()), s.rd(b, s.zero()), false))})});
    }
    case Formula::Kind::Not: return f_not(rewrite_array_equalities(s, f->kids[0], fresh));
    default: {
      std::vector<Fml> ks;
      for (auto& k : f->kids) ks.push_back(rewrite_array_equalities(s, k, fresh));
      return f->kind == Formula::Kind::And ? f_and(std::move(ks)) : f_or(std::move(ks));
    }
  }
}

namespace {

void split_rec(std::vector<Fml> pending, std::vector<Literal>& acc,
               std::vector<std::vector<Literal>>& out) {
  while (!pending.empty()) {
    Fml f = pending.back();
    pending.pop_back();
    switch (f->kind) {
      case Formula::Kind::True: break;
      case Formula::Kind::False: return;  // dead branch
      case Formula::Kind::Lit:
        if (std::find(acc.begin(), acc.end(), f->lit) == acc.end()) acc.push_back(f->lit);
        break;
      case Formula::Kind::And:
        for (auto& k : f->kids) pending.push_back(k);
        break;
      case Formula::Kind::Or: {
        for (auto& k : f->kids) {
          auto branch_pending = pending;
          branch_pending.push_back(k);
          auto branch_acc = acc;
          split_rec(std::move(branch_pending), branch_acc, out);
        }
        return;
      }
      case Formula::Kind::Not: throw internal_error("split_disjunctions: expects NNF");
    }
  }
  out.push_back(acc);
}

Fml to_dnf(const Fml& f) {
  switch (f->kind) {
    case Formula::Kind::Or: {
      std::vector<Fml> ks;
      for (auto& k : f->kids) ks.push_back(to_dnf(k));
      return f_or(std::move(ks));
    }
    case Formula::Kind::And: {
      // distribute pairwise over the first Or child
      std::vector<Fml> ks;
      for (auto& k : f->kids) ks.push_back(to_dnf(k));
      for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i]->kind != Formula::Kind::Or) continue;
        std::vector<Fml> rest;
        for (std::size_t j = 0; j < ks.size(); ++j)
          if (j != i) rest.push_back(ks[j]);
        std::vector<Fml> branches;
        for (auto& d : ks[i]->kids) {
          auto conj = rest;
          conj.push_back(d);
          branches.push_back(to_dnf(f_and(std::move(conj))));
        }
        return f_or(std::move(branches));
      }
      return f_and(std::move(ks));
    }
    default: return f;
  }
}

}  // namespace

std::vector<std::vector<Literal>> split_disjunctions(const Fml& f, bool full_dnf) {
  std::vector<std::vector<Literal>> out;
  if (full_dnf) {
    Fml d = to_dnf(f);
    std::vector<Fml> disjuncts = d->kind == Formula::Kind::Or ? d->kids : std::vector<Fml>{d};
    for (auto& dj : disjuncts) {
      std::vector<Literal> acc;
      split_rec({dj}, acc, out);
    }
    return out;
  }
  std::vector<Literal> acc;
  split_rec({f}, acc, out);
  return out;
}

SeparatedPair to_separated_pair(TermStore& s, const std::vector<Literal>& conj) {
  SeparatedPair p;
  for (const Literal& l : conj) {
    if (l.kind != AtomKind::Eq) {
      p.add_phi2(f_lit(l));
      continue;
    }
    const bool la = s.is_atomic(l.lhs), ra = s.is_atomic(l.rhs);
    if (l.pos && la != ra) {
      TermId atom = la ? l.lhs : l.rhs;
      TermId app = la ? l.rhs : l.lhs;
      switch (s[app].op) {
        case Op::Wr:
          p.add_write({atom, s[app].args[0], s[app].args[1], s[app].args[2]});
          continue;
        case Op::Diff:
          p.add_diff(s, s[app].args[0], s[app].args[1], 1, atom);
          continue;
        case Op::Rd:
        case Op::Succ:
        case Op::Pred: p.add_phi2(f_lit(l)); continue;
        default: throw internal_error("to_separated_pair: unexpected application");
      }
    }
    if (s.sort_of(l.lhs) == Sort::Array && la && ra)
      throw internal_error("to_separated_pair: array equality survived rewriting: flattening bug");
    // remaining shapes: index/elem atoms, rd(a,i)=rd(b,j) and their negations
    p.add_phi2(f_lit(l));
  }
  return p;
}

std::vector<SeparatedPair> preprocess(TermStore& s, const Fml& input, bool full_dnf) {
  FlattenResult fl = flatten(s, input);
  std::vector<Fml> parts;
  for (auto& d : fl.defs) parts.push_back(f_lit(d));
  parts.push_back(fl.body);
  Fml rewritten = rewrite_array_equalities(s, f_and(std::move(parts)));
  std::vector<SeparatedPair> out;
  for (auto& conj : split_disjunctions(nnf(rewritten), full_dnf))
    out.push_back(to_separated_pair(s, conj));
  return out;
}

}  // namespace ard
