#include "ard/formula.hpp"

#include <algorithm>

namespace ard {

namespace {

Fml make(Formula::Kind k, Literal lit = {}, std::vector<Fml> kids = {}) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lit = lit;
  f->kids = std::move(kids);
  return f;
}

const Fml g_true = make(Formula::Kind::True);
const Fml g_false = make(Formula::Kind::False);

Fml junction(Formula::Kind k, std::vector<Fml> kids) {
  const bool is_and = k == Formula::Kind::And;
  const Fml& unit = is_and ? g_true : g_false;
  const Fml& zero = is_and ? g_false : g_true;
  std::vector<Fml> out;
  for (auto& kid : kids) {
    if (!kid) throw internal_error("junction: null child");
    if (kid->kind == unit->kind) continue;
    if (kid->kind == zero->kind) return zero;
    if (kid->kind == k) {
      for (auto& g : kid->kids) out.push_back(g);
    } else {
      out.push_back(kid);
    }
  }
  // structural dedup, order-preserving
  std::vector<Fml> dedup;
  for (auto& f : out) {
    bool seen = false;
    for (auto& g : dedup)
      if (equal(f, g)) {
        seen = true;
        break;
      }
    if (!seen) dedup.push_back(f);
  }
  if (dedup.empty()) return unit;
  if (dedup.size() == 1) return dedup[0];
  return make(k, {}, std::move(dedup));
}

}  // namespace

Fml f_true() { return g_true; }
Fml f_false() { return g_false; }

Fml f_lit(const Literal& l) { return make(Formula::Kind::Lit, l); }

Fml f_and(std::vector<Fml> kids) { return junction(Formula::Kind::And, std::move(kids)); }
Fml f_or(std::vector<Fml> kids) { return junction(Formula::Kind::Or, std::move(kids)); }

Fml f_not(Fml f) {
  switch (f->kind) {
    case Formula::Kind::True: return g_false;
    case Formula::Kind::False: return g_true;
    case Formula::Kind::Lit: return f_lit(negated(f->lit));
    case Formula::Kind::Not: return f->kids[0];
    default: return make(Formula::Kind::Not, {}, {std::move(f)});
  }
}

Fml f_implies(const Fml& a, const Fml& b) { return f_or({f_not(a), b}); }

bool equal(const Fml& a, const Fml& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  if (a->kind == Formula::Kind::Lit) return a->lit == b->lit;
  if (a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!equal(a->kids[i], b->kids[i])) return false;
  return true;
}

std::size_t fml_hash(const Fml& f) {
  std::size_t h = static_cast<std::size_t>(f->kind) * 0x9e3779b97f4a7c15ull;
  if (f->kind == Formula::Kind::Lit) {
    h ^= static_cast<std::size_t>(f->lit.kind) + 0x9e37u;
    h = h * 31 + f->lit.lhs;
    h = h * 31 + f->lit.rhs;
    h = h * 31 + (f->lit.pos ? 1 : 2);
  }
  for (auto& k : f->kids) h = h * 1000003 + fml_hash(k);
  return h;
}

Fml nnf(const Fml& f) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Lit: return f;
    case Formula::Kind::And: {
      std::vector<Fml> ks;
      for (auto& k : f->kids) ks.push_back(nnf(k));
      return f_and(std::move(ks));
    }
    case Formula::Kind::Or: {
      std::vector<Fml> ks;
      for (auto& k : f->kids) ks.push_back(nnf(k));
      return f_or(std::move(ks));
    }
    case Formula::Kind::Not: {
      const Fml& g = f->kids[0];
      switch (g->kind) {
        case Formula::Kind::True: return g_false;
        case Formula::Kind::False: return g_true;
        case Formula::Kind::Lit: return f_lit(negated(g->lit));
        case Formula::Kind::Not: return nnf(g->kids[0]);
        case Formula::Kind::And: {
          std::vector<Fml> ks;
          for (auto& k : g->kids) ks.push_back(nnf(f_not(k)));
          return f_or(std::move(ks));
        }
        case Formula::Kind::Or: {
          std::vector<Fml> ks;
          for (auto& k : g->kids) ks.push_back(nnf(f_not(k)));
          return f_and(std::move(ks));
        }
      }
    }
  }
  throw internal_error("nnf: bad formula");
}

Fml substitute(TermStore& s, const Fml& f, const std::map<TermId, TermId>& sub) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False: return f;
    case Formula::Kind::Lit: {
      Literal l = f->lit;
      TermId a = s.substitute(l.lhs, sub), b = s.substitute(l.rhs, sub);
      if (a == l.lhs && b == l.rhs) return f;
      switch (l.kind) {
        case AtomKind::Eq: return f_lit(mk_eq(s, a, b, l.pos));
        case AtomKind::Le: return f_lit(mk_le(s, a, b));
        case AtomKind::Lt: return f_lit(mk_lt(s, a, b));
      }
      throw internal_error("substitute: bad literal");
    }
    default: {
      std::vector<Fml> ks;
      for (auto& k : f->kids) ks.push_back(substitute(s, k, sub));
      if (f->kind == Formula::Kind::And) return f_and(std::move(ks));
      if (f->kind == Formula::Kind::Or) return f_or(std::move(ks));
      return f_not(ks[0]);
    }
  }
}

void collect_vars(const TermStore& s, const Fml& f, std::set<TermId>& out) {
  if (f->kind == Formula::Kind::Lit) {
    s.collect_vars(f->lit.lhs, out);
    s.collect_vars(f->lit.rhs, out);
    return;
  }
  for (auto& k : f->kids) collect_vars(s, k, out);
}

std::set<TermId> free_symbols(const TermStore& s, const Fml& f) {
  std::set<TermId> out;
  collect_vars(s, f, out);
  return out;
}

std::vector<std::vector<Literal>> clausify(const Fml& f) {
  switch (f->kind) {
    case Formula::Kind::True: return {};
    case Formula::Kind::False: return {{}};
    case Formula::Kind::Lit: return {{f->lit}};
    case Formula::Kind::And: {
      std::vector<std::vector<Literal>> out;
      for (auto& k : f->kids) {
        auto cs = clausify(k);
        out.insert(out.end(), cs.begin(), cs.end());
      }
      return out;
    }
    case Formula::Kind::Or: {
      std::vector<std::vector<Literal>> acc{{}};
      for (auto& k : f->kids) {
        auto cs = clausify(k);
        std::vector<std::vector<Literal>> next;
        for (auto& base : acc)
          for (auto& c : cs) {
            auto merged = base;
            merged.insert(merged.end(), c.begin(), c.end());
            next.push_back(std::move(merged));
          }
        acc = std::move(next);
      }
      return acc;
    }
    case Formula::Kind::Not: throw internal_error("clausify: expects NNF input");
  }
  throw internal_error("clausify: bad formula");
}

Fml simplify(const Fml& f) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False: return f;
    case Formula::Kind::Lit:
      if (literally_true(f->lit)) return g_true;
      if (literally_false(f->lit)) return g_false;
      return f;
    case Formula::Kind::Not: return f_not(simplify(f->kids[0]));
    default: {
      std::vector<Fml> ks;
      for (auto& k : f->kids) ks.push_back(simplify(k));
      return f->kind == Formula::Kind::And ? f_and(std::move(ks)) : f_or(std::move(ks));
    }
  }
}

}  // namespace ard
