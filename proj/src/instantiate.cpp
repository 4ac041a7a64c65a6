#include "ard/instantiate.hpp"

#include "ard/printer.hpp"

namespace ard {

DiffChainTerms diff_chain_terms(TermStore& s, TermId a, TermId b, unsigned l) {
  DiffChainTerms out;
  TermId bk = b;
  for (unsigned k = 1; k <= l; ++k) {
    TermId dk = s.diff(a, bk);
    out.b_terms.push_back(bk);
    out.diff_terms.push_back(dk);
    bk = s.wr(bk, dk, s.rd(a, dk));
  }
  return out;
}

static TermId hole_var(TermStore& s) { return s.var("$h", Sort::Index); }

GroundAndTemplate diff_chain_clauses(TermStore& s, TermId a, TermId b,
                                     const std::vector<TermId>& ks) {
  if (ks.empty()) throw internal_error("diff_chain_clauses: empty chain");
  const std::size_t l = ks.size();
  GroundAndTemplate out;
  auto rd_eq = [&](TermId i, bool pos) { return f_lit(mk_eq(s, s.rd(a, i), s.rd(b, i), pos)); };
  for (std::size_t j = 0; j + 1 < l; ++j)
    out.ground.push_back(f_lit(mk_le(s, ks[j + 1], ks[j])));
  out.ground.push_back(f_lit(mk_le(s, s.zero(), ks[l - 1])));
  for (std::size_t j = 0; j + 1 < l; ++j)
    out.ground.push_back(f_or({f_lit(mk_le(s, ks[j], ks[j + 1])), rd_eq(ks[j], false)}));
  for (std::size_t j = 0; j + 1 < l; ++j)
    out.ground.push_back(
        f_or({f_lit(mk_eq(s, ks[j], ks[j + 1], false)), f_lit(mk_eq(s, ks[j], s.zero()))}));
  for (std::size_t j = 0; j < l; ++j)
    out.ground.push_back(f_or({rd_eq(ks[j], false), f_lit(mk_eq(s, ks[j], s.zero()))}));
  TermId h = hole_var(s);
  std::vector<Fml> body{f_lit(mk_le(s, h, ks[l - 1])), rd_eq(h, true)};
  for (std::size_t j = 0; j + 1 < l; ++j) body.push_back(f_lit(mk_eq(s, h, ks[j])));
  out.tmpl = {"diff-chain " + print_term(s, a) + "," + print_term(s, b), h, f_or(std::move(body))};
  return out;
}

GroundAndTemplate write_clauses(TermStore& s, TermId a, TermId b, TermId i, TermId e) {
  GroundAndTemplate out;
  out.ground.push_back(
      f_or({f_lit(mk_lt(s, i, s.zero())), f_lit(mk_eq(s, s.rd(a, i), e))}));
  TermId h = hole_var(s);
  Fml body = f_or({f_lit(mk_eq(s, h, i)), f_lit(mk_eq(s, s.rd(a, h), s.rd(b, h)))});
  out.tmpl = {"write " + print_term(s, a) + "=wr(" + print_term(s, b) + ",...)", h, body};
  return out;
}

std::optional<Fml> instantiate_template_at(TermStore& s, const Template& t, TermId at) {
  Fml inst = substitute(s, t.body, {{t.hole, at}});
  // drop instances made trivially true by reflexivity of a disjunct
  auto trivially_true = [](const Fml& f) {
    if (f->kind == Formula::Kind::Lit) return literally_true(f->lit);
    if (f->kind == Formula::Kind::Or) {
      for (auto& k : f->kids)
        if (k->kind == Formula::Kind::Lit && literally_true(k->lit)) return true;
    }
    return f->kind == Formula::Kind::True;
  };
  if (trivially_true(inst)) return std::nullopt;
  return inst;
}

std::vector<TermId> instance_terms(TermStore& s, const SeparatedPair& p, unsigned N,
                                   IndexTheory theory) {
  std::vector<TermId> out;
  std::set<TermId> ivars = p.index_vars(s);
  out.push_back(s.zero());
  out.insert(out.end(), ivars.begin(), ivars.end());
  if (theory == IndexTheory::IDL) {
    std::vector<TermId> bases = out;
    for (TermId base : bases) {
      TermId up = base, down = base;
      for (unsigned n = 1; n <= N; ++n) {
        up = s.succ(up);
        down = s.pred(down);
        out.push_back(up);
        out.push_back(down);
      }
    }
  }
  return out;
}

InstantiationResult instantiate(TermStore& s, const SeparatedPair& p, unsigned N,
                                IndexTheory theory) {
  InstantiationResult res;
  res.pair = p;
  std::vector<TermId> terms = instance_terms(s, p, N, theory);

  auto add = [&](const Fml& f, const std::string& origin) {
    if (res.pair.add_phi2(f)) res.added.push_back({f, origin});
  };

  std::vector<Template> templates;
  for (const WriteAtom& w : p.writes) {
    GroundAndTemplate g = write_clauses(s, w.lhs, w.arr, w.idx, w.elem);
    for (auto& f : g.ground) add(f, g.tmpl.origin + " ground");
    templates.push_back(std::move(g.tmpl));
  }
  for (auto [a, b] : p.diff_pairs()) {
    std::vector<TermId> ks = res.pair.chain(a, b);
    GroundAndTemplate g = diff_chain_clauses(s, a, b, ks);
    for (auto& f : g.ground) add(f, g.tmpl.origin + " ground");
    templates.push_back(std::move(g.tmpl));
    // functionality: further names at an already-named level equal the name
    for (const DiffAtom& d : p.diffs)
      if (d.a == a && d.b == b && d.idx != ks[d.level - 1])
        add(f_lit(mk_eq(s, d.idx, ks[d.level - 1])), g.tmpl.origin + " functionality");
  }

  TermId h = hole_var(s);
  templates.push_back({"eps-axiom", h, f_lit(mk_eq(s, s.rd(s.epsilon(), h), s.bot()))});
  for (TermId a : p.array_vars(s))
    templates.push_back({"neg-guard " + print_term(s, a), h,
                         f_or({f_lit(mk_le(s, s.zero(), h)),
                               f_lit(mk_eq(s, s.rd(a, h), s.bot()))})});

  for (const Template& t : templates)
    for (TermId at : terms)
      if (auto inst = instantiate_template_at(s, t, at)) add(*inst, t.origin);
  return res;
}

Fml pair_formula(TermStore& s, const SeparatedPair& p) {
  std::vector<Fml> parts;
  for (const WriteAtom& w : p.writes)
    parts.push_back(f_lit(mk_eq(s, w.lhs, s.wr(w.arr, w.idx, w.elem))));
  for (auto [a, b] : p.diff_pairs()) {
    std::vector<TermId> ks = p.chain(a, b);
    DiffChainTerms ch = diff_chain_terms(s, a, b, static_cast<unsigned>(ks.size()));
    for (std::size_t j = 0; j < ks.size(); ++j)
      parts.push_back(f_lit(mk_eq(s, ks[j], ch.diff_terms[j])));
    for (const DiffAtom& d : p.diffs)
      if (d.a == a && d.b == b && d.idx != ks[d.level - 1])
        parts.push_back(f_lit(mk_eq(s, d.idx, ch.diff_terms[d.level - 1])));
  }
  for (auto& f : p.phi2) parts.push_back(f);
  return f_and(std::move(parts));
}

}  // namespace ard
