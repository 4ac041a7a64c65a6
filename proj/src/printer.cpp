#include "ard/printer.hpp"

#include <map>

namespace ard {

namespace {

void print_term_rec(const TermStore& s, TermId t, const std::map<TermId, std::string>& names,
                    std::string& out) {
  auto it = names.find(t);
  if (it != names.end()) {
    out += it->second;
    return;
  }
  const TermData& d = s[t];
  switch (d.op) {
    case Op::Var: out += s.var_name(t); return;
    case Op::Zero: out += '0'; return;
    case Op::Epsilon: out += "eps"; return;
    case Op::Bot: out += "bot"; return;
    case Op::Rd: out += "(rd "; break;
    case Op::Wr: out += "(wr "; break;
    case Op::Diff: out += "(diff "; break;
    case Op::Succ: out += "(S "; break;
    case Op::Pred: out += "(P "; break;
  }
  for (std::size_t i = 0; i < d.args.size(); ++i) {
    if (i) out += ' ';
    print_term_rec(s, d.args[i], names, out);
  }
  out += ')';
}

void print_literal_rec(const TermStore& s, const Literal& l,
                       const std::map<TermId, std::string>& names, std::string& out) {
  const char* rel = l.kind == AtomKind::Eq ? "=" : l.kind == AtomKind::Le ? "<=" : "<";
  if (l.kind == AtomKind::Eq && !l.pos) out += "(not ";
  out += '(';
  out += rel;
  out += ' ';
  print_term_rec(s, l.lhs, names, out);
  out += ' ';
  print_term_rec(s, l.rhs, names, out);
  out += ')';
  if (l.kind == AtomKind::Eq && !l.pos) out += ')';
}

void print_formula_rec(const TermStore& s, const Fml& f,
                       const std::map<TermId, std::string>& names, std::string& out) {
  switch (f->kind) {
    case Formula::Kind::True: out += "true"; return;
    case Formula::Kind::False: out += "false"; return;
    case Formula::Kind::Lit: print_literal_rec(s, f->lit, names, out); return;
    case Formula::Kind::Not:
      out += "(not ";
      print_formula_rec(s, f->kids[0], names, out);
      out += ')';
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      out += f->kind == Formula::Kind::And ? "(and" : "(or";
      for (auto& k : f->kids) {
        out += ' ';
        print_formula_rec(s, k, names, out);
      }
      out += ')';
      return;
  }
}

void count_subterms(const TermStore& s, TermId t, std::map<TermId, unsigned>& counts) {
  if (s.complexity(t) < 2) return;
  if (++counts[t] > 1) return;  // children already counted on first visit
  for (TermId a : s[t].args) count_subterms(s, a, counts);
}

}  // namespace

std::string print_term(const TermStore& s, TermId t) {
  std::string out;
  print_term_rec(s, t, {}, out);
  return out;
}

std::string print_literal(const TermStore& s, const Literal& l) {
  std::string out;
  print_literal_rec(s, l, {}, out);
  return out;
}

std::string print_formula(const TermStore& s, const Fml& f, const PrintOptions& opts) {
  if (!opts.let_sharing) {
    std::string out;
    print_formula_rec(s, f, {}, out);
    return out;
  }
  // collect repeated compound subterms, innermost first
  std::map<TermId, unsigned> counts;
  struct Walk {
    const TermStore& s;
    std::map<TermId, unsigned>& counts;
    void operator()(const Fml& f) {
      if (f->kind == Formula::Kind::Lit) {
        count_subterms(s, f->lit.lhs, counts);
        count_subterms(s, f->lit.rhs, counts);
        return;
      }
      for (auto& k : f->kids) (*this)(k);
    }
  } walk{s, counts};
  walk(f);
  // one let level per binding: definitions may reference earlier names
  std::map<TermId, std::string> names;
  std::vector<std::pair<std::string, std::string>> binds;
  for (auto& [t, c] : counts) {  // TermId order is creation order: subterms first
    if (c < 2) continue;
    std::string def;
    print_term_rec(s, t, names, def);
    std::string name = "?x" + std::to_string(binds.size() + 1);
    names[t] = name;
    binds.emplace_back(std::move(name), std::move(def));
  }
  std::string body;
  print_formula_rec(s, f, names, body);
  for (auto it = binds.rbegin(); it != binds.rend(); ++it)
    body = "(let ((" + it->first + ' ' + it->second + ")) " + body + ")";
  return body;
}

}  // namespace ard
