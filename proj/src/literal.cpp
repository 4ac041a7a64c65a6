#include "ard/literal.hpp"

namespace ard {

Literal mk_eq(const TermStore& s, TermId a, TermId b, bool pos) {
  if (s.sort_of(a) != s.sort_of(b))
    throw sort_error(std::string("equality between sorts ") + to_string(s.sort_of(a)) + " and " +
                     to_string(s.sort_of(b)));
  bool a_var = s.is_var(a), b_var = s.is_var(b);
  if ((b_var && !a_var) || (a_var == b_var && b < a)) std::swap(a, b);
  return {AtomKind::Eq, pos, a, b};
}

static void require_index(const TermStore& s, TermId t) {
  if (s.sort_of(t) != Sort::Index)
    throw sort_error(std::string("order atom over sort ") + to_string(s.sort_of(t)));
}

Literal mk_le(const TermStore& s, TermId a, TermId b) {
  require_index(s, a);
  require_index(s, b);
  return {AtomKind::Le, true, a, b};
}

Literal mk_lt(const TermStore& s, TermId a, TermId b) {
  require_index(s, a);
  require_index(s, b);
  return {AtomKind::Lt, true, a, b};
}

Literal negated(const Literal& l) {
  switch (l.kind) {
    case AtomKind::Eq: return {AtomKind::Eq, !l.pos, l.lhs, l.rhs};
    case AtomKind::Le: return {AtomKind::Lt, true, l.rhs, l.lhs};
    case AtomKind::Lt: return {AtomKind::Le, true, l.rhs, l.lhs};
  }
  throw internal_error("negated: bad literal");
}

bool literally_true(const Literal& l) {
  if (l.lhs != l.rhs) return false;
  return (l.kind == AtomKind::Eq && l.pos) || l.kind == AtomKind::Le;
}

bool literally_false(const Literal& l) {
  if (l.lhs != l.rhs) return false;
  return (l.kind == AtomKind::Eq && !l.pos) || l.kind == AtomKind::Lt;
}

}  // namespace ard
