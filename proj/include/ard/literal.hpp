#pragma once

#include <compare>

#include "ard/term.hpp"

namespace ard {

// Atom kinds over interned terms. Lt is kept as a first-class literal: at the
// logic level i<j abbreviates i<=j /\ i!=j, while the order graph encodes it
// directly as a weight -1 edge.
enum class AtomKind : std::uint8_t { Eq, Le, Lt };

struct Literal {
  AtomKind kind = AtomKind::Eq;
  bool pos = true;  // Le/Lt are always stored positive; negation flips the kind
  TermId lhs = no_term;
  TermId rhs = no_term;

  auto operator<=>(const Literal&) const = default;
};

// Canonicalizing constructors: equalities are oriented variable-on-the-left
// (then smaller id first); order atoms keep their direction.
Literal mk_eq(const TermStore& s, TermId a, TermId b, bool pos = true);
Literal mk_le(const TermStore& s, TermId a, TermId b);
Literal mk_lt(const TermStore& s, TermId a, TermId b);

Literal negated(const Literal& l);

// True by reflexivity (t=t, t<=t); used when dropping tautological instances.
bool literally_true(const Literal& l);
// False by irreflexivity (t!=t, t<t).
bool literally_false(const Literal& l);

}  // namespace ard
