#pragma once

#include "ard/flatten.hpp"
#include "ard/problem.hpp"

namespace ard {

struct WriteAtom {
  TermId lhs, arr, idx, elem;  // lhs = wr(arr, idx, elem)
  auto operator<=>(const WriteAtom&) const = default;
};

struct DiffAtom {
  TermId a, b;     // oriented array pair, as written
  unsigned level;  // k of diff_k(a,b) = idx, k >= 1
  TermId idx;
  auto operator<=>(const DiffAtom&) const = default;
};

// The (Phi1, Phi2) decomposition: array-definitional atoms versus ground
// index/element facts. Chain-prefix closure over diff atoms is maintained by
// add_diff, padding gaps with fresh index names.
struct SeparatedPair {
  std::vector<WriteAtom> writes;
  std::vector<DiffAtom> diffs;
  std::vector<Fml> phi2;

  void add_write(const WriteAtom& w);
  void add_diff(TermStore& s, TermId a, TermId b, unsigned level, TermId idx);
  bool add_phi2(const Fml& f);  // true when newly added

  bool has_diff(TermId a, TermId b, unsigned level) const;
  bool has_diff_atom(TermId a, TermId b, unsigned level, TermId idx) const;
  unsigned max_level(TermId a, TermId b) const;
  // Diff chain names for the ordered pair (a,b), one slot per level, taking
  // the first atom at each level.
  std::vector<TermId> chain(TermId a, TermId b) const;
  std::vector<std::pair<TermId, TermId>> diff_pairs() const;

  std::set<TermId> index_vars(const TermStore& s) const;
  std::set<TermId> array_vars(const TermStore& s) const;
  std::set<TermId> all_vars(const TermStore& s) const;
};

// Replaces atomic array equalities: a = b by the diff/rd pair, a != b by a
// fresh-diff atom plus a disjunction. Other formulas pass through.
Fml rewrite_array_equalities(TermStore& s, const Fml& f, std::vector<TermId>* fresh = nullptr);

// NNF input to a list of literal conjunctions whose disjunction is equivalent.
// The default performs a recursive case split; full_dnf distributes globally.
std::vector<std::vector<Literal>> split_disjunctions(const Fml& f, bool full_dnf = false);

// Classifies flat literals (post array-equality rewriting) into a pair.
SeparatedPair to_separated_pair(TermStore& s, const std::vector<Literal>& conj);

// Whole front half of the pipeline: flatten, rewrite array equalities, split,
// separate. Each returned pair is one disjunct.
std::vector<SeparatedPair> preprocess(TermStore& s, const Fml& input, bool full_dnf = false);

}  // namespace ard
