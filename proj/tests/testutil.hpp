#pragma once

#include <random>

#include "ard/engine.hpp"
#include "ard/interpolate.hpp"
#include "ard/printer.hpp"

namespace tu {

using namespace ard;

// Common scratch setup: a store with a handful of declared variables.
struct Fixture {
  TermStore s;
  TermId a, b, c, d;     // arrays
  TermId i, j, k, l;     // indexes
  TermId e, f, g;        // elements

  Fixture() {
    a = s.var("a", Sort::Array);
    b = s.var("b", Sort::Array);
    c = s.var("c", Sort::Array);
    d = s.var("d", Sort::Array);
    i = s.var("i", Sort::Index);
    j = s.var("j", Sort::Index);
    k = s.var("k", Sort::Index);
    l = s.var("l", Sort::Index);
    e = s.var("e", Sort::Elem);
    f = s.var("f", Sort::Elem);
    g = s.var("g", Sort::Elem);
  }

  Fml eq(TermId x, TermId y) { return f_lit(mk_eq(s, x, y)); }
  Fml ne(TermId x, TermId y) { return f_lit(mk_eq(s, x, y, false)); }
  Fml le(TermId x, TermId y) { return f_lit(mk_le(s, x, y)); }
  Fml lt(TermId x, TermId y) { return f_lit(mk_lt(s, x, y)); }
};

inline bool contains_formula(const std::vector<Fml>& fs, const Fml& f) {
  for (auto& g : fs)
    if (equal(f, g)) return true;
  return false;
}

// Random flat literal sets over a small vocabulary, for differential tests.
struct RandomFlatGen {
  TermStore& s;
  std::mt19937 rng;
  std::vector<TermId> arrays, ivars, evars;

  RandomFlatGen(TermStore& s, unsigned seed, unsigned n_arrays, unsigned n_ivars,
                unsigned n_evars)
      : s(s), rng(seed) {
    for (unsigned x = 0; x < n_arrays; ++x)
      arrays.push_back(s.var("ra" + std::to_string(x), Sort::Array));
    for (unsigned x = 0; x < n_ivars; ++x)
      ivars.push_back(s.var("ri" + std::to_string(x), Sort::Index));
    for (unsigned x = 0; x < n_evars; ++x)
      evars.push_back(s.var("re" + std::to_string(x), Sort::Elem));
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[rng() % v.size()];
  }

  TermId index_atom() { return rng() % 5 == 0 ? s.zero() : pick(ivars); }
  TermId elem_atom() { return rng() % 5 == 0 ? s.bot() : pick(evars); }
  TermId array_atom() { return rng() % 8 == 0 ? s.epsilon() : pick(arrays); }

  Fml literal() {
    switch (rng() % 8) {
      case 0: return f_lit(mk_le(s, index_atom(), index_atom()));
      case 1: return f_lit(mk_lt(s, index_atom(), index_atom()));
      case 2: return f_lit(mk_eq(s, index_atom(), index_atom(), rng() % 2 == 0));
      case 3: return f_lit(mk_eq(s, elem_atom(), elem_atom(), rng() % 2 == 0));
      case 4:
        return f_lit(mk_eq(s, s.rd(array_atom(), index_atom()), elem_atom(), rng() % 2 == 0));
      case 5:
        return f_lit(mk_eq(s, s.rd(array_atom(), index_atom()),
                           s.rd(array_atom(), index_atom()), rng() % 2 == 0));
      case 6: return f_lit(mk_eq(s, pick(ivars), s.diff(array_atom(), array_atom())));
      default:
        return f_lit(
            mk_eq(s, pick(arrays), s.wr(array_atom(), index_atom(), elem_atom())));
    }
  }

  Fml conjunction(unsigned n) {
    std::vector<Fml> fs;
    for (unsigned x = 0; x < n; ++x) fs.push_back(literal());
    return f_and(std::move(fs));
  }
};

}  // namespace tu
