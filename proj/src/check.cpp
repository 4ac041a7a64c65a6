#include "ard/engine.hpp"
#include "ard/oracle.hpp"

namespace ard {

namespace {

bool brute_feasible(const TermStore& s, const Fml& f, const OracleBounds& b) {
  std::set<TermId> vars = free_symbols(s, f);
  unsigned arrays = 0;
  for (TermId v : vars)
    if (s.sort_of(v) == Sort::Array) ++arrays;
  return b.max_chain <= 5 && b.max_elems <= 7 && arrays <= 3 && arrays * b.max_chain <= 12;
}

}  // namespace

CheckReport check_interpolant(TermStore& s, const Fml& a, const Fml& b, const Fml& itp,
                              const std::set<TermId>& common, IndexTheory theory,
                              bool try_brute) {
  CheckReport rep;
  rep.symbols_ok = true;
  for (TermId v : free_symbols(s, itp))
    if (!common.count(v)) {
      rep.symbols_ok = false;
      rep.detail += "symbol '" + s.var_name(v) + "' is not common; ";
    }

  Fml first = f_and({a, f_not(itp)});
  Fml second = f_and({itp, b});
  rep.a_implies_itp = decide(s, first, theory).kind == DecideResult::Kind::Unsat;
  if (!rep.a_implies_itp) rep.detail += "A does not entail the interpolant; ";
  rep.itp_b_unsat = decide(s, second, theory).kind == DecideResult::Kind::Unsat;
  if (!rep.itp_b_unsat) rep.detail += "interpolant is consistent with B; ";

  if (try_brute && theory == IndexTheory::TO) {
    OracleBounds ba = completeness_bounds(s, first);
    if (rep.a_implies_itp && brute_feasible(s, first, ba)) {
      rep.brute_checked_a = true;
      if (brute_force_check(s, first, ba).sat) {
        rep.a_implies_itp = false;
        rep.detail += "oracle found a model of A and not(itp); ";
      }
    }
    OracleBounds bb = completeness_bounds(s, second);
    if (rep.itp_b_unsat && brute_feasible(s, second, bb)) {
      rep.brute_checked_b = true;
      if (brute_force_check(s, second, bb).sat) {
        rep.itp_b_unsat = false;
        rep.detail += "oracle found a model of itp and B; ";
      }
    }
  }
  return rep;
}

}  // namespace ard
