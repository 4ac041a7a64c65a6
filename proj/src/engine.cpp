#include "ard/engine.hpp"

namespace ard {

DecideResult decide(TermStore& s, const Fml& assertion, IndexTheory theory, bool full_dnf) {
  std::set<TermId> original_vars = free_symbols(s, assertion);
  for (const SeparatedPair& pair : preprocess(s, assertion, full_dnf)) {
    SeparatedPair inst = instantiate(s, pair, 0, theory).pair;
    GroundOutcome out = check_ground(s, inst.phi2, theory);
    if (!out.sat) continue;
    FiniteArrayModel m = model_from_ground(s, inst, out.model);
    // unconstrained original variables default to 0 / bot / empty
    for (TermId v : original_vars) {
      switch (s.sort_of(v)) {
        case Sort::Index: m.index_assign.emplace(v, 0); break;
        case Sort::Elem: m.elem_assign.emplace(v, 0); break;
        case Sort::Array: m.arrays.emplace(v, std::map<long, unsigned>{}); break;
      }
    }
    if (!evaluate(s, m, assertion))
      throw internal_error("decide: model fails the input assertion (soundness bug)");
    assert_metric_laws(s, m);
    return {DecideResult::Kind::Sat, std::move(m)};
  }
  return {DecideResult::Kind::Unsat, std::nullopt};
}

}  // namespace ard
