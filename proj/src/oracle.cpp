#include "ard/oracle.hpp"

#include <algorithm>

#include "ard/printer.hpp"

namespace ard {

long eval_diff(const std::map<long, unsigned>& a, const std::map<long, unsigned>& b) {
  long best = 0;
  auto tok = [](const std::map<long, unsigned>& t, long i) {
    auto it = t.find(i);
    return it == t.end() ? 0u : it->second;
  };
  for (auto& [i, v] : a)
    if (v != tok(b, i) && i > best) best = i;
  for (auto& [i, v] : b)
    if (v != tok(a, i) && i > best) best = i;
  return best;
}

long eval_index_term(const TermStore& s, const FiniteArrayModel& m, TermId t) {
  const TermData& d = s[t];
  switch (d.op) {
    case Op::Zero: return 0;
    case Op::Var: {
      auto it = m.index_assign.find(t);
      if (it == m.index_assign.end())
        throw error("evaluate: unassigned index variable " + s.var_name(t));
      return it->second;
    }
    case Op::Succ: return eval_index_term(s, m, d.args[0]) + 1;
    case Op::Pred: return eval_index_term(s, m, d.args[0]) - 1;
    case Op::Diff:
      return eval_diff(eval_array_term(s, m, d.args[0]), eval_array_term(s, m, d.args[1]));
    default: throw internal_error("evaluate: bad index term");
  }
}

unsigned eval_elem_term(const TermStore& s, const FiniteArrayModel& m, TermId t) {
  const TermData& d = s[t];
  switch (d.op) {
    case Op::Bot: return 0;
    case Op::Var: {
      auto it = m.elem_assign.find(t);
      if (it == m.elem_assign.end())
        throw error("evaluate: unassigned element variable " + s.var_name(t));
      return it->second;
    }
    case Op::Rd: {
      long i = eval_index_term(s, m, d.args[1]);
      auto table = eval_array_term(s, m, d.args[0]);
      auto it = table.find(i);
      return it == table.end() ? 0u : it->second;
    }
    default: throw internal_error("evaluate: bad element term");
  }
}

std::map<long, unsigned> eval_array_term(const TermStore& s, const FiniteArrayModel& m, TermId t) {
  const TermData& d = s[t];
  switch (d.op) {
    case Op::Epsilon: return {};
    case Op::Var: {
      auto it = m.arrays.find(t);
      if (it == m.arrays.end())
        throw error("evaluate: unassigned array variable " + s.var_name(t));
      return it->second;
    }
    case Op::Wr: {
      auto table = eval_array_term(s, m, d.args[0]);
      long i = eval_index_term(s, m, d.args[1]);
      if (i >= 0) {  // negative writes have no effect
        unsigned e = eval_elem_term(s, m, d.args[2]);
        if (e == 0)
          table.erase(i);
        else
          table[i] = e;
      }
      return table;
    }
    default: throw internal_error("evaluate: bad array term");
  }
}

static bool eval_literal(const TermStore& s, const FiniteArrayModel& m, const Literal& l) {
  switch (l.kind) {
    case AtomKind::Le: return eval_index_term(s, m, l.lhs) <= eval_index_term(s, m, l.rhs);
    case AtomKind::Lt: return eval_index_term(s, m, l.lhs) < eval_index_term(s, m, l.rhs);
    case AtomKind::Eq: {
      bool eq;
      switch (s.sort_of(l.lhs)) {
        case Sort::Index: eq = eval_index_term(s, m, l.lhs) == eval_index_term(s, m, l.rhs); break;
        case Sort::Elem: eq = eval_elem_term(s, m, l.lhs) == eval_elem_term(s, m, l.rhs); break;
        case Sort::Array: eq = eval_array_term(s, m, l.lhs) == eval_array_term(s, m, l.rhs); break;
        default: throw internal_error("evaluate: bad sort");
      }
      return eq == l.pos;
    }
  }
  throw internal_error("evaluate: bad literal");
}

bool evaluate(const TermStore& s, const FiniteArrayModel& m, const Fml& f) {
  switch (f->kind) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Lit: return eval_literal(s, m, f->lit);
    case Formula::Kind::Not: return !evaluate(s, m, f->kids[0]);
    case Formula::Kind::And:
      for (auto& k : f->kids)
        if (!evaluate(s, m, k)) return false;
      return true;
    case Formula::Kind::Or:
      for (auto& k : f->kids)
        if (evaluate(s, m, k)) return true;
      return false;
  }
  throw internal_error("evaluate: bad formula");
}

bool evaluate_template(const TermStore& s, const FiniteArrayModel& m, const Template& t) {
  FiniteArrayModel scratch = m;
  for (long v : m.chain) {
    scratch.index_assign[t.hole] = v;
    if (!evaluate(s, scratch, t.body)) return false;
  }
  return true;
}

void assert_metric_laws(const TermStore& s, const FiniteArrayModel& m) {
  std::vector<std::map<long, unsigned>> tables;
  tables.push_back({});  // eps
  for (auto& [a, t] : m.arrays) tables.push_back(t);
  const std::size_t n = tables.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      long dxy = eval_diff(tables[x], tables[y]);
      if (dxy < 0) throw internal_error("metric law violated: diff(x,y) < 0");
      if (dxy != eval_diff(tables[y], tables[x]))
        throw internal_error("metric law violated: diff not symmetric");
      for (std::size_t z = 0; z < n; ++z) {
        long dyz = eval_diff(tables[y], tables[z]);
        long dxz = eval_diff(tables[x], tables[z]);
        if (std::max(dxy, dyz) < dxz)
          throw internal_error("metric law violated: max(diff(x,y),diff(y,z)) < diff(x,z)");
      }
    }
  (void)s;
}

namespace {

void collect_reads(const TermStore& s, TermId t, std::set<TermId>& reads) {
  const TermData& d = s[t];
  if (d.op == Op::Rd) reads.insert(t);
  for (TermId a : d.args) collect_reads(s, a, reads);
}

struct VarSplit {
  std::vector<TermId> ivars, evars, avars;
  std::set<TermId> reads;
};

VarSplit split_vars(const TermStore& s, const Fml& f) {
  VarSplit out;
  std::set<TermId> vars = free_symbols(s, f);
  for (TermId v : vars) {
    switch (s.sort_of(v)) {
      case Sort::Index: out.ivars.push_back(v); break;
      case Sort::Elem: out.evars.push_back(v); break;
      case Sort::Array: out.avars.push_back(v); break;
    }
  }
  struct Walk {
    const TermStore& s;
    std::set<TermId>& reads;
    void operator()(const Fml& f) {
      if (f->kind == Formula::Kind::Lit) {
        collect_reads(s, f->lit.lhs, reads);
        collect_reads(s, f->lit.rhs, reads);
        return;
      }
      for (auto& k : f->kids) (*this)(k);
    }
  } walk{s, out.reads};
  walk(f);
  return out;
}

// Three-valued evaluation against a partially assigned model; element slots
// (element variables and array cells) are assigned in a fixed order.
class Enumerator {
 public:
  Enumerator(TermStore& s, const Fml& f, OracleBounds bounds)
      : s_(s), f_(f), bounds_(bounds), vars_(split_vars(s, f)) {}

  BfcResult run() {
    BfcResult res;
    res.below_threshold =
        bounds_.max_chain < vars_.ivars.size() + 1 ||
        bounds_.max_elems < vars_.evars.size() + vars_.reads.size() + 1;
    for (unsigned cs = 1; cs <= std::max(1u, bounds_.max_chain); ++cs)
      for (unsigned p = 0; p < cs; ++p) {
        chain_.clear();
        for (unsigned i = 0; i < cs; ++i) chain_.push_back(static_cast<long>(i) - p);
        if (try_chain(res)) return res;
      }
    res.sat = false;
    return res;
  }

 private:
  bool try_chain(BfcResult& res) {
    // slots: element variables first, then nonnegative cells per array
    slots_.clear();
    evar_slot_.clear();
    cell_slot_.clear();
    array_last_slot_.clear();
    for (TermId e : vars_.evars) {
      evar_slot_[e] = slots_.size();
      slots_.push_back({e, no_term, 0});
    }
    for (TermId a : vars_.avars)
      for (long i : chain_)
        if (i >= 0) {
          cell_slot_[{a, i}] = slots_.size();
          array_last_slot_[a] = slots_.size();
          slots_.push_back({no_term, a, i});
        }
    values_.assign(slots_.size(), 0);

    std::vector<std::size_t> odo(vars_.ivars.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < vars_.ivars.size(); ++k)
        index_assign_[vars_.ivars[k]] = chain_[odo[k]];
      if (assign_slots(0, 0, res)) return true;
      std::size_t k = 0;
      for (; k < odo.size(); ++k) {
        if (++odo[k] < chain_.size()) break;
        odo[k] = 0;
      }
      if (k == odo.size()) return false;
      if (vars_.ivars.empty()) return false;
    }
  }

  bool assign_slots(std::size_t i, unsigned used, BfcResult& res) {
    ++res.models_tried;
    filled_ = i;
    auto v = eval3(f_);
    if (v.has_value() && !*v) return false;
    if (i == slots_.size()) {
      if (!v.has_value()) throw internal_error("oracle: undetermined at full assignment");
      if (!*v) return false;
      res.sat = true;
      res.model = materialize(used);
      assert_metric_laws(s_, res.model);
      return true;
    }
    if (v.has_value() && *v) {
      // remaining slots are irrelevant; complete with bot
      for (std::size_t j = i; j < slots_.size(); ++j) values_[j] = 0;
      filled_ = slots_.size();
      res.sat = true;
      res.model = materialize(used);
      assert_metric_laws(s_, res.model);
      return true;
    }
    unsigned cap = std::min(bounds_.max_elems - 1, used + 1);  // restricted growth
    for (unsigned tok = 0; tok <= cap; ++tok) {
      values_[i] = tok;
      if (assign_slots(i + 1, std::max(used, tok), res)) return true;
    }
    return false;
  }

  FiniteArrayModel materialize(unsigned used) const {
    FiniteArrayModel m;
    m.chain = chain_;
    m.n_tokens = used + 1;
    m.index_assign = index_assign_;
    for (TermId a : vars_.avars) m.arrays[a];
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      const Slot& sl = slots_[i];
      if (sl.evar != no_term)
        m.elem_assign[sl.evar] = values_[i];
      else if (values_[i] != 0)
        m.arrays[sl.arr][sl.pos] = values_[i];
    }
    return m;
  }

  struct Slot {
    TermId evar;  // no_term for cells
    TermId arr;
    long pos;
  };

  std::optional<unsigned> slot_value(TermId arr, long pos) const {
    auto it = cell_slot_.find({arr, pos});
    if (it == cell_slot_.end()) return 0u;  // outside the chain: bot
    return it->second < filled_ ? std::optional<unsigned>(values_[it->second]) : std::nullopt;
  }

  std::optional<unsigned> evar_value(TermId v) const {
    auto it = evar_slot_.find(v);
    if (it == evar_slot_.end()) throw internal_error("oracle: unknown element variable");
    return it->second < filled_ ? std::optional<unsigned>(values_[it->second]) : std::nullopt;
  }

  std::optional<long> idx3(TermId t) const {
    const TermData& d = s_[t];
    switch (d.op) {
      case Op::Zero: return 0;
      case Op::Var: {
        auto it = index_assign_.find(t);
        if (it == index_assign_.end()) throw error("oracle: unassigned index variable");
        return it->second;
      }
      case Op::Succ: {
        auto v = idx3(d.args[0]);
        return v ? std::optional<long>(*v + 1) : std::nullopt;
      }
      case Op::Pred: {
        auto v = idx3(d.args[0]);
        return v ? std::optional<long>(*v - 1) : std::nullopt;
      }
      case Op::Diff: {
        auto a = arr3(d.args[0]);
        auto b = arr3(d.args[1]);
        if (!a || !b) return std::nullopt;
        return eval_diff(*a, *b);
      }
      default: throw internal_error("oracle: bad index term");
    }
  }

  std::optional<unsigned> elem3(TermId t) const {
    const TermData& d = s_[t];
    switch (d.op) {
      case Op::Bot: return 0;
      case Op::Var: return evar_value(t);
      case Op::Rd: return read3(d.args[0], d.args[1]);
      default: throw internal_error("oracle: bad element term");
    }
  }

  std::optional<unsigned> read3(TermId arr, TermId idx) const {
    auto i = idx3(idx);
    if (!i) return std::nullopt;
    return read_at3(arr, *i);
  }

  std::optional<unsigned> read_at3(TermId arr, long i) const {
    if (i < 0) return 0;
    const TermData& d = s_[arr];
    switch (d.op) {
      case Op::Epsilon: return 0;
      case Op::Var: return slot_value(arr, i);
      case Op::Wr: {
        auto j = idx3(d.args[1]);
        if (!j) return std::nullopt;
        if (*j == i && *j >= 0) return elem3(d.args[2]);
        return read_at3(d.args[0], i);
      }
      default: throw internal_error("oracle: bad array term");
    }
  }

  std::optional<std::map<long, unsigned>> arr3(TermId t) const {
    const TermData& d = s_[t];
    switch (d.op) {
      case Op::Epsilon: return std::map<long, unsigned>{};
      case Op::Var: {
        auto last = array_last_slot_.find(t);
        if (last != array_last_slot_.end() && last->second >= filled_)
          return std::nullopt;  // cells still unassigned
        std::map<long, unsigned> out;
        for (long i : chain_) {
          if (i < 0) continue;
          auto v = slot_value(t, i);
          if (!v) return std::nullopt;
          if (*v != 0) out[i] = *v;
        }
        return out;
      }
      case Op::Wr: {
        auto base = arr3(d.args[0]);
        auto i = idx3(d.args[1]);
        auto e = elem3(d.args[2]);
        if (!base || !i || !e) return std::nullopt;
        if (*i >= 0) {
          if (*e == 0)
            base->erase(*i);
          else
            (*base)[*i] = *e;
        }
        return base;
      }
      default: throw internal_error("oracle: bad array term");
    }
  }

  std::optional<bool> lit3(const Literal& l) const {
    switch (l.kind) {
      case AtomKind::Le: {
        auto a = idx3(l.lhs), b = idx3(l.rhs);
        if (!a || !b) return std::nullopt;
        return *a <= *b;
      }
      case AtomKind::Lt: {
        auto a = idx3(l.lhs), b = idx3(l.rhs);
        if (!a || !b) return std::nullopt;
        return *a < *b;
      }
      case AtomKind::Eq: {
        std::optional<bool> eq;
        switch (s_.sort_of(l.lhs)) {
          case Sort::Index: {
            auto a = idx3(l.lhs), b = idx3(l.rhs);
            if (a && b) eq = *a == *b;
            break;
          }
          case Sort::Elem: {
            auto a = elem3(l.lhs), b = elem3(l.rhs);
            if (a && b) eq = *a == *b;
            break;
          }
          case Sort::Array: {
            auto a = arr3(l.lhs), b = arr3(l.rhs);
            if (a && b) eq = *a == *b;
            break;
          }
        }
        if (!eq) return std::nullopt;
        return *eq == l.pos;
      }
    }
    throw internal_error("oracle: bad literal");
  }

  std::optional<bool> eval3(const Fml& f) const {
    switch (f->kind) {
      case Formula::Kind::True: return true;
      case Formula::Kind::False: return false;
      case Formula::Kind::Lit: return lit3(f->lit);
      case Formula::Kind::Not: {
        auto v = eval3(f->kids[0]);
        if (!v) return std::nullopt;
        return !*v;
      }
      case Formula::Kind::And: {
        bool unknown = false;
        for (auto& k : f->kids) {
          auto v = eval3(k);
          if (v.has_value() && !*v) return false;
          if (!v.has_value()) unknown = true;
        }
        if (unknown) return std::nullopt;
        return true;
      }
      case Formula::Kind::Or: {
        bool unknown = false;
        for (auto& k : f->kids) {
          auto v = eval3(k);
          if (v.has_value() && *v) return true;
          if (!v.has_value()) unknown = true;
        }
        if (unknown) return std::nullopt;
        return false;
      }
    }
    throw internal_error("oracle: bad formula");
  }

  TermStore& s_;
  Fml f_;
  OracleBounds bounds_;
  VarSplit vars_;
  std::vector<long> chain_;
  std::vector<Slot> slots_;
  std::vector<unsigned> values_;
  std::size_t filled_ = 0;
  std::map<TermId, long> index_assign_;
  std::map<TermId, std::size_t> evar_slot_;
  std::map<std::pair<TermId, long>, std::size_t> cell_slot_;
  std::map<TermId, std::size_t> array_last_slot_;
};

}  // namespace

OracleBounds completeness_bounds(const TermStore& s, const Fml& f) {
  VarSplit v = split_vars(s, f);
  unsigned chain = static_cast<unsigned>(v.ivars.size() + 1);
  // one token per element variable plus full distinctness of the array cells
  // over the chain (covers diff witnesses, which no read term mentions)
  unsigned elems = static_cast<unsigned>(v.evars.size() + v.avars.size() * chain + 1);
  return {chain, elems};
}

BfcResult brute_force_check(TermStore& s, const Fml& constraint, OracleBounds bounds) {
  if (bounds.max_chain == 0 || bounds.max_elems == 0)
    throw error("brute_force_check: bounds must be positive");
  return Enumerator(s, constraint, bounds).run();
}

FiniteArrayModel model_from_ground(TermStore& s, const SeparatedPair& pair,
                                   const GroundModel& gm) {
  FiniteArrayModel m;
  std::set<long> chain{0};
  for (auto& [t, v] : gm.index_value) chain.insert(v);
  m.chain.assign(chain.begin(), chain.end());
  unsigned max_tok = 0;
  for (auto& [t, tok] : gm.elem_token) max_tok = std::max(max_tok, tok);
  m.n_tokens = max_tok + 1;
  for (TermId a : pair.array_vars(s)) m.arrays[a];
  for (auto& [arr, table] : gm.array_table) {
    if (!s.is_var(arr)) continue;  // eps is fixed
    auto& out = m.arrays[arr];
    for (auto& [i, tok] : table)
      if (i >= 0 && tok != 0) out[i] = tok;
  }
  for (auto& [t, v] : gm.index_value)
    if (s.is_var(t)) m.index_assign[t] = v;
  for (auto& [t, tok] : gm.elem_token)
    if (s.is_var(t)) m.elem_assign[t] = tok;

  Fml claim = pair_formula(s, pair);
  if (!evaluate(s, m, claim))
    throw internal_error("model_from_ground: constructed model fails the pair (soundness bug)");
  assert_metric_laws(s, m);
  return m;
}

std::string print_model(const TermStore& s, const FiniteArrayModel& m,
                        const std::vector<TermId>& visible) {
  auto tok_name = [](unsigned t) { return t == 0 ? std::string("bot") : "e!" + std::to_string(t); };
  std::string out = "(model\n  (chain";
  for (long i : m.chain) out += ' ' + std::to_string(i);
  out += ")\n  (elems";
  for (unsigned t = 0; t < m.n_tokens; ++t) out += ' ' + tok_name(t);
  out += ")";
  for (TermId v : visible) {
    switch (s.sort_of(v)) {
      case Sort::Array: {
        out += "\n  (array " + s.var_name(v);
        auto it = m.arrays.find(v);
        if (it != m.arrays.end())
          for (auto& [i, t] : it->second)
            out += " (" + std::to_string(i) + ' ' + tok_name(t) + ')';
        out += " (default bot))";
        break;
      }
      case Sort::Index: {
        auto it = m.index_assign.find(v);
        if (it != m.index_assign.end())
          out += "\n  (define " + s.var_name(v) + ' ' + std::to_string(it->second) + ')';
        break;
      }
      case Sort::Elem: {
        auto it = m.elem_assign.find(v);
        if (it != m.elem_assign.end())
          out += "\n  (define " + s.var_name(v) + ' ' + tok_name(it->second) + ')';
        break;
      }
    }
  }
  out += ")";
  return out;
}

}  // namespace ard
