#include "ard/term.hpp"

namespace ard {

const char* to_string(Sort s) {
  switch (s) {
    case Sort::Index: return "Index";
    case Sort::Elem: return "Elem";
    case Sort::Array: return "Array";
  }
  return "?";
}

namespace {

struct Sig {
  std::vector<Sort> args;
  Sort result;
};

const Sig& signature(Op op) {
  static const Sig rd{{Sort::Array, Sort::Index}, Sort::Elem};
  static const Sig wr{{Sort::Array, Sort::Index, Sort::Elem}, Sort::Array};
  static const Sig df{{Sort::Array, Sort::Array}, Sort::Index};
  static const Sig sp{{Sort::Index}, Sort::Index};
  switch (op) {
    case Op::Rd: return rd;
    case Op::Wr: return wr;
    case Op::Diff: return df;
    case Op::Succ:
    case Op::Pred: return sp;
    default: throw internal_error("signature: not a function symbol");
  }
}

const char* op_name(Op op) {
  switch (op) {
    case Op::Rd: return "rd";
    case Op::Wr: return "wr";
    case Op::Diff: return "diff";
    case Op::Succ: return "S";
    case Op::Pred: return "P";
    default: return "?";
  }
}

}  // namespace

TermStore::TermStore() {
  zero_ = intern({Op::Zero, Sort::Index, 0, {}});
  eps_ = intern({Op::Epsilon, Sort::Array, 0, {}});
  bot_ = intern({Op::Bot, Sort::Elem, 0, {}});
}

TermId TermStore::intern(TermData d) {
  TermId id = static_cast<TermId>(terms_.size());
  unsigned c = d.op == Op::Var || d.args.empty() ? 0u : 1u;
  for (TermId a : d.args) c += complexity_[a];
  terms_.push_back(std::move(d));
  complexity_.push_back(c);
  return id;
}

TermId TermStore::var(std::string_view name, Sort sort) {
  auto it = vars_.find(std::string(name));
  if (it != vars_.end()) {
    if (sort_of(it->second) != sort)
      throw sort_error("symbol '" + std::string(name) + "' already declared with sort " +
                       to_string(sort_of(it->second)));
    return it->second;
  }
  std::uint32_t name_id = static_cast<std::uint32_t>(names_.size());
  names_.emplace_back(name);
  TermId id = intern({Op::Var, sort, name_id, {}});
  vars_.emplace(std::string(name), id);
  return id;
}

TermId TermStore::find_var(std::string_view name) const {
  auto it = vars_.find(std::string(name));
  return it == vars_.end() ? no_term : it->second;
}

TermId TermStore::fresh_var(Sort sort) {
  const char* tag = sort == Sort::Index ? "i" : sort == Sort::Elem ? "e" : "a";
  std::string name;
  do {
    name = std::string(1, reserved_prefix) + tag + std::to_string(++fresh_counter_);
  } while (vars_.count(name));
  return var(name, sort);
}

TermId TermStore::app(Op op, const std::vector<TermId>& args) {
  const Sig& sig = signature(op);
  if (args.size() != sig.args.size())
    throw sort_error(std::string(op_name(op)) + ": expected " + std::to_string(sig.args.size()) +
                     " arguments, got " + std::to_string(args.size()));
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (sort_of(args[k]) != sig.args[k])
      throw sort_error(std::string(op_name(op)) + ": argument " + std::to_string(k + 1) +
                       " has sort " + to_string(sort_of(args[k])) + ", expected " +
                       to_string(sig.args[k]));
  }
  auto key = std::make_pair(op, args);
  auto it = apps_.find(key);
  if (it != apps_.end()) return it->second;
  TermId id = intern({op, sig.result, 0, args});
  apps_.emplace(std::move(key), id);
  return id;
}

const std::string& TermStore::var_name(TermId t) const {
  if (!is_var(t)) throw internal_error("var_name: not a variable");
  return names_[terms_[t].name];
}

void TermStore::collect_vars(TermId t, std::set<TermId>& out) const {
  const TermData& d = terms_[t];
  if (d.op == Op::Var) {
    out.insert(t);
    return;
  }
  for (TermId a : d.args) collect_vars(a, out);
}

TermId TermStore::substitute(TermId t, const std::map<TermId, TermId>& sub) {
  auto it = sub.find(t);
  if (it != sub.end()) return it->second;
  const TermData d = terms_[t];
  if (d.args.empty()) return t;
  std::vector<TermId> args;
  args.reserve(d.args.size());
  bool changed = false;
  for (TermId a : d.args) {
    TermId b = substitute(a, sub);
    changed |= b != a;
    args.push_back(b);
  }
  return changed ? app(d.op, args) : t;
}

}  // namespace ard
