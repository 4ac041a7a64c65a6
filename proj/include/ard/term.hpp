#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace ard {

enum class Sort : std::uint8_t { Index, Elem, Array };

const char* to_string(Sort s);

// Heads of the term signature. Var covers declared and generated variables;
// Zero/Epsilon/Bot are the interpreted constants; Succ/Pred exist in IDL mode only.
enum class Op : std::uint8_t { Var, Zero, Epsilon, Bot, Rd, Wr, Diff, Succ, Pred };

using TermId = std::uint32_t;
inline constexpr TermId no_term = 0xffffffffu;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct sort_error : error {
  using error::error;
};
struct internal_error : error {
  using error::error;
};

struct TermData {
  Op op;
  Sort sort;
  std::uint32_t name = 0;  // index into the name table, Var only
  std::vector<TermId> args;
};

// Interning term store. Structural equality coincides with id equality.
// Append-only after construction; safe for concurrent reads.
class TermStore {
 public:
  TermStore();

  // Declares or retrieves a variable. Redeclaring with a different sort fails.
  TermId var(std::string_view name, Sort sort);
  // Returns no_term when the name is not declared.
  TermId find_var(std::string_view name) const;
  // Generated variable with the reserved '$' prefix, unique per store.
  TermId fresh_var(Sort sort);

  TermId zero() const { return zero_; }
  TermId epsilon() const { return eps_; }
  TermId bot() const { return bot_; }

  TermId rd(TermId a, TermId i) { return app(Op::Rd, {a, i}); }
  TermId wr(TermId a, TermId i, TermId e) { return app(Op::Wr, {a, i, e}); }
  TermId diff(TermId a, TermId b) { return app(Op::Diff, {a, b}); }
  TermId succ(TermId i) { return app(Op::Succ, {i}); }
  TermId pred(TermId i) { return app(Op::Pred, {i}); }
  TermId app(Op op, const std::vector<TermId>& args);

  const TermData& operator[](TermId t) const { return terms_[t]; }
  Sort sort_of(TermId t) const { return terms_[t].sort; }
  bool is_var(TermId t) const { return terms_[t].op == Op::Var; }
  // Complexity-0 terms: variables and the three constants.
  bool is_atomic(TermId t) const { return terms_[t].args.empty(); }
  const std::string& var_name(TermId t) const;

  // c(t): number of function symbols occurring in t.
  unsigned complexity(TermId t) const { return complexity_[t]; }

  void collect_vars(TermId t, std::set<TermId>& out) const;
  TermId substitute(TermId t, const std::map<TermId, TermId>& sub);

  std::size_t size() const { return terms_.size(); }

 private:
  TermId intern(TermData d);
  static Sort result_sort(Op op, const std::vector<TermId>& args, const TermStore& s);

  std::vector<TermData> terms_;
  std::vector<unsigned> complexity_;
  std::unordered_map<std::string, TermId> vars_;
  std::vector<std::string> names_;
  std::map<std::pair<Op, std::vector<TermId>>, TermId> apps_;
  TermId zero_ = no_term, eps_ = no_term, bot_ = no_term;
  unsigned fresh_counter_ = 0;
};

// Reserved prefix for generated symbols; user declarations must not use it.
inline constexpr char reserved_prefix = '$';

}  // namespace ard
