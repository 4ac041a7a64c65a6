#include <cctype>

#include "ard/problem.hpp"

namespace ard {

const char* to_string(IndexTheory t) { return t == IndexTheory::TO ? "TO" : "IDL"; }

namespace {

struct SExpr {
  // atom when kids is empty and text set; list otherwise
  std::string text;
  std::vector<SExpr> kids;
  int line = 1, col = 1;
  bool atom = false;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  SExpr next() {
    skip_ws();
    if (eof()) throw parse_error("unexpected end of input", line_, col_);
    int l = line_, c = col_;
    char ch = peek();
    if (ch == '(') {
      get();
      SExpr list;
      list.line = l;
      list.col = c;
      while (true) {
        skip_ws();
        if (eof()) throw parse_error("unbalanced s-expression: missing ')'", l, c);
        if (peek() == ')') {
          get();
          return list;
        }
        list.kids.push_back(next());
      }
    }
    if (ch == ')') throw parse_error("unbalanced s-expression: stray ')'", l, c);
    SExpr a;
    a.atom = true;
    a.line = l;
    a.col = c;
    while (!eof() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '(' &&
           peek() != ')' && peek() != ';')
      a.text.push_back(get());
    if (a.text.empty()) throw parse_error("empty token", l, c);
    return a;
  }

  bool at_end() {
    skip_ws();
    return eof();
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() {
    char ch = text_[pos_++];
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return ch;
  }
  void skip_ws() {
    while (!eof()) {
      char ch = peek();
      if (ch == ';') {
        while (!eof() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        get();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class ProblemBuilder {
 public:
  ProblemBuilder(TermStore& s, Problem& p) : s_(s), p_(p) {}

  void top(const SExpr& e) {
    if (e.atom || e.kids.empty() || !e.kids[0].atom)
      throw parse_error("expected (set-index-theory ...), (declare-const ...) or (assert ...)",
                        e.line, e.col);
    const std::string& head = e.kids[0].text;
    if (head == "set-index-theory") {
      expect_arity(e, 2);
      const SExpr& t = e.kids[1];
      if (t.text == "TO")
        p_.theory = IndexTheory::TO;
      else if (t.text == "IDL")
        p_.theory = IndexTheory::IDL;
      else
        throw parse_error("unknown index theory '" + t.text + "'", t.line, t.col);
      if (!p_.decls.empty() || !p_.assertions.empty())
        throw parse_error("set-index-theory must precede declarations and assertions", e.line,
                          e.col);
      p_.theory_declared = true;
    } else if (head == "declare-const") {
      expect_arity(e, 3);
      const SExpr& n = e.kids[1];
      const SExpr& so = e.kids[2];
      if (!n.atom || !so.atom) throw parse_error("declare-const expects a name and a sort", e.line, e.col);
      if (!n.text.empty() && n.text[0] == reserved_prefix)
        throw parse_error("symbol '" + n.text + "' uses the reserved prefix '" +
                              std::string(1, reserved_prefix) + "'",
                          n.line, n.col);
      Sort sort;
      if (so.text == "Index")
        sort = Sort::Index;
      else if (so.text == "Elem")
        sort = Sort::Elem;
      else if (so.text == "Array")
        sort = Sort::Array;
      else
        throw parse_error("unknown sort '" + so.text + "'", so.line, so.col);
      if (is_keyword(n.text)) throw parse_error("'" + n.text + "' is reserved", n.line, n.col);
      try {
        p_.decls[n.text] = s_.var(n.text, sort);
      } catch (const sort_error& err) {
        throw parse_error(err.what(), n.line, n.col);
      }
    } else if (head == "assert") {
      expect_arity(e, 2);
      p_.assertions.push_back(formula(e.kids[1]));
    } else {
      throw parse_error("unknown command '" + head + "'", e.line, e.col);
    }
  }

  Fml formula(const SExpr& e) {
    if (e.atom) {
      if (e.text == "true") return f_true();
      if (e.text == "false") return f_false();
      throw parse_error("expected a formula, got '" + e.text + "'", e.line, e.col);
    }
    if (e.kids.empty() || !e.kids[0].atom) throw parse_error("expected a formula", e.line, e.col);
    const std::string& head = e.kids[0].text;
    if (head == "and" || head == "or") {
      if (e.kids.size() < 2) throw parse_error("'" + head + "' needs arguments", e.line, e.col);
      std::vector<Fml> kids;
      for (std::size_t i = 1; i < e.kids.size(); ++i) kids.push_back(formula(e.kids[i]));
      return head == "and" ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    if (head == "not") {
      expect_arity(e, 2);
      return f_not(formula(e.kids[1]));
    }
    if (head == "let") return let_formula(e);
    if (head == "=" || head == "<=" || head == "<") {
      expect_arity(e, 3);
      TermId a = term(e.kids[1]);
      TermId b = term(e.kids[2]);
      try {
        if (head == "=") return f_lit(mk_eq(s_, a, b));
        if (head == "<=") return f_lit(mk_le(s_, a, b));
        return f_lit(mk_lt(s_, a, b));
      } catch (const sort_error& err) {
        throw parse_error(err.what(), e.line, e.col);
      }
    }
    throw parse_error("unknown connective '" + head + "'", e.line, e.col);
  }

  TermId term(const SExpr& e) {
    if (e.atom) {
      if (e.text == "0") return s_.zero();
      if (e.text == "eps") return s_.epsilon();
      if (e.text == "bot") return s_.bot();
      for (auto it = lets_.rbegin(); it != lets_.rend(); ++it) {
        auto f = it->find(e.text);
        if (f != it->end()) return f->second;
      }
      TermId v = s_.find_var(e.text);
      if (v == no_term) throw parse_error("undeclared symbol '" + e.text + "'", e.line, e.col);
      return v;
    }
    if (e.kids.empty() || !e.kids[0].atom) throw parse_error("expected a term", e.line, e.col);
    const std::string& head = e.kids[0].text;
    Op op;
    if (head == "rd")
      op = Op::Rd;
    else if (head == "wr")
      op = Op::Wr;
    else if (head == "diff")
      op = Op::Diff;
    else if (head == "S")
      op = Op::Succ;
    else if (head == "P")
      op = Op::Pred;
    else
      throw parse_error("unknown function '" + head + "'", e.line, e.col);
    if ((op == Op::Succ || op == Op::Pred) && p_.theory != IndexTheory::IDL)
      throw parse_error("'" + head + "' requires (set-index-theory IDL)", e.line, e.col);
    std::vector<TermId> args;
    for (std::size_t i = 1; i < e.kids.size(); ++i) args.push_back(term(e.kids[i]));
    try {
      return s_.app(op, args);
    } catch (const sort_error& err) {
      throw parse_error(err.what(), e.line, e.col);
    }
  }

 private:
  Fml let_formula(const SExpr& e) {
    expect_arity(e, 3);
    const SExpr& binds = e.kids[1];
    if (binds.atom) throw parse_error("let expects a binding list", binds.line, binds.col);
    std::map<std::string, TermId> frame;
    for (const SExpr& b : binds.kids) {
      if (b.atom || b.kids.size() != 2 || !b.kids[0].atom)
        throw parse_error("let binding must be (name term)", b.line, b.col);
      frame[b.kids[0].text] = term(b.kids[1]);
    }
    lets_.push_back(std::move(frame));
    Fml body = formula(e.kids[2]);
    lets_.pop_back();
    return body;
  }

  static bool is_keyword(const std::string& t) {
    return t == "0" || t == "eps" || t == "bot" || t == "true" || t == "false" || t == "rd" ||
           t == "wr" || t == "diff" || t == "S" || t == "P" || t == "and" || t == "or" ||
           t == "not" || t == "let" || t == "=" || t == "<=" || t == "<";
  }

  static void expect_arity(const SExpr& e, std::size_t n) {
    if (e.kids.size() != n)
      throw parse_error("'" + e.kids[0].text + "' expects " + std::to_string(n - 1) +
                            " argument(s), got " + std::to_string(e.kids.size() - 1),
                        e.line, e.col);
  }

  TermStore& s_;
  Problem& p_;
  std::vector<std::map<std::string, TermId>> lets_;
};

}  // namespace

Problem parse_problem(TermStore& s, std::string_view text) {
  Problem p;
  ProblemBuilder b(s, p);
  Lexer lex(text);
  while (!lex.at_end()) b.top(lex.next());
  return p;
}

Fml parse_formula_text(TermStore& s, const Problem& header, std::string_view text) {
  Problem scratch = header;
  ProblemBuilder b(s, scratch);
  Lexer lex(text);
  Fml out = b.formula(lex.next());
  if (!lex.at_end()) throw parse_error("trailing input after formula", 0, 0);
  return out;
}

}  // namespace ard
