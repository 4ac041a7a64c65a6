#pragma once

#include <map>
#include <optional>
#include <string>

#include "ard/formula.hpp"

namespace ard {

enum class IndexTheory : std::uint8_t { TO, IDL };

const char* to_string(IndexTheory t);

struct Problem {
  IndexTheory theory = IndexTheory::TO;
  bool theory_declared = false;
  std::map<std::string, TermId> decls;  // user-declared symbols, in name order
  std::vector<Fml> assertions;

  Fml conjunction() const { return f_and(assertions); }
};

struct parse_error : error {
  parse_error(const std::string& msg, int line, int col)
      : error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Parses the s-expression problem format:
//   (set-index-theory TO|IDL)  (declare-const name Index|Elem|Array)  (assert fml)
Problem parse_problem(TermStore& s, std::string_view text);

// Parses a single formula against an existing declaration table (check mode).
Fml parse_formula_text(TermStore& s, const Problem& header, std::string_view text);

}  // namespace ard
