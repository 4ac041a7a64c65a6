#pragma once

#include <string>

#include "ard/formula.hpp"

namespace ard {

struct PrintOptions {
  bool let_sharing = false;  // factor repeated compound subterms into (let ...)
};

std::string print_term(const TermStore& s, TermId t);
std::string print_literal(const TermStore& s, const Literal& l);
std::string print_formula(const TermStore& s, const Fml& f, const PrintOptions& opts = {});

}  // namespace ard
