#include "ard/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "ard/engine.hpp"
#include "ard/interpolate.hpp"
#include "ard/printer.hpp"

namespace ard {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<TermId> declared_vars(const Problem& p) {
  std::vector<TermId> out;
  for (auto& [name, v] : p.decls) out.push_back(v);
  return out;
}

void require_same_header(const Problem& a, const Problem& b) {
  if (a.theory != b.theory) throw error("input files disagree on the index theory");
  if (a.decls != b.decls) throw error("input files must share one declaration header");
}

std::set<TermId> common_symbols(TermStore& s, const Fml& a, const Fml& b) {
  std::set<TermId> fb = free_symbols(s, b), common;
  for (TermId v : free_symbols(s, a))
    if (fb.count(v)) common.insert(v);
  return common;
}

void print_report(std::ostream& out, const CheckReport& rep) {
  auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
  out << (rep.all_pass() ? "valid" : "invalid") << "\n";
  out << "(check-report\n"
      << "  (a-implies-interpolant " << verdict(rep.a_implies_itp) << ")\n"
      << "  (interpolant-inconsistent-with-b " << verdict(rep.itp_b_unsat) << ")\n"
      << "  (symbols-common " << verdict(rep.symbols_ok) << ")\n"
      << "  (oracle-cross-checked" << (rep.brute_checked_a ? " a" : "")
      << (rep.brute_checked_b ? " b" : "") << "))\n";
  if (!rep.detail.empty()) out << "; " << rep.detail << "\n";
}

int run(const CliConfig& cfg, std::ostream& out) {
  TermStore store;
  PrintOptions popts;
  popts.let_sharing = cfg.let_sharing;

  switch (cfg.mode) {
    case CliConfig::Mode::Sat: {
      if (cfg.inputs.size() != 1) throw error("sat mode expects one input file");
      Problem p = parse_problem(store, slurp(cfg.inputs[0]));
      DecideResult r = decide(store, p.conjunction(), p.theory, cfg.full_dnf);
      if (r.kind == DecideResult::Kind::Sat) {
        out << "sat\n" << print_model(store, *r.model, declared_vars(p)) << "\n";
        if (cfg.check_answers && !evaluate(store, *r.model, p.conjunction()))
          throw internal_error("model check failed");
      } else {
        out << "unsat\n";
        if (cfg.check_answers && p.theory == IndexTheory::TO) {
          Fml f = p.conjunction();
          OracleBounds b = completeness_bounds(store, f);
          if (b.max_chain <= cfg.max_oracle_chain && b.max_elems <= cfg.max_oracle_elems &&
              brute_force_check(store, f, b).sat)
            throw internal_error("oracle disagrees with the unsat verdict");
        }
      }
      return 0;
    }

    case CliConfig::Mode::Interpolate: {
      if (cfg.inputs.size() != 2) throw error("interpolate mode expects A and B files");
      Problem pa = parse_problem(store, slurp(cfg.inputs[0]));
      Problem pb = parse_problem(store, slurp(cfg.inputs[1]));
      require_same_header(pa, pb);
      Fml a = pa.conjunction(), b = pb.conjunction();
      InterpolateOptions opts;
      opts.full_dnf = cfg.full_dnf;
      opts.idl_budget = cfg.instantiation_budget;
      InterpolationOutcome res = ard_interpolate(store, a, b, pa.theory, opts);
      switch (res.kind) {
        case InterpolationOutcome::Kind::Satisfiable:
          out << "sat\n" << print_model(store, *res.model, declared_vars(pa)) << "\n";
          return 0;
        case InterpolationOutcome::Kind::Unknown:
          out << "unknown\n(reached-budget " << res.budget_reached << ")\n";
          return 2;
        case InterpolationOutcome::Kind::Interpolant: {
          if (cfg.check_answers) {
            CheckReport rep = check_interpolant(store, a, b, res.interpolant,
                                                common_symbols(store, a, b), pa.theory);
            if (!rep.all_pass())
              throw internal_error("interpolant failed validation: " + rep.detail);
          }
          out << "unsat\n" << print_formula(store, res.interpolant, popts) << "\n";
          return 0;
        }
      }
      throw internal_error("unreachable");
    }

    case CliConfig::Mode::Check: {
      if (cfg.inputs.size() != 3) throw error("check mode expects A, B and interpolant files");
      Problem pa = parse_problem(store, slurp(cfg.inputs[0]));
      Problem pb = parse_problem(store, slurp(cfg.inputs[1]));
      Problem pi = parse_problem(store, slurp(cfg.inputs[2]));
      require_same_header(pa, pb);
      require_same_header(pa, pi);
      if (pi.assertions.size() != 1)
        throw error("interpolant file must assert exactly one formula");
      Fml a = pa.conjunction(), b = pb.conjunction();
      CheckReport rep = check_interpolant(store, a, b, pi.assertions[0],
                                          common_symbols(store, a, b), pa.theory);
      print_report(out, rep);
      return rep.all_pass() ? 0 : 3;
    }
  }
  throw internal_error("unreachable");
}

}  // namespace

int run_cli(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return run(cfg, out);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ard
