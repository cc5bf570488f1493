#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpv/errors.hpp"
#include "lpv/herbrand.hpp"
#include "lpv/parser.hpp"
#include "lpv/render.hpp"
#include "lpv/semantics.hpp"
#include "lpv/solve.hpp"
#include "lpv/spec.hpp"
#include "lpv/stability.hpp"
#include "lpv/vc.hpp"

namespace {

using namespace lpv;

constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
  std::string check;  // inner check for `stability`
  std::string program_path;
  std::string spec_path;        // positional spec
  std::string spec_compl_path;  // --spec-compl
  std::string levels_path;
  std::string query;
  unsigned depth = kDefaultDepth;
  std::uint64_t cap = kDefaultCap;
  std::uint64_t step_bound = kDefaultStepBound;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::size_t limit = kDefaultReportLimit;
  std::string format = "human";
  std::vector<std::string> consts;

  Format fmt() const {
    return format == "machine" ? Format::Machine : Format::Human;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parsed inputs of one invocation; `positional_is_compl` routes the
/// positional spec to the completeness side for the completeness checks.
struct Inputs {
  Program program;
  SpecPair pair;
  LevelMapping levels;
  std::vector<Literal> query;
  Signature sig;
};

bool positional_is_compl(const std::string& check) {
  return check == "check-semicomplete" || check == "check-complete";
}

Inputs load_inputs(const Options& opt, const std::string& check) {
  Inputs in;
  in.program = parse_program(read_file(opt.program_path));
  if (!opt.spec_path.empty()) {
    SpecInterpretation s = parse_spec(read_file(opt.spec_path), opt.spec_path);
    if (positional_is_compl(check)) {
      in.pair.compl_ = s;
      in.pair.corr = std::move(s);
    } else {
      in.pair.corr = s;
      in.pair.compl_ = std::move(s);  // S_compl defaults to S_corr
    }
  }
  if (!opt.spec_compl_path.empty())
    in.pair.compl_ =
        parse_spec(read_file(opt.spec_compl_path), opt.spec_compl_path);
  if (!opt.levels_path.empty())
    in.levels = parse_levels(read_file(opt.levels_path));
  if (!opt.query.empty()) in.query = parse_query(opt.query);

  in.sig.add_program(in.program);
  in.pair.corr.collect_symbols(in.sig);
  in.pair.compl_.collect_symbols(in.sig);
  in.levels.collect_symbols(in.sig);
  for (const auto& l : in.query) in.sig.add_atom(l.atom);
  for (const auto& c : opt.consts) in.sig.add_function(c, 0);
  in.sig.ensure_constant();
  return in;
}

bool is_pair_check(const std::string& check) {
  return check == "check-correct-normal" ||
         check == "check-complete-normal" || check == "check-terminate";
}

int run_one_check(const Options& opt, const std::string& check) {
  Inputs in = load_inputs(opt, check);
  HerbrandSlice slice = herbrand_slice(in.sig, opt.depth, opt.cap);
  CheckOptions copts{opt.cap, opt.jobs};
  if (is_pair_check(check)) {
    VcReport pc = check_pair_consistency(in.pair, slice);
    if (!pc.pass) {
      std::cout << render_report(pc, opt.fmt(), opt.limit);
      return kExitViolations;
    }
  }
  VcReport r = run_check(check, in.program, in.pair, in.levels, slice, copts);
  std::cout << render_report(r, opt.fmt(), opt.limit);
  return r.pass ? kExitPass : kExitViolations;
}

int run_semantics(const Options& opt) {
  Inputs in = load_inputs(opt, "semantics");
  HerbrandSlice slice = herbrand_slice(in.sig, opt.depth, opt.cap);
  GroundProgram gp = ground_program(in.program, slice, opt.cap);
  PhiResult phi = phi_fixpoint(gp);
  std::ostringstream out[3];
  for (std::uint64_t id = 0; id < slice.base_size(); ++id) {
    int bucket = phi.interp.t[id] ? 0 : phi.interp.f[id] ? 1 : 2;
    out[bucket] << "TFU"[bucket] << ' ' << to_string(slice.atom_at(id))
                << '\n';
  }
  std::cout << out[0].str() << out[1].str() << out[2].str();
  return kExitPass;
}

int run_solve(const Options& opt) {
  Inputs in = load_inputs(opt, "solve");
  if (in.query.empty()) {
    std::cerr << "solve requires --query\n";
    return kExitUsage;
  }
  SolveOutcome out = sldnf_solve(in.program, in.query, opt.step_bound);
  switch (out.status) {
    case SolveStatus::BoundExceeded:
      std::cout << "SOLVE bound-exceeded count=0\n";
      return kExitResource;
    case SolveStatus::Floundered:
      std::cout << "SOLVE floundered count=0 goal=\"" << out.floundered_goal
                << "\"\n";
      return kExitResource;
    case SolveStatus::Answers:
      break;
  }
  std::cout << "SOLVE answers count=" << out.answers.size() << '\n';
  for (const auto& a : out.answers)
    std::cout << "ANSWER " << to_string(a) << '\n';
  return kExitPass;
}

int run_cross_check(const Options& opt) {
  Inputs in = load_inputs(opt, "cross-check");
  HerbrandSlice slice = herbrand_slice(in.sig, opt.depth, opt.cap);
  VcReport pc = check_pair_consistency(in.pair, slice);
  if (!pc.pass) {
    std::cout << render_report(pc, opt.fmt(), opt.limit);
    return kExitViolations;
  }
  GroundProgram gp = ground_program(in.program, slice, opt.cap);
  PhiResult phi = phi_fixpoint(gp);
  VcReport oracle = oracle_check(in.pair, phi.interp, slice);
  oracle.frontier = gp.frontier;

  VcReport agree;
  agree.check = "operational-agreement";
  agree.frontier = gp.frontier;
  for (std::uint64_t id = 0; id < slice.base_size(); ++id) {
    Atom a = slice.atom_at(id);
    SolveOutcome out =
        sldnf_solve(in.program, {Literal{true, a}}, opt.step_bound);
    if (!out.decided()) continue;
    ++agree.checked;
    if (out.succeeded() != static_cast<bool>(phi.interp.t[id]) ||
        out.finitely_failed() != static_cast<bool>(phi.interp.f[id]))
      agree.violations.push_back(Violation{
          ViolationKind::AGREE, std::nullopt, to_string(a),
          std::string(out.succeeded() ? "succeeds" : "finitely fails") +
              " but the fixpoint status is " +
              (phi.interp.t[id] ? "true" : phi.interp.f[id] ? "false"
                                                            : "undefined"),
          id, 0});
  }
  agree.finalize();
  std::cout << render_report(oracle, opt.fmt(), opt.limit)
            << render_report(agree, opt.fmt(), opt.limit);
  return oracle.pass && agree.pass ? kExitPass : kExitViolations;
}

int run_stability(const Options& opt) {
  Inputs in = load_inputs(opt, opt.check);
  VcReport r = stability_check(opt.check, in.program, in.pair, in.levels,
                               in.sig, opt.depth, opt.cap,
                               CheckOptions{opt.cap, opt.jobs});
  std::cout << render_report(r, opt.fmt(), opt.limit);
  return r.pass ? kExitPass : kExitResource;
}

void add_common(CLI::App* cmd, Options& opt, bool with_spec) {
  cmd->add_option("program", opt.program_path, "program file")->required();
  if (with_spec) cmd->add_option("spec", opt.spec_path, "specification file");
  cmd->add_option("--spec-compl", opt.spec_compl_path,
                  "completeness-side specification file");
  cmd->add_option("--levels", opt.levels_path, "level mapping file");
  cmd->add_option("--depth", opt.depth, "Herbrand slice depth");
  cmd->add_option("--cap", opt.cap, "base/instance cap");
  cmd->add_option("--step-bound", opt.step_bound, "interpreter step budget");
  cmd->add_option("--seed", opt.seed, "random seed");
  cmd->add_option("--jobs", opt.jobs, "worker threads");
  cmd->add_option("--limit", opt.limit, "max violations to print");
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"human", "machine"}));
  cmd->add_option("--consts", opt.consts,
                  "extra constants to add to the signature")
      ->delimiter(',');
  cmd->add_option("--query", opt.query, "goal to solve");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lpv: declarative correctness, completeness, and termination "
               "checks for logic programs"};
  app.require_subcommand(1);

  Options opt;
  const char* checks[] = {"check-correct",        "check-semicomplete",
                          "check-complete",       "check-correct-normal",
                          "check-complete-normal", "check-terminate"};
  for (const char* name : checks)
    add_common(app.add_subcommand(name, "run this proof method"), opt, true);
  add_common(app.add_subcommand("semantics",
                                "dump the three-valued fixpoint as T/F/U"),
             opt, true);
  add_common(app.add_subcommand("solve", "run the LDNF interpreter"), opt,
             false);
  add_common(app.add_subcommand("cross-check",
                                "compare the pair and the interpreter "
                                "against the fixpoint semantics"),
             opt, true);
  CLI::App* stab = app.add_subcommand(
      "stability", "rerun a check and the fixpoint at depth and depth+1");
  stab->add_option("check", opt.check, "check to audit")
      ->required()
      ->check(CLI::IsMember({"check-correct", "check-semicomplete",
                             "check-complete", "check-correct-normal",
                             "check-complete-normal", "check-terminate",
                             "semantics"}));
  add_common(stab, opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    if (sub == "semantics") return run_semantics(opt);
    if (sub == "solve") return run_solve(opt);
    if (sub == "cross-check") return run_cross_check(opt);
    if (sub == "stability") return run_stability(opt);
    return run_one_check(opt, sub);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const NotDefiniteError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const PairInconsistentError& e) {
    std::cerr << e.what() << '\n';
    return kExitViolations;
  } catch (const ResourceExceeded& e) {
    std::cerr << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitResource;
  }
}
