#include "lpv/solve.hpp"

#include <algorithm>
#include <functional>

namespace lpv {

namespace {

class Solver {
 public:
  Solver(const Program& p, std::uint64_t budget) : prog_(p), budget_(budget) {}

  enum class St { Ok, Stop, Floundered, Bound };

  /// Runs the whole derivation tree for `goal` under `s`, calling `emit` on
  /// each success; `emit` returns false to cut the search short. Derivations
  /// deeper than kMaxDepth are reported as BoundExceeded so runaway goals
  /// cannot exhaust the machine stack before the step budget.
  St search(const std::vector<Literal>& goal, const Substitution& s,
            const std::function<bool(const Substitution&)>& emit,
            unsigned depth) {
    if (budget_ == 0 || depth > kMaxDepth) return St::Bound;
    --budget_;
    if (goal.empty()) return emit(s) ? St::Ok : St::Stop;

    const Literal& selected = goal.front();
    Atom a = s.apply(selected.atom);

    if (!selected.positive) {
      if (!atom_is_ground(a)) {
        floundered_goal_ = "\\+ " + to_string(a);
        return St::Floundered;
      }
      bool refuted = false;
      std::vector<Literal> sub{Literal{true, a}};
      St st = search(
          sub, Substitution{},
          [&](const Substitution&) {
            refuted = true;
            return false;  // one success settles the negation
          },
          depth + 1);
      if (st == St::Floundered || st == St::Bound) return st;
      if (refuted) return St::Ok;  // negation fails; branch is exhausted
      std::vector<Literal> rest(goal.begin() + 1, goal.end());
      return search(rest, s, emit, depth + 1);
    }

    std::vector<Literal> rest(goal.begin() + 1, goal.end());
    for (const Clause& clause : prog_.clauses) {
      Clause renamed = rename_apart(clause);
      auto mgu = unify_atoms(a, renamed.head);
      if (!mgu) continue;
      Substitution combined = s;
      bool ok = true;
      for (const auto& [v, t] : mgu->bindings())
        if (!combined.bind(v, t)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::vector<Literal> next = renamed.body;
      next.insert(next.end(), rest.begin(), rest.end());
      St st = search(next, combined, emit, depth + 1);
      if (st != St::Ok) return st;
    }
    return St::Ok;
  }

  static constexpr unsigned kMaxDepth = 4000;

  const std::string& floundered_goal() const { return floundered_goal_; }

 private:
  Clause rename_apart(const Clause& c) {
    Substitution ren;
    for (const auto& v : clause_vars(c))
      ren.bind(v, Term::variable("_G" + std::to_string(++rename_counter_)));
    return ren.apply(c);
  }

  const Program& prog_;
  std::uint64_t budget_;
  int rename_counter_ = 0;
  std::string floundered_goal_;
};

}  // namespace

SolveOutcome sldnf_solve(const Program& p, const std::vector<Literal>& query,
                         std::uint64_t step_bound) {
  std::vector<std::string> query_vars;
  for (const auto& l : query) collect_vars(l.atom, query_vars);

  SolveOutcome out;
  Solver solver(p, step_bound);
  auto st = solver.search(
      query, Substitution{},
      [&](const Substitution& s) {
        Substitution answer = s.restricted_to(query_vars);
        if (std::find(out.answers.begin(), out.answers.end(), answer) ==
            out.answers.end())
          out.answers.push_back(std::move(answer));
        return true;
      },
      0);
  switch (st) {
    case Solver::St::Bound:
      out.status = SolveStatus::BoundExceeded;
      out.answers.clear();
      break;
    case Solver::St::Floundered:
      out.status = SolveStatus::Floundered;
      out.floundered_goal = solver.floundered_goal();
      out.answers.clear();
      break;
    default:
      out.status = SolveStatus::Answers;
      break;
  }
  return out;
}

}  // namespace lpv
