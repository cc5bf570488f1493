#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpv/term.hpp"

namespace lpv {

inline constexpr std::uint64_t kDefaultStepBound = 100000;

enum class SolveStatus { Answers, Floundered, BoundExceeded };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Answers;
  /// Computed answers restricted to the query variables, deduplicated, in
  /// discovery order. Empty on finite failure.
  std::vector<Substitution> answers;
  std::string floundered_goal;

  bool decided() const { return status == SolveStatus::Answers; }
  bool succeeded() const { return decided() && !answers.empty(); }
  bool finitely_failed() const { return decided() && answers.empty(); }
};

/// Depth-first LDNF resolution with leftmost selection and source clause
/// order. A negative literal is selected only when ground; otherwise the run
/// flounders. Subsidiary derivations for negation share the global step
/// budget, and exhausting it anywhere poisons the outcome to BoundExceeded.
SolveOutcome sldnf_solve(const Program& p, const std::vector<Literal>& query,
                         std::uint64_t step_bound = kDefaultStepBound);

}  // namespace lpv
