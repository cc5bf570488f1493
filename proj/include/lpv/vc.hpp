#pragma once

#include <cstdint>
#include <string>

#include "lpv/herbrand.hpp"
#include "lpv/semantics.hpp"
#include "lpv/spec.hpp"
#include "lpv/term.hpp"
#include "lpv/vcreport.hpp"

namespace lpv {

struct CheckOptions {
  std::uint64_t cap = kDefaultCap;
  std::size_t jobs = 1;
};

/// S_corr must be a model of the program: for every ground instance whose
/// body atoms all satisfy S_corr, the head satisfies S_corr.
VcReport check_correct_definite(const Program& p,
                                const SpecInterpretation& corr,
                                const HerbrandSlice& slice,
                                const CheckOptions& opts = {});

/// Coverage: every specified atom is the head of some instance whose body
/// atoms are all specified.
VcReport check_semicomplete_definite(const Program& p,
                                     const SpecInterpretation& compl_,
                                     const HerbrandSlice& slice,
                                     const CheckOptions& opts = {});

/// Coverage strengthened by a strict level decrease: one instance must cover
/// the atom and decrease against every body atom simultaneously.
VcReport check_complete_definite(const Program& p,
                                 const SpecInterpretation& compl_,
                                 const LevelMapping& lm,
                                 const HerbrandSlice& slice,
                                 const CheckOptions& opts = {});

/// Normal-program correctness against a specification pair:
///   C1: instances whose positive atoms are in S_corr and negative atoms
///       outside S_compl must have their head in S_corr;
///   C2: every S_compl atom has an instance with positive atoms in S_compl
///       and negative atoms outside S_corr.
VcReport check_correct_normal(const Program& p, const SpecPair& pair,
                              const HerbrandSlice& slice,
                              const CheckOptions& opts = {});

/// Normal-program completeness with a level mapping:
///   K1: every S_compl atom has a covering instance (positives in S_compl,
///       negatives outside S_corr) decreasing against every body literal;
///   K2: for every atom outside S_corr, each of its instances carries a
///       lower-level killer literal (a positive outside S_corr or a negative
///       in S_compl).
VcReport check_complete_normal(const Program& p, const SpecPair& pair,
                               const LevelMapping& lm,
                               const HerbrandSlice& slice,
                               const CheckOptions& opts = {});

/// Left-termination: wherever the preceding prefix holds under the pair, the
/// head level strictly exceeds the body literal's level. The correctness
/// conditions on the pair are checked as part of this (they are the premise
/// that makes prefix gating sound for derivations).
VcReport check_terminate(const Program& p, const SpecPair& pair,
                         const LevelMapping& lm, const HerbrandSlice& slice,
                         const CheckOptions& opts = {});

/// Dispatch by CLI check name ("check-correct", "check-complete-normal", ...).
VcReport run_check(const std::string& name, const Program& p,
                   const SpecPair& pair, const LevelMapping& lm,
                   const HerbrandSlice& slice, const CheckOptions& opts = {});

}  // namespace lpv
