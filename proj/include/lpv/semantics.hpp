#pragma once

#include <cstdint>
#include <vector>

#include "lpv/herbrand.hpp"
#include "lpv/spec.hpp"
#include "lpv/term.hpp"
#include "lpv/vcreport.hpp"

namespace lpv {

struct GroundLit {
  bool positive;
  std::uint64_t atom;
};

struct GroundClause {
  std::uint32_t clause_index;  // position in the source program, 0-based
  std::uint64_t head;
  std::vector<GroundLit> body;
};

/// Ground restriction of a program to a slice: every instance whose head and
/// body atoms all lie in the base, in deterministic order. Instances with an
/// atom outside the base are only counted (`frontier`).
struct GroundProgram {
  const HerbrandSlice* slice = nullptr;
  const Program* source = nullptr;
  std::vector<GroundClause> clauses;
  std::vector<std::vector<std::uint32_t>> by_head;
  std::uint64_t frontier = 0;
  bool definite = true;

  Clause instance_clause(std::uint32_t idx) const;
};

GroundProgram ground_program(const Program& p, const HerbrandSlice& slice,
                             std::uint64_t cap = kDefaultCap);

struct TwoValuedInterp {
  std::vector<bool> t;

  bool operator==(const TwoValuedInterp&) const = default;
};

/// Disjoint true/false sets over the base; atoms in neither are undefined.
struct ThreeValuedInterp {
  std::vector<bool> t, f;

  bool consistent() const {
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] && f[i]) return false;
    return true;
  }
  bool operator==(const ThreeValuedInterp&) const = default;
};

/// Immediate-consequence step for definite ground programs.
TwoValuedInterp tp_step(const GroundProgram& gp, const TwoValuedInterp& in);

struct TpResult {
  TwoValuedInterp interp;
  unsigned iterations;
};

/// Least fixpoint of tp_step from the empty interpretation.
TpResult tp_lfp(const GroundProgram& gp);

/// Three-valued consequence step: heads with a true body become true, atoms
/// all of whose instances have a false body literal become false (atoms with
/// no instances are false after one step).
ThreeValuedInterp phi_step(const GroundProgram& gp,
                           const ThreeValuedInterp& in);

struct PhiResult {
  ThreeValuedInterp interp;
  unsigned iterations;
};

/// Fixpoint of phi_step from the empty three-valued interpretation; on a
/// finite base it stabilizes within 2*|base| steps.
PhiResult phi_fixpoint(const GroundProgram& gp);

/// Compares a computed three-valued semantics against a specification pair:
/// S_compl must be true, true atoms must be in S_corr, no S_compl atom may
/// be false, and every atom outside S_corr must be false.
VcReport oracle_check(const SpecPair& pair, const ThreeValuedInterp& sem,
                      const HerbrandSlice& slice);

}  // namespace lpv
