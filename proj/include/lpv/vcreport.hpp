#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lpv {

enum class ViolationKind {
  CORR,    // clause instance breaks the model condition
  COV,     // specified atom has no covering instance
  LVL,     // covered, but no covering instance decreases the level
  C1,      // normal-program correctness, clause condition
  C2,      // normal-program correctness, coverage condition
  K1,      // normal-program completeness, positive side
  K2,      // normal-program completeness, negative side
  TERM,    // missing level decrease at a body position
  PAIR,    // S_compl atom outside S_corr
  ORACLE,  // fixpoint semantics disagrees with the specification pair
  AGREE,   // interpreter outcome disagrees with the fixpoint semantics
  STAB,    // verdict or fixpoint status changed between depths
};

const char* to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::optional<std::uint32_t> clause_index;  // 0-based; rendered 1-based
  std::string instance;                       // ground clause or atom
  std::string note;

  // canonical sort keys: subject atom id, then a per-subject position
  std::uint64_t atom_key = 0;
  std::uint64_t pos_key = 0;
};

struct VcReport {
  std::string check;
  bool pass = true;
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::uint64_t frontier = 0;
  bool stability_flag = true;

  bool vacuous() const { return pass && checked == 0; }

  /// Sorts violations canonically and derives the pass flag.
  void finalize();
};

}  // namespace lpv
