#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpv/herbrand.hpp"
#include "lpv/term.hpp"
#include "lpv/vcreport.hpp"

namespace lpv {

/// Natural-valued term measure, total on ground terms. len counts cons
/// cells along the tail spine (0 on a non-list), natval counts the s-prefix
/// of the first-argument spine, size counts all symbol occurrences.
struct NatExpr {
  enum class Kind { Len, NatVal, Size, Const, Plus, Max };
  Kind kind = Kind::Const;
  std::uint64_t value = 0;     // Const
  std::vector<Term> terms;     // Len/NatVal/Size: one term
  std::vector<NatExpr> args;   // Plus/Max: two subexpressions
};

/// Decidable guard over ground bindings of the pattern variables.
struct Guard {
  enum class Kind {
    True, False, Eq, Neq, IsList, IsNat, Concat, Cmp, And, Or, Not
  };
  enum class CmpOp { Eq, Le, Lt, Gt, Ge };
  Kind kind = Kind::True;
  CmpOp cmp = CmpOp::Eq;
  std::vector<Term> terms;     // Eq/Neq: 2, IsList/IsNat: 1, Concat: 3
  std::vector<NatExpr> exprs;  // Cmp: 2
  std::vector<Guard> kids;     // And/Or: 2, Not: 1
};

std::uint64_t list_len(const Term& t);
std::uint64_t nat_val(const Term& t);
bool term_is_cons(const Term& t);
bool term_is_nil(const Term& t);
bool term_is_proper_list(const Term& t);
bool term_is_numeral(const Term& t);

/// True iff `a` is a proper list and grafting `b` onto its tail spine gives
/// exactly `c` (so concat([],B,B) holds for every B).
bool concat_holds(const Term& a, const Term& b, const Term& c);

std::uint64_t eval_natexpr(const NatExpr& e, const Substitution& binding);
bool eval_guard(const Guard& g, const Substitution& binding);

/// One-way matching of a ground atom against a pattern; repeated pattern
/// variables force equal subterms.
std::optional<Substitution> match_atom(const Atom& pattern, const Atom& ground);

struct SpecRule {
  Atom pattern;
  Guard guard;
};

/// A decidable Herbrand interpretation: a ground atom is in the
/// interpretation iff some rule pattern matches it with a true guard.
/// Unmatched atoms are out (closed default); rule order is irrelevant.
struct SpecInterpretation {
  std::string name = "spec";
  std::vector<SpecRule> rules;

  bool contains(const Atom& ground_atom) const;
  void collect_symbols(Signature& sig) const;
};

/// Approximate specification pair: S_compl should bracket the intended
/// semantics from below and S_corr from above.
struct SpecPair {
  SpecInterpretation corr;
  SpecInterpretation compl_;
};

enum class Classification { RequiredTrue, DontCare, RequiredFalse };

Classification classify(const SpecPair& pair, const Atom& ground_atom);

/// Ground-atom level mapping; first matching rule wins, unmatched atoms get
/// the default expression (0 unless the file overrides it).
struct LevelRule {
  Atom pattern;
  NatExpr expr;
};

struct LevelMapping {
  std::vector<LevelRule> rules;
  NatExpr default_expr;  // Const 0 by default

  std::uint64_t eval(const Atom& ground_atom) const;
  void collect_symbols(Signature& sig) const;
};

SpecInterpretation parse_spec(const std::string& text,
                              const std::string& name = "spec");
LevelMapping parse_levels(const std::string& text);

bool eval_spec(const SpecInterpretation& spec, const Atom& ground_atom);
std::uint64_t eval_level(const LevelMapping& lm, const Atom& ground_atom);

/// Membership bitmap of a spec over the slice base, indexed by atom id.
std::vector<bool> spec_bitset(const SpecInterpretation& spec,
                              const HerbrandSlice& slice);

/// Level of every base atom, indexed by atom id.
std::vector<std::uint64_t> level_values(const LevelMapping& lm,
                                        const HerbrandSlice& slice);

/// Lists every base atom in S_compl but not in S_corr; pass iff none.
VcReport check_pair_consistency(const SpecPair& pair,
                                const HerbrandSlice& slice);

}  // namespace lpv
