#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lpv {

/// First-order term. A constant is a compound with zero arguments.
struct Term {
  bool var = false;
  std::string functor;  // variable name when var == true
  std::vector<Term> args;

  static Term variable(std::string name) {
    return Term{true, std::move(name), {}};
  }
  static Term compound(std::string f, std::vector<Term> as = {}) {
    return Term{false, std::move(f), std::move(as)};
  }
  static Term constant(std::string name) { return compound(std::move(name)); }

  bool operator==(const Term&) const = default;
};

struct Atom {
  std::string pred;
  std::vector<Term> args;

  std::size_t arity() const { return args.size(); }
  bool operator==(const Atom&) const = default;
};

struct Literal {
  bool positive = true;
  Atom atom;

  bool operator==(const Literal&) const = default;
};

struct Clause {
  Atom head;
  std::vector<Literal> body;

  bool is_fact() const { return body.empty(); }
  bool is_definite() const {
    for (const auto& l : body)
      if (!l.positive) return false;
    return true;
  }
};

enum class ProgramKind { Definite, Normal };

struct Program {
  std::vector<Clause> clauses;

  ProgramKind kind() const {
    for (const auto& c : clauses)
      if (!c.is_definite()) return ProgramKind::Normal;
    return ProgramKind::Definite;
  }
  bool is_definite() const { return kind() == ProgramKind::Definite; }
};

/// Number of symbol occurrences (variables count as one symbol).
std::size_t term_symbols(const Term& t);

/// Canonical size measure: symbol count minus one. Zero for constants,
/// and equal to the nesting depth on chains of unary functors.
std::size_t term_weight(const Term& t);

bool term_is_ground(const Term& t);
bool atom_is_ground(const Atom& a);

/// Appends variable names in first-occurrence order, skipping duplicates.
void collect_vars(const Term& t, std::vector<std::string>& out);
void collect_vars(const Atom& a, std::vector<std::string>& out);
std::vector<std::string> clause_vars(const Clause& c);

/// Total order: variables first (by name), then by weight, functor name,
/// arity, and arguments left to right. Ground atoms and counterexamples are
/// always reported in this order.
int compare_term(const Term& a, const Term& b);
bool term_less(const Term& a, const Term& b);
int compare_atom(const Atom& a, const Atom& b);
bool atom_less(const Atom& a, const Atom& b);

struct TermHash {
  std::size_t operator()(const Term& t) const;
};

/// Rendering follows the input syntax: '.'/2 chains print as lists,
/// everything else as functor(args). No trailing period.
std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const Clause& c);
std::string to_string(const Program& p);

/// Idempotent substitution; bind() keeps the idempotence invariant by
/// resolving the bound term first and substituting into existing ranges.
class Substitution {
 public:
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }

  const Term* lookup(const std::string& var) const;

  /// Binds var to t (after applying the current substitution to t).
  /// Fails on the occur check.
  bool bind(const std::string& var, const Term& t);

  Term apply(const Term& t) const;
  Atom apply(const Atom& a) const;
  Literal apply(const Literal& l) const;
  Clause apply(const Clause& c) const;

  Substitution restricted_to(const std::vector<std::string>& vars) const;

  const std::map<std::string, Term>& bindings() const { return map_; }
  bool operator==(const Substitution&) const = default;

 private:
  std::map<std::string, Term> map_;
};

std::string to_string(const Substitution& s);

/// Most general unifier with occur check; nullopt when not unifiable.
std::optional<Substitution> unify(const Term& a, const Term& b);
std::optional<Substitution> unify_atoms(const Atom& a, const Atom& b);

}  // namespace lpv
