#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpv/term.hpp"

namespace lpv {

inline constexpr unsigned kDefaultDepth = 4;
inline constexpr std::uint64_t kDefaultCap = 200000;

struct Sym {
  std::string name;
  std::size_t arity;
  auto operator<=>(const Sym&) const = default;
};

/// Function and predicate symbols of a program/spec/query bundle. Kept
/// sorted; `ensure_constant` injects the fresh constant c0 when the bundle
/// has no arity-0 function, so the Herbrand universe is never empty.
struct Signature {
  std::vector<Sym> functions;
  std::vector<Sym> predicates;
  bool c0_injected = false;

  void add_function(const std::string& name, std::size_t arity);
  void add_predicate(const std::string& name, std::size_t arity);
  void add_term(const Term& t);
  void add_atom(const Atom& a);
  void add_program(const Program& p);
  bool has_constant() const;
  void ensure_constant();
};

/// Program symbols plus extra atom patterns (specs, queries), with c0
/// injection when no constant occurs anywhere.
Signature collect_signature(const Program& p,
                            const std::vector<Atom>& extra = {});

/// Finite approximation of the Herbrand universe and base.
///
/// The universe of depth d holds every ground term with at most d+1 symbol
/// occurrences; on signatures without functors of arity >= 2 this is exactly
/// the set of terms of nesting depth <= d. The base is the set of all atoms
/// whose arguments lie in the universe; it is addressed arithmetically and
/// never materialized. Atom ids enumerate the base in canonical order
/// (predicates sorted by name/arity, arguments lexicographic in term order).
class HerbrandSlice {
 public:
  struct PredEntry {
    std::string name;
    std::size_t arity;
    std::uint64_t offset;  // id of the first atom of this predicate
  };

  const Signature& sig() const { return sig_; }
  unsigned depth() const { return depth_; }
  std::uint64_t cap() const { return cap_; }
  const std::vector<Term>& universe() const { return universe_; }
  std::uint64_t base_size() const { return base_size_; }
  const std::vector<PredEntry>& preds() const { return preds_; }

  std::optional<std::uint32_t> term_id(const Term& t) const;
  const Term& term_at(std::uint32_t id) const { return universe_[id]; }
  bool in_universe(const Term& t) const { return term_id(t).has_value(); }

  std::optional<std::size_t> pred_index(const std::string& name,
                                        std::size_t arity) const;
  std::optional<std::uint64_t> atom_id(const Atom& a) const;
  Atom atom_at(std::uint64_t id) const;

  friend HerbrandSlice herbrand_slice(const Signature& sig, unsigned depth,
                                      std::uint64_t cap);

 private:
  Signature sig_;
  unsigned depth_ = 0;
  std::uint64_t cap_ = kDefaultCap;
  std::vector<Term> universe_;
  std::unordered_map<Term, std::uint32_t, TermHash> term_index_;
  std::vector<PredEntry> preds_;
  std::uint64_t base_size_ = 0;
};

/// Builds the depth-bounded slice. Throws ResourceExceeded when the universe
/// or base would exceed `cap` atoms.
HerbrandSlice herbrand_slice(const Signature& sig, unsigned depth,
                             std::uint64_t cap = kDefaultCap);

/// Streams every ground instance of `clause`, one per assignment of its
/// variables to universe terms, in deterministic order (variables in
/// first-occurrence order, terms in canonical order). Instances whose atoms
/// fall outside the base are included. Throws ResourceExceeded when the
/// assignment count exceeds `cap`.
void ground_instances(const Clause& clause, const HerbrandSlice& slice,
                      const std::function<void(const Clause&)>& fn,
                      std::uint64_t cap = kDefaultCap);

}  // namespace lpv
