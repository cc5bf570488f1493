#include "lpv/herbrand.hpp"

#include <algorithm>

#include "lpv/errors.hpp"

namespace lpv {

namespace {

void insert_sym(std::vector<Sym>& v, Sym s) {
  auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || *it != s) v.insert(it, std::move(s));
}

}  // namespace

void Signature::add_function(const std::string& name, std::size_t arity) {
  insert_sym(functions, Sym{name, arity});
}

void Signature::add_predicate(const std::string& name, std::size_t arity) {
  insert_sym(predicates, Sym{name, arity});
}

void Signature::add_term(const Term& t) {
  if (t.var) return;
  add_function(t.functor, t.args.size());
  for (const auto& a : t.args) add_term(a);
}

void Signature::add_atom(const Atom& a) {
  add_predicate(a.pred, a.arity());
  for (const auto& t : a.args) add_term(t);
}

void Signature::add_program(const Program& p) {
  for (const auto& c : p.clauses) {
    add_atom(c.head);
    for (const auto& l : c.body) add_atom(l.atom);
  }
}

bool Signature::has_constant() const {
  for (const auto& f : functions)
    if (f.arity == 0) return true;
  return false;
}

void Signature::ensure_constant() {
  if (has_constant()) return;
  add_function("c0", 0);
  c0_injected = true;
}

Signature collect_signature(const Program& p, const std::vector<Atom>& extra) {
  Signature sig;
  sig.add_program(p);
  for (const auto& a : extra) sig.add_atom(a);
  sig.ensure_constant();
  return sig;
}

std::optional<std::uint32_t> HerbrandSlice::term_id(const Term& t) const {
  auto it = term_index_.find(t);
  if (it == term_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> HerbrandSlice::pred_index(
    const std::string& name, std::size_t arity) const {
  for (std::size_t i = 0; i < preds_.size(); ++i)
    if (preds_[i].name == name && preds_[i].arity == arity) return i;
  return std::nullopt;
}

std::optional<std::uint64_t> HerbrandSlice::atom_id(const Atom& a) const {
  auto p = pred_index(a.pred, a.arity());
  if (!p) return std::nullopt;
  std::uint64_t rank = 0;
  for (const auto& arg : a.args) {
    auto tid = term_id(arg);
    if (!tid) return std::nullopt;
    rank = rank * universe_.size() + *tid;
  }
  return preds_[*p].offset + rank;
}

Atom HerbrandSlice::atom_at(std::uint64_t id) const {
  // find the predicate block containing id
  std::size_t lo = 0, hi = preds_.size();
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (preds_[mid].offset <= id)
      lo = mid;
    else
      hi = mid;
  }
  const PredEntry& p = preds_[lo];
  std::uint64_t rest = id - p.offset;
  Atom a{p.name, std::vector<Term>(p.arity)};
  for (std::size_t i = p.arity; i-- > 0;) {
    a.args[i] = universe_[rest % universe_.size()];
    rest /= universe_.size();
  }
  return a;
}

HerbrandSlice herbrand_slice(const Signature& sig, unsigned depth,
                             std::uint64_t cap) {
  if (cap == 0) throw ResourceExceeded("cap must be positive");
  HerbrandSlice s;
  s.sig_ = sig;
  s.depth_ = depth;
  s.cap_ = cap;

  // Terms grouped by weight; a term of weight w uses only strictly lighter
  // arguments, so one pass per weight level suffices.
  std::vector<std::vector<Term>> by_weight(depth + 1);
  std::uint64_t count = 0;
  auto add = [&](std::vector<Term>& level, Term t) {
    if (++count > cap)
      throw ResourceExceeded("Herbrand universe exceeds cap " +
                             std::to_string(cap));
    level.push_back(std::move(t));
  };
  for (const auto& f : sig.functions)
    if (f.arity == 0) add(by_weight[0], Term::constant(f.name));

  std::vector<Term> args;
  for (unsigned w = 1; w <= depth; ++w) {
    for (const auto& f : sig.functions) {
      if (f.arity == 0 || f.arity > w) continue;
      unsigned budget = w - static_cast<unsigned>(f.arity);
      args.assign(f.arity, Term{});
      // enumerate argument tuples whose weights sum to exactly `budget`
      auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
        if (pos + 1 == f.arity) {
          for (const auto& t : by_weight[remaining]) {
            args[pos] = t;
            add(by_weight[w], Term::compound(f.name, args));
          }
          return;
        }
        for (unsigned wi = 0; wi <= remaining; ++wi) {
          for (const auto& t : by_weight[wi]) {
            args[pos] = t;
            self(self, pos + 1, remaining - wi);
          }
        }
      };
      rec(rec, 0, budget);
    }
  }

  for (auto& level : by_weight)
    for (auto& t : level) s.universe_.push_back(std::move(t));
  std::sort(s.universe_.begin(), s.universe_.end(), term_less);
  s.term_index_.reserve(s.universe_.size());
  for (std::uint32_t i = 0; i < s.universe_.size(); ++i)
    s.term_index_.emplace(s.universe_[i], i);

  std::uint64_t u = s.universe_.size();
  std::uint64_t total = 0;
  for (const auto& p : sig.predicates) {
    unsigned __int128 block = 1;
    for (std::size_t i = 0; i < p.arity && block <= cap; ++i) block *= u;
    if (block + total > cap)
      throw ResourceExceeded(
          "Herbrand base exceeds cap " + std::to_string(cap) +
          " (universe has " + std::to_string(u) + " terms)");
    s.preds_.push_back(
        HerbrandSlice::PredEntry{p.name, p.arity, total});
    total += static_cast<std::uint64_t>(block);
  }
  s.base_size_ = total;
  return s;
}

void ground_instances(const Clause& clause, const HerbrandSlice& slice,
                      const std::function<void(const Clause&)>& fn,
                      std::uint64_t cap) {
  std::vector<std::string> vars = clause_vars(clause);
  std::uint64_t u = slice.universe().size();
  if (u == 0 && !vars.empty())
    throw ResourceExceeded("empty universe with a nonpropositional clause");

  unsigned __int128 count = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    count *= u;
    if (count > cap)
      throw ResourceExceeded("ground instance count exceeds cap " +
                             std::to_string(cap));
  }

  Substitution s;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == vars.size()) {
      fn(s.apply(clause));
      return;
    }
    for (std::uint32_t id = 0; id < u; ++id) {
      Substitution next = s;
      next.bind(vars[pos], slice.term_at(id));
      std::swap(s, next);
      self(self, pos + 1);
      std::swap(s, next);
    }
  };
  rec(rec, 0);
}

}  // namespace lpv
