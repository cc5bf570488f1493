#include "lpv/randomgen.hpp"

#include <algorithm>

namespace lpv {

Signature random_signature(std::uint64_t seed, std::size_t max_functions,
                           std::size_t max_predicates) {
  SplitMix64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  Signature sig;
  sig.add_function("a", 0);
  std::size_t extra = max_functions > 1 ? rng.below(max_functions) : 0;
  const Sym pool[] = {{"b", 0}, {"s", 1}, {"f", 1}, {"g", 2}};
  for (std::size_t i = 0; i < extra; ++i) {
    const Sym& s = pool[rng.below(4)];
    sig.add_function(s.name, s.arity);
  }
  std::size_t npreds = 1 + rng.below(max_predicates);
  const char* names[] = {"p", "q", "r"};
  for (std::size_t i = 0; i < npreds && i < 3; ++i)
    sig.add_predicate(names[i], rng.below(3));
  return sig;
}

namespace {

Term random_const(SplitMix64& rng, const Signature& sig) {
  std::vector<const Sym*> consts;
  for (const auto& f : sig.functions)
    if (f.arity == 0) consts.push_back(&f);
  return Term::constant(consts[rng.below(consts.size())]->name);
}

/// depth-<=1 term over the given variable pool
Term random_shallow_term(SplitMix64& rng, const Signature& sig,
                         const std::vector<std::string>& vars,
                         bool allow_vars) {
  std::uint64_t roll = rng.below(10);
  if (allow_vars && !vars.empty() && roll < 5)
    return Term::variable(vars[rng.below(vars.size())]);
  if (roll < 8) return random_const(rng, sig);
  std::vector<const Sym*> fns;
  for (const auto& f : sig.functions)
    if (f.arity > 0) fns.push_back(&f);
  if (fns.empty()) return random_const(rng, sig);
  const Sym* f = fns[rng.below(fns.size())];
  std::vector<Term> args;
  for (std::size_t i = 0; i < f->arity; ++i) {
    if (allow_vars && !vars.empty() && rng.below(2))
      args.push_back(Term::variable(vars[rng.below(vars.size())]));
    else
      args.push_back(random_const(rng, sig));
  }
  return Term::compound(f->name, std::move(args));
}

Atom random_atom(SplitMix64& rng, const Signature& sig,
                 const std::vector<std::string>& vars, bool allow_vars) {
  const Sym& p = sig.predicates[rng.below(sig.predicates.size())];
  Atom a{p.name, {}};
  for (std::size_t i = 0; i < p.arity; ++i)
    a.args.push_back(random_shallow_term(rng, sig, vars, allow_vars));
  return a;
}

}  // namespace

Program random_program(std::uint64_t seed, const Signature& sig,
                       std::size_t clause_count, std::size_t max_body_len,
                       double negation_rate) {
  SplitMix64 rng(seed * 0x517cc1b727220a95ull + 3);
  const std::vector<std::string> head_pool = {"X", "Y", "Z"};
  Program p;
  for (std::size_t ci = 0; ci < clause_count; ++ci) {
    Clause c;
    c.head = random_atom(rng, sig, head_pool, true);
    std::vector<std::string> head_vars;
    collect_vars(c.head, head_vars);
    std::size_t blen = max_body_len ? rng.below(max_body_len + 1) : 0;
    for (std::size_t i = 0; i < blen; ++i) {
      bool positive = !rng.chance(negation_rate);
      c.body.push_back(
          Literal{positive, random_atom(rng, sig, head_vars, true)});
    }
    p.clauses.push_back(std::move(c));
  }
  return p;
}

namespace {

Guard random_guard(SplitMix64& rng, const std::vector<std::string>& vars,
                   unsigned depth) {
  auto var_term = [&]() { return Term::variable(vars[rng.below(vars.size())]); };
  if (depth > 0 && !vars.empty() && rng.below(3) == 0) {
    Guard g;
    std::uint64_t k = rng.below(3);
    g.kind = k == 0 ? Guard::Kind::And : k == 1 ? Guard::Kind::Or
                                                : Guard::Kind::Not;
    g.kids.push_back(random_guard(rng, vars, depth - 1));
    if (g.kind != Guard::Kind::Not)
      g.kids.push_back(random_guard(rng, vars, depth - 1));
    return g;
  }
  Guard g;
  if (vars.empty()) {
    g.kind = rng.below(2) ? Guard::Kind::True : Guard::Kind::False;
    return g;
  }
  switch (rng.below(6)) {
    case 0: g.kind = Guard::Kind::True; break;
    case 1: g.kind = Guard::Kind::False; break;
    case 2:
      g.kind = Guard::Kind::IsNat;
      g.terms.push_back(var_term());
      break;
    case 3:
      g.kind = Guard::Kind::IsList;
      g.terms.push_back(var_term());
      break;
    case 4: {
      g.kind = Guard::Kind::Cmp;
      g.cmp = rng.below(2) ? Guard::CmpOp::Le : Guard::CmpOp::Gt;
      NatExpr m;
      m.kind = rng.below(2) ? NatExpr::Kind::Size : NatExpr::Kind::NatVal;
      m.terms.push_back(var_term());
      NatExpr c;
      c.kind = NatExpr::Kind::Const;
      c.value = rng.below(3);
      g.exprs.push_back(std::move(m));
      g.exprs.push_back(std::move(c));
      break;
    }
    default:
      g.kind = Guard::Kind::Eq;
      g.terms.push_back(var_term());
      g.terms.push_back(var_term());
      break;
  }
  return g;
}

}  // namespace

SpecInterpretation random_spec(std::uint64_t seed, const Signature& sig) {
  SplitMix64 rng(seed * 0xbf58476d1ce4e5b9ull + 7);
  SpecInterpretation spec;
  spec.name = "random";
  std::uint64_t mode = rng.below(10);
  if (mode == 0) return spec;  // empty interpretation
  const std::vector<std::string> pool = {"X", "Y"};
  for (const auto& p : sig.predicates) {
    if (mode == 1) {  // total interpretation
      SpecRule rule;
      rule.pattern = Atom{p.name, {}};
      for (std::size_t i = 0; i < p.arity; ++i)
        rule.pattern.args.push_back(Term::variable("X" + std::to_string(i)));
      rule.guard.kind = Guard::Kind::True;
      spec.rules.push_back(std::move(rule));
      continue;
    }
    std::uint64_t nrules = rng.below(3);
    for (std::uint64_t ri = 0; ri < nrules; ++ri) {
      SpecRule rule;
      rule.pattern = Atom{p.name, {}};
      for (std::size_t i = 0; i < p.arity; ++i) {
        if (rng.below(4) == 0)
          rule.pattern.args.push_back(random_const(rng, sig));
        else
          rule.pattern.args.push_back(
              Term::variable(pool[rng.below(pool.size())]));
      }
      std::vector<std::string> pattern_vars;
      collect_vars(rule.pattern, pattern_vars);
      rule.guard = random_guard(rng, pattern_vars, 2);
      spec.rules.push_back(std::move(rule));
    }
  }
  return spec;
}

LevelMapping random_levels(std::uint64_t seed, const Signature& sig) {
  SplitMix64 rng(seed * 0x94d049bb133111ebull + 11);
  LevelMapping lm;
  lm.default_expr.kind = NatExpr::Kind::Const;
  lm.default_expr.value = 0;
  for (const auto& p : sig.predicates) {
    LevelRule rule;
    rule.pattern = Atom{p.name, {}};
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < p.arity; ++i) {
      vars.push_back("X" + std::to_string(i));
      rule.pattern.args.push_back(Term::variable(vars.back()));
    }
    NatExpr e;
    e.kind = NatExpr::Kind::Const;
    e.value = rng.below(4);
    for (const auto& v : vars) {
      if (rng.below(2) == 0) continue;
      NatExpr m;
      std::uint64_t k = rng.below(3);
      m.kind = k == 0   ? NatExpr::Kind::Size
               : k == 1 ? NatExpr::Kind::NatVal
                        : NatExpr::Kind::Len;
      m.terms.push_back(Term::variable(v));
      NatExpr plus;
      plus.kind = NatExpr::Kind::Plus;
      plus.args.push_back(std::move(e));
      plus.args.push_back(std::move(m));
      e = std::move(plus);
    }
    rule.expr = std::move(e);
    lm.rules.push_back(std::move(rule));
  }
  return lm;
}

SpecInterpretation spec_from_bitset(const std::vector<bool>& bits,
                                    const HerbrandSlice& slice,
                                    const std::string& name) {
  SpecInterpretation spec;
  spec.name = name;
  for (std::uint64_t id = 0; id < bits.size(); ++id) {
    if (!bits[id]) continue;
    SpecRule rule;
    rule.pattern = slice.atom_at(id);
    rule.guard.kind = Guard::Kind::True;
    spec.rules.push_back(std::move(rule));
  }
  return spec;
}

}  // namespace lpv
