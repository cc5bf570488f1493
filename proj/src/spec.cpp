#include "lpv/spec.hpp"

#include <algorithm>

#include "lpv/errors.hpp"
#include "lpv/lexer.hpp"
#include "lpv/parser.hpp"

namespace lpv {

bool term_is_cons(const Term& t) {
  return !t.var && t.functor == "." && t.args.size() == 2;
}

bool term_is_nil(const Term& t) {
  return !t.var && t.functor == "[]" && t.args.empty();
}

bool term_is_proper_list(const Term& t) {
  const Term* cur = &t;
  while (term_is_cons(*cur)) cur = &cur->args[1];
  return term_is_nil(*cur);
}

bool term_is_numeral(const Term& t) {
  const Term* cur = &t;
  while (!cur->var && cur->functor == "s" && cur->args.size() == 1)
    cur = &cur->args[0];
  return !cur->var && cur->functor == "0" && cur->args.empty();
}

std::uint64_t list_len(const Term& t) {
  std::uint64_t n = 0;
  const Term* cur = &t;
  while (term_is_cons(*cur)) {
    ++n;
    cur = &cur->args[1];
  }
  return n;
}

std::uint64_t nat_val(const Term& t) {
  std::uint64_t n = 0;
  const Term* cur = &t;
  while (!cur->var && cur->functor == "s" && cur->args.size() == 1) {
    ++n;
    cur = &cur->args[0];
  }
  return n;
}

bool concat_holds(const Term& a, const Term& b, const Term& c) {
  const Term* pa = &a;
  const Term* pc = &c;
  while (term_is_cons(*pa)) {
    if (!term_is_cons(*pc)) return false;
    if (!(pa->args[0] == pc->args[0])) return false;
    pa = &pa->args[1];
    pc = &pc->args[1];
  }
  if (!term_is_nil(*pa)) return false;
  return *pc == b;
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

}  // namespace

std::uint64_t eval_natexpr(const NatExpr& e, const Substitution& binding) {
  switch (e.kind) {
    case NatExpr::Kind::Len:
      return list_len(binding.apply(e.terms[0]));
    case NatExpr::Kind::NatVal:
      return nat_val(binding.apply(e.terms[0]));
    case NatExpr::Kind::Size:
      return term_symbols(binding.apply(e.terms[0]));
    case NatExpr::Kind::Const:
      return e.value;
    case NatExpr::Kind::Plus:
      return sat_add(eval_natexpr(e.args[0], binding),
                     eval_natexpr(e.args[1], binding));
    case NatExpr::Kind::Max:
      return std::max(eval_natexpr(e.args[0], binding),
                      eval_natexpr(e.args[1], binding));
  }
  return 0;
}

bool eval_guard(const Guard& g, const Substitution& binding) {
  switch (g.kind) {
    case Guard::Kind::True:
      return true;
    case Guard::Kind::False:
      return false;
    case Guard::Kind::Eq:
      return binding.apply(g.terms[0]) == binding.apply(g.terms[1]);
    case Guard::Kind::Neq:
      return !(binding.apply(g.terms[0]) == binding.apply(g.terms[1]));
    case Guard::Kind::IsList:
      return term_is_proper_list(binding.apply(g.terms[0]));
    case Guard::Kind::IsNat:
      return term_is_numeral(binding.apply(g.terms[0]));
    case Guard::Kind::Concat:
      return concat_holds(binding.apply(g.terms[0]), binding.apply(g.terms[1]),
                          binding.apply(g.terms[2]));
    case Guard::Kind::Cmp: {
      std::uint64_t l = eval_natexpr(g.exprs[0], binding);
      std::uint64_t r = eval_natexpr(g.exprs[1], binding);
      switch (g.cmp) {
        case Guard::CmpOp::Eq: return l == r;
        case Guard::CmpOp::Le: return l <= r;
        case Guard::CmpOp::Lt: return l < r;
        case Guard::CmpOp::Gt: return l > r;
        case Guard::CmpOp::Ge: return l >= r;
      }
      return false;
    }
    case Guard::Kind::And:
      return eval_guard(g.kids[0], binding) && eval_guard(g.kids[1], binding);
    case Guard::Kind::Or:
      return eval_guard(g.kids[0], binding) || eval_guard(g.kids[1], binding);
    case Guard::Kind::Not:
      return !eval_guard(g.kids[0], binding);
  }
  return false;
}

std::optional<Substitution> match_atom(const Atom& pattern, const Atom& ground) {
  // the ground side is variable-free, so unification is one-way matching
  return unify_atoms(pattern, ground);
}

bool SpecInterpretation::contains(const Atom& ground_atom) const {
  for (const auto& rule : rules) {
    auto binding = match_atom(rule.pattern, ground_atom);
    if (binding && eval_guard(rule.guard, *binding)) return true;
  }
  return false;
}

namespace {

void collect_natexpr_symbols(const NatExpr& e, Signature& sig) {
  for (const auto& t : e.terms) sig.add_term(t);
  for (const auto& a : e.args) collect_natexpr_symbols(a, sig);
}

void collect_guard_symbols(const Guard& g, Signature& sig) {
  for (const auto& t : g.terms) sig.add_term(t);
  for (const auto& e : g.exprs) collect_natexpr_symbols(e, sig);
  for (const auto& k : g.kids) collect_guard_symbols(k, sig);
}

}  // namespace

void SpecInterpretation::collect_symbols(Signature& sig) const {
  for (const auto& rule : rules) {
    sig.add_atom(rule.pattern);
    collect_guard_symbols(rule.guard, sig);
  }
}

Classification classify(const SpecPair& pair, const Atom& ground_atom) {
  if (pair.compl_.contains(ground_atom)) return Classification::RequiredTrue;
  if (!pair.corr.contains(ground_atom)) return Classification::RequiredFalse;
  return Classification::DontCare;
}

std::uint64_t LevelMapping::eval(const Atom& ground_atom) const {
  for (const auto& rule : rules) {
    auto binding = match_atom(rule.pattern, ground_atom);
    if (binding) return eval_natexpr(rule.expr, *binding);
  }
  return eval_natexpr(default_expr, Substitution{});
}

void LevelMapping::collect_symbols(Signature& sig) const {
  for (const auto& rule : rules) {
    sig.add_atom(rule.pattern);
    collect_natexpr_symbols(rule.expr, sig);
  }
  collect_natexpr_symbols(default_expr, sig);
}

bool eval_spec(const SpecInterpretation& spec, const Atom& ground_atom) {
  return spec.contains(ground_atom);
}

std::uint64_t eval_level(const LevelMapping& lm, const Atom& ground_atom) {
  return lm.eval(ground_atom);
}

std::vector<bool> spec_bitset(const SpecInterpretation& spec,
                              const HerbrandSlice& slice) {
  std::vector<bool> bits(slice.base_size(), false);
  for (std::uint64_t id = 0; id < slice.base_size(); ++id)
    bits[id] = spec.contains(slice.atom_at(id));
  return bits;
}

std::vector<std::uint64_t> level_values(const LevelMapping& lm,
                                        const HerbrandSlice& slice) {
  std::vector<std::uint64_t> vals(slice.base_size(), 0);
  for (std::uint64_t id = 0; id < slice.base_size(); ++id)
    vals[id] = lm.eval(slice.atom_at(id));
  return vals;
}

VcReport check_pair_consistency(const SpecPair& pair,
                                const HerbrandSlice& slice) {
  VcReport r;
  r.check = "pair-consistency";
  r.checked = slice.base_size();
  for (std::uint64_t id = 0; id < slice.base_size(); ++id) {
    Atom a = slice.atom_at(id);
    if (pair.compl_.contains(a) && !pair.corr.contains(a)) {
      Violation v{ViolationKind::PAIR, std::nullopt, to_string(a),
                  "atom in S_compl but not in S_corr", id, 0};
      r.violations.push_back(std::move(v));
    }
  }
  r.finalize();
  return r;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using detail::AnonVars;

// A comparison operand is either a plain term, an arithmetic expression, or
// an integer literal that could be read as either.
struct Operand {
  enum class Kind { TermOnly, NatStrict, IntAmbig };
  Kind kind;
  Term term;     // TermOnly / IntAmbig (desugared numeral)
  NatExpr nat;   // NatStrict / IntAmbig (constant)
  int line, column;
};

NatExpr nat_const(std::uint64_t v) {
  NatExpr e;
  e.kind = NatExpr::Kind::Const;
  e.value = v;
  return e;
}

NatExpr nat_measure(NatExpr::Kind k, Term t) {
  NatExpr e;
  e.kind = k;
  e.terms.push_back(std::move(t));
  return e;
}

NatExpr nat_binary(NatExpr::Kind k, NatExpr a, NatExpr b) {
  NatExpr e;
  e.kind = k;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

bool is_natexpr_keyword(const Token& t) {
  return t.kind == Tok::Name &&
         (t.text == "len" || t.text == "natval" || t.text == "size" ||
          t.text == "max");
}

NatExpr parse_natexpr(Lexer& lx, AnonVars& anon);

NatExpr parse_nat_primary(Lexer& lx, AnonVars& anon) {
  const Token& t = lx.peek();
  if (t.kind == Tok::Int) {
    std::uint64_t v = lx.next().value;
    return nat_const(v);
  }
  if (t.kind == Tok::Name && (t.text == "len" || t.text == "natval" ||
                              t.text == "size")) {
    NatExpr::Kind k = t.text == "len"      ? NatExpr::Kind::Len
                      : t.text == "natval" ? NatExpr::Kind::NatVal
                                           : NatExpr::Kind::Size;
    lx.next();
    if (lx.peek().kind != Tok::LParen) lx.fail("expected '('");
    lx.next();
    Term arg = detail::parse_term(lx, anon);
    if (lx.peek().kind != Tok::RParen) lx.fail("expected ')'");
    lx.next();
    return nat_measure(k, std::move(arg));
  }
  if (t.kind == Tok::Name && t.text == "max") {
    lx.next();
    if (lx.peek().kind != Tok::LParen) lx.fail("expected '('");
    lx.next();
    NatExpr a = parse_natexpr(lx, anon);
    if (lx.peek().kind != Tok::Comma) lx.fail("expected ',' in max");
    lx.next();
    NatExpr b = parse_natexpr(lx, anon);
    if (lx.peek().kind != Tok::RParen) lx.fail("expected ')'");
    lx.next();
    return nat_binary(NatExpr::Kind::Max, std::move(a), std::move(b));
  }
  lx.fail("expected an arithmetic expression (len/natval/size/max/integer)");
}

NatExpr parse_natexpr(Lexer& lx, AnonVars& anon) {
  NatExpr e = parse_nat_primary(lx, anon);
  while (lx.peek().kind == Tok::Plus) {
    lx.next();
    e = nat_binary(NatExpr::Kind::Plus, std::move(e),
                   parse_nat_primary(lx, anon));
  }
  return e;
}

Operand parse_operand(Lexer& lx, AnonVars& anon) {
  Operand op;
  op.line = lx.peek().line;
  op.column = lx.peek().column;
  if (is_natexpr_keyword(lx.peek())) {
    op.kind = Operand::Kind::NatStrict;
    op.nat = parse_nat_primary(lx, anon);
  } else if (lx.peek().kind == Tok::Int) {
    std::uint64_t v = lx.peek().value;
    op.term = detail::parse_term(lx, anon);  // desugars to a numeral
    op.nat = nat_const(v);
    op.kind = Operand::Kind::IntAmbig;
  } else {
    op.kind = Operand::Kind::TermOnly;
    op.term = detail::parse_term(lx, anon);
  }
  // `+` forces the arithmetic reading of the whole chain
  if (lx.peek().kind == Tok::Plus) {
    if (op.kind == Operand::Kind::TermOnly)
      throw ParseError(op.line, op.column,
                       "'+' expects arithmetic operands");
    op.kind = Operand::Kind::NatStrict;
    while (lx.peek().kind == Tok::Plus) {
      lx.next();
      op.nat = nat_binary(NatExpr::Kind::Plus, std::move(op.nat),
                          parse_nat_primary(lx, anon));
    }
  }
  return op;
}

NatExpr coerce_nat(const Operand& op) {
  if (op.kind == Operand::Kind::TermOnly)
    throw ParseError(op.line, op.column,
                     "arithmetic comparison expects len/natval/size/max or "
                     "an integer, not a term");
  return op.nat;
}

Guard parse_guard(Lexer& lx, AnonVars& anon);

Guard guard_leaf(Guard::Kind k) {
  Guard g;
  g.kind = k;
  return g;
}

Guard parse_guard_primary(Lexer& lx, AnonVars& anon) {
  const Token& t = lx.peek();
  if (t.kind == Tok::NafNot) {
    lx.next();
    Guard g = guard_leaf(Guard::Kind::Not);
    g.kids.push_back(parse_guard_primary(lx, anon));
    return g;
  }
  if (t.kind == Tok::LParen) {
    lx.next();
    Guard g = parse_guard(lx, anon);
    if (lx.peek().kind != Tok::RParen) lx.fail("expected ')'");
    lx.next();
    return g;
  }
  if (t.kind == Tok::Name && t.text == "true" &&  // not a comparison operand
      !is_natexpr_keyword(t)) {
    // peek past 'true': it must not be followed by '(' or a comparison
    Lexer probe = lx;
    probe.next();
    Tok after = probe.peek().kind;
    if (after != Tok::LParen && after != Tok::EqEq && after != Tok::NotEq) {
      lx.next();
      return guard_leaf(Guard::Kind::True);
    }
  }
  if (t.kind == Tok::Name && t.text == "false") {
    Lexer probe = lx;
    probe.next();
    Tok after = probe.peek().kind;
    if (after != Tok::LParen && after != Tok::EqEq && after != Tok::NotEq) {
      lx.next();
      return guard_leaf(Guard::Kind::False);
    }
  }
  if (t.kind == Tok::Name && (t.text == "islist" || t.text == "isnat")) {
    Guard g = guard_leaf(t.text == "islist" ? Guard::Kind::IsList
                                            : Guard::Kind::IsNat);
    lx.next();
    if (lx.peek().kind != Tok::LParen) lx.fail("expected '('");
    lx.next();
    g.terms.push_back(detail::parse_term(lx, anon));
    if (lx.peek().kind != Tok::RParen) lx.fail("expected ')'");
    lx.next();
    return g;
  }
  if (t.kind == Tok::Name && t.text == "concat") {
    Guard g = guard_leaf(Guard::Kind::Concat);
    lx.next();
    if (lx.peek().kind != Tok::LParen) lx.fail("expected '('");
    lx.next();
    for (int i = 0; i < 3; ++i) {
      if (i) {
        if (lx.peek().kind != Tok::Comma) lx.fail("expected ',' in concat");
        lx.next();
      }
      g.terms.push_back(detail::parse_term(lx, anon));
    }
    if (lx.peek().kind != Tok::RParen) lx.fail("expected ')'");
    lx.next();
    return g;
  }

  // comparison: <operand> op <operand>
  Operand lhs = parse_operand(lx, anon);
  Tok op = lx.peek().kind;
  if (op != Tok::EqEq && op != Tok::NotEq && op != Tok::LessEq &&
      op != Tok::Less && op != Tok::Greater && op != Tok::GreaterEq)
    lx.fail("expected a comparison operator");
  lx.next();
  Operand rhs = parse_operand(lx, anon);

  bool arithmetic = lhs.kind == Operand::Kind::NatStrict ||
                    rhs.kind == Operand::Kind::NatStrict ||
                    (op != Tok::EqEq && op != Tok::NotEq);
  if (arithmetic) {
    if (op == Tok::NotEq)
      throw ParseError(lhs.line, lhs.column,
                       "'\\==' compares terms, not arithmetic expressions");
    Guard g = guard_leaf(Guard::Kind::Cmp);
    g.cmp = op == Tok::EqEq       ? Guard::CmpOp::Eq
            : op == Tok::LessEq   ? Guard::CmpOp::Le
            : op == Tok::Less     ? Guard::CmpOp::Lt
            : op == Tok::Greater  ? Guard::CmpOp::Gt
                                  : Guard::CmpOp::Ge;
    g.exprs.push_back(coerce_nat(lhs));
    g.exprs.push_back(coerce_nat(rhs));
    return g;
  }
  Guard g = guard_leaf(op == Tok::EqEq ? Guard::Kind::Eq : Guard::Kind::Neq);
  g.terms.push_back(std::move(lhs.term));
  g.terms.push_back(std::move(rhs.term));
  return g;
}

Guard parse_guard_conj(Lexer& lx, AnonVars& anon) {
  Guard g = parse_guard_primary(lx, anon);
  while (lx.peek().kind == Tok::Comma) {
    lx.next();
    Guard rhs = parse_guard_primary(lx, anon);
    Guard conj = guard_leaf(Guard::Kind::And);
    conj.kids.push_back(std::move(g));
    conj.kids.push_back(std::move(rhs));
    g = std::move(conj);
  }
  return g;
}

Guard parse_guard(Lexer& lx, AnonVars& anon) {
  Guard g = parse_guard_conj(lx, anon);
  while (lx.peek().kind == Tok::Semi) {
    lx.next();
    Guard rhs = parse_guard_conj(lx, anon);
    Guard disj = guard_leaf(Guard::Kind::Or);
    disj.kids.push_back(std::move(g));
    disj.kids.push_back(std::move(rhs));
    g = std::move(disj);
  }
  return g;
}

void guard_vars(const Guard& g, std::vector<std::string>& out) {
  for (const auto& t : g.terms) collect_vars(t, out);
  for (const auto& e : g.exprs) {
    auto rec = [&](auto&& self, const NatExpr& ne) -> void {
      for (const auto& t : ne.terms) collect_vars(t, out);
      for (const auto& a : ne.args) self(self, a);
    };
    rec(rec, e);
  }
  for (const auto& k : g.kids) guard_vars(k, out);
}

void rename_guard_vars(Guard& g, const std::map<std::string, std::string>& ren) {
  for (auto& t : g.terms) detail::rename_vars(t, ren);
  for (auto& e : g.exprs) {
    auto rec = [&](auto&& self, NatExpr& ne) -> void {
      for (auto& t : ne.terms) detail::rename_vars(t, ren);
      for (auto& a : ne.args) self(self, a);
    };
    rec(rec, e);
  }
  for (auto& k : g.kids) rename_guard_vars(k, ren);
}

void rename_natexpr_vars(NatExpr& e,
                         const std::map<std::string, std::string>& ren) {
  for (auto& t : e.terms) detail::rename_vars(t, ren);
  for (auto& a : e.args) rename_natexpr_vars(a, ren);
}

void natexpr_vars(const NatExpr& e, std::vector<std::string>& out) {
  for (const auto& t : e.terms) collect_vars(t, out);
  for (const auto& a : e.args) natexpr_vars(a, out);
}

void require_bound_vars(const std::vector<std::string>& pattern_vars,
                        const std::vector<std::string>& used, int line,
                        int column, const char* where) {
  for (const auto& v : used) {
    if (std::find(pattern_vars.begin(), pattern_vars.end(), v) ==
        pattern_vars.end())
      throw ParseError(line, column,
                       std::string(where) + " references variable " +
                           (detail::is_anon_placeholder(v) ? "_" : v) +
                           " that is not bound by the pattern");
  }
}

}  // namespace

SpecInterpretation parse_spec(const std::string& text,
                              const std::string& name) {
  Lexer lx(text);
  SpecInterpretation spec;
  spec.name = name;
  while (lx.peek().kind != Tok::End) {
    AnonVars anon;
    int line = lx.peek().line, column = lx.peek().column;
    SpecRule rule;
    rule.pattern = detail::parse_atom(lx, anon);
    if (lx.peek().kind != Tok::Define) lx.fail("expected ':=' in spec rule");
    lx.next();
    rule.guard = parse_guard(lx, anon);
    if (lx.peek().kind != Tok::Dot) lx.fail("expected '.' at end of spec rule");
    lx.next();

    std::vector<std::string> pattern_vars;
    collect_vars(rule.pattern, pattern_vars);
    std::vector<std::string> used;
    guard_vars(rule.guard, used);
    require_bound_vars(pattern_vars, used, line, column, "guard");

    std::vector<std::string> all = pattern_vars;
    auto ren = detail::anon_renaming(all);
    detail::rename_vars(rule.pattern, ren);
    rename_guard_vars(rule.guard, ren);
    spec.rules.push_back(std::move(rule));
  }
  return spec;
}

LevelMapping parse_levels(const std::string& text) {
  Lexer lx(text);
  LevelMapping lm;
  lm.default_expr = nat_const(0);
  while (lx.peek().kind != Tok::End) {
    AnonVars anon;
    int line = lx.peek().line, column = lx.peek().column;
    if (lx.peek().kind != Tok::Name) lx.fail("expected 'level' or 'default'");
    Token kw = lx.next();
    if (kw.text == "default") {
      if (lx.peek().kind != Tok::Assign) lx.fail("expected '='");
      lx.next();
      NatExpr e = parse_natexpr(lx, anon);
      std::vector<std::string> used;
      natexpr_vars(e, used);
      require_bound_vars({}, used, line, column, "default expression");
      lm.default_expr = std::move(e);
    } else if (kw.text == "level") {
      LevelRule rule;
      rule.pattern = detail::parse_atom(lx, anon);
      if (lx.peek().kind != Tok::Assign) lx.fail("expected '='");
      lx.next();
      rule.expr = parse_natexpr(lx, anon);

      std::vector<std::string> pattern_vars;
      collect_vars(rule.pattern, pattern_vars);
      std::vector<std::string> used;
      natexpr_vars(rule.expr, used);
      require_bound_vars(pattern_vars, used, line, column, "level expression");

      auto ren = detail::anon_renaming(pattern_vars);
      detail::rename_vars(rule.pattern, ren);
      rename_natexpr_vars(rule.expr, ren);
      lm.rules.push_back(std::move(rule));
    } else {
      throw ParseError(line, column, "expected 'level' or 'default'");
    }
    if (lx.peek().kind != Tok::Dot) lx.fail("expected '.' at end of level rule");
    lx.next();
  }
  return lm;
}

}  // namespace lpv
