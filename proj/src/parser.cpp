#include "lpv/parser.hpp"

#include <algorithm>

#include "lpv/errors.hpp"

namespace lpv {
namespace detail {

namespace {
constexpr char kAnonPrefix = '\x01';
constexpr std::uint64_t kMaxNumeral = 100000;
}  // namespace

std::string AnonVars::fresh() {
  return std::string(1, kAnonPrefix) + std::to_string(++counter);
}

bool is_anon_placeholder(const std::string& name) {
  return !name.empty() && name[0] == kAnonPrefix;
}

std::map<std::string, std::string> anon_renaming(
    const std::vector<std::string>& vars) {
  std::map<std::string, std::string> ren;
  int next = 0;
  for (const auto& v : vars) {
    if (!is_anon_placeholder(v)) continue;
    std::string candidate;
    do {
      candidate = "_A" + std::to_string(++next);
    } while (std::find(vars.begin(), vars.end(), candidate) != vars.end());
    ren.emplace(v, candidate);
  }
  return ren;
}

void rename_vars(Term& t, const std::map<std::string, std::string>& ren) {
  if (t.var) {
    auto it = ren.find(t.functor);
    if (it != ren.end()) t.functor = it->second;
    return;
  }
  for (auto& a : t.args) rename_vars(a, ren);
}

void rename_vars(Atom& a, const std::map<std::string, std::string>& ren) {
  for (auto& t : a.args) rename_vars(t, ren);
}

namespace {

Term numeral(std::uint64_t k, const Lexer& lx) {
  if (k > kMaxNumeral)
    throw ParseError(lx.peek().line, lx.peek().column,
                     "integer literal too large to desugar");
  Term t = Term::constant("0");
  for (std::uint64_t i = 0; i < k; ++i)
    t = Term::compound("s", {std::move(t)});
  return t;
}

Term parse_list(Lexer& lx, AnonVars& anon) {
  lx.next();  // consume '['
  if (lx.peek().kind == Tok::RBracket) {
    lx.next();
    return Term::constant("[]");
  }
  std::vector<Term> elems;
  elems.push_back(parse_term(lx, anon));
  while (lx.peek().kind == Tok::Comma) {
    lx.next();
    elems.push_back(parse_term(lx, anon));
  }
  Term tail = Term::constant("[]");
  if (lx.peek().kind == Tok::Bar) {
    lx.next();
    tail = parse_term(lx, anon);
  }
  if (lx.peek().kind != Tok::RBracket) lx.fail("expected ']' in list");
  lx.next();
  for (auto it = elems.rbegin(); it != elems.rend(); ++it)
    tail = Term::compound(".", {std::move(*it), std::move(tail)});
  return tail;
}

}  // namespace

Term parse_term(Lexer& lx, AnonVars& anon) {
  const Token& t = lx.peek();
  switch (t.kind) {
    case Tok::Var: {
      Token tok = lx.next();
      if (tok.text == "_") return Term::variable(anon.fresh());
      return Term::variable(tok.text);
    }
    case Tok::Int: {
      Term n = numeral(t.value, lx);
      lx.next();
      return n;
    }
    case Tok::LBracket:
      return parse_list(lx, anon);
    case Tok::Name: {
      Token tok = lx.next();
      if (lx.peek().kind != Tok::LParen) return Term::constant(tok.text);
      lx.next();
      std::vector<Term> args;
      args.push_back(parse_term(lx, anon));
      while (lx.peek().kind == Tok::Comma) {
        lx.next();
        args.push_back(parse_term(lx, anon));
      }
      if (lx.peek().kind != Tok::RParen) lx.fail("expected ')'");
      lx.next();
      return Term::compound(tok.text, std::move(args));
    }
    default:
      lx.fail("expected a term");
  }
}

Atom parse_atom(Lexer& lx, AnonVars& anon) {
  if (lx.peek().kind != Tok::Name) lx.fail("expected a predicate name");
  Token tok = lx.next();
  Atom a{tok.text, {}};
  if (lx.peek().kind == Tok::LParen) {
    lx.next();
    a.args.push_back(parse_term(lx, anon));
    while (lx.peek().kind == Tok::Comma) {
      lx.next();
      a.args.push_back(parse_term(lx, anon));
    }
    if (lx.peek().kind != Tok::RParen) lx.fail("expected ')'");
    lx.next();
  }
  return a;
}

}  // namespace detail

namespace {

Literal parse_literal(Lexer& lx, detail::AnonVars& anon) {
  if (lx.peek().kind == Tok::NafNot) {
    lx.next();
    return Literal{false, detail::parse_atom(lx, anon)};
  }
  return Literal{true, detail::parse_atom(lx, anon)};
}

void finalize_clause(Clause& c) {
  auto ren = detail::anon_renaming(clause_vars(c));
  if (ren.empty()) return;
  detail::rename_vars(c.head, ren);
  for (auto& l : c.body) detail::rename_vars(l.atom, ren);
}

}  // namespace

Program parse_program(const std::string& text) {
  Lexer lx(text);
  detail::AnonVars anon;
  Program p;
  while (lx.peek().kind != Tok::End) {
    Clause c;
    c.head = detail::parse_atom(lx, anon);
    if (lx.peek().kind == Tok::If) {
      lx.next();
      c.body.push_back(parse_literal(lx, anon));
      while (lx.peek().kind == Tok::Comma) {
        lx.next();
        c.body.push_back(parse_literal(lx, anon));
      }
    }
    if (lx.peek().kind != Tok::Dot) lx.fail("expected '.' at end of clause");
    lx.next();
    finalize_clause(c);
    p.clauses.push_back(std::move(c));
  }
  return p;
}

std::vector<Literal> parse_query(const std::string& text) {
  Lexer lx(text);
  detail::AnonVars anon;
  std::vector<Literal> goal;
  goal.push_back(parse_literal(lx, anon));
  while (lx.peek().kind == Tok::Comma) {
    lx.next();
    goal.push_back(parse_literal(lx, anon));
  }
  if (lx.peek().kind == Tok::Dot) lx.next();
  if (lx.peek().kind != Tok::End) lx.fail("unexpected input after query");
  std::vector<std::string> vars;
  for (const auto& l : goal) collect_vars(l.atom, vars);
  auto ren = detail::anon_renaming(vars);
  for (auto& l : goal) detail::rename_vars(l.atom, ren);
  return goal;
}

Term parse_term_text(const std::string& text) {
  Lexer lx(text);
  detail::AnonVars anon;
  Term t = detail::parse_term(lx, anon);
  if (lx.peek().kind == Tok::Dot) lx.next();
  if (lx.peek().kind != Tok::End) lx.fail("unexpected input after term");
  std::vector<std::string> vars;
  collect_vars(t, vars);
  auto ren = detail::anon_renaming(vars);
  detail::rename_vars(t, ren);
  return t;
}

Atom parse_atom_text(const std::string& text) {
  Lexer lx(text);
  detail::AnonVars anon;
  Atom a = detail::parse_atom(lx, anon);
  if (lx.peek().kind == Tok::Dot) lx.next();
  if (lx.peek().kind != Tok::End) lx.fail("unexpected input after atom");
  std::vector<std::string> vars;
  collect_vars(a, vars);
  auto ren = detail::anon_renaming(vars);
  detail::rename_vars(a, ren);
  return a;
}

}  // namespace lpv
