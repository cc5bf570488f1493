#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpv/lexer.hpp"
#include "lpv/term.hpp"

namespace lpv {

/// Parses an Edinburgh-flavored clause program: `Head.` or
/// `Head :- Lit, ..., Lit.`, `\+ A` for negative body literals, `%` comments,
/// `[..]`/`[H|T]` lists, and nonnegative integers desugared to s^k(0).
Program parse_program(const std::string& text);

/// Parses a comma-separated goal, with an optional trailing period.
std::vector<Literal> parse_query(const std::string& text);

Term parse_term_text(const std::string& text);
Atom parse_atom_text(const std::string& text);

namespace detail {

/// Allocates placeholder names for anonymous variables. Each `_` occurrence
/// becomes a distinct variable; the placeholders are renamed to printable
/// names (_A1, _A2, ...) once the enclosing clause or rule is complete.
struct AnonVars {
  int counter = 0;
  std::string fresh();
};

bool is_anon_placeholder(const std::string& name);

Term parse_term(Lexer& lx, AnonVars& anon);
Atom parse_atom(Lexer& lx, AnonVars& anon);

/// Maps every placeholder in `vars` (first-occurrence order) to a fresh
/// _A<k> name that avoids the user-chosen names in the same scope.
std::map<std::string, std::string> anon_renaming(
    const std::vector<std::string>& vars);

void rename_vars(Term& t, const std::map<std::string, std::string>& ren);
void rename_vars(Atom& a, const std::map<std::string, std::string>& ren);

}  // namespace detail

}  // namespace lpv
