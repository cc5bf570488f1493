#include "doctest.h"
#include "lpv/errors.hpp"
#include "lpv/parser.hpp"
#include "lpv/randomgen.hpp"
#include "testutil.hpp"

using namespace lpv;

TEST_CASE("negation, facts, and rule bodies") {
  Program p = parse_program("p :- q, \\+ r.");
  REQUIRE(p.clauses.size() == 1);
  const Clause& c = p.clauses[0];
  CHECK(c.head.pred == "p");
  CHECK(c.head.arity() == 0);
  REQUIRE(c.body.size() == 2);
  CHECK(c.body[0].positive);
  CHECK(c.body[0].atom.pred == "q");
  CHECK(!c.body[1].positive);
  CHECK(c.body[1].atom.pred == "r");
  CHECK(p.kind() == ProgramKind::Normal);
}

TEST_CASE("definite recognition") {
  Program p = parse_program("even(s(s(X))) :- even(X).");
  REQUIRE(p.clauses.size() == 1);
  CHECK(p.kind() == ProgramKind::Definite);
}

TEST_CASE("list sugar desugars to './2'") {
  Program p = parse_program("append([H|T],Y,[H|Z]) :- append(T,Y,Z).");
  const Term& first = p.clauses[0].head.args[0];
  CHECK(!first.var);
  CHECK(first.functor == ".");
  CHECK(first.args.size() == 2);
}

TEST_CASE("integer literals become s-numerals") {
  Program p = parse_program("p(2).");
  CHECK(to_string(p.clauses[0].head) == "p(s(s(0)))");
  CHECK(to_string(parse_program("p(0).").clauses[0].head) == "p(0)");
}

TEST_CASE("anonymous variables are pairwise distinct") {
  Program p = parse_program("member(X, [_,_|T]).");
  std::vector<std::string> vars = clause_vars(p.clauses[0]);
  CHECK(vars.size() == 4);  // X, two anon, T
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_program("p :- ."), ParseError);
  CHECK_THROWS_AS(parse_program("p(X"), ParseError);
  CHECK_THROWS_AS(parse_program("P(a)."), ParseError);  // variable as predicate
  try {
    parse_program("p(a).\nq :- .");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("queries parse with optional period") {
  auto q1 = parse_query("even(s(0))");
  auto q2 = parse_query("even(s(0)).");
  REQUIRE(q1.size() == 1);
  CHECK(q1 == q2);
  auto q3 = parse_query("\\+ p(X), q(X)");
  CHECK(!q3[0].positive);
}

TEST_CASE("round trip: parse, print, parse is a fixpoint") {
  const char* sources[] = {
      "append([],Ys,Ys).\nappend([H|T],Ys,[H|Zs]) :- append(T,Ys,Zs).",
      "p :- q, \\+ r.\nq.\nr :- p.",
      "member(X,[X|_]).\nmember(X,[_|T]) :- member(X,T).",
      "p(3, [a,b|Y], g(X)) :- q(f(X), Y).",
  };
  for (const char* src : sources) {
    Program p1 = parse_program(src);
    std::string printed = to_string(p1);
    Program p2 = parse_program(printed);
    CHECK(to_string(p2) == printed);
  }
}

TEST_CASE("round trip holds on random programs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Signature sig = random_signature(seed);
    Program p = random_program(seed, sig, 5, 3, 0.3);
    std::string printed = to_string(p);
    CHECK(to_string(parse_program(printed)) == printed);
  }
}
