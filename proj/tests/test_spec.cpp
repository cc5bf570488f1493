#include <algorithm>

#include "doctest.h"
#include "lpv/errors.hpp"
#include "lpv/parser.hpp"
#include "lpv/randomgen.hpp"
#include "lpv/spec.hpp"
#include "testutil.hpp"

using namespace lpv;

namespace {
const char* kConcatSpec =
    "append(X,Y,Z) := islist(X), islist(Y), concat(X,Y,Z).";
}

TEST_CASE("spec parsing") {
  SpecInterpretation s = parse_spec(kConcatSpec);
  REQUIRE(s.rules.size() == 1);
  CHECK(s.rules[0].pattern.pred == "append");

  SpecInterpretation e = parse_spec(
      "even(N) := isnat(N), natval(N) == max(natval(N),0).");
  REQUIRE(e.rules.size() == 1);
  CHECK(e.contains(parse_atom_text("even(s(s(0)))")));
  CHECK(!e.contains(parse_atom_text("even(f(0))")));

  SpecInterpretation empty = parse_spec("");
  CHECK(empty.rules.empty());
  CHECK(!empty.contains(parse_atom_text("p(a)")));
}

TEST_CASE("eval_spec on the concat specification") {
  SpecInterpretation s = parse_spec(kConcatSpec);
  // [a] ++ [b] = [a,b], computed by hand
  CHECK(eval_spec(s, parse_atom_text("append([a],[b],[a,b])")));
  CHECK(!eval_spec(s, parse_atom_text("append([a],[b],[])")));
  CHECK(!eval_spec(s, parse_atom_text("append([a],[b],[b,a])")));
}

TEST_CASE("concat grafts the second argument onto the first") {
  SpecInterpretation s = parse_spec("append(X,Y,Z) := concat(X,Y,Z).");
  CHECK(eval_spec(s, parse_atom_text("append([],a,a)")));
  CHECK(eval_spec(s, parse_atom_text("append([a],b,[a|b])")));
  CHECK(!eval_spec(s, parse_atom_text("append(a,[],a)")));  // first not a list
}

TEST_CASE("term measures follow the spine conventions") {
  CHECK(list_len(parse_term_text("[a,b,c]")) == 3);
  CHECK(list_len(parse_term_text("[a,b|c]")) == 2);  // improper tail
  CHECK(list_len(parse_term_text("c")) == 0);
  CHECK(nat_val(parse_term_text("s(s(0))")) == 2);
  CHECK(nat_val(parse_term_text("s(s(a))")) == 2);  // s-prefix only
  CHECK(nat_val(parse_term_text("f(s(0))")) == 0);
  CHECK(term_is_numeral(parse_term_text("s(s(0))")));
  CHECK(!term_is_numeral(parse_term_text("s(a)")));
  CHECK(term_is_proper_list(parse_term_text("[]")));
  CHECK(!term_is_proper_list(parse_term_text("[a|b]")));
}

TEST_CASE("comparison operand disambiguation") {
  // term equality with a desugared numeral
  SpecInterpretation t = parse_spec("p(X) := X == 2.");
  CHECK(t.contains(parse_atom_text("p(s(s(0)))")));
  CHECK(!t.contains(parse_atom_text("p(s(s(a)))")));
  // arithmetic comparison when a measure appears
  SpecInterpretation n = parse_spec("p(X) := natval(X) == 2.");
  CHECK(n.contains(parse_atom_text("p(s(s(a)))")));
  // ordered comparisons are always arithmetic
  SpecInterpretation o = parse_spec("p(X) := size(X) > 1 + 1.");
  CHECK(o.contains(parse_atom_text("p(f(f(a)))")));
  CHECK(!o.contains(parse_atom_text("p(f(a))")));
  // term disequality
  SpecInterpretation d = parse_spec("q(X,Y) := X \\== Y.");
  CHECK(d.contains(parse_atom_text("q(a,b)")));
  CHECK(!d.contains(parse_atom_text("q(a,a)")));
  CHECK_THROWS_AS(parse_spec("p(X) := natval(X) \\== 2."), ParseError);
  CHECK_THROWS_AS(parse_spec("p(X) := X < Y."), ParseError);
}

TEST_CASE("guards reject variables not bound by the pattern") {
  CHECK_THROWS_AS(parse_spec("p(X) := isnat(Y)."), ParseError);
  CHECK_THROWS_AS(parse_levels("level p(X) = natval(Y)."), ParseError);
  CHECK_THROWS_AS(parse_levels("default = natval(X)."), ParseError);
}

TEST_CASE("disjunction, conjunction, and negation in guards") {
  SpecInterpretation s =
      parse_spec("p(X) := isnat(X), natval(X) >= 2 ; X == a.");
  CHECK(s.contains(parse_atom_text("p(a)")));
  CHECK(s.contains(parse_atom_text("p(s(s(0)))")));
  CHECK(!s.contains(parse_atom_text("p(s(0))")));
  SpecInterpretation n = parse_spec("p(X) := \\+ islist(X).");
  CHECK(n.contains(parse_atom_text("p(a)")));
  CHECK(!n.contains(parse_atom_text("p([])")));
}

TEST_CASE("repeated pattern variables force equality") {
  SpecInterpretation s = parse_spec("member(X,[X|T]) := true.");
  CHECK(s.contains(parse_atom_text("member(a,[a,b])")));
  CHECK(!s.contains(parse_atom_text("member(a,[b,a])")));
}

TEST_CASE("level mapping parsing and evaluation") {
  LevelMapping lm = parse_levels("level append(Xs,_,_) = len(Xs).");
  REQUIRE(lm.rules.size() == 1);
  CHECK(eval_level(lm, parse_atom_text("append([a],[],[a])")) == 1);
  CHECK(eval_level(lm, parse_atom_text("other(a)")) == 0);  // default

  LevelMapping wins =
      parse_levels("level win(c) = 1. level win(b) = 2. level win(a) = 3.");
  REQUIRE(wins.rules.size() == 3);
  CHECK(eval_level(wins, parse_atom_text("win(b)")) == 2);

  LevelMapping even = parse_levels("level even(N) = natval(N).");
  CHECK(eval_level(even, parse_atom_text("even(s(s(0)))")) == 2);

  LevelMapping dflt = parse_levels("default = 7.");
  CHECK(eval_level(dflt, parse_atom_text("anything(a)")) == 7);
}

TEST_CASE("level rules are first-match") {
  LevelMapping lm =
      parse_levels("level p(a) = 1.\nlevel p(X) = 5.\nlevel p(b) = 9.");
  CHECK(eval_level(lm, parse_atom_text("p(a)")) == 1);
  CHECK(eval_level(lm, parse_atom_text("p(b)")) == 5);  // shadowed by p(X)
  // prepending a nonmatching rule changes nothing
  LevelMapping lm2 = parse_levels(
      "level q(c,c) = 4.\nlevel p(a) = 1.\nlevel p(X) = 5.\nlevel p(b) = 9.");
  for (const char* a : {"p(a)", "p(b)", "p(f(a))"})
    CHECK(eval_level(lm, parse_atom_text(a)) ==
          eval_level(lm2, parse_atom_text(a)));
}

TEST_CASE("classify against a specification pair") {
  SpecPair pair;
  pair.corr = parse_spec("p(a) := true.\np(b) := true.");
  pair.compl_ = parse_spec("p(a) := true.");
  CHECK(classify(pair, parse_atom_text("p(a)")) ==
        Classification::RequiredTrue);
  CHECK(classify(pair, parse_atom_text("p(b)")) == Classification::DontCare);
  CHECK(classify(pair, parse_atom_text("p(c)")) ==
        Classification::RequiredFalse);
}

TEST_CASE("pair consistency") {
  lpvtest::Fixture f = lpvtest::make_fixture("p(a).", 0, {}, {"a"});
  SpecPair same;
  same.corr = parse_spec("p(X) := true.");
  same.compl_ = same.corr;
  CHECK(check_pair_consistency(same, f.slice).pass);

  SpecPair bad;
  bad.compl_ = parse_spec("p(a) := true.");
  VcReport r = check_pair_consistency(bad, f.slice);
  CHECK(!r.pass);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].instance == "p(a)");
  CHECK(r.violations[0].kind == ViolationKind::PAIR);

  // the concat spec used for both sides is consistent over a list slice
  lpvtest::Fixture g = lpvtest::make_fixture(
      "append([],Ys,Ys).\nappend([H|T],Ys,[H|Zs]) :- append(T,Ys,Zs).", 3,
      {}, {"a", "b"});
  SpecPair concat;
  concat.corr = parse_spec(kConcatSpec);
  concat.compl_ = concat.corr;
  CHECK(check_pair_consistency(concat, g.slice).pass);
}

TEST_CASE("eval_spec is total and deterministic on a slice base") {
  lpvtest::Fixture f = lpvtest::make_fixture(
      "append([],Ys,Ys).\nappend([H|T],Ys,[H|Zs]) :- append(T,Ys,Zs).", 3,
      {}, {"a", "b"});
  SpecInterpretation s = parse_spec(kConcatSpec);
  std::vector<bool> first = spec_bitset(s, f.slice);
  std::vector<bool> second = spec_bitset(s, f.slice);
  CHECK(first == second);
  CHECK(first.size() == f.slice.base_size());
}

TEST_CASE("rule order is irrelevant for spec membership") {
  SplitMix64 rng(11);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Signature sig = random_signature(seed);
    SpecInterpretation s = random_spec(seed, sig);
    if (s.rules.size() < 2) continue;
    SpecInterpretation shuffled = s;
    for (std::size_t i = shuffled.rules.size(); i > 1; --i)
      std::swap(shuffled.rules[i - 1], shuffled.rules[rng.below(i)]);
    Signature full = sig;
    s.collect_symbols(full);
    full.ensure_constant();
    HerbrandSlice slice = herbrand_slice(full, 2, 100000);
    CHECK(spec_bitset(s, slice) == spec_bitset(shuffled, slice));
  }
}

TEST_CASE("NatExpr totality on arbitrary ground terms") {
  SplitMix64 rng(5);
  LevelMapping lm = parse_levels(
      "level p(X) = len(X) + natval(X) + size(X).\n"
      "level q(X,Y) = max(size(X), size(Y)).");
  for (int i = 0; i < 200; ++i) {
    Atom a{"p", {lpvtest::random_ground_term(rng)}};
    (void)eval_level(lm, a);  // must not throw
    Atom b{"q",
           {lpvtest::random_ground_term(rng), lpvtest::random_ground_term(rng)}};
    (void)eval_level(lm, b);
  }
  CHECK(eval_level(lm, parse_atom_text("p([a,b])")) ==
        2 + 0 + 5);  // len 2, natval 0, size 5
}
