#include "bondsem/dsl.hpp"

#include <doctest.h>

#include <random>

#include "bondsem/eval.hpp"

using namespace bondsem;

TEST_CASE("parsing maps diagrammatic order to classical composition") {
  const Signature& bond = Signature::bond();
  Term t = parse_dsl("M ; E", bond);
  CHECK(t == Term::comp(Term::gen("E"), Term::gen("M")));
  CHECK(typecheck(t, bond) == std::pair<int, int>{2, 0});

  Term u = parse_dsl("(M + I) ; M", bond);
  CHECK(typecheck(u, bond) == std::pair<int, int>{2, 1});

  CHECK(parse_dsl("id(2)", bond) == Term::id(2));
  CHECK(parse_dsl("sigma(1,2)", bond) == Term::braid(1, 2));
}

TEST_CASE("tensor binds tighter than sequencing") {
  const Signature& bond = Signature::bond();
  Term t = parse_dsl("I + I ; M", bond);
  CHECK(t == Term::comp(Term::gen("M"), Term::ten(Term::gen("I"), Term::gen("I"))));
}

TEST_CASE("errors carry positions") {
  const Signature& bond = Signature::bond();
  CHECK_THROWS_WITH_AS(parse_dsl("M ; M", bond), doctest::Contains("1:3"), ParseError);
  CHECK_THROWS_WITH_AS(parse_dsl("M ;; E", bond), doctest::Contains("1:4"), ParseError);
  CHECK_THROWS_WITH_AS(parse_dsl("frob", bond), doctest::Contains("unknown identifier"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_dsl("M ;\nE ; E", bond), doctest::Contains("2:3"), ParseError);
  CHECK_THROWS_AS(parse_dsl("id(", bond), ParseError);
  CHECK_THROWS_AS(parse_dsl("(M", bond), ParseError);
  CHECK_THROWS_AS(parse_dsl("M @ E", bond), ParseError);
}

TEST_CASE("identifiers resolve against the active signature") {
  CHECK_NOTHROW(parse_dsl("m ; d", Signature::corel_wire()));
  CHECK_THROWS_AS(parse_dsl("m ; d", Signature::bond()), ParseError);
  CHECK_NOTHROW(parse_dsl("m2 ; delta2", Signature::corel_port()));
}

TEST_CASE("print and reparse round trips the tree") {
  const Signature& bond = Signature::bond();
  std::mt19937_64 rng(404);
  for (int round = 0; round < 200; ++round) {
    Term t = random_term(1 + static_cast<int>(rng() % 10), rng(), bond);
    Term back = parse_dsl(print_dsl(t), bond);
    CHECK(back == t);
  }
  CHECK(print_dsl(Term::comp(Term::gen("E"), Term::gen("M"))) == "M ; E");
}
