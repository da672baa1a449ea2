#include <doctest.h>

#include "warrant/formula.hpp"

using namespace warrant;

TEST_CASE("formulas print back to what was parsed") {
  const char* cases[] = {
      "(Jones is alive)",
      "~(Jones is alive)",
      "((Jones is alive) at 20)",
      "(((the gun is loaded) & (the gun is fired)) -> ~(Jones is alive))",
      "((p v q) <-> r)",
      "(all x (x is red))",
      "((the probability of (Fred is blue) given (Fred looks blue)) <= 0.8)",
      "(((flip the switch) / (the power is on)) => (the light is on))",
  };
  for (const char* text : cases) {
    CAPTURE(text);
    const Expr f = parse_formula(text);
    CHECK(parse_formula(to_string(f)) == f);
  }
}

TEST_CASE("negation normalizes") {
  const Expr p = parse_formula("(Jones is alive)");
  CHECK(negate(negate(p)) == p);
  CHECK(parse_formula("~~(Jones is alive)") == p);
  CHECK(is_negative(negate(p)));
  CHECK_FALSE(is_negative(p));

  // pushed inside "at"
  const Expr at = parse_formula("((Jones is alive) at 50)");
  CHECK(negate(at) == parse_formula("(~(Jones is alive) at 50)"));
  CHECK(is_negative(negate(at)));
}

TEST_CASE("numbers keep exact ratios") {
  const Expr a = parse_formula("(p at 1/2)");
  const Expr b = parse_formula("(p at 2/4)");
  CHECK(a == b);
  CHECK(Number::rational(1, 2).value() == doctest::Approx(0.5));
  CHECK(Number::rational(3, 6) == Number::rational(1, 2));
}

TEST_CASE("unify binds declared variables one way") {
  const VarSet vars{"p", "time"};
  const Expr pattern = parse_formula("(p at time)", vars);
  const Expr target = parse_formula("((Fred is red) at 1)");

  auto b = unify(pattern, target, vars);
  REQUIRE(b);
  CHECK(substitute(pattern, *b) == target);
  CHECK(*b->find("p") == parse_formula("(Fred is red)"));

  // the target's words are never bound
  CHECK_FALSE(unify(target, pattern, vars));

  // a repeated variable must match the same thing twice
  const Expr twice = parse_formula("(p & p)", vars);
  CHECK(unify(twice, parse_formula("(q & q)"), vars));
  CHECK_FALSE(unify(twice, parse_formula("(q & r)"), vars));
}

TEST_CASE("a negative pattern matches the normalized negation") {
  const VarSet vars{"p"};
  const Expr pattern = parse_formula("~p", vars);
  auto b = unify(pattern, parse_formula("~(Jones is alive)"), vars);
  REQUIRE(b);
  CHECK(*b->find("p") == parse_formula("(Jones is alive)"));
}

TEST_CASE("binding occurs check") {
  Binding b;
  CHECK(b.bind("x", Expr::constant("a")));
  CHECK_FALSE(b.bind("x", Expr::constant("b")));
  CHECK(b.bind("x", Expr::constant("a")));
  CHECK_FALSE(b.bind("y", Expr::atom({Expr::constant("f"), Expr::var("y")})));
}

TEST_CASE("conjuncts and conjoin invert each other") {
  const Expr f = parse_formula("(a & (b & c))");
  auto parts = conjuncts(f);
  REQUIRE(parts.size() == 3);
  CHECK(conjoin(parts) == f);
  CHECK(conjoin(std::vector<Expr>{parts[0]}) == parts[0]);
}

TEST_CASE("parse errors carry an offset") {
  CHECK_THROWS_AS(parse_formula("((Jones is alive)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(?x is red)"), ParseError);
  try {
    parse_formula("(a & b))");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() > 0);
  }
}

TEST_CASE("?-variables work once declared") {
  const Expr f = parse_formula("(?x is red)", VarSet{"?x"});
  CHECK_FALSE(f.ground());
  VarSet seen;
  collect_variables(f, seen);
  CHECK(seen.count("?x") == 1);
}
