#include <doctest.h>

#include "mixlogic/error.hpp"
#include "mixlogic/formula.hpp"
#include "mixlogic/formula_syntax.hpp"

using namespace mixlogic;

namespace {
Formula F(const char* s) { return parse_formula(s); }
FoTerm FT(const char* s) { return parse_fo_term(s); }
}  // namespace

TEST_CASE("first-order terms") {
  CHECK(FT("0") == FoTerm::zero());
  CHECK(FT("2") == FoTerm::succ(FoTerm::succ(FoTerm::zero())));
  CHECK(FT("s(x)") == FoTerm::succ(FoTerm::var("x")));
  CHECK(FT("c()") == FoTerm::constant("c"));
  CHECK(FT("h(x, s(0))").args.size() == 2);
  CHECK(to_string(FT("3")) == "s(s(s(0)))");
  CHECK(vars_of(FT("h(x, s(y))")) == std::set<std::string>{"x", "y"});
}

TEST_CASE("formula syntax") {
  Formula n = F("forall X {X(0), forall y (X(y) -> X(s(y))) -> X(x)}");
  CHECK(alpha_eq(n, nat(FoTerm::var("x"))));
  CHECK(to_string(n) == "forall X (X(0) -> forall y (X(y) -> X(s(y))) -> X(x))");
  CHECK(alpha_eq(F(to_string(n).c_str()), n));

  CHECK(F("~A").is_negation());
  CHECK(to_string(F("A -> _|_")) == "~A");
  CHECK(alpha_eq(F("A -> B -> C"), F("A -> (B -> C)")));
  CHECK(F("forall x A -> B").is(FormulaKind::Arrow));
  CHECK(F("forall Xc (Xc(0) -> Xc(0))").is(FormulaKind::ForallClassical));
  CHECK(F("Xc").pred() == Predicate::classical("X"));
  CHECK(F("@D(t)").pred() == Predicate::symbol("D"));
  CHECK(F("X*(0)").pred() == Predicate::var("X*"));
  CHECK(to_string(F("forall Xc (~~Xc -> Xc)")) == "forall Xc (~~Xc -> Xc)");
  CHECK_THROWS_AS(F("forall -> X"), ParseError);
  CHECK_THROWS_AS(F("X(0"), ParseError);
}

TEST_CASE("equation files") {
  EquationSet e = parse_equations("// predecessor\np(0) = 0\n\np(s(x)) = x\n");
  REQUIRE(e.size() == 2);
  CHECK(to_string(e[1]) == "p(s(x)) = x");
  try {
    parse_equations("p(0) = 0\np(s(x) = x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
  }
}

TEST_CASE("alpha equivalence of formulas") {
  CHECK(alpha_eq(F("forall x X(x)"), F("forall y X(y)")));
  CHECK(alpha_eq(F("forall X X(0)"), F("forall Y Y(0)")));
  CHECK_FALSE(alpha_eq(F("forall X X(0)"), F("forall Yc Yc(0)")));
  CHECK_FALSE(alpha_eq(F("forall x X(x)"), F("forall x X(y)")));
  CHECK_FALSE(alpha_eq(F("forall x forall y R(x, y)"), F("forall x forall y R(y, x)")));
  CHECK(alpha_eq(PredAbstraction{{"z"}, F("X(z)")}, PredAbstraction{{"w"}, F("X(w)")}));
}

TEST_CASE("capture-avoiding substitution") {
  Formula a = F("forall y R(x, y)");
  Formula r = subst_fo(a, "x", FoTerm::var("y"));
  CHECK(alpha_eq(r, F("forall z R(y, z)")));
  CHECK(free_fo_vars(r) == std::set<std::string>{"y"});

  Formula b = F("forall X (X(x) -> Y(x))");
  PredAbstraction g{{"z"}, F("X(z) -> ~Z(z)")};
  Formula rb = subst_pred(b, Predicate::var("Y"), g);
  CHECK(alpha_eq(rb, F("forall W (W(x) -> X(x) -> ~Z(x))")));

  PredAbstraction h{{"z"}, F("forall x R(x, z)")};
  CHECK(alpha_eq(subst_pred(F("Y(x)"), Predicate::var("Y"), h), F("forall w R(w, x)")));
  CHECK_THROWS_AS(subst_pred(F("Y(x, x)"), Predicate::var("Y"), h), PreconditionViolated);
}

TEST_CASE("library formulas") {
  CHECK(alpha_eq(nat_star(FoTerm::var("x")), F("forall X {~X(0), forall y (~X(y) -> ~X(s(y))) -> ~X(x)}")));
  CHECK(alpha_eq(nat_classical(FoTerm::var("x")), F("forall Xc {Xc(0), forall y (Xc(y) -> Xc(s(y))) -> Xc(x)}")));
  CHECK(alpha_eq(nat_prop(), F("forall X {X, (X -> X) -> X}")));
  CHECK(free_fo_vars(nat(FoTerm::var("y"))) == std::set<std::string>{"y"});
  CHECK(free_preds(nat(FoTerm::zero())).empty());
}
