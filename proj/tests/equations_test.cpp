#include <doctest.h>

#include "mixlogic/equations.hpp"

using namespace mixlogic;

namespace {
FoTerm FT(const char* s) { return parse_fo_term(s); }
const EquationSet kPred = parse_equations("p(0) = 0\np(s(x)) = x\n");
}  // namespace

TEST_CASE("unification and matching") {
  auto s = unify(FT("h(x, s(y))"), FT("h(s(z), x)"));
  REQUIRE(s);
  CHECK(apply_subst(*s, FT("h(x, s(y))")) == apply_subst(*s, FT("h(s(z), x)")));
  CHECK_FALSE(unify(FT("x"), FT("s(x)")));
  FoSubstitution m;
  CHECK(match(FT("p(s(x))"), FT("p(s(s(0)))"), m));
  CHECK(m.at("x") == FT("s(0)"));
}

TEST_CASE("equality modulo equations") {
  CHECK(equal_modulo(kPred, FT("p(s(0))"), FT("0")) == Tristate::True);
  CHECK(equal_modulo(kPred, FT("p(p(s(s(0))))"), FT("0")) == Tristate::True);
  CHECK(equal_modulo(kPred, FT("p(s(0))"), FT("s(0)")) == Tristate::False);
  CHECK(equal_modulo({}, FT("s(x)"), FT("s(x)")) == Tristate::True);
  CHECK(equal_modulo({}, FT("s(0)"), FT("0")) == Tristate::False);
}

TEST_CASE("completion adds joining rules") {
  // f(g(x)) = x and g(f(x)) = x overlap; a non-convergent set falls back to search.
  EquationSet e = parse_equations("f(f(x)) = x\n");
  CHECK(equal_modulo(e, FT("f(f(f(0)))"), FT("f(0)")) == Tristate::True);
  auto rules = complete(kPred);
  REQUIRE(rules);
  CHECK(rules->size() == 2);
}

TEST_CASE("commutativity cannot be oriented; search still confirms instances") {
  EquationSet e = parse_equations("h(x, y) = h(y, x)\n");
  CHECK_FALSE(complete(e).has_value());
  CHECK(equal_modulo(e, FT("h(0, s(0))"), FT("h(s(0), 0)")) == Tristate::True);
  CHECK(equal_modulo(e, FT("h(0, s(0))"), FT("h(0, 0)")) == Tristate::False);
}

TEST_CASE("equality is an equivalence and a congruence on ground predecessor terms") {
  std::vector<FoTerm> ts{FT("0"), FT("p(0)"), FT("s(p(0))"), FT("p(s(s(0)))"), FT("s(0)")};
  for (const auto& a : ts) {
    CHECK(equal_modulo(kPred, a, a) == Tristate::True);
    for (const auto& b : ts) {
      Tristate ab = equal_modulo(kPred, a, b);
      CHECK(ab == equal_modulo(kPred, b, a));
      if (ab == Tristate::True) CHECK(equal_modulo(kPred, FoTerm::succ(a), FoTerm::succ(b)) == Tristate::True);
      for (const auto& c : ts) {
        if (ab == Tristate::True && equal_modulo(kPred, b, c) == Tristate::True) {
          CHECK(equal_modulo(kPred, a, c) == Tristate::True);
        }
      }
    }
  }
}

TEST_CASE("adequacy with the integers") {
  CHECK(check_adequate(kPred) == Tristate::True);
  CHECK(check_adequate(parse_equations("s(0) = 0")) == Tristate::False);
  CHECK(check_adequate({}) == Tristate::True);
  CHECK(check_adequate(parse_equations("s(s(0)) = s(0)")) == Tristate::False);
}

TEST_CASE("formula-level equality modulo equations") {
  Formula a = parse_formula("forall y R(p(s(y)), 0)");
  Formula b = parse_formula("forall z R(z, p(0))");
  CHECK(formula_equal_modulo(kPred, a, b) == Tristate::True);
  CHECK(formula_equal_modulo(kPred, a, parse_formula("forall z R(s(z), 0)")) == Tristate::False);
  CHECK(formula_equal_modulo(kPred, a, parse_formula("forall z S(z, 0)")) == Tristate::False);
}
