#include <doctest.h>

#include "mixlogic/derivation.hpp"
#include "mixlogic/derivation_builder.hpp"
#include "mixlogic/derivation_io.hpp"
#include "mixlogic/error.hpp"
#include "mixlogic/fixtures.hpp"
#include "mixlogic/formula_syntax.hpp"
#include "mixlogic/reduction.hpp"
#include "mixlogic/term_syntax.hpp"

using namespace mixlogic;

namespace {

Formula F(const char* s) { return parse_formula(s); }
Term T(const char* s) { return parse_term(s); }

DerivationNode& at(Derivation& d, std::initializer_list<std::size_t> path) {
  DerivationNode* n = &d.root;
  for (auto i : path) n = &n->premises.at(i);
  return *n;
}

void expect_invalid(const Derivation& d, InvalidReason reason, const std::string& path) {
  CheckResult r = check(d);
  CHECK_FALSE(r.valid);
  CHECK_MESSAGE(r.reason == reason, to_string(r.reason), ": ", r.message);
  CHECK(r.path == path);
}

// Path of the first node (pre-order) with the given rule.
bool find_rule(const DerivationNode& n, RuleTag rule, std::vector<std::size_t>& path) {
  if (n.rule == rule) return true;
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    path.push_back(i);
    if (find_rule(n.premises[i], rule, path)) return true;
    path.pop_back();
  }
  return false;
}

std::string path_string(const std::vector<std::size_t>& p) {
  std::string s = "root";
  for (auto i : p) s += "." + std::to_string(i);
  return s;
}

DerivationNode& node_at(Derivation& d, const std::vector<std::size_t>& path) {
  DerivationNode* n = &d.root;
  for (auto i : path) n = &n->premises.at(i);
  return *n;
}

}  // namespace

TEST_CASE("every fixture checks") {
  for (const auto& name : fixture_names()) {
    CheckResult r = check(build_fixture(name));
    CHECK_MESSAGE(r.valid, name, " fails at ", r.path, ": ", r.message);
  }
}

TEST_CASE("fixture conclusions") {
  auto concl = [](const char* name) { return subject_of(build_fixture(name)); };
  CHECK(concl("zero").first == T("\\x.\\f.x"));
  CHECK(alpha_eq(concl("zero").second, nat(FoTerm::zero())));
  CHECK(concl("succ").first == builtin("succ"));
  CHECK(alpha_eq(concl("succ").second, F("forall y (forall X {X(0), forall y (X(y) -> X(s(y))) -> X(y)} -> "
                                          "forall X {X(0), forall y (X(y) -> X(s(y))) -> X(s(y))})")));
  CHECK(concl("C-axiom").first == Term::control());
  CHECK(alpha_eq(concl("C-axiom").second, F("forall X (~~X -> X)")));
  CHECK(concl("abort").first == T("\\x.C (\\y.x)"));
  CHECK(alpha_eq(concl("abort").second, F("forall Xc (_|_ -> Xc)")));
  CHECK(concl("Cprime").first == T("\\x.C (\\d.x (\\y.x (\\z.d y)))"));
  CHECK(alpha_eq(concl("Cprime").second, F("forall Xc (~~Xc -> Xc)")));
  CHECK(concl("muC").first == T("\\x.mu a.[phi] x (\\y.mu b.[a] y)"));
  CHECK(alpha_eq(concl("muC").second, F("forall X (~~X -> X)")));
  Formula storage = F("forall x (forall X {~X(0), forall y (~X(y) -> ~X(s(y))) -> ~X(x)} -> ~~forall X {X(0), "
                      "forall y (X(y) -> X(s(y))) -> X(x)})");
  CHECK(concl("T1").first == builtin("T1"));
  CHECK(alpha_eq(concl("T1").second, storage));
  CHECK(alpha_eq(concl("T1").second, Formula::forall_fo("x", Formula::arrow(nat_star(FoTerm::var("x")),
                                                                          Formula::negation(Formula::negation(
                                                                              nat(FoTerm::var("x"))))))));
  Term t = substitute(T("\\nu.\\f.f (C (T1 nu))"), {{{"T1", builtin("T1")}}, {}});
  CHECK(concl("remark-T").first == t);
  CHECK(alpha_eq(concl("remark-T").second, storage));
  CHECK(alpha_eq(concl("pred").second, nat(parse_fo_term("p(s(0))"))));
  CHECK(alpha_eq(concl("church2-prop").second, nat_prop()));
}

TEST_CASE("shipped files match the catalogue") {
  for (const auto& name : fixture_names()) {
    Derivation built = build_fixture(name);
    Derivation shipped = load_fixture(default_fixture_dir(), name);
    CHECK_MESSAGE(write_derivation(shipped) == write_derivation(built), name);
    CHECK(check(shipped).valid);
  }
}

TEST_CASE("round trip") {
  for (const auto& name : fixture_names()) {
    Derivation d = build_fixture(name);
    std::string text = write_derivation(d);
    Derivation back = read_derivation(text);
    CHECK(write_derivation(back) == text);
    CHECK(check(back).valid);
    CHECK(back.root.conclusion.subject == d.root.conclusion.subject);
  }
}

TEST_CASE("reader errors carry positions") {
  CHECK_THROWS_AS(read_derivation("(derivation x (system AF2)"), ParseError);
  CHECK_THROWS_AS(read_derivation("(derivation x (system AF3) (rule Ax (term \"x\") (type \"A\")))"), ParseError);
  CHECK_THROWS_AS(read_derivation("(derivation x (system AF2) (rule Bogus (term \"x\") (type \"A\")))"), ParseError);
  try {
    read_derivation("(derivation x (system AF2)\n  (rule Ax (term \"x\") (type \"A ->\")))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 20);
  }
  Derivation d = read_derivation(
      "; comment\n(derivation x (system AF2)\n (rule Ax (ctx (x \"A\")) (term \"x\") (type \"A\")))");
  CHECK(check(d).valid);
}

TEST_CASE("corrupted witnesses") {
  SUBCASE("first-order instance") {
    Derivation d = build_fixture("succ-two");
    std::vector<std::size_t> p;
    REQUIRE(find_rule(d.root, RuleTag::FoInst, p));
    node_at(d, p).witness = parse_fo_term("s(s(0))");
    expect_invalid(d, InvalidReason::BadWitness, path_string(p));
  }
  SUBCASE("witness of the wrong sort") {
    Derivation d = build_fixture("succ");
    std::vector<std::size_t> p;
    REQUIRE(find_rule(d.root, RuleTag::SoInst, p));
    node_at(d, p).witness = FoTerm::zero();
    expect_invalid(d, InvalidReason::BadWitness, path_string(p));
  }
  SUBCASE("arity") {
    Derivation d = build_fixture("succ");
    std::vector<std::size_t> p;
    REQUIRE(find_rule(d.root, RuleTag::SoInst, p));
    node_at(d, p).witness = PredAbstraction{{"z", "w"}, F("X(z)")};
    expect_invalid(d, InvalidReason::ArityMismatch, path_string(p));
  }
  SUBCASE("non-classical instance") {
    Derivation d = build_fixture("abort");
    std::vector<std::size_t> p;
    REQUIRE(find_rule(d.root, RuleTag::ClassInst, p));
    node_at(d, p).witness = PredAbstraction{{}, F("X")};
    expect_invalid(d, InvalidReason::NonClassicalInstantiation, path_string(p));
  }
  SUBCASE("equation") {
    Derivation d = build_fixture("pred");
    std::vector<std::size_t> p;
    REQUIRE(find_rule(d.root, RuleTag::Eq, p));
    auto& w = std::get<EqWitness>(node_at(d, p).witness);
    w.equation = 3;
    expect_invalid(d, InvalidReason::BadEquation, path_string(p));
    w.equation = 1;
    expect_invalid(d, InvalidReason::BadWitness, path_string(p));
    w.equation = 2;
    w.left_to_right = true;
    expect_invalid(d, InvalidReason::BadWitness, path_string(p));
    w.left_to_right = false;
    w.position = {1};
    expect_invalid(d, InvalidReason::BadWitness, path_string(p));
  }
}

TEST_CASE("side conditions") {
  using namespace build;
  Context g{{"x", F("X(y)")}};
  Derivation fo{"fo", System::AF2, {}, fo_gen("y", ax(g, "x"))};
  expect_invalid(fo, InvalidReason::SideConditionViolated, "root");
  Derivation so{"so", System::AF2, {}, so_gen("X", ax(g, "x"))};
  expect_invalid(so, InvalidReason::SideConditionViolated, "root");
  Context gc{{"x", F("Xc")}};
  Derivation cl{"cl", System::M2, {}, class_gen("X", ax(gc, "x"))};
  expect_invalid(cl, InvalidReason::SideConditionViolated, "root");
  // An unrelated variable of the same name is fine.
  Derivation ok{"ok", System::AF2, {}, so_gen("Y", ax(g, "x"))};
  CHECK(check(ok).valid);
  // Freshness is also required with respect to the μ-context.
  Context gm{{"x", F("X")}};
  DerivationNode named = naming("b", "a", ax(gm, "x"));
  Derivation mu{"mu", System::FD2, {}, so_gen("X", named)};
  expect_invalid(mu, InvalidReason::SideConditionViolated, "root");
}

TEST_CASE("wrong system") {
  Derivation c = build_fixture("C-axiom");
  c.system = System::AF2;
  expect_invalid(c, InvalidReason::WrongSystem, "root");
  c.system = System::M2;
  expect_invalid(c, InvalidReason::TypeMismatch, "root");
  Derivation a = build_fixture("abort");
  a.system = System::C2;
  std::vector<std::size_t> p;
  REQUIRE(find_rule(a.root, RuleTag::ClassInst, p));
  p.push_back(0);
  expect_invalid(a, InvalidReason::TypeMismatch, path_string(p));
  Derivation m = build_fixture("muC");
  m.system = System::C2;
  CHECK(check(m).reason == InvalidReason::WrongSystem);
  Derivation z = build_fixture("zero");
  z.system = System::M;
  CHECK(check(z).reason == InvalidReason::WrongSystem);
  Derivation p2 = build_fixture("church2-prop");
  p2.system = System::M;
  CHECK(check(p2).valid);
  Derivation cp = build_fixture("Cprime");
  cp.system = System::M;
  CHECK(check(cp).valid);
  cp.system = System::FD2;
  CHECK(check(cp).reason == InvalidReason::WrongSystem);
}

TEST_CASE("shape errors") {
  SUBCASE("subject") {
    Derivation d = build_fixture("zero");
    at(d, {0, 0, 0}).conclusion.subject = Term::var("f");
    expect_invalid(d, InvalidReason::ContextMismatch, "root.0.0.0");
    d = build_fixture("zero");
    at(d, {0}).conclusion.subject = T("\\y.\\f.x");
    expect_invalid(d, InvalidReason::SubjectMismatch, "root.0");
  }
  SUBCASE("context") {
    Derivation d = build_fixture("zero");
    at(d, {0, 0, 0}).conclusion.lambda_ctx.emplace_back("x", F("A"));
    expect_invalid(d, InvalidReason::ContextMismatch, "root.0.0.0");
    d = build_fixture("zero");
    at(d, {0, 0, 0}).conclusion.lambda_ctx.erase(at(d, {0, 0, 0}).conclusion.lambda_ctx.begin());
    expect_invalid(d, InvalidReason::ContextMismatch, "root.0.0.0");
    d = build_fixture("church2");
    at(d, {0, 0, 0}).conclusion.lambda_ctx.at(1).second = F("forall y (X(y) -> X(y))");
    CHECK_FALSE(check(d).valid);
  }
  SUBCASE("premises") {
    Derivation d = build_fixture("zero");
    at(d, {0, 0}).premises.clear();
    expect_invalid(d, InvalidReason::PremiseCount, "root.0.0");
  }
  SUBCASE("types") {
    Derivation d = build_fixture("zero");
    d.root.conclusion.type = nat(FoTerm::numeral(1));
    expect_invalid(d, InvalidReason::TypeMismatch, "root");
  }
  SUBCASE("μ-contexts outside FD2") {
    Derivation d = build_fixture("zero");
    d.root.conclusion.mu_ctx.emplace_back("a", F("X"));
    expect_invalid(d, InvalidReason::WrongSystem, "root");
  }
  SUBCASE("naming") {
    Derivation d = build_fixture("muC");
    at(d, {0, 0}).conclusion.type = F("Y");
    expect_invalid(d, InvalidReason::TypeMismatch, "root.0.0");
    d = build_fixture("muC");
    REQUIRE(at(d, {0, 0, 0, 1, 0}).rule == RuleTag::MuNaming);
    at(d, {0, 0, 0, 1, 0}).conclusion.mu_ctx.clear();
    expect_invalid(d, InvalidReason::ContextMismatch, "root.0.0.0.1.0");
  }
}

TEST_CASE("naming the binder itself") {
  using namespace build;
  Context g{{"x", F("X")}};
  DerivationNode n = naming("a", "a", ax(g, "x"));
  CHECK(n.conclusion.subject == T("mu a.[a] x"));
  Derivation d{"self", System::FD2, {}, n};
  CHECK(check(d).valid);
  d.root.conclusion.type = F("Y");
  CHECK(check(d).reason == InvalidReason::TypeMismatch);
}

TEST_CASE("embedding C2 into M2") {
  Derivation c = embed_c2_in_m2(build_fixture("C-axiom"));
  CHECK(c.system == System::M2);
  CHECK(check(c).valid);
  CHECK(alpha_eq(c.root.conclusion.type, F("forall Xc (~~Xc -> Xc)")));

  Derivation zero = build_fixture("zero");
  zero.system = System::C2;
  Derivation z = embed_c2_in_m2(zero);
  CHECK(check(z).valid);
  CHECK(z.root.conclusion.subject == church(0));
  CHECK(alpha_eq(z.root.conclusion.type, nat_classical(FoTerm::zero())));

  for (const auto& name : fixture_names()) {
    Derivation d = build_fixture(name);
    if (d.system == System::AF2) d.system = System::C2;
    if (d.system != System::C2) continue;
    CheckResult r = check(embed_c2_in_m2(d));
    CHECK_MESSAGE(r.valid, name, " at ", r.path, ": ", r.message);
  }

  CHECK_THROWS_AS(embed_c2_in_m2(build_fixture("abort")), PreconditionViolated);
  Derivation bad = build_fixture("C-axiom");
  bad.root.conclusion.type = F("forall X (X -> X)");
  CHECK_THROWS_AS(embed_c2_in_m2(bad), PreconditionViolated);
}

TEST_CASE("head C-reduction preserves ⊥ on the step fixtures") {
  auto names = bottom_step_fixture_names();
  Derivation first = build_fixture(names[0]);
  ReductionTrace trace = head_c_reduce(first.root.conclusion.subject);
  REQUIRE(trace.steps.size() == names.size() - 1);
  for (std::size_t i = 0; i < names.size(); ++i) {
    Derivation d = build_fixture(names[i]);
    CHECK(check(d).valid);
    CHECK(d.root.conclusion.type.is(FormulaKind::Bottom));
    Term expected = i == 0 ? trace.initial : trace.steps[i - 1].result;
    CHECK(d.root.conclusion.subject == expected);
  }
}

TEST_CASE("pure fixtures of type N[s^n 0] normalize to n") {
  int seen = 0;
  for (const auto& name : fixture_names()) {
    Derivation d = build_fixture(name);
    const Term& t = d.root.conclusion.subject;
    if (!is_pure(t)) continue;
    for (unsigned n = 0; n <= 4; ++n) {
      if (d.system == System::AF2 && alpha_eq(d.root.conclusion.type, nat(FoTerm::numeral(n)))) {
        CHECK_MESSAGE(beta_normalize(t) == church(n), name);
        ++seen;
      }
    }
    if (alpha_eq(d.root.conclusion.type, nat_prop())) {
      auto nf = beta_normalize(t);
      REQUIRE(nf);
      bool numeral = false;
      for (unsigned n = 0; n <= 8; ++n) numeral = numeral || *nf == church(n);
      CHECK(numeral);
      ++seen;
    }
  }
  CHECK(seen >= 4);
}

TEST_CASE("fo_term_at and replace_fo_at") {
  Formula a = F("forall y (X(y) -> R(s(y), 0))");
  CHECK(fo_term_at(a, {0, 1, 0}) == parse_fo_term("s(y)"));
  CHECK(fo_term_at(a, {0, 1, 0, 0}) == parse_fo_term("y"));
  CHECK_FALSE(fo_term_at(a, {0, 2}));
  CHECK_FALSE(fo_term_at(a, {0, 1}));
  CHECK_FALSE(fo_term_at(a, {0, 1, 2}));
  CHECK(alpha_eq(*replace_fo_at(a, {0, 1, 1}, parse_fo_term("s(0)")), F("forall y (X(y) -> R(s(y), s(0)))")));
  CHECK_FALSE(replace_fo_at(a, {1}, FoTerm::zero()));
}
