#include <doctest.h>

#include "mixlogic/error.hpp"
#include "mixlogic/reduction.hpp"
#include "mixlogic/term_syntax.hpp"
#include "oracle/named_lambda.hpp"

using namespace mixlogic;

namespace {
Term T(const char* s) { return parse_term(s); }
Term T(const std::string& s) { return parse_term(s); }
MuTerm M(const char* s) { return parse_mu_term(s); }

Term oracle_normal_form(const std::string& src) {
  auto nf = oracle::normalize(oracle::Parser(src).parse(), 100000);
  REQUIRE(nf.has_value());
  return T(oracle::print(*nf));
}
}  // namespace

TEST_CASE("head reduction") {
  auto tr = head_reduce(T("(\\x.x) y"));
  CHECK(tr.final_term() == T("y"));
  CHECK(tr.step_count() == 1);
  CHECK_FALSE(tr.exhausted);

  auto c2 = head_reduce(Term::apply(church(2), std::vector{T("a"), T("f")}));
  CHECK(c2.final_term() == T("f (f a)"));
  auto h = oracle::head_steps(oracle::Parser("(\\x.\\f.f (f x)) a f").parse(), 100);
  REQUIRE(h.has_value());
  CHECK(c2.step_count() == *h);

  auto hnf = head_reduce(T("\\x.x ((\\y.y) z)"));
  CHECK(hnf.step_count() == 0);

  auto under = head_reduce(T("\\z.(\\x.x) z"));
  CHECK(under.final_term() == T("\\z.z"));
  CHECK(under.steps[0].path == "l");

  CHECK_THROWS_AS(head_reduce(T("C x")), PreconditionViolated);
  CHECK_THROWS_AS(head_reduce(T("x #p")), PreconditionViolated);
}

TEST_CASE("head reduction budget") {
  auto tr = head_reduce(T("(\\x.x x) (\\x.x x)"), Budget(50));
  CHECK(tr.exhausted);
  CHECK(tr.step_count() == 50);
  CHECK_THROWS_AS(Budget(0), PreconditionViolated);
}

TEST_CASE("head C-reduction") {
  auto tr = head_c_reduce(T("C t u v"));
  CHECK(tr.step_count() == 1);
  CHECK(tr.final_term() == T("t (\\x.x u v)"));
  CHECK(tr.steps[0].rule == "C");

  auto a = head_c_reduce(Term::apply(builtin("abort"), std::vector{T("t"), T("t1"), T("t2")}));
  CHECK(a.final_term() == T("t"));
  CHECK(head_c_reduce(T("x")).step_count() == 0);
  // The fresh variable of rule 2 cannot capture free variables of the stack.
  CHECK(head_c_reduce(T("C t x")).final_term() == T("t (\\y.y x)"));
}

TEST_CASE("head C-reduction agrees with head reduction on C-free terms without leading λ") {
  for (const char* src : {"(\\x.\\f.f (f x)) a g", "(\\x.x x) (\\y.y) z", "(\\x.\\y.y x) a (\\z.z)"}) {
    CAPTURE(src);
    auto h = head_reduce(T(src));
    auto hc = head_c_reduce(T(src));
    REQUIRE(h.step_count() == hc.step_count());
    for (std::size_t i = 0; i < h.step_count(); ++i) {
      CHECK(h.steps[i].result == hc.steps[i].result);
      CHECK(h.steps[i].path == hc.steps[i].path);
    }
  }
}

TEST_CASE("stack reduction") {
  CHECK(stack_reduce(T("(\\x.x #p) y")).final_term() == T("y #p"));
  CHECK(stack_reduce(T("C t #p")).final_term() == T("t (\\x.x #p)"));
  CHECK(stack_reduce(Term::apply(church(0), std::vector{T("x"), T("g"), T("#p")})).final_term() == T("x #p"));
  // Neither rule takes a stack constant as its first argument.
  CHECK(stack_reduce(T("(\\z.z) #p x")).step_count() == 0);
  CHECK(stack_reduce(T("C #p x")).step_count() == 0);
  CHECK(head_c_reduce(T("(\\z.z) #p x")).step_count() == 1);
  CHECK_THROWS_AS(stack_reduce(T("#p x")), PreconditionViolated);
}

TEST_CASE("beta normalization") {
  CHECK(*beta_normalize(Term::app(builtin("succ"), church(1))) == church(2));
  CHECK(*beta_normalize(church(3)) == church(3));
  CHECK_FALSE(beta_normalize(T("(\\x.x x) (\\x.x x)"), Budget(1000)).has_value());
  // Unfolding s = \n.\x.\f.f (n x f) on 1 by hand.
  CHECK(*beta_normalize(T("\\x.\\f.f ((\\x.\\f.f x) x f)")) == church(2));
  CHECK(*beta_normalize(T("C ((\\x.x) y)")) == T("C y"));
  CHECK(*beta_normalize(T("x #p ((\\z.z) #q)")) == T("x #p #q"));
}

TEST_CASE("beta normalization matches the named-variable reference") {
  for (const char* src : {"(\\n.\\x.\\f.f (n x f)) (\\x.\\f.f (f x))",
                          "(\\m.\\n.\\x.\\f.m (n x f) f) (\\x.\\f.f (f x)) (\\x.\\f.f x)",
                          "(\\y.\\x.y x) x",
                          "(\\a.\\b.\\c.a c (b c)) (\\p.\\q.p) (\\p.\\q.q)",
                          "(\\t.t t) (\\z.\\w.z)"}) {
    CAPTURE(src);
    auto nf = beta_normalize(T(src));
    REQUIRE(nf.has_value());
    CHECK(*nf == oracle_normal_form(src));
    CHECK(*beta_normalize(*nf) == *nf);
  }
}

TEST_CASE("stepwise beta reduction reaches the same normal form") {
  Term t = T("(\\n.\\x.\\f.f (n x f)) (\\x.\\f.f (f x))");
  auto tr = beta_reduce(t);
  CHECK_FALSE(tr.exhausted);
  CHECK(tr.final_term() == *beta_normalize(t));
  CHECK(tr.steps[0].path == "-");
}

TEST_CASE("C-solvability") {
  auto s = is_c_solvable(T("(\\x.x) y"));
  CHECK(s.outcome == CSolvability::Outcome::Solvable);
  CHECK(s.head == "y");
  CHECK(s.args.empty());
  auto a = is_c_solvable(Term::apply(builtin("abort"), std::vector{T("y"), T("u")}));
  CHECK(a.outcome == CSolvability::Outcome::Solvable);
  CHECK(a.head == "y");
  auto w = is_c_solvable(T("(\\x.x x) (\\x.x x)"), Budget(100));
  CHECK(w.outcome == CSolvability::Outcome::NotWithinBudget);
  CHECK(is_c_solvable(T("\\x.x")).outcome == CSolvability::Outcome::Unsolvable);
}

TEST_CASE("trace formats") {
  auto tr = head_reduce(T("(\\x.x) ((\\y.y) z)"));
  CHECK(format_trace(tr, TraceFormat::Text) ==
        "step 1: beta @ - => (\\y.y) z\n"
        "step 2: beta @ - => z\n");
  std::string js = format_trace(tr, TraceFormat::Structured);
  CHECK(js.find("\"step_count\": 2") != std::string::npos);
}

TEST_CASE("lambda-mu computation rules") {
  auto c1 = mu_reduce(M("(\\x.x) y"));
  CHECK(c1.final_term() == T("y"));
  CHECK(c1.steps[0].rule == "C1");

  auto c2 = mu_reduce(M("(mu a.[a] x) v"));
  REQUIRE(c2.step_count() == 2);
  CHECK(c2.steps[0].rule == "C2");
  CHECK(c2.steps[0].result == T("mu a.[a] x v"));
  CHECK(c2.steps[1].rule == "S2");
  CHECK(c2.final_term() == T("x v"));

  // Nested namings to the applied binder all receive the argument.
  auto nested = mu_step(T("(mu a.[b] f (mu c.[a] x)) v"));
  REQUIRE(nested);
  CHECK(nested->rule == "C2");
  CHECK(nested->result == T("mu a.[b] f (mu c.[a] x v)"));
}

TEST_CASE("lambda-mu simplification rules") {
  auto s2 = mu_reduce(M("mu a.[a] x"));
  CHECK(s2.final_term() == T("x"));
  CHECK(s2.steps[0].rule == "S2");

  auto s1 = mu_step(T("mu g.[a] mu b.[b] f (mu c.[b] x)"));
  REQUIRE(s1);
  CHECK(s1->rule == "S1");
  CHECK(s1->result == T("mu g.[a] f (mu c.[a] x)"));

  // Renaming onto the outer binder itself.
  auto s1self = mu_step(T("mu g.[g] mu b.[d] mu c.[b] x"));
  REQUIRE(s1self);
  CHECK(s1self->result == T("mu g.[d] mu c.[g] x"));

  // S2 is blocked by a use of the binder.
  auto blocked = mu_step(T("mu a.[a] f (mu b.[a] x)"));
  CHECK_FALSE(blocked.has_value());

  auto s3 = mu_step(T("mu a.[b] f (mu c.[a] \\y.y)"));
  REQUIRE(s3);
  CHECK(s3->rule == "S3");
  CHECK(s3->result == T("\\x.mu a.[b] f (mu c.[a] (\\y.y) x)"));
}

TEST_CASE("lambda-mu head equivalence") {
  CHECK(mu_head_equiv(M("\\x.x"), M("\\x.x")) == Tristate::True);
  CHECK(mu_head_equiv(M("(\\x.x) y"), M("y")) == Tristate::True);
  CHECK(mu_head_equiv(M("\\x.x"), M("\\x.x x")) == Tristate::False);
  CHECK(mu_head_equiv(M("(\\x.x x) (\\x.x x)"), M("y"), Budget(100)) == Tristate::Inconclusive);
}

TEST_CASE("both lambda-mu strategies agree on normal forms") {
  for (const char* src : {"(mu a.[a] x) v w", "(\\x.mu a.[a] x (mu b.[a] \\y.y)) z",
                          "(mu a.[b] f (mu c.[a] \\y.y)) v", "mu a.[a] mu b.[a] (\\x.x) y"}) {
    CAPTURE(src);
    auto lo = mu_reduce(M(src));
    auto ri = mu_reduce(M(src), Budget(), MuStrategy::RightmostInnermost);
    REQUIRE_FALSE(lo.exhausted);
    REQUIRE_FALSE(ri.exhausted);
    CHECK(lo.final_term() == ri.final_term());
  }
}
