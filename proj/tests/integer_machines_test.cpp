#include <doctest.h>

#include <random>

#include "mixlogic/error.hpp"
#include "mixlogic/integer_machines.hpp"
#include "mixlogic/term_syntax.hpp"
#include "oracle/rep_oracle.hpp"

using namespace mixlogic;

namespace {

Term T(const char* s) { return parse_term(s); }
MuTerm M(const std::string& s) { return parse_mu_term(s); }

Term f_power(unsigned n, const Term& x, const char* f = "f") {
  Term t = x;
  for (unsigned i = 0; i < n; ++i) t = Term::app(Term::var(f), t);
  return t;
}

// λx.λf.(C)λk.(k)((f)^n((C)λk2.(k)((f)^n x)))
Term backtrack(unsigned n) {
  Term inner = Term::app(Term::control(),
                         Term::abstract("k2", Term::app(Term::var("k"), f_power(n, Term::var("x")))));
  Term outer = Term::app(Term::control(), Term::abstract("k", Term::app(Term::var("k"), f_power(n, inner))));
  return Term::abstract("x", Term::abstract("f", outer));
}

// Arithmetic of the index maps, checked from the definition.
void check_indices(const ValueTrace& v) {
  REQUIRE(v.I.size() == v.m + 1);
  REQUIRE(v.r.size() == v.m + 1);
  CHECK(v.I[0] == v.n);
  CHECK(v.I[v.r[v.m]] == 0);
  for (unsigned i = 0; i < v.m; ++i) {
    CHECK(v.r[i] <= i);
    CHECK(v.I[i + 1] + 1 == v.I[v.r[i]]);
  }
  CHECK(v.r[v.m] <= v.m);
  CHECK(v.segments.size() == v.m + 1);
}

}  // namespace

TEST_CASE("church numerals") {
  for (unsigned n = 0; n <= 12; ++n) {
    ValueResult r = extract_value(church(n));
    REQUIRE(r);
    CHECK(r.trace->n == n);
    CHECK(r.trace->m == n);
    check_indices(*r.trace);
    for (unsigned i = 0; i <= n; ++i) {
      CHECK(r.trace->I[i] == n - i);
      CHECK(r.trace->r[i] == i);
    }
  }
  ValueResult three = extract_value(church(3));
  CHECK(to_string(*three.trace) == "n=3 m=3 I=[3,2,1,0] r=[0,1,2,3]");
  ValueResult zero = extract_value(church(0));
  CHECK(to_string(zero.trace->segments[0].final_term()) == "x #p0");
}

TEST_CASE("β-expanded and classical representatives") {
  Term succ = builtin("succ");
  for (unsigned n = 0; n <= 6; ++n) {
    Term expanded = church(0);
    for (unsigned i = 0; i < n; ++i) expanded = Term::app(succ, expanded);
    ValueResult r = extract_value(expanded);
    REQUIRE(r);
    CHECK(r.trace->n == n);
    check_indices(*r.trace);

    Term wrapped = Term::app(Term::control(), Term::abstract("k", Term::app(Term::var("k"), church(n))));
    ValueResult w = extract_value(wrapped);
    REQUIRE(w);
    CHECK(w.trace->n == n);
    check_indices(*w.trace);

    ValueResult b = extract_value(backtrack(n));
    REQUIRE(b);
    CHECK(b.trace->n == n);
    check_indices(*b.trace);
  }
  ValueResult c2 = extract_value(T("C (\\k.k (\\x.\\f.f (f x)))"));
  REQUIRE(c2);
  CHECK(c2.trace->n == 2);
}

TEST_CASE("backtracking integer by hand") {
  // seg0 ends (g)t1 #p0 with t1 = (C)λk2.((λy.(y)#p0)(g)x);
  // seg1 ends (g)x #p0; seg2 ends (x)#p2.
  ValueResult r = extract_value(backtrack(1));
  REQUIRE(r);
  CHECK(to_string(*r.trace) == "n=1 m=2 I=[1,0,0] r=[0,0,2]");
  CHECK(r.trace->t[2] == Term::var("x"));
}

TEST_CASE("failures") {
  ValueResult stack_head = extract_value(T("\\x.\\g.\\p.p"));
  CHECK_FALSE(stack_head);
  CHECK(stack_head.failure == ValueFailure::BadHead);
  CHECK(extract_value(T("\\x.\\g.g")).failure == ValueFailure::BadHead);
  CHECK(extract_value(T("\\x.\\g.y")).failure == ValueFailure::BadHead);
  CHECK(extract_value(T("\\x.\\g.\\p.x (g p)")).failure == ValueFailure::BadHead);
  // Second segment returns to #p0 through x: I(1) would be -1.
  ValueResult neg = extract_value(T("\\x.\\g.C (\\k.k (g (C (\\h.k x))))"));
  CHECK(neg.failure == ValueFailure::Inconsistent);
  CHECK(extract_value(church(5), Budget(1)).failure == ValueFailure::BudgetExhausted);
  CHECK(extract_value(T("(\\z.z z) (\\z.z z)"), Budget(500)).failure == ValueFailure::BudgetExhausted);
  CHECK_THROWS_AS(extract_value(T("mu a.[a] x")), PreconditionViolated);
}

TEST_CASE("open extraction follows the substitution") {
  Term a = T("a");
  Term F = T("\\u.\\v.u (s v)");
  ValueResult base = extract_value(church(2));
  ValueResult open = extract_value_open(church(2), a, F, {{T("u")}});
  REQUIRE(open);
  CHECK(open.trace->m == base.trace->m);
  CHECK(open.trace->I == base.trace->I);
  CHECK(open.trace->r == base.trace->r);
  CHECK(open.trace->segments[0].final_term() == T("(\\u.\\v.u (s v)) ((\\u.\\v.u (s v)) a) u"));
  CHECK(open.trace->segments[1].final_term() == Term::apply(F, std::vector{a, Term::stack("p1")}));

  ValueResult zero = extract_value_open(church(0), T("\\z.z"), F, {{T("w")}});
  REQUIRE(zero);
  CHECK(zero.trace->segments[0].final_term() == T("(\\z.z) w"));

  ValueResult empty = extract_value_open(church(1), a, F, {{}, {T("w1"), T("w2")}});
  REQUIRE(empty);
  CHECK(empty.trace->segments[0].final_term() == Term::app(F, a));
  CHECK(empty.trace->segments[1].final_term() == T("a w1 w2"));

  for (unsigned n = 0; n <= 4; ++n) {
    ValueResult b = extract_value(backtrack(n));
    ValueResult o = extract_value_open(backtrack(n), T("\\z.z"), T("\\u.\\v.u v"), {{T("w0")}, {T("w1")}, {T("w2")}});
    REQUIRE(o);
    CHECK(o.trace->r == b.trace->r);
    CHECK(o.trace->I == b.trace->I);
  }
  CHECK(extract_value_open(church(5), a, F, {}, Budget(1)).failure == ValueFailure::BudgetExhausted);
}

TEST_CASE("grammar") {
  CHECK(in_nxf(M("x"), "x", "f"));
  CHECK(in_nxf(M("f (f x)"), "x", "f"));
  CHECK(in_nxf(M("mu a.[b] f (mu c.[a] x)"), "x", "f"));
  CHECK_FALSE(in_nxf(M("\\y.x"), "x", "f"));
  CHECK_FALSE(in_nxf(M("f"), "x", "f"));
  CHECK_FALSE(in_nxf(M("f x x"), "x", "f"));
  CHECK_FALSE(in_nxf(M("g x"), "x", "f"));
}

TEST_CASE("rep") {
  CHECK(rep(M("x")) == RepSet::finite({0}));
  CHECK(rep(M("f (f x)")) == RepSet::finite({2}));
  CHECK(rep(M("mu a.[b] f (mu c.[a] f x)")) == RepSet::finite({1}));
  CHECK(rep(M("mu a.[a] f (mu b.[a] f x)")) == RepSet::finite({1}));
  CHECK(rep(M("mu a.[b] x")) == RepSet::all());
  CHECK(rep_uses_empty_family(M("mu a.[b] x")));
  CHECK_FALSE(rep_uses_empty_family(M("f (f x)")));
  CHECK(rep(M("f (mu a.[b] x)")) == RepSet::at_least(1));
  CHECK(to_string(rep(M("f (mu a.[b] x)"))) == "{1, ...}");
  CHECK(to_string(RepSet::all()) == "all");
  CHECK(to_string(RepSet::finite({0, 2})) == "{0, 2}");
  for (unsigned n = 0; n <= 10; ++n) CHECK(rep(MuTerm(f_power(n, Term::var("x")))) == RepSet::finite({n}));
  CHECK_THROWS_AS(rep(M("\\y.x")), PreconditionViolated);
}

TEST_CASE("rep agrees with the clause-by-clause reference") {
  std::mt19937 rng(7);
  const char* names[] = {"a", "b", "c"};
  for (int trial = 0; trial < 400; ++trial) {
    oracle::GrammarTerm u;
    std::size_t depth = rng() % 7;
    for (std::size_t i = 0; i < depth; ++i) {
      if (rng() % 2) {
        u.push_back({true, {}, {}});
      } else {
        u.push_back({false, names[rng() % 3], names[rng() % 3]});
      }
    }
    std::string text = oracle::print(u);
    RepSet s = rep(M(text));
    for (unsigned n = 0; n <= oracle::count_f(u) + 1; ++n) {
      CHECK_MESSAGE(s.contains(n) == oracle::member(n, u), text, " at ", n);
    }
  }
}

TEST_CASE("classify λμ integers") {
  using V = MuIntegerClass::Verdict;
  CHECK(classify_mu_integer(M("\\x.\\f.f (f x)")).n == 2);
  CHECK(classify_mu_integer(M("\\x.\\f.f (f x)")).is_integer());
  CHECK(classify_mu_integer(M("\\x.\\f.x")).n == 0);
  CHECK(classify_mu_integer(M("\\x.\\f.\\y.x")).verdict == V::Grammar);
  CHECK(classify_mu_integer(M("\\x.\\f.(\\y.y) x")).verdict == V::NotNormal);
  CHECK(classify_mu_integer(M("\\x.x")).verdict == V::NoPrefix);
  CHECK(classify_mu_integer(M("\\x.\\f.f f")).verdict == V::Grammar);
  CHECK(classify_mu_integer(M("\\x.\\f.mu a.[b] f x")).verdict == V::FreeMuVariable);
  CHECK(classify_mu_integer(M("\\x.\\f.mu a.[a] f (mu b.[a] x)")).verdict == V::NotSingleton);
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(classify_mu_integer(MuTerm(church(n))).n == n);
  }
  for (unsigned n = 1; n <= 6; ++n) {
    Term body = Term::mu_abstract("a", "a", Term::app(Term::var("f"),
                                                      Term::mu_abstract("b", "a", f_power(n, Term::var("x")))));
    MuIntegerClass c = classify_mu_integer(MuTerm(Term::abstract("x", Term::abstract("f", body))));
    CHECK(c.is_integer());
    CHECK(c.n == n);
    CHECK(c.empty_family);
  }
}
