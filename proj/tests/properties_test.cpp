#include <doctest.h>

#include "generators.hpp"
#include "mixlogic/classify.hpp"
#include "mixlogic/formula_syntax.hpp"
#include "mixlogic/integer_machines.hpp"
#include "mixlogic/reduction.hpp"
#include "mixlogic/term_syntax.hpp"
#include "mixlogic/translations.hpp"

using namespace mixlogic;
using namespace mixlogic::testkit;

namespace {

constexpr int kRounds = 300;

Term at_step(const ReductionTrace& tr, std::size_t k) { return k == 0 ? tr.initial : tr.steps.at(k - 1).result; }

Substitution random_vars(Rng& rng, const Term& t, const TermShape& images) {
  Substitution s;
  for (const auto& x : free_vars(t)) {
    if (coin(rng, 0.6)) s.vars.emplace(x, random_pure_term(rng, images));
  }
  return s;
}

}  // namespace

TEST_CASE("substitution on disjoint domains composes") {
  Rng rng(11);
  TermShape shape{4, {"a", "b", "c"}};
  TermShape images{2, {"c", "d"}};
  for (int i = 0; i < kRounds; ++i) {
    Term t = random_pure_term(rng, shape);
    Term u = random_pure_term(rng, images);
    Term v = random_pure_term(rng, images);
    if (free_vars(u).count("b") || free_vars(v).count("a")) continue;
    Term seq = substitute(substitute(t, {{{"a", u}}, {}}), {{{"b", v}}, {}});
    Term sim = substitute(t, {{{"a", u}, {"b", v}}, {}});
    CHECK_MESSAGE(seq == sim, to_string(t));
  }
}

TEST_CASE("P-substitution keeps terms in the stack language") {
  Rng rng(12);
  TermShape shape{4, {"a", "b"}};
  for (int i = 0; i < kRounds; ++i) {
    Term t = random_cp_term(rng, shape, {"p", "q"});
    REQUIRE(is_lambda_cp(t));
    Substitution s;
    s.vars.emplace("a", random_cp_term(rng, {2, {"b"}}, {"q"}));
    std::vector<Term> seq;
    for (std::size_t k = pick(rng, 3); k > 0; --k) seq.push_back(random_cp_term(rng, {2, {"b"}}, {"q"}));
    s.stacks.emplace("p", seq);
    Term r = substitute(t, s);
    CHECK_MESSAGE(is_lambda_cp(r), to_string(t));
    CHECK_FALSE(stack_constants(r).count("p"));
  }
}

TEST_CASE("printing is faithful and α-equivalence is an equivalence") {
  Rng rng(13);
  for (int i = 0; i < kRounds; ++i) {
    Term t = random_mu_term(rng, {5, {"a", "b"}});
    Term back = parse_term(to_string(t));
    CHECK_MESSAGE(back == t, to_string(t));
    CHECK(alpha_eq(t, back));
    CHECK(alpha_eq(back, t));
    CHECK(back.hash() == t.hash());
  }
  for (unsigned n = 0; n <= 20; ++n) {
    CHECK(free_vars(church(n)).empty());
    CHECK_FALSE(church(n) == church(n + 1));
  }
}

TEST_CASE("head C-reduction is head reduction on C-free terms") {
  Rng rng(14);
  for (int i = 0; i < kRounds; ++i) {
    Term t = random_pure_term(rng, {5});
    if (t.is(TermKind::Lam)) continue;
    ReductionTrace h = head_reduce(t, Budget(300));
    ReductionTrace c = head_c_reduce(t, Budget(300));
    REQUIRE(c.step_count() <= h.step_count());
    for (std::size_t k = 0; k < c.step_count(); ++k) CHECK(h.steps[k].result == c.steps[k].result);
    // Head C-reduction only stops early at an abstraction.
    if (c.step_count() < h.step_count() && !c.exhausted) CHECK_MESSAGE(c.final_term().is(TermKind::Lam), to_string(t));
  }
}

TEST_CASE("head C-reduction is stable under substitution") {
  Rng rng(15);
  TermShape images{3, {"d"}};
  int steps = 0;
  for (int i = 0; i < kRounds; ++i) {
    Term t = random_lambda_c_term(rng, {5});
    ReductionTrace tr = head_c_reduce(t, Budget(50));
    Substitution s = random_vars(rng, t, images);
    ReductionTrace st = head_c_reduce(substitute(t, s), Budget(tr.step_count() + 1));
    REQUIRE(st.step_count() >= tr.step_count());
    for (std::size_t k = 1; k <= tr.step_count(); ++k) {
      CHECK_MESSAGE(at_step(st, k) == substitute(at_step(tr, k), s), to_string(t), " step ", k);
      ++steps;
    }
  }
  CHECK(steps > kRounds);
}

TEST_CASE("stack reduction commutes with P-substitution") {
  Rng rng(16);
  int steps = 0;
  for (int i = 0; i < kRounds; ++i) {
    Term t = random_cp_term(rng, {5, {"a", "b"}}, {"p", "q"});
    ReductionTrace tr = stack_reduce(t, Budget(50));
    Substitution s;
    std::vector<Term> seq;
    // An empty sequence can leave an abstraction at the root, where reduction stops.
    for (std::size_t k = pick(rng, 3) + 1; k > 0; --k) seq.push_back(random_cp_term(rng, {2, {"d"}}, {"q"}));
    s.stacks.emplace("p", seq);
    if (coin(rng)) s.vars.emplace("a", random_cp_term(rng, {2, {"d"}}, {"q"}));
    ReductionTrace st = stack_reduce(substitute(t, s), Budget(tr.step_count() + 1));
    REQUIRE_MESSAGE(st.step_count() >= tr.step_count(), to_string(t));
    for (std::size_t k = 1; k <= tr.step_count(); ++k) {
      CHECK_MESSAGE(at_step(st, k) == substitute(at_step(tr, k), s), to_string(t), " step ", k);
      ++steps;
    }
  }
  CHECK(steps > kRounds / 2);
}

TEST_CASE("beta normal forms are fixed points") {
  Rng rng(17);
  for (int i = 0; i < kRounds; ++i) {
    Term t = random_lambda_c_term(rng, {5});
    auto nf = beta_normalize(t, Budget(2000));
    if (!nf) continue;
    auto again = beta_normalize(*nf, Budget(2000));
    REQUIRE(again);
    CHECK(*again == *nf);
    CHECK(beta_reduce(*nf).step_count() == 0);
  }
}

TEST_CASE("both λμ strategies reach the same normal form") {
  Rng rng(18);
  int compared = 0;
  for (int i = 0; i < kRounds; ++i) {
    MuTerm t(random_mu_term(rng, {4, {"a", "b"}}));
    auto lo = mu_reduce(t, Budget(500));
    auto ri = mu_reduce(t, Budget(500), MuStrategy::RightmostInnermost);
    if (lo.exhausted || ri.exhausted) continue;
    ++compared;
    CHECK_MESSAGE(lo.final_term() == ri.final_term(), to_string(t.term()));
  }
  CHECK(compared > kRounds / 2);
}

TEST_CASE("translation invariants") {
  Rng rng(19);
  for (int i = 0; i < kRounds; ++i) {
    Formula a = random_formula(rng);
    Formula e = prop_erase(a);
    CHECK(alpha_eq(prop_erase(e), e));
    Formula g = godel(a);
    for (const auto& p : free_preds(g)) CHECK(p.kind != Predicate::Kind::Classical);
    if (ends_with_bottom(a)) CHECK(is_classical_type(a));
    Formula c = random_classical_type(rng);
    REQUIRE(is_classical_type(c));
    CHECK_MESSAGE(ends_with_bottom(godel(c)), to_string(c));
  }
}

TEST_CASE("value extraction ignores β-expansion") {
  Rng rng(20);
  for (int i = 0; i < kRounds; ++i) {
    unsigned n = static_cast<unsigned>(pick(rng, 8));
    Term theta = church(n);
    for (std::size_t k = pick(rng, 4) + 1; k > 0; --k) {
      Term junk = random_pure_term(rng, {2, {}});
      theta = coin(rng) ? Term::app(Term::abstract("v", Term::app(Term::var("v"), junk)), Term::abstract("w", theta))
                        : Term::app(Term::abstract("v", Term::var("v")), theta);
    }
    ValueResult r = extract_value(theta);
    REQUIRE_MESSAGE(r, to_string(theta), ": ", r.message);
    CHECK(r.trace->n == n);
  }
}
