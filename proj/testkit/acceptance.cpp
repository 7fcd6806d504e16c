#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <sstream>

#include "generators.hpp"
#include "mixlogic/classify.hpp"
#include "mixlogic/derivation.hpp"
#include "mixlogic/derivation_io.hpp"
#include "mixlogic/error.hpp"
#include "mixlogic/fixtures.hpp"
#include "mixlogic/formula_syntax.hpp"
#include "mixlogic/integer_machines.hpp"
#include "mixlogic/reduction.hpp"
#include "mixlogic/storage.hpp"
#include "mixlogic/term_syntax.hpp"
#include "mixlogic/translations.hpp"
#include "oracle/named_lambda.hpp"
#include "oracle/rep_oracle.hpp"

namespace mixlogic::testkit {

namespace {

class Tally {
 public:
  template <class Msg>
  void expect(bool ok, Msg&& msg) {
    ++checks_;
    if (ok) return;
    if (failures_ == 0) first_ = std::invoke(std::forward<Msg>(msg));
    ++failures_;
  }
  void note(std::string s) { summary_ = std::move(s); }

  CriterionResult result(unsigned id, std::string title) const {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    r.checks = checks_;
    r.failures = failures_;
    r.passed = failures_ == 0 && checks_ > 0;
    r.detail = failures_ ? first_ : summary_;
    return r;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
  std::string summary_;
};

std::string str(const Term& t) { return to_string(t); }

oracle::Ptr named(const Term& t) { return oracle::Parser(to_string(t)).parse(); }

// Reference β-normal form compared with church(n).
bool normalizes_to_church(const Term& t, unsigned n) {
  auto nf = oracle::normalize(named(t), 200000);
  return nf && oracle::alpha_equal(*nf, named(church(n)));
}

Term succ_power(unsigned n) {
  Term t = builtin("zero");
  for (unsigned i = 0; i < n; ++i) t = Term::app(builtin("succ"), t);
  return t;
}

Term term_at(const ReductionTrace& tr, std::size_t k) { return k == 0 ? tr.initial : tr.steps.at(k - 1).result; }

// -- 1 -------------------------------------------------------------------------

void storage_simulation(const AcceptanceOptions& o, Tally& t) {
  auto corpus = pure_corpus(0, 15);
  for (unsigned n = 0; n <= 15; ++n) {
    auto reps = std::count_if(corpus.begin(), corpus.end(), [&](const CorpusEntry& e) { return e.n == n; });
    t.expect(reps >= 3, [&] { return "fewer than three representatives of " + std::to_string(n); });
  }
  std::size_t reports = 0;
  for (const char* name : {"T1", "T2"}) {
    for (const auto& r : verify_storage(builtin(name), corpus, Budget(o.budget))) {
      ++reports;
      t.expect(r.simulated() && r.tau_value == r.n, [&] { return std::string(name) + " " + to_string(r); });
      t.expect(r.payload && *r.payload == succ_power(r.n),
               [&] { return std::string(name) + " payload for n=" + std::to_string(r.n) + " is not (s)^n 0"; });
      t.expect(r.payload && normalizes_to_church(*r.payload, r.n),
               [&] { return std::string(name) + " payload for n=" + std::to_string(r.n) + " does not normalize to n"; });
    }
  }
  t.note(std::to_string(reports) + " reports over n=0..15");
}

// -- 2 -------------------------------------------------------------------------

void value_extraction(const AcceptanceOptions& o, Tally& t) {
  for (unsigned n = 0; n <= 10; ++n) {
    Term wrapped = Term::app(Term::control(), Term::abstract("k", Term::app(Term::var("k"), church(n))));
    for (const Term& theta : {church(n), wrapped}) {
      bool is_church = theta == church(n);
      ValueResult res = extract_value(theta, Budget(o.budget));
      t.expect(bool(res), [&] { return str(theta) + ": " + res.message; });
      if (!res) continue;
      const ValueTrace& v = *res.trace;
      auto where = [&] { return str(theta) + ": " + to_string(v); };
      t.expect(v.n == n, where);
      t.expect(v.I.size() == v.m + 1 && v.r.size() == v.m + 1, where);
      if (v.I.size() != v.m + 1 || v.r.size() != v.m + 1) continue;
      t.expect(v.I[0] == n, where);
      t.expect(v.r[v.m] <= v.m && v.I[v.r[v.m]] == 0, where);
      for (unsigned i = 0; i < v.m; ++i) {
        t.expect(v.r[i] <= i && v.I[v.r[i]] >= 1 && v.I[i + 1] == v.I[v.r[i]] - 1, where);
      }
      if (is_church) {
        // (x)#p0 after n segments ending (g)(f)^k x #p_i: one segment per f.
        t.expect(v.m == n, where);
        for (unsigned i = 0; i <= v.m; ++i) t.expect(v.r[i] == i, where);
      }
    }
  }
  t.note("church(n) and (C)\\k.(k)church(n), n=0..10");
}

// -- 3 -------------------------------------------------------------------------

void classical_storage(const AcceptanceOptions& o, Tally& t) {
  std::size_t reports = 0;
  for (const char* name : {"T1", "T2"}) {
    for (const auto& r : verify_storage_classical(builtin(name), 0, 10, Budget(o.budget))) {
      ++reports;
      t.expect(contains_control(r.representative), [&] { return "representative without C: " + str(r.representative); });
      t.expect(r.simulated() && r.tau_value == r.n, [&] { return std::string(name) + " " + to_string(r); });
    }
  }
  for (const char* name : {"T1", "T2"}) {
    Term remark = substitute(parse_term("\\nu.\\f.f (C (T nu))"), {{{"T", builtin(name)}}, {}});
    for (const auto& r : verify_storage_classical(remark, 0, 10, Budget(o.budget))) {
      t.expect(!r.simulated(), [&] { return "counterexample over " + std::string(name) + " simulated: " + to_string(r); });
    }
  }
  t.note(std::to_string(reports) + " classical reports; counterexample rejected");
}

// -- 4 -------------------------------------------------------------------------

void control_operators(const AcceptanceOptions& o, Tally& t) {
  Budget b(o.budget);
  t.expect(characterize_bottom_arrow(builtin("abort"), 0, 5, b).confirmed, [] { return std::string("abort over 0..5"); });
  Term wrapper = parse_term("\\x.C x");
  for (unsigned k = 0; k <= 5; ++k) {
    Characterization a = characterize_bottom_arrow(builtin("abort"), k, k, b);
    t.expect(a.confirmed, [&] { return "abort at arity " + std::to_string(k) + ": " + a.message; });
    Characterization w = characterize_cc(wrapper, k, k, b);
    t.expect(w.confirmed && w.m == 1, [&] { return "C-wrapper at arity " + std::to_string(k) + ": m=" + std::to_string(w.m); });
    Characterization c = characterize_cc(builtin("Cprime"), k, k, b);
    t.expect(c.confirmed && c.m == 2, [&] { return "C' at arity " + std::to_string(k) + ": m=" + std::to_string(c.m); });
  }
  t.note("abort confirmed; shapes 1 and 2 at arities 0..5");
}

// -- 5 -------------------------------------------------------------------------

std::vector<Derivation> shipped(const AcceptanceOptions& o, Tally& t) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(o.fixture_dir / "derivations", ec)) {
    if (entry.path().extension() == ".deriv") files.push_back(entry.path());
  }
  t.expect(!ec, [&] { return "cannot read " + (o.fixture_dir / "derivations").string(); });
  std::sort(files.begin(), files.end());
  std::vector<Derivation> out;
  for (const auto& f : files) {
    try {
      out.push_back(load_derivation(f));
    } catch (const std::exception& e) {
      t.expect(false, [&] { return f.filename().string() + ": " + e.what(); });
    }
  }
  return out;
}

// Rules of each system, read off the rule lists of the type systems.
bool allowed(System s, RuleTag r) {
  static const std::vector<RuleTag> af2 = {RuleTag::Ax,     RuleTag::ArrIntro, RuleTag::ArrElim, RuleTag::FoGen,
                                           RuleTag::FoInst, RuleTag::SoGen,    RuleTag::SoInst,  RuleTag::Eq};
  auto in = [&](std::initializer_list<RuleTag> extra) {
    return std::find(af2.begin(), af2.end(), r) != af2.end() || std::find(extra.begin(), extra.end(), r) != extra.end();
  };
  switch (s) {
    case System::AF2:
      return in({});
    case System::C2:
      return in({RuleTag::CAxiom});
    case System::M2:
      return in({RuleTag::CAxiom, RuleTag::ClassGen, RuleTag::ClassInst});
    case System::M:
      return r != RuleTag::FoGen && r != RuleTag::FoInst && r != RuleTag::Eq &&
             in({RuleTag::CAxiom, RuleTag::ClassGen, RuleTag::ClassInst});
    case System::FD2:
      return in({RuleTag::MuNaming});
  }
  return false;
}

RuleTag foreign_rule(System s) {
  for (RuleTag r : {RuleTag::CAxiom, RuleTag::MuNaming, RuleTag::FoGen}) {
    if (!allowed(s, r)) return r;
  }
  return RuleTag::MuNaming;
}

bool is_bottom(const Formula& a) { return a.is(FormulaKind::Bottom); }

std::optional<std::size_t> arity_in(const Formula& a, const Predicate& p) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return std::nullopt;
    case FormulaKind::Atom:
      return a.pred() == p ? std::optional<std::size_t>(a.args().size()) : std::nullopt;
    case FormulaKind::Arrow:
      if (auto l = arity_in(a.lhs(), p)) return l;
      return arity_in(a.rhs(), p);
    default:
      return arity_in(a.body(), p);
  }
}

struct Corruption {
  std::string kind;
  std::vector<std::size_t> path;
  InvalidReason expected;
  std::function<void(DerivationNode&)> apply;
};

void corruptions_of(const Derivation& d, const DerivationNode& n, std::vector<std::size_t>& path, std::vector<Corruption>& out) {
  const Sequent& c = n.conclusion;
  out.push_back({"wrong system", path, InvalidReason::WrongSystem,
                 [r = foreign_rule(d.system)](DerivationNode& m) { m.rule = r; }});
  switch (n.rule) {
    case RuleTag::FoInst: {
      const Formula& q = n.premises[0].conclusion.type;
      if (!free_fo_vars(q.body()).count(q.var())) break;
      out.push_back({"wrong witness", path, InvalidReason::BadWitness, [](DerivationNode& m) {
                       m.witness = FoTerm::succ(std::get<FoTerm>(m.witness));
                     }});
      break;
    }
    case RuleTag::SoInst:
    case RuleTag::ClassInst: {
      const Formula& q = n.premises[0].conclusion.type;
      bool cl = n.rule == RuleTag::ClassInst;
      Predicate x = cl ? Predicate::classical(q.var()) : Predicate::var(q.var());
      if (!pred_free_in(q.body(), x)) break;
      out.push_back({"wrong witness", path, InvalidReason::BadWitness, [cl](DerivationNode& m) {
                       auto g = std::get<PredAbstraction>(m.witness);
                       Formula other = cl ? Formula::atom(Predicate::classical("Q")) : Formula::atom(Predicate::symbol("Q"));
                       g.body = is_bottom(g.body) ? other : Formula::bottom();
                       m.witness = g;
                     }});
      break;
    }
    case RuleTag::Eq:
      out.push_back({"wrong witness", path, InvalidReason::BadWitness, [](DerivationNode& m) {
                       auto& w = std::get<EqWitness>(m.witness);
                       w.left_to_right = !w.left_to_right;
                     }});
      break;
    case RuleTag::FoGen:
    case RuleTag::SoGen:
    case RuleTag::ClassGen: {
      const std::string v = c.type.var();
      Formula hyp = Formula::bottom();
      if (n.rule == RuleTag::FoGen) {
        hyp = Formula::atom(Predicate::symbol("D"), {FoTerm::var(v)});
      } else {
        Predicate p = n.rule == RuleTag::SoGen ? Predicate::var(v) : Predicate::classical(v);
        std::size_t k = arity_in(n.premises[0].conclusion.type, p).value_or(0);
        hyp = Formula::atom(p, std::vector<FoTerm>(k, FoTerm::zero()));
      }
      std::set<std::string> labels;
      for (const auto& [l, f] : c.lambda_ctx) labels.insert(l);
      std::string label = fresh_name("h", labels);
      out.push_back({"side condition", path, InvalidReason::SideConditionViolated,
                     [label, hyp](DerivationNode& m) { m.conclusion.lambda_ctx.emplace_back(label, hyp); }});
      break;
    }
    default:
      break;
  }
  for (std::size_t i = 0; i < n.premises.size(); ++i) {
    path.push_back(i);
    corruptions_of(d, n.premises[i], path, out);
    path.pop_back();
  }
}

std::string path_string(const std::vector<std::size_t>& p) {
  std::string s = "root";
  for (auto i : p) s += "." + std::to_string(i);
  return s;
}

void derivation_fixtures(const AcceptanceOptions& o, Tally& t) {
  auto ds = shipped(o, t);
  t.expect(ds.size() >= 8, [&] { return "only " + std::to_string(ds.size()) + " shipped derivations"; });
  std::map<std::string, std::size_t> kinds;
  std::size_t embedded = 0;
  for (const auto& d : ds) {
    CheckResult r = check(d);
    t.expect(r.valid, [&] { return d.name + " invalid at " + r.path + ": " + r.message; });
    if (!r.valid) continue;
    std::vector<Corruption> cs;
    std::vector<std::size_t> path;
    corruptions_of(d, d.root, path, cs);
    for (const auto& c : cs) {
      Derivation bad = d;
      DerivationNode* node = &bad.root;
      for (auto i : c.path) node = &node->premises[i];
      c.apply(*node);
      CheckResult br = check(bad);
      ++kinds[c.kind];
      t.expect(!br.valid && br.reason == c.expected && br.path == path_string(c.path), [&] {
        return d.name + " " + c.kind + " at " + path_string(c.path) + ": got " +
               (br.valid ? std::string("valid") : std::string(to_string(br.reason)) + " at " + br.path);
      });
    }
    if (d.system == System::C2) {
      try {
        CheckResult er = check(embed_c2_in_m2(d));
        t.expect(er.valid, [&] { return d.name + " embedded fails at " + er.path + ": " + er.message; });
      } catch (const std::exception& e) {
        t.expect(false, [&] { return d.name + " embedding: " + e.what(); });
      }
      ++embedded;
    }
  }
  for (const char* k : {"wrong witness", "side condition", "wrong system"}) {
    t.expect(kinds[k] > 0, [&] { return std::string("no corruption of kind ") + k; });
  }
  std::ostringstream os;
  os << ds.size() << " derivations, " << kinds["wrong witness"] << "/" << kinds["side condition"] << "/"
     << kinds["wrong system"] << " corruptions, " << embedded << " embedded";
  t.note(os.str());
}

// -- 6 -------------------------------------------------------------------------

void head_laws(const AcceptanceOptions& o, Tally& t) {
  Rng rng(o.seed);
  TermShape shape{6, {"a", "b", "c"}, 0.45};
  TermShape arg_shape{3, {"a", "b", "c", "d"}, 0.3};
  constexpr std::size_t kTerms = 1000;
  for (std::size_t i = 0; i < kTerms; ++i) {
    Term u = random_head_terminating(rng, shape, 200);
    ReductionTrace tu = *bounded_head_reduce(u, 200, kMaxTermSize);
    std::size_t j = pick(rng, tu.step_count() + 1);
    Term v = term_at(tu, j);

    Substitution s;
    for (const auto& x : free_vars(u)) {
      if (coin(rng, 0.7)) s.vars.emplace(x, random_pure_term(rng, arg_shape));
    }
    Term su = substitute(u, s), sv = substitute(v, s);
    ReductionTrace ts = head_reduce(su, Budget(std::max<std::size_t>(j, 1)));
    t.expect(ts.step_count() >= j && term_at(ts, j) == sv,
             [&] { return "substitution law fails on " + str(u) + " at step " + std::to_string(j); });

    // Arguments that make (v)w̄ grow past the size bound are redrawn; with no
    // arguments the bound holds already.
    std::vector<Term> ws;
    std::optional<ReductionTrace> tv;
    for (int attempt = 0; !tv; ++attempt) {
      ws.clear();
      if (attempt < 8) {
        for (std::size_t k = pick(rng, 4); k > 0; --k) ws.push_back(random_pure_term(rng, arg_shape));
      }
      tv = bounded_head_reduce(Term::apply(v, ws), 50, kMaxTermSize);
    }
    Term uw = Term::apply(u, ws);
    std::size_t hv = tv->step_count();
    ReductionTrace tw = head_reduce(uw, Budget(hv + j + 1));
    t.expect(tw.step_count() >= hv + j && term_at(tw, hv + j) == tv->final_term(),
             [&] { return "composition law fails on " + str(uw) + " with h(u,v)=" + std::to_string(j); });
  }
  t.note(std::to_string(kTerms) + " generated terms");
}

// -- 7 -------------------------------------------------------------------------

void translation_laws(const AcceptanceOptions& o, Tally& t) {
  Rng rng(o.seed + 7);
  constexpr std::size_t kFormulas = 1000;
  for (std::size_t i = 0; i < kFormulas; ++i) {
    Formula a = random_formula(rng);
    try {
      std::string x = std::vector<std::string>{"x", "y", "z"}[pick(rng, 3)];
      FoTerm u = random_fo_term(rng);
      t.expect(alpha_eq(godel(subst_fo(a, x, u)), subst_fo(godel(a), x, u)),
               [&] { return "first-order law fails on " + to_string(a) + " [" + to_string(u) + "/" + x + "]"; });
      std::string p = coin(rng) ? "X" : "Y";
      PredAbstraction g = random_pred_abstraction(rng, arity_of(p), coin(rng, 0.3));
      t.expect(alpha_eq(godel(subst_pred(a, Predicate::var(p), g)), subst_pred(godel(a), Predicate::var(p), godel(g))),
               [&] { return "second-order law fails on " + to_string(a) + " [" + to_string(g) + "/" + p + "]"; });
    } catch (const std::exception& e) {
      t.expect(false, [&] { return to_string(a) + ": " + e.what(); });
    }
  }
  FoTerm x = FoTerm::var("x");
  // N*[x] written out by hand.
  Formula printed = parse_formula("forall X {~X(0), forall y (~X(y) -> ~X(s(y))) -> ~X(x)}");
  t.expect(alpha_eq(godel(nat_classical(x)), printed), [] { return std::string("godel(N^C[x]) differs from N*[x]"); });
  t.expect(alpha_eq(simple_godel(nat(x)), printed), [] { return std::string("simple_godel(N[x]) differs from N*[x]"); });
  t.expect(alpha_eq(nat_star(x), printed), [] { return std::string("nat_star(x) differs from N*[x]"); });
  t.note(std::to_string(kFormulas) + " generated formulas; N*[x] agrees");
}

// -- 8 -------------------------------------------------------------------------

// The six defining clauses of the ∀-positive and ∀-negative types.
bool omega(const Formula& a, bool positive) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
    case FormulaKind::Atom:
      return true;
    case FormulaKind::Arrow:
      return omega(a.lhs(), !positive) && omega(a.rhs(), positive);
    case FormulaKind::ForallFo:
      return omega(a.body(), positive);
    case FormulaKind::ForallSo:
      return omega(a.body(), positive) && (positive || !pred_free_in(a.body(), Predicate::var(a.var())));
    case FormulaKind::ForallClassical:
      return omega(a.body(), positive) && (positive || !pred_free_in(a.body(), Predicate::classical(a.var())));
  }
  return false;
}

bool ends_classically(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::Atom:
      return a.pred().kind == Predicate::Kind::Classical;
    case FormulaKind::Arrow:
      return ends_classically(a.rhs());
    default:
      return ends_classically(a.body());
  }
}

void classifier_closure(const AcceptanceOptions& o, Tally& t) {
  Rng rng(o.seed + 8);
  constexpr std::size_t kFormulas = 2000;
  std::size_t classical = 0, negative_arrows = 0;
  for (std::size_t i = 0; i < kFormulas; ++i) {
    Formula a = i % 2 ? random_classical_type(rng) : random_formula(rng);
    auto what = [&] { return to_string(a); };
    t.expect(in_omega_plus(a) == omega(a, true) && in_omega_minus(a) == omega(a, false), what);
    t.expect(is_classical_type(a) == ends_classically(a), what);
    try {
      Formula b = random_instance(rng, a);
      t.expect(instantiates(a, b).has_value(), [&] { return to_string(a) + " does not instantiate to " + to_string(b); });
      if (is_classical_type(a)) {
        ++classical;
        t.expect(is_classical_type(b), [&] { return "instance " + to_string(b) + " of " + to_string(a) + " not classical"; });
      }
      Formula e = random_equal_variant(rng, a);
      t.expect(is_classical_type(e) == is_classical_type(a) && polarity(e) == polarity(a),
               [&] { return to_string(a) + " and " + to_string(e) + " classify differently"; });
      if (in_omega_minus(a)) {
        for (const Formula& c : {a, b}) {
          if (!c.is(FormulaKind::Arrow)) continue;
          ++negative_arrows;
          t.expect(in_omega_plus(c.lhs()) && in_omega_minus(c.rhs()),
                   [&] { return "negative " + to_string(a) + " instantiates to " + to_string(c); });
        }
      }
    } catch (const std::exception& ex) {
      t.expect(false, [&] { return to_string(a) + ": " + ex.what(); });
    }
  }
  t.expect(classical >= 100 && negative_arrows >= 100, [&] {
    return "too few relevant cases: " + std::to_string(classical) + " classical, " + std::to_string(negative_arrows) +
           " negative arrows";
  });
  // N[x] = ∀X{X(0), ∀y(X(y) → X(sy)) → X(x)}. Atoms are in both classes, so
  // X(y) → X(sy) is in both, and so is ∀y(...). Hence ∀y(...) → X(x) and
  // X(0) → ∀y(...) → X(x) are in both. ∀X keeps Ω⁺ but not Ω⁻, X being free.
  t.expect(polarity(nat(FoTerm::var("x"))) == PolarityClass::Positive, [] { return std::string("polarity(N[x])"); });
  t.note(std::to_string(kFormulas) + " generated formulas, " + std::to_string(classical) + " classical, " +
         std::to_string(negative_arrows) + " negative arrows");
}

// -- 9 -------------------------------------------------------------------------

// Value of a λxλf body shape by the grammar and the rep clauses, or nullopt.
std::optional<unsigned> shape_value(const MuShape& s) {
  if (s.lambdas != 2 || s.leaf != MuShape::Leaf::X) return std::nullopt;
  oracle::GrammarTerm u;
  std::vector<std::string> binders;
  for (const auto& l : s.layers) {
    if (l.kind == MuShape::LayerKind::F) {
      u.push_back({true, {}, {}});
    } else if (l.kind == MuShape::LayerKind::Mu) {
      binders.push_back(l.binder);
      if (std::find(binders.begin(), binders.end(), l.target) == binders.end()) return std::nullopt;
      u.push_back({false, l.binder, l.target});
    } else {
      return std::nullopt;
    }
  }
  std::optional<unsigned> value;
  for (unsigned n = 0; n <= oracle::count_f(u) + 1; ++n) {
    if (!oracle::member(n, u)) continue;
    if (value) return std::nullopt;
    value = n;
  }
  return value;
}

struct RuleCase {
  const char* rule;
  const char* input;
  const char* output;
};

void mu_layer(const AcceptanceOptions& o, Tally& t) {
  // One step each, contracted by hand from the rule definitions.
  const RuleCase cases[] = {
      {"C1", "(\\x.f x) y", "f y"},
      {"C2", "(mu a.[a] f (mu b.[a] x)) v", "mu a.[a] f (mu b.[a] x v) v"},
      {"S1", "mu a.[b] mu c.[c] f x", "mu a.[b] f x"},
      {"S2", "mu a.[a] f x", "f x"},
      {"S3", "mu a.[b] f (mu c.[a] \\y.y)", "\\x.mu a.[b] f (mu c.[a] (\\y.y) x)"},
  };
  for (const auto& c : cases) {
    auto step = mu_step(parse_term(c.input));
    t.expect(step && step->rule == c.rule && step->result == parse_term(c.output),
             [&] { return std::string(c.rule) + " on " + c.input + (step ? " gave " + str(step->result) : " did not fire"); });
  }
  for (unsigned n = 0; n <= 10; ++n) {
    std::string body = "x";
    for (unsigned i = 0; i < n; ++i) body = "f (" + body + ")";
    t.expect(rep(parse_mu_term(body)) == RepSet::finite({n}), [&] { return "rep of " + body; });
  }

  Rng rng(o.seed + 9);
  std::size_t normal = 0, accepted = 0, rejected = 0, non_normal = 0, attempts = 0;
  while (normal < 500 && attempts < 100000) {
    ++attempts;
    MuShape s = random_mu_shape(rng);
    MuTerm m = parse_mu_term(s.text());
    MuIntegerClass got = classify_mu_integer(m);
    if (mu_step(m.term())) {
      ++non_normal;
      t.expect(!got.is_integer(), [&] { return "non-normal " + s.text() + " accepted"; });
      continue;
    }
    ++normal;
    std::optional<unsigned> want = shape_value(s);
    want ? ++accepted : ++rejected;
    t.expect(got.is_integer() == want.has_value() && (!want || got.n == *want), [&] {
      return s.text() + ": classified " + to_string(got.verdict) + (got.is_integer() ? " " + std::to_string(got.n) : "") +
             ", expected " + (want ? std::to_string(*want) : std::string("rejection"));
    });
  }
  t.expect(normal == 500 && accepted >= 50 && rejected >= 50, [&] {
    return "corpus too thin: " + std::to_string(normal) + " normal, " + std::to_string(accepted) + " accepted";
  });

  for (const auto& r : verify_storage_mu(MuTerm(builtin("T1")), mu_corpus(0, 5), Budget(o.budget))) {
    t.expect(r.simulated() && r.tau_value == r.n, [&] { return "λμ T1 " + to_string(r); });
  }
  t.note("500 normal terms (" + std::to_string(accepted) + " integers), " + std::to_string(non_normal) +
         " non-normal rejected");
}

// -- 10 ------------------------------------------------------------------------

void unicity(const AcceptanceOptions& o, Tally& t) {
  auto ds = shipped(o, t);
  std::size_t typed = 0;
  for (const auto& d : ds) {
    if (!check(d).valid) continue;
    auto [subject, type] = subject_of(d);
    if (!is_pure(subject)) continue;
    if (alpha_eq(type, nat_prop())) {
      ++typed;
      auto nf = oracle::normalize(named(subject), 200000);
      bool some = false;
      for (unsigned n = 0; nf && n <= 64 && !some; ++n) some = oracle::alpha_equal(*nf, named(church(n)));
      t.expect(some, [&] { return d.name + " of type N is not a Church numeral"; });
      continue;
    }
    for (unsigned n = 0; n <= 64; ++n) {
      if (!alpha_eq(type, nat(FoTerm::numeral(n)))) continue;
      ++typed;
      t.expect(normalizes_to_church(subject, n), [&] { return d.name + " does not normalize to " + std::to_string(n); });
    }
  }
  t.expect(typed > 0, [] { return std::string("no shipped derivation of an integer type"); });
  t.note(std::to_string(typed) + " integer-typed derivations");
}

struct Criterion {
  const char* title;
  void (*run)(const AcceptanceOptions&, Tally&);
  double limit_seconds;
};

const Criterion kCriteria[kCriterionCount] = {
    {"storage simulation", storage_simulation, 5},
    {"classical value extraction", value_extraction, 2},
    {"classical storage", classical_storage, 0},
    {"control operators", control_operators, 0},
    {"derivation fixtures", derivation_fixtures, 0},
    {"head reduction laws", head_laws, 0},
    {"translation laws", translation_laws, 0},
    {"classifier closure", classifier_closure, 0},
    {"lambda-mu layer", mu_layer, 0},
    {"unicity on fixtures", unicity, 0},
};

}  // namespace

CriterionResult run_criterion(unsigned id, const AcceptanceOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw PreconditionViolated("no criterion " + std::to_string(id));
  const Criterion& c = kCriteria[id - 1];
  Tally t;
  auto start = std::chrono::steady_clock::now();
  try {
    c.run(opts, t);
  } catch (const std::exception& e) {
    t.expect(false, [&] { return std::string("uncaught: ") + e.what(); });
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.limit_seconds > 0) {
    t.expect(secs < c.limit_seconds, [&] {
      char buf[64];
      std::snprintf(buf, sizeof buf, "took %.2fs, limit %.0fs", secs, c.limit_seconds);
      return std::string(buf);
    });
  }
  CriterionResult r = t.result(id, c.title);
  r.seconds = secs;
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, const std::vector<unsigned>& only) {
  std::vector<CriterionResult> out;
  for (unsigned id = 1; id <= kCriterionCount; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    out.push_back(run_criterion(id, opts));
  }
  return out;
}

std::string format_result(const CriterionResult& r, bool timing) {
  std::ostringstream os;
  os << "criterion " << r.id << " " << (r.passed ? "PASS" : "FAIL") << " " << r.title << ": " << r.checks << " checks, "
     << r.failures << " failed";
  if (timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ", %.2fs", r.seconds);
    os << buf;
  }
  if (!r.detail.empty()) os << " (" << r.detail << ")";
  return os.str();
}

}  // namespace mixlogic::testkit
