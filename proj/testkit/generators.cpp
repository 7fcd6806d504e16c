#include "generators.hpp"

#include <optional>

#include "mixlogic/classify.hpp"
#include "mixlogic/reduction.hpp"

namespace mixlogic::testkit {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

namespace {

const std::vector<std::string> kBinders = {"x", "y", "z", "u"};

template <class T>
const T& choose(Rng& rng, const std::vector<T>& v) {
  return v[pick(rng, v.size())];
}

struct TermGen {
  TermGen(Rng& r, const TermShape& s) : rng(r), shape(s) {}

  Rng& rng;
  const TermShape& shape;
  bool control = false;
  std::vector<std::string> stacks;
  bool mu = false;
  std::vector<std::string> mu_free;

  Term variable(const std::vector<std::string>& scope) {
    if (control && coin(rng, 0.08)) return Term::control();
    if (!scope.empty() && (shape.free.empty() || coin(rng, 0.75))) return Term::var(choose(rng, scope));
    if (shape.free.empty()) return Term::abstract("z", Term::var("z"));
    return Term::var(choose(rng, shape.free));
  }

  Term argument(unsigned d, std::vector<std::string>& scope, std::vector<std::string>& mu_scope) {
    if (!stacks.empty() && coin(rng, 0.15)) return Term::stack(choose(rng, stacks));
    return gen(d, scope, mu_scope);
  }

  Term lambda(unsigned d, std::vector<std::string>& scope, std::vector<std::string>& mu_scope) {
    std::string x = choose(rng, kBinders);
    scope.push_back(x);
    Term body = gen(d, scope, mu_scope);
    scope.pop_back();
    return Term::abstract(x, body);
  }

  Term gen(unsigned d, std::vector<std::string>& scope, std::vector<std::string>& mu_scope) {
    if (d == 0 || coin(rng, 0.2)) return variable(scope);
    double r = std::uniform_real_distribution<double>(0, 1)(rng);
    if (mu && r < 0.15) {
      std::string a = choose(rng, std::vector<std::string>{"a", "b", "c"});
      mu_scope.push_back(a);
      std::vector<std::string> targets = mu_scope;
      targets.insert(targets.end(), mu_free.begin(), mu_free.end());
      std::string target = choose(rng, targets);
      Term body = gen(d - 1, scope, mu_scope);
      mu_scope.pop_back();
      return Term::mu_abstract(a, target, body);
    }
    if (r < 0.35) return lambda(d - 1, scope, mu_scope);
    Term fun = coin(rng, shape.redex_bias) ? lambda(d - 1, scope, mu_scope) : gen(d - 1, scope, mu_scope);
    return Term::app(fun, argument(d - 1, scope, mu_scope));
  }

  Term run() {
    std::vector<std::string> scope, mu_scope;
    return gen(shape.depth, scope, mu_scope);
  }
};

}  // namespace

Term random_pure_term(Rng& rng, const TermShape& shape) { return TermGen(rng, shape).run(); }

std::optional<ReductionTrace> bounded_head_reduce(const Term& t, std::size_t budget, std::size_t max_size) {
  ReductionTrace trace{t, {}, false};
  if (t.size() > max_size) return std::nullopt;
  for (;;) {
    ReductionTrace one = head_reduce(trace.final_term(), Budget(1));
    if (one.steps.empty()) return trace;
    if (trace.steps.size() == budget) {
      trace.exhausted = true;
      return trace;
    }
    if (one.steps[0].result.size() > max_size) return std::nullopt;
    trace.steps.push_back(std::move(one.steps[0]));
  }
}

Term random_head_terminating(Rng& rng, const TermShape& shape, std::size_t budget, std::size_t min_steps) {
  for (;;) {
    Term t = random_pure_term(rng, shape);
    auto tr = bounded_head_reduce(t, budget, kMaxTermSize);
    if (tr && !tr->exhausted && tr->step_count() >= min_steps) return t;
  }
}

Term random_lambda_c_term(Rng& rng, const TermShape& shape) {
  TermGen g(rng, shape);
  g.control = true;
  return g.run();
}

Term random_cp_term(Rng& rng, const TermShape& shape, const std::vector<std::string>& stacks) {
  TermGen g(rng, shape);
  g.control = true;
  g.stacks = stacks;
  return g.run();
}

Term random_mu_term(Rng& rng, const TermShape& shape, const std::vector<std::string>& mu_free) {
  TermGen g(rng, shape);
  g.mu = true;
  g.mu_free = mu_free;
  return g.run();
}

// -- formulas ------------------------------------------------------------------

FoTerm random_fo_term(Rng& rng, unsigned depth) {
  if (depth == 0 || coin(rng, 0.4)) {
    if (coin(rng, 0.25)) return FoTerm::zero();
    return FoTerm::var(choose(rng, std::vector<std::string>{"x", "y", "z"}));
  }
  if (coin(rng, 0.6)) return FoTerm::succ(random_fo_term(rng, depth - 1));
  return FoTerm::fun("p", {random_fo_term(rng, depth - 1)});
}

std::size_t arity_of(const std::string& pred_name) { return pred_name == "X" || pred_name == "Z" || pred_name == "D" ? 1 : 0; }

namespace {

Formula atom_of(Rng& rng, Predicate p) {
  std::vector<FoTerm> args;
  if (arity_of(p.name) == 1) args.push_back(random_fo_term(rng));
  return Formula::atom(std::move(p), std::move(args));
}

Formula random_atom(Rng& rng, bool classical) {
  std::size_t k = pick(rng, classical ? 6 : 4);
  switch (k) {
    case 0:
      return Formula::bottom();
    case 1:
      return atom_of(rng, Predicate::var("X"));
    case 2:
      return atom_of(rng, Predicate::var("Y"));
    case 3:
      return atom_of(rng, Predicate::symbol("D"));
    case 4:
      return atom_of(rng, Predicate::classical("Z"));
    default:
      return atom_of(rng, Predicate::classical("W"));
  }
}

Formula gen_formula(Rng& rng, unsigned d, bool classical) {
  if (d == 0 || coin(rng, 0.2)) return random_atom(rng, classical);
  double r = std::uniform_real_distribution<double>(0, 1)(rng);
  if (r < 0.45) return Formula::arrow(gen_formula(rng, d - 1, classical), gen_formula(rng, d - 1, classical));
  if (r < 0.65) return Formula::forall_fo(choose(rng, std::vector<std::string>{"x", "y", "z"}), gen_formula(rng, d - 1, classical));
  if (r < 0.85 || !classical) return Formula::forall_so(coin(rng) ? "X" : "Y", gen_formula(rng, d - 1, classical));
  return Formula::forall_classical(coin(rng) ? "Z" : "W", gen_formula(rng, d - 1, classical));
}

// Arity of p as used in a, if it occurs.
std::optional<std::size_t> arity_in(const Formula& a, const Predicate& p) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return std::nullopt;
    case FormulaKind::Atom:
      if (a.pred() == p) return a.args().size();
      return std::nullopt;
    case FormulaKind::Arrow:
      if (auto l = arity_in(a.lhs(), p)) return l;
      return arity_in(a.rhs(), p);
    default:
      return arity_in(a.body(), p);
  }
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) { return gen_formula(rng, shape.depth, shape.classical); }

Formula random_classical_type(Rng& rng, const FormulaShape& shape) {
  Formula a = coin(rng, 0.4) ? Formula::bottom()
                             : atom_of(rng, shape.classical && coin(rng, 0.7) ? Predicate::classical(coin(rng) ? "Z" : "W")
                                                                              : Predicate::var("X"));
  if (!is_classical_type(a)) a = Formula::bottom();
  unsigned wraps = static_cast<unsigned>(pick(rng, shape.depth + 1));
  for (unsigned i = 0; i < wraps; ++i) {
    std::size_t k = pick(rng, shape.classical ? 4 : 3);
    if (k == 0) {
      a = Formula::arrow(gen_formula(rng, shape.depth / 2, shape.classical), a);
    } else if (k == 1) {
      a = Formula::forall_fo(choose(rng, std::vector<std::string>{"x", "y", "z"}), a);
    } else if (k == 2) {
      a = Formula::forall_so(coin(rng) ? "X" : "Y", a);
    } else {
      a = Formula::forall_classical(coin(rng) ? "Z" : "W", a);
    }
  }
  return a;
}

PredAbstraction random_pred_abstraction(Rng& rng, std::size_t arity, bool classical_body, const FormulaShape& shape) {
  FormulaShape inner{shape.depth > 1 ? shape.depth - 1 : 1, shape.classical};
  Formula body = classical_body ? random_classical_type(rng, inner) : random_formula(rng, inner);
  std::vector<std::string> params;
  for (std::size_t i = 0; i < arity; ++i) params.push_back(i == 0 ? "z" : "z" + std::to_string(i));
  return PredAbstraction{std::move(params), body};
}

Formula random_instance(Rng& rng, const Formula& a) {
  Formula b = a;
  std::size_t k = pick(rng, 4);
  for (std::size_t i = 0; i < k && b.is_quantifier(); ++i) {
    switch (b.kind()) {
      case FormulaKind::ForallFo:
        b = instantiate_quantifier(b, random_fo_term(rng));
        break;
      case FormulaKind::ForallSo: {
        auto n = arity_in(b.body(), Predicate::var(b.var())).value_or(arity_of(b.var()));
        b = instantiate_quantifier(b, random_pred_abstraction(rng, n, false, {3, true}));
        break;
      }
      default: {
        auto n = arity_in(b.body(), Predicate::classical(b.var())).value_or(arity_of(b.var()));
        b = instantiate_quantifier(b, random_pred_abstraction(rng, n, true, {3, true}));
        break;
      }
    }
  }
  return b;
}

namespace {

std::size_t count_fo(const FoTerm& t) {
  std::size_t n = 1;
  for (const auto& a : t.args) n += count_fo(a);
  return n;
}

std::size_t count_fo(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return 0;
    case FormulaKind::Atom: {
      std::size_t n = 0;
      for (const auto& t : a.args()) n += count_fo(t);
      return n;
    }
    case FormulaKind::Arrow:
      return count_fo(a.lhs()) + count_fo(a.rhs());
    default:
      return count_fo(a.body());
  }
}

FoTerm rewrite(const FoTerm& t) {
  FoTerm p0 = FoTerm::fun("p", {FoTerm::zero()});
  if (t == p0) return FoTerm::zero();
  if (t.kind == FoTerm::Kind::Fun && t.name == "p" && t.args[0].kind == FoTerm::Kind::Fun && t.args[0].name == "s") {
    return t.args[0].args[0];
  }
  return FoTerm::fun("p", {FoTerm::succ(t)});
}

FoTerm replace_nth(const FoTerm& t, std::size_t& k) {
  if (k == 0) {
    k = static_cast<std::size_t>(-1);
    return rewrite(t);
  }
  --k;
  FoTerm out = t;
  for (auto& a : out.args) a = replace_nth(a, k);
  return out;
}

Formula replace_nth(const Formula& a, std::size_t& k) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return a;
    case FormulaKind::Atom: {
      std::vector<FoTerm> args;
      for (const auto& t : a.args()) args.push_back(replace_nth(t, k));
      return Formula::atom(a.pred(), std::move(args));
    }
    case FormulaKind::Arrow: {
      Formula l = replace_nth(a.lhs(), k);
      return Formula::arrow(l, replace_nth(a.rhs(), k));
    }
    case FormulaKind::ForallFo:
      return Formula::forall_fo(a.var(), replace_nth(a.body(), k));
    case FormulaKind::ForallSo:
      return Formula::forall_so(a.var(), replace_nth(a.body(), k));
    case FormulaKind::ForallClassical:
      return Formula::forall_classical(a.var(), replace_nth(a.body(), k));
  }
  return a;
}

}  // namespace

Formula random_equal_variant(Rng& rng, const Formula& a) {
  std::size_t n = count_fo(a);
  if (n == 0) return a;
  std::size_t k = pick(rng, n);
  return replace_nth(a, k);
}

// -- λμ integer candidates -----------------------------------------------------

std::string MuShape::text() const {
  std::string inner;
  switch (leaf) {
    case Leaf::X:
      inner = "x";
      break;
    case Leaf::F:
      inner = "f";
      break;
    case Leaf::Other:
      inner = "w";
      break;
  }
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    switch (it->kind) {
      case LayerKind::F:
        inner = "f (" + inner + ")";
        break;
      case LayerKind::Mu:
        inner = "mu " + it->binder + ".[" + it->target + "] " + inner;
        break;
      case LayerKind::OtherHead:
        inner = "g (" + inner + ")";
        break;
      case LayerKind::Lambda:
        inner = "\\y." + inner;
        break;
      case LayerKind::TwoArgs:
        inner = "f (" + inner + ") x";
        break;
    }
  }
  static const char* names[] = {"x", "f", "v", "v1", "v2"};
  std::string prefix;
  for (unsigned i = 0; i < lambdas && i < 5; ++i) prefix += std::string("\\") + names[i] + ".";
  return prefix + inner;
}

MuShape random_mu_shape(Rng& rng, unsigned max_layers) {
  static const std::vector<std::string> mu_names = {"a", "b", "c"};
  MuShape s;
  bool near_miss = coin(rng, 0.3);
  std::size_t n = pick(rng, max_layers + 1);
  std::vector<std::string> bound;
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng, 0.45)) {
      s.layers.push_back({MuShape::LayerKind::F, {}, {}});
      continue;
    }
    std::string b = choose(rng, mu_names);
    bound.push_back(b);
    std::string t = coin(rng, 0.85) ? choose(rng, bound) : std::string("k");
    s.layers.push_back({MuShape::LayerKind::Mu, b, t});
  }
  if (near_miss) {
    switch (pick(rng, 6)) {
      case 0:
        s.lambdas = static_cast<unsigned>(pick(rng, 2));
        break;
      case 1:
        s.lambdas = 3;
        break;
      case 2:
        s.leaf = coin(rng) ? MuShape::Leaf::F : MuShape::Leaf::Other;
        break;
      case 3:
        s.layers.insert(s.layers.begin() + static_cast<long>(pick(rng, s.layers.size() + 1)),
                        {MuShape::LayerKind::OtherHead, {}, {}});
        break;
      case 4:
        s.layers.insert(s.layers.begin() + static_cast<long>(pick(rng, s.layers.size() + 1)),
                        {MuShape::LayerKind::Lambda, {}, {}});
        break;
      default:
        s.layers.insert(s.layers.begin() + static_cast<long>(pick(rng, s.layers.size() + 1)),
                        {MuShape::LayerKind::TwoArgs, {}, {}});
        break;
    }
  }
  return s;
}

}  // namespace mixlogic::testkit
