#include "mixlogic/derivation.hpp"

#include <set>

#include "mixlogic/classify.hpp"
#include "mixlogic/error.hpp"
#include "mixlogic/formula_syntax.hpp"
#include "mixlogic/term_syntax.hpp"
#include "mixlogic/translations.hpp"

namespace mixlogic {

namespace {

constexpr std::pair<System, const char*> kSystems[] = {
    {System::AF2, "AF2"}, {System::C2, "C2"}, {System::M2, "M2"}, {System::M, "M"}, {System::FD2, "FD2"}};

constexpr std::pair<RuleTag, const char*> kRules[] = {
    {RuleTag::Ax, "Ax"},         {RuleTag::ArrIntro, "ArrIntro"}, {RuleTag::ArrElim, "ArrElim"},
    {RuleTag::FoGen, "FoGen"},   {RuleTag::FoInst, "FoInst"},     {RuleTag::SoGen, "SoGen"},
    {RuleTag::SoInst, "SoInst"}, {RuleTag::Eq, "Eq"},             {RuleTag::CAxiom, "CAxiom"},
    {RuleTag::ClassGen, "ClassGen"}, {RuleTag::ClassInst, "ClassInst"}, {RuleTag::MuNaming, "MuNaming"}};

}  // namespace

const char* to_string(System s) {
  for (auto [k, n] : kSystems) {
    if (k == s) return n;
  }
  return "?";
}

const char* to_string(RuleTag r) {
  for (auto [k, n] : kRules) {
    if (k == r) return n;
  }
  return "?";
}

std::optional<System> parse_system(std::string_view s) {
  for (auto [k, n] : kSystems) {
    if (s == n) return k;
  }
  return std::nullopt;
}

std::optional<RuleTag> parse_rule_tag(std::string_view s) {
  for (auto [k, n] : kRules) {
    if (s == n) return k;
  }
  return std::nullopt;
}

const char* to_string(InvalidReason r) {
  switch (r) {
    case InvalidReason::BadWitness:
      return "BadWitness";
    case InvalidReason::SideConditionViolated:
      return "SideConditionViolated";
    case InvalidReason::WrongSystem:
      return "WrongSystem";
    case InvalidReason::ContextMismatch:
      return "ContextMismatch";
    case InvalidReason::NonClassicalInstantiation:
      return "NonClassicalInstantiation";
    case InvalidReason::SubjectMismatch:
      return "SubjectMismatch";
    case InvalidReason::TypeMismatch:
      return "TypeMismatch";
    case InvalidReason::ArityMismatch:
      return "ArityMismatch";
    case InvalidReason::BadEquation:
      return "BadEquation";
    case InvalidReason::PremiseCount:
      return "PremiseCount";
  }
  return "?";
}

std::optional<FoTerm> fo_term_at(const Formula& a, const std::vector<std::size_t>& position) {
  const Formula* cur = &a;
  std::size_t i = 0;
  for (; i < position.size(); ++i) {
    if (cur->is(FormulaKind::Atom)) break;
    if (cur->is(FormulaKind::Arrow) && position[i] <= 1) {
      cur = position[i] == 0 ? &cur->lhs() : &cur->rhs();
    } else if (cur->is_quantifier() && position[i] == 0) {
      cur = &cur->body();
    } else {
      return std::nullopt;
    }
  }
  if (!cur->is(FormulaKind::Atom) || i == position.size() || position[i] >= cur->args().size()) return std::nullopt;
  std::vector<std::size_t> rest(position.begin() + static_cast<std::ptrdiff_t>(i) + 1, position.end());
  return subterm_at(cur->args()[position[i]], rest);
}

std::optional<Formula> replace_fo_at(const Formula& a, const std::vector<std::size_t>& position, const FoTerm& u) {
  if (position.empty()) return std::nullopt;
  std::vector<std::size_t> rest(position.begin() + 1, position.end());
  switch (a.kind()) {
    case FormulaKind::Atom: {
      if (position[0] >= a.args().size()) return std::nullopt;
      if (!subterm_at(a.args()[position[0]], rest)) return std::nullopt;
      std::vector<FoTerm> args = a.args();
      args[position[0]] = replace_at(args[position[0]], rest, u);
      return Formula::atom(a.pred(), std::move(args));
    }
    case FormulaKind::Arrow: {
      if (position[0] > 1) return std::nullopt;
      auto sub = replace_fo_at(position[0] == 0 ? a.lhs() : a.rhs(), rest, u);
      if (!sub) return std::nullopt;
      return position[0] == 0 ? Formula::arrow(*sub, a.rhs()) : Formula::arrow(a.lhs(), *sub);
    }
    case FormulaKind::Bottom:
      return std::nullopt;
    default: {
      if (position[0] != 0) return std::nullopt;
      auto sub = replace_fo_at(a.body(), rest, u);
      if (!sub) return std::nullopt;
      switch (a.kind()) {
        case FormulaKind::ForallFo:
          return Formula::forall_fo(a.var(), *sub);
        case FormulaKind::ForallSo:
          return Formula::forall_so(a.var(), *sub);
        default:
          return Formula::forall_classical(a.var(), *sub);
      }
    }
  }
}

namespace {

struct Failure {
  InvalidReason reason;
  std::string message;
};

using Outcome = std::optional<Failure>;

Outcome fail(InvalidReason r, std::string msg) { return Failure{r, std::move(msg)}; }

const Formula* lookup(const Context& ctx, const std::string& label) {
  for (const auto& [l, f] : ctx) {
    if (l == label) return &f;
  }
  return nullptr;
}

bool has_duplicates(const Context& ctx) {
  std::set<std::string> seen;
  for (const auto& [l, f] : ctx) {
    if (!seen.insert(l).second) return true;
  }
  return false;
}

// Every entry of `sub` except `skip` occurs in `sup` with an α-equal formula.
Outcome included(const Context& sub, const Context& sup, const char* which, const std::string& skip = {}) {
  for (const auto& [l, f] : sub) {
    if (l == skip) continue;
    const Formula* g = lookup(sup, l);
    if (!g) return fail(InvalidReason::ContextMismatch, std::string(which) + " context loses " + l);
    if (!alpha_eq(f, *g)) return fail(InvalidReason::ContextMismatch, std::string(which) + " context changes the type of " + l);
  }
  return std::nullopt;
}

bool propositional(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::Atom:
      return a.args().empty();
    case FormulaKind::Arrow:
      return propositional(a.lhs()) && propositional(a.rhs());
    case FormulaKind::ForallFo:
      return false;
    default:
      return propositional(a.body());
  }
}

Formula c2_axiom_type() {
  Formula x = Formula::atom(Predicate::var("X"));
  return Formula::forall_so("X", Formula::arrow(Formula::negation(Formula::negation(x)), x));
}

Formula m2_axiom_type() {
  Formula x = Formula::atom(Predicate::classical("X"));
  return Formula::forall_classical("X", Formula::arrow(Formula::negation(Formula::negation(x)), x));
}

bool rule_allowed(System s, RuleTag r) {
  switch (r) {
    case RuleTag::Ax:
    case RuleTag::ArrIntro:
    case RuleTag::ArrElim:
    case RuleTag::SoGen:
    case RuleTag::SoInst:
      return true;
    case RuleTag::FoGen:
    case RuleTag::FoInst:
    case RuleTag::Eq:
      return s != System::M;
    case RuleTag::CAxiom:
      return s == System::C2 || s == System::M2 || s == System::M;
    case RuleTag::ClassGen:
    case RuleTag::ClassInst:
      return s == System::M2 || s == System::M;
    case RuleTag::MuNaming:
      return s == System::FD2;
  }
  return false;
}

std::size_t premise_count(RuleTag r) {
  switch (r) {
    case RuleTag::Ax:
    case RuleTag::CAxiom:
      return 0;
    case RuleTag::ArrElim:
      return 2;
    default:
      return 1;
  }
}

class Checker {
 public:
  explicit Checker(const Derivation& d) : d_(d) {}

  CheckResult run() {
    std::string path = "root";
    CheckResult r;
    if (auto f = visit(d_.root, path, r.path)) {
      r.valid = false;
      r.reason = f->reason;
      r.message = f->message;
    } else {
      r.path.clear();
    }
    return r;
  }

 private:
  Outcome visit(const DerivationNode& n, const std::string& path, std::string& where) {
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      if (auto f = visit(n.premises[i], path + "." + std::to_string(i), where)) return f;
    }
    where = path;
    return node(n);
  }

  Outcome node(const DerivationNode& n) {
    const Sequent& c = n.conclusion;
    if (has_duplicates(c.lambda_ctx) || has_duplicates(c.mu_ctx)) {
      return fail(InvalidReason::ContextMismatch, "duplicate label in a context");
    }
    if (!rule_allowed(d_.system, n.rule)) {
      return fail(InvalidReason::WrongSystem, std::string(to_string(n.rule)) + " is not a rule of " + to_string(d_.system));
    }
    if (d_.system != System::FD2 && !c.mu_ctx.empty()) {
      return fail(InvalidReason::WrongSystem, "μ-contexts only exist in FD2");
    }
    if (d_.system == System::M) {
      bool ok = propositional(c.type);
      for (const auto& [l, f] : c.lambda_ctx) ok = ok && propositional(f);
      if (!ok) return fail(InvalidReason::WrongSystem, "M only has propositional formulas");
    }
    if (n.premises.size() != premise_count(n.rule)) {
      return fail(InvalidReason::PremiseCount, std::string(to_string(n.rule)) + " takes " +
                                                   std::to_string(premise_count(n.rule)) + " premise(s)");
    }
    switch (n.rule) {
      case RuleTag::Ax:
        return axiom(c);
      case RuleTag::ArrIntro:
        return arrow_intro(n.premises[0].conclusion, c);
      case RuleTag::ArrElim:
        return arrow_elim(n.premises[0].conclusion, n.premises[1].conclusion, c);
      case RuleTag::FoGen:
      case RuleTag::SoGen:
      case RuleTag::ClassGen:
        return generalize(n.rule, n.premises[0].conclusion, c);
      case RuleTag::FoInst:
      case RuleTag::SoInst:
      case RuleTag::ClassInst:
        return instantiate_rule(n.rule, n.witness, n.premises[0].conclusion, c);
      case RuleTag::Eq:
        return equation(n.witness, n.premises[0].conclusion, c);
      case RuleTag::CAxiom:
        return control_axiom(c);
      case RuleTag::MuNaming:
        return naming(n.premises[0].conclusion, c);
    }
    return std::nullopt;
  }

  static Outcome same_contexts(const Sequent& p, const Sequent& c) {
    if (auto f = included(p.lambda_ctx, c.lambda_ctx, "λ")) return f;
    return included(p.mu_ctx, c.mu_ctx, "μ");
  }

  static Outcome axiom(const Sequent& c) {
    if (!c.subject.is(TermKind::Free)) return fail(InvalidReason::SubjectMismatch, "an axiom types a variable");
    const Formula* f = lookup(c.lambda_ctx, c.subject.name());
    if (!f) return fail(InvalidReason::ContextMismatch, c.subject.name() + " is not declared");
    if (!alpha_eq(*f, c.type)) return fail(InvalidReason::TypeMismatch, "type differs from the declaration of " + c.subject.name());
    return std::nullopt;
  }

  static Outcome arrow_intro(const Sequent& p, const Sequent& c) {
    if (!c.subject.is(TermKind::Lam)) return fail(InvalidReason::SubjectMismatch, "subject is not an abstraction");
    if (!c.type.is(FormulaKind::Arrow)) return fail(InvalidReason::TypeMismatch, "type is not an implication");
    std::vector<std::string> extra;
    for (const auto& [l, f] : p.lambda_ctx) {
      if (!lookup(c.lambda_ctx, l)) extra.push_back(l);
    }
    if (extra.size() > 1) return fail(InvalidReason::ContextMismatch, "premise context has more than one new variable");
    std::string x;
    if (extra.size() == 1) {
      x = extra[0];
      if (!alpha_eq(*lookup(p.lambda_ctx, x), c.type.lhs())) {
        return fail(InvalidReason::TypeMismatch, "bound variable " + x + " has the wrong type");
      }
    } else {
      std::set<std::string> taken = free_vars(p.subject);
      for (const auto& [l, f] : p.lambda_ctx) taken.insert(l);
      for (const auto& [l, f] : c.lambda_ctx) taken.insert(l);
      x = fresh_name(c.subject.name().empty() ? "x" : c.subject.name(), taken);
    }
    if (free_vars(c.subject).count(x)) return fail(InvalidReason::SubjectMismatch, x + " escapes its binder");
    if (!(open(c.subject.body(), x) == p.subject)) {
      return fail(InvalidReason::SubjectMismatch, "premise subject is not the body of the abstraction");
    }
    if (!alpha_eq(p.type, c.type.rhs())) return fail(InvalidReason::TypeMismatch, "premise type is not the conclusion of the implication");
    if (auto f = included(p.lambda_ctx, c.lambda_ctx, "λ", x)) return f;
    return included(p.mu_ctx, c.mu_ctx, "μ");
  }

  static Outcome arrow_elim(const Sequent& fun, const Sequent& arg, const Sequent& c) {
    if (!c.subject.is(TermKind::App) || !(c.subject.fun() == fun.subject) || !(c.subject.arg() == arg.subject)) {
      return fail(InvalidReason::SubjectMismatch, "subject is not the application of the premise subjects");
    }
    if (!fun.type.is(FormulaKind::Arrow)) return fail(InvalidReason::TypeMismatch, "function premise is not an implication");
    if (!alpha_eq(fun.type.lhs(), arg.type)) return fail(InvalidReason::TypeMismatch, "argument type does not match");
    if (!alpha_eq(fun.type.rhs(), c.type)) return fail(InvalidReason::TypeMismatch, "result type does not match");
    if (auto f = same_contexts(fun, c)) return f;
    return same_contexts(arg, c);
  }

  static bool free_in_contexts(const std::string& v, RuleTag rule, std::initializer_list<const Context*> ctxs) {
    for (const Context* ctx : ctxs) {
      for (const auto& [l, f] : *ctx) {
        if (rule == RuleTag::FoGen && free_fo_vars(f).count(v)) return true;
        if (rule == RuleTag::SoGen && pred_free_in(f, Predicate::var(v))) return true;
        if (rule == RuleTag::ClassGen && pred_free_in(f, Predicate::classical(v))) return true;
      }
    }
    return false;
  }

  static FormulaKind quantifier_of(RuleTag r) {
    switch (r) {
      case RuleTag::FoGen:
      case RuleTag::FoInst:
        return FormulaKind::ForallFo;
      case RuleTag::SoGen:
      case RuleTag::SoInst:
        return FormulaKind::ForallSo;
      default:
        return FormulaKind::ForallClassical;
    }
  }

  static Outcome generalize(RuleTag rule, const Sequent& p, const Sequent& c) {
    if (!(p.subject == c.subject)) return fail(InvalidReason::SubjectMismatch, "generalization keeps the subject");
    if (!c.type.is(quantifier_of(rule))) return fail(InvalidReason::TypeMismatch, "conclusion has the wrong quantifier");
    if (!alpha_eq(p.type, c.type.body())) return fail(InvalidReason::TypeMismatch, "premise type is not the quantified body");
    if (free_in_contexts(c.type.var(), rule, {&p.lambda_ctx, &p.mu_ctx, &c.lambda_ctx, &c.mu_ctx})) {
      return fail(InvalidReason::SideConditionViolated, c.type.var() + " is free in the context");
    }
    return same_contexts(p, c);
  }

  Outcome instantiate_rule(RuleTag rule, const Witness& w, const Sequent& p, const Sequent& c) const {
    if (!(p.subject == c.subject)) return fail(InvalidReason::SubjectMismatch, "instantiation keeps the subject");
    if (!p.type.is(quantifier_of(rule))) return fail(InvalidReason::TypeMismatch, "premise has the wrong quantifier");
    std::variant<FoTerm, PredAbstraction> value = FoTerm::zero();
    if (rule == RuleTag::FoInst) {
      if (!std::holds_alternative<FoTerm>(w)) return fail(InvalidReason::BadWitness, "expected a first-order term");
      value = std::get<FoTerm>(w);
    } else {
      if (!std::holds_alternative<PredAbstraction>(w)) return fail(InvalidReason::BadWitness, "expected a predicate abstraction");
      const auto& g = std::get<PredAbstraction>(w);
      if (d_.system == System::M && !g.params.empty()) return fail(InvalidReason::WrongSystem, "M only instantiates 0-ary variables");
      if (rule == RuleTag::ClassInst && !is_classical_type(g.body)) {
        return fail(InvalidReason::NonClassicalInstantiation, to_string(g.body) + " is not a classical type");
      }
      value = g;
    }
    Formula result = Formula::bottom();
    try {
      result = instantiate_quantifier(p.type, value);
    } catch (const PreconditionViolated& e) {
      return fail(InvalidReason::ArityMismatch, e.what());
    }
    if (!alpha_eq(result, c.type)) return fail(InvalidReason::BadWitness, "instance is " + to_string(result));
    return same_contexts(p, c);
  }

  Outcome equation(const Witness& w, const Sequent& p, const Sequent& c) const {
    if (!(p.subject == c.subject)) return fail(InvalidReason::SubjectMismatch, "an equational step keeps the subject");
    if (!std::holds_alternative<EqWitness>(w)) return fail(InvalidReason::BadWitness, "expected an equation witness");
    const auto& ew = std::get<EqWitness>(w);
    if (ew.equation == 0 || ew.equation > d_.equations.size()) {
      return fail(InvalidReason::BadEquation, "no equation number " + std::to_string(ew.equation));
    }
    const Equation& eq = d_.equations[ew.equation - 1];
    FoTerm from = apply_subst(ew.instance, ew.left_to_right ? eq.lhs : eq.rhs);
    FoTerm to = apply_subst(ew.instance, ew.left_to_right ? eq.rhs : eq.lhs);
    auto at = fo_term_at(p.type, ew.position);
    if (!at) return fail(InvalidReason::BadWitness, "position does not address a first-order term");
    if (!(*at == from)) return fail(InvalidReason::BadWitness, "found " + to_string(*at) + ", expected " + to_string(from));
    auto rewritten = replace_fo_at(p.type, ew.position, to);
    if (!rewritten || !alpha_eq(*rewritten, c.type)) return fail(InvalidReason::BadWitness, "rewritten type differs from the conclusion");
    return same_contexts(p, c);
  }

  Outcome control_axiom(const Sequent& c) const {
    if (!c.subject.is(TermKind::Control)) return fail(InvalidReason::SubjectMismatch, "the axiom types C");
    Formula expected = d_.system == System::C2 ? c2_axiom_type() : m2_axiom_type();
    if (!alpha_eq(expected, c.type)) return fail(InvalidReason::TypeMismatch, "C has type " + to_string(expected));
    return std::nullopt;
  }

  static Outcome naming(const Sequent& p, const Sequent& c) {
    if (!c.subject.is(TermKind::Mu)) return fail(InvalidReason::SubjectMismatch, "subject is not a μ-abstraction");
    std::vector<std::string> extra;
    for (const auto& [l, f] : p.mu_ctx) {
      if (!lookup(c.mu_ctx, l)) extra.push_back(l);
    }
    std::string beta;
    if (extra.size() == 1) {
      beta = extra[0];
    } else {
      std::set<std::string> taken = free_mu_vars(p.subject);
      for (const auto& [l, f] : p.mu_ctx) taken.insert(l);
      for (const auto& [l, f] : c.mu_ctx) taken.insert(l);
      if (!c.subject.target().bound) taken.insert(c.subject.target().name);
      beta = fresh_name(c.subject.name().empty() ? "b" : c.subject.name(), taken);
      // Several unmatched labels: one of them must be the binder.
      for (const auto& e : extra) {
        if (open_mu(c.subject, e).body == p.subject) beta = e;
      }
    }
    OpenedMu opened = open_mu(c.subject, beta);
    if (!(opened.body == p.subject)) return fail(InvalidReason::SubjectMismatch, "premise subject is not the named body");
    if (opened.target.bound) return fail(InvalidReason::SubjectMismatch, "naming refers to an unbound μ-variable");
    const std::string& alpha = opened.target.name;
    const Formula& a = p.type;

    // Type of the binder: its premise declaration, ⊥ if used but undeclared,
    // anything if unused.
    const Formula* declared = lookup(p.mu_ctx, beta);
    if (declared) {
      if (!alpha_eq(*declared, c.type)) return fail(InvalidReason::TypeMismatch, "conclusion type differs from the type of " + beta);
    } else if (free_mu_vars(p.subject).count(beta) && !c.type.is(FormulaKind::Bottom)) {
      return fail(InvalidReason::TypeMismatch, beta + " is used with type ⊥");
    }

    if (alpha == beta) {
      if (!alpha_eq(a, c.type)) return fail(InvalidReason::TypeMismatch, "naming the binder itself needs equal types");
    } else {
      const Formula* in_concl = lookup(c.mu_ctx, alpha);
      if (in_concl) {
        if (!alpha_eq(*in_concl, a)) return fail(InvalidReason::TypeMismatch, alpha + " must have the premise type");
      } else if (!a.is(FormulaKind::Bottom)) {
        return fail(InvalidReason::ContextMismatch, alpha + " is missing from the μ-context");
      }
    }
    if (auto f = included(p.lambda_ctx, c.lambda_ctx, "λ")) return f;
    for (const auto& [l, f] : p.mu_ctx) {
      if (l == beta) continue;
      const Formula* g = lookup(c.mu_ctx, l);
      if (!g || !alpha_eq(f, *g)) return fail(InvalidReason::ContextMismatch, "μ-context loses " + l);
    }
    if (lookup(c.mu_ctx, beta)) return fail(InvalidReason::ContextMismatch, beta + " is bound by the subject");
    return std::nullopt;
  }

  const Derivation& d_;
};

DerivationNode embed_node(const DerivationNode& n) {
  RuleTag rule = n.rule;
  Witness witness = n.witness;
  if (n.rule == RuleTag::SoGen) rule = RuleTag::ClassGen;
  if (n.rule == RuleTag::SoInst) {
    rule = RuleTag::ClassInst;
    witness = classical(std::get<PredAbstraction>(n.witness));
  }
  Sequent s{{}, n.conclusion.subject, classical(n.conclusion.type), {}};
  for (const auto& [l, f] : n.conclusion.lambda_ctx) s.lambda_ctx.emplace_back(l, classical(f));
  std::vector<DerivationNode> premises;
  for (const auto& p : n.premises) premises.push_back(embed_node(p));
  return {rule, std::move(s), std::move(witness), std::move(premises)};
}

}  // namespace

CheckResult check(const Derivation& d) { return Checker(d).run(); }

std::pair<Term, Formula> subject_of(const Derivation& d) {
  return {d.root.conclusion.subject, d.root.conclusion.type};
}

Derivation embed_c2_in_m2(const Derivation& d) {
  if (d.system != System::C2) throw PreconditionViolated("embed_c2_in_m2 expects a C2 derivation");
  CheckResult r = check(d);
  if (!r) throw PreconditionViolated("invalid derivation at " + r.path + ": " + r.message);
  return {d.name, System::M2, d.equations, embed_node(d.root)};
}

}  // namespace mixlogic
