#include "mixlogic/derivation_builder.hpp"

#include "mixlogic/classify.hpp"
#include "mixlogic/error.hpp"

namespace mixlogic::build {

namespace {

const Formula* find(const Context& ctx, const std::string& label) {
  for (const auto& [l, f] : ctx) {
    if (l == label) return &f;
  }
  return nullptr;
}

Context without(const Context& ctx, const std::string& label) {
  Context out;
  for (const auto& entry : ctx) {
    if (entry.first != label) out.push_back(entry);
  }
  return out;
}

Context merge(const Context& a, const Context& b) {
  Context out = a;
  for (const auto& [l, f] : b) {
    const Formula* g = find(out, l);
    if (!g) {
      out.emplace_back(l, f);
    } else if (!alpha_eq(*g, f)) {
      throw PreconditionViolated("label " + l + " has two types");
    }
  }
  return out;
}

DerivationNode unary(RuleTag rule, const DerivationNode& p, Term subject, Formula type, Witness w = {}) {
  return {rule, Sequent{p.conclusion.lambda_ctx, std::move(subject), std::move(type), p.conclusion.mu_ctx},
          std::move(w), {p}};
}

DerivationNode inst(RuleTag rule, const DerivationNode& p, const std::variant<FoTerm, PredAbstraction>& value,
                    Witness w) {
  return unary(rule, p, p.conclusion.subject, instantiate_quantifier(p.conclusion.type, value), std::move(w));
}

}  // namespace

DerivationNode ax(const Context& ctx, const std::string& x) {
  const Formula* f = find(ctx, x);
  if (!f) throw PreconditionViolated(x + " is not in the context");
  return {RuleTag::Ax, Sequent{{{x, *f}}, Term::var(x), *f, {}}, {}, {}};
}

DerivationNode intro(const std::string& x, const DerivationNode& p, std::optional<Formula> type) {
  const Formula* a = find(p.conclusion.lambda_ctx, x);
  if (!a && !type) throw PreconditionViolated(x + " is not in the context");
  if (a && type && !alpha_eq(*a, *type)) throw PreconditionViolated(x + " has another type in the context");
  return {RuleTag::ArrIntro,
          Sequent{without(p.conclusion.lambda_ctx, x), Term::abstract(x, p.conclusion.subject),
                  Formula::arrow(a ? *a : *type, p.conclusion.type), p.conclusion.mu_ctx},
          {},
          {p}};
}

DerivationNode elim(const DerivationNode& fun, const DerivationNode& arg) {
  const Formula& t = fun.conclusion.type;
  if (!t.is(FormulaKind::Arrow)) throw PreconditionViolated("function type is not an implication");
  return {RuleTag::ArrElim,
          Sequent{merge(fun.conclusion.lambda_ctx, arg.conclusion.lambda_ctx),
                  Term::app(fun.conclusion.subject, arg.conclusion.subject), t.rhs(),
                  merge(fun.conclusion.mu_ctx, arg.conclusion.mu_ctx)},
          {},
          {fun, arg}};
}

DerivationNode fo_gen(const std::string& v, const DerivationNode& p) {
  return unary(RuleTag::FoGen, p, p.conclusion.subject, Formula::forall_fo(v, p.conclusion.type));
}

DerivationNode so_gen(const std::string& v, const DerivationNode& p) {
  return unary(RuleTag::SoGen, p, p.conclusion.subject, Formula::forall_so(v, p.conclusion.type));
}

DerivationNode class_gen(const std::string& v, const DerivationNode& p) {
  return unary(RuleTag::ClassGen, p, p.conclusion.subject, Formula::forall_classical(v, p.conclusion.type));
}

DerivationNode fo_inst(const DerivationNode& p, const FoTerm& t) { return inst(RuleTag::FoInst, p, t, t); }

DerivationNode so_inst(const DerivationNode& p, const PredAbstraction& g) { return inst(RuleTag::SoInst, p, g, g); }

DerivationNode class_inst(const DerivationNode& p, const PredAbstraction& g) {
  return inst(RuleTag::ClassInst, p, g, g);
}

DerivationNode eq(const DerivationNode& p, const EquationSet& e, std::size_t index, bool left_to_right,
                  std::vector<std::size_t> position, FoSubstitution instance) {
  if (index == 0 || index > e.size()) throw PreconditionViolated("no such equation");
  const Equation& q = e[index - 1];
  FoTerm to = apply_subst(instance, left_to_right ? q.rhs : q.lhs);
  auto type = replace_fo_at(p.conclusion.type, position, to);
  if (!type) throw PreconditionViolated("position does not address a first-order term");
  return unary(RuleTag::Eq, p, p.conclusion.subject, *type,
               EqWitness{index, left_to_right, std::move(position), std::move(instance)});
}

DerivationNode c_axiom(bool classical, Context ctx) {
  Predicate x = classical ? Predicate::classical("X") : Predicate::var("X");
  Formula a = Formula::atom(x);
  Formula body = Formula::arrow(Formula::negation(Formula::negation(a)), a);
  Formula type = classical ? Formula::forall_classical("X", body) : Formula::forall_so("X", body);
  return {RuleTag::CAxiom, Sequent{std::move(ctx), Term::control(), type, {}}, {}, {}};
}

DerivationNode naming(const std::string& beta, const std::string& alpha, const DerivationNode& p,
                      std::optional<Formula> type) {
  const Sequent& s = p.conclusion;
  const Formula* declared = find(s.mu_ctx, beta);
  Formula result = declared ? *declared : type.value_or(Formula::bottom());
  if (alpha == beta) result = s.type;
  Context mu = without(s.mu_ctx, beta);
  if (alpha != beta && !s.type.is(FormulaKind::Bottom)) mu = merge(mu, Context{{alpha, s.type}});
  return {RuleTag::MuNaming, Sequent{s.lambda_ctx, Term::mu_abstract(beta, alpha, s.subject), result, std::move(mu)},
          {},
          {p}};
}

}  // namespace mixlogic::build
