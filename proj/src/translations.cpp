#include "mixlogic/translations.hpp"

#include "mixlogic/error.hpp"

namespace mixlogic {

std::string godel_name(const std::string& classical_var) { return classical_var + "*"; }

namespace {

bool has_classical(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return false;
    case FormulaKind::Atom:
      return a.pred().kind == Predicate::Kind::Classical;
    case FormulaKind::Arrow:
      return has_classical(a.lhs()) || has_classical(a.rhs());
    case FormulaKind::ForallClassical:
      return true;
    default:
      return has_classical(a.body());
  }
}

void collect_classical(const Formula& a, std::set<std::string>& out) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return;
    case FormulaKind::Atom:
      if (a.pred().kind == Predicate::Kind::Classical) out.insert(a.pred().name);
      return;
    case FormulaKind::Arrow:
      collect_classical(a.lhs(), out);
      collect_classical(a.rhs(), out);
      return;
    case FormulaKind::ForallClassical:
      out.insert(a.var());
      collect_classical(a.body(), out);
      return;
    default:
      collect_classical(a.body(), out);
  }
}

void collect_ordinary(const Formula& a, std::set<std::string>& out) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return;
    case FormulaKind::Atom:
      if (a.pred().kind == Predicate::Kind::Var) out.insert(a.pred().name);
      return;
    case FormulaKind::Arrow:
      collect_ordinary(a.lhs(), out);
      collect_ordinary(a.rhs(), out);
      return;
    case FormulaKind::ForallSo:
      out.insert(a.var());
      collect_ordinary(a.body(), out);
      return;
    default:
      collect_ordinary(a.body(), out);
  }
}

Formula godel_unchecked(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return a;
    case FormulaKind::Atom:
      if (a.pred().kind != Predicate::Kind::Classical) return a;
      return Formula::negation(Formula::atom(Predicate::var(godel_name(a.pred().name)), a.args()));
    case FormulaKind::Arrow:
      return Formula::arrow(godel_unchecked(a.lhs()), godel_unchecked(a.rhs()));
    case FormulaKind::ForallFo:
      return Formula::forall_fo(a.var(), godel_unchecked(a.body()));
    case FormulaKind::ForallSo:
      return Formula::forall_so(a.var(), godel_unchecked(a.body()));
    case FormulaKind::ForallClassical:
      return Formula::forall_so(godel_name(a.var()), godel_unchecked(a.body()));
  }
  return a;
}

Formula simple_godel_unchecked(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return a;
    case FormulaKind::Atom:
      return Formula::negation(a);
    case FormulaKind::Arrow:
      return Formula::arrow(simple_godel_unchecked(a.lhs()), simple_godel_unchecked(a.rhs()));
    case FormulaKind::ForallFo:
      return Formula::forall_fo(a.var(), simple_godel_unchecked(a.body()));
    default:
      return Formula::forall_so(a.var(), simple_godel_unchecked(a.body()));
  }
}

Formula classical_unchecked(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return a;
    case FormulaKind::Atom:
      if (a.pred().kind != Predicate::Kind::Var) return a;
      return Formula::atom(Predicate::classical(a.pred().name), a.args());
    case FormulaKind::Arrow:
      return Formula::arrow(classical_unchecked(a.lhs()), classical_unchecked(a.rhs()));
    case FormulaKind::ForallFo:
      return Formula::forall_fo(a.var(), classical_unchecked(a.body()));
    default:
      return Formula::forall_classical(a.var(), classical_unchecked(a.body()));
  }
}

void require_godel_fresh(const Formula& a) {
  std::set<std::string> cls, ord;
  collect_classical(a, cls);
  collect_ordinary(a, ord);
  for (const auto& c : cls) {
    if (ord.count(godel_name(c))) {
      throw PreconditionViolated("variable " + godel_name(c) + " already occurs");
    }
  }
}

void require_no_classical(const Formula& a, const char* op) {
  if (has_classical(a)) throw PreconditionViolated(std::string(op) + " expects a formula without classical variables");
}

}  // namespace

Formula godel(const Formula& a) {
  require_godel_fresh(a);
  return godel_unchecked(a);
}

PredAbstraction godel(const PredAbstraction& g) { return {g.params, godel(g.body)}; }

Formula simple_godel(const Formula& a) {
  require_no_classical(a, "simple_godel");
  return simple_godel_unchecked(a);
}

Formula classical(const Formula& a) {
  require_no_classical(a, "classical");
  return classical_unchecked(a);
}

PredAbstraction classical(const PredAbstraction& g) { return {g.params, classical(g.body)}; }

Formula prop_erase(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return a;
    case FormulaKind::Atom:
      return Formula::atom(a.pred());
    case FormulaKind::Arrow:
      return Formula::arrow(prop_erase(a.lhs()), prop_erase(a.rhs()));
    case FormulaKind::ForallFo:
      return prop_erase(a.body());
    case FormulaKind::ForallSo:
      return Formula::forall_so(a.var(), prop_erase(a.body()));
    case FormulaKind::ForallClassical:
      return Formula::forall_classical(a.var(), prop_erase(a.body()));
  }
  return a;
}

}  // namespace mixlogic
