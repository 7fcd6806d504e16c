#include "mixlogic/formula.hpp"

#include <algorithm>
#include <utility>

#include "mixlogic/error.hpp"
#include "mixlogic/term.hpp"

namespace mixlogic {

// -- first-order terms -------------------------------------------------------

FoTerm FoTerm::numeral(unsigned n) {
  FoTerm t = zero();
  for (unsigned i = 0; i < n; ++i) t = succ(std::move(t));
  return t;
}

bool operator<(const FoTerm& a, const FoTerm& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.name != b.name) return a.name < b.name;
  return std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
}

std::size_t FoTerm::size() const {
  std::size_t n = 1;
  for (const auto& a : args) n += a.size();
  return n;
}

namespace {
void collect_vars(const FoTerm& t, std::set<std::string>& out) {
  if (t.kind == FoTerm::Kind::Var) out.insert(t.name);
  for (const auto& a : t.args) collect_vars(a, out);
}
}  // namespace

std::set<std::string> vars_of(const FoTerm& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

FoTerm subst_fo(const FoTerm& t, const std::string& x, const FoTerm& u) {
  if (t.kind == FoTerm::Kind::Var) return t.name == x ? u : t;
  FoTerm out = t;
  for (auto& a : out.args) a = subst_fo(a, x, u);
  return out;
}

std::size_t occurrences(const FoTerm& t, const std::string& x) {
  std::size_t n = t.kind == FoTerm::Kind::Var && t.name == x;
  for (const auto& a : t.args) n += occurrences(a, x);
  return n;
}

// -- formula nodes -----------------------------------------------------------

namespace detail {
struct FormulaNode {
  FormulaKind kind;
  Predicate pred;
  std::vector<FoTerm> args;
  std::string var;
  Formula a;
  Formula b;
};
}  // namespace detail

using detail::FormulaNode;

Formula Formula::bottom() {
  static const Formula f(std::make_shared<const FormulaNode>(FormulaNode{FormulaKind::Bottom, {}, {}, {}, {}, {}}));
  return f;
}

Formula Formula::atom(Predicate p, std::vector<FoTerm> args) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{FormulaKind::Atom, std::move(p), std::move(args), {}, {}, {}}));
}

Formula Formula::arrow(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{FormulaKind::Arrow, {}, {}, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::negation(Formula a) { return arrow(std::move(a), bottom()); }

Formula Formula::forall_fo(std::string x, Formula body) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{FormulaKind::ForallFo, {}, {}, std::move(x), std::move(body), {}}));
}

Formula Formula::forall_so(std::string x, Formula body) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{FormulaKind::ForallSo, {}, {}, std::move(x), std::move(body), {}}));
}

Formula Formula::forall_classical(std::string x, Formula body) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{FormulaKind::ForallClassical, {}, {}, std::move(x), std::move(body), {}}));
}

Formula Formula::arrows(const std::vector<Formula>& premises, Formula conclusion) {
  for (auto it = premises.rbegin(); it != premises.rend(); ++it) conclusion = arrow(*it, conclusion);
  return conclusion;
}

FormulaKind Formula::kind() const { return node_->kind; }
bool Formula::is_quantifier() const {
  return is(FormulaKind::ForallFo) || is(FormulaKind::ForallSo) || is(FormulaKind::ForallClassical);
}
bool Formula::is_negation() const { return is(FormulaKind::Arrow) && rhs().is(FormulaKind::Bottom); }
const Predicate& Formula::pred() const { return node_->pred; }
const std::vector<FoTerm>& Formula::args() const { return node_->args; }
const Formula& Formula::lhs() const { return node_->a; }
const Formula& Formula::rhs() const { return node_->b; }
const std::string& Formula::var() const { return node_->var; }
const Formula& Formula::body() const { return node_->a; }

bool Formula::identical(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::Atom:
      return pred() == o.pred() && args() == o.args();
    case FormulaKind::Arrow:
      return lhs().identical(o.lhs()) && rhs().identical(o.rhs());
    default:
      return var() == o.var() && body().identical(o.body());
  }
}

namespace {

Predicate binder_pred(const Formula& q) {
  return q.is(FormulaKind::ForallClassical) ? Predicate::classical(q.var()) : Predicate::var(q.var());
}

Formula rebuild_quantifier(const Formula& q, std::string var, Formula body) {
  switch (q.kind()) {
    case FormulaKind::ForallFo:
      return Formula::forall_fo(std::move(var), std::move(body));
    case FormulaKind::ForallSo:
      return Formula::forall_so(std::move(var), std::move(body));
    default:
      return Formula::forall_classical(std::move(var), std::move(body));
  }
}

// -- alpha equivalence -------------------------------------------------------

struct AlphaEnv {
  // Pairs of simultaneously bound names, innermost last; the kind tag keeps
  // first-order, ordinary and classical binders apart.
  std::vector<std::pair<std::string, std::string>> fo;
  std::vector<std::tuple<Predicate::Kind, std::string, std::string>> so;
};

bool fo_alpha(const FoTerm& a, const FoTerm& b, const AlphaEnv& env) {
  if (a.kind != b.kind) return false;
  if (a.kind == FoTerm::Kind::Var) {
    for (auto it = env.fo.rbegin(); it != env.fo.rend(); ++it) {
      bool la = it->first == a.name, lb = it->second == b.name;
      if (la || lb) return la && lb;
    }
    return a.name == b.name;
  }
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!fo_alpha(a.args[i], b.args[i], env)) return false;
  }
  return true;
}

bool pred_alpha(const Predicate& a, const Predicate& b, const AlphaEnv& env) {
  if (a.kind != b.kind) return false;
  if (a.kind == Predicate::Kind::Symbol) return a.name == b.name;
  for (auto it = env.so.rbegin(); it != env.so.rend(); ++it) {
    if (std::get<0>(*it) != a.kind) continue;
    bool la = std::get<1>(*it) == a.name, lb = std::get<2>(*it) == b.name;
    if (la || lb) return la && lb;
  }
  return a.name == b.name;
}

bool formula_alpha(const Formula& a, const Formula& b, AlphaEnv& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::Atom: {
      if (!pred_alpha(a.pred(), b.pred(), env) || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (!fo_alpha(a.args()[i], b.args()[i], env)) return false;
      }
      return true;
    }
    case FormulaKind::Arrow:
      return formula_alpha(a.lhs(), b.lhs(), env) && formula_alpha(a.rhs(), b.rhs(), env);
    case FormulaKind::ForallFo: {
      env.fo.emplace_back(a.var(), b.var());
      bool ok = formula_alpha(a.body(), b.body(), env);
      env.fo.pop_back();
      return ok;
    }
    default: {
      env.so.emplace_back(binder_pred(a).kind, a.var(), b.var());
      bool ok = formula_alpha(a.body(), b.body(), env);
      env.so.pop_back();
      return ok;
    }
  }
}

void collect_free_fo(const Formula& a, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return;
    case FormulaKind::Atom:
      for (const auto& t : a.args()) {
        for (const auto& v : vars_of(t)) {
          if (!bound.count(v)) out.insert(v);
        }
      }
      return;
    case FormulaKind::Arrow:
      collect_free_fo(a.lhs(), bound, out);
      collect_free_fo(a.rhs(), bound, out);
      return;
    case FormulaKind::ForallFo: {
      bool fresh = bound.insert(a.var()).second;
      collect_free_fo(a.body(), bound, out);
      if (fresh) bound.erase(a.var());
      return;
    }
    default:
      collect_free_fo(a.body(), bound, out);
  }
}

void collect_free_preds(const Formula& a, std::set<Predicate>& bound, std::set<Predicate>& out) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return;
    case FormulaKind::Atom:
      if (a.pred().is_variable() && !bound.count(a.pred())) out.insert(a.pred());
      return;
    case FormulaKind::Arrow:
      collect_free_preds(a.lhs(), bound, out);
      collect_free_preds(a.rhs(), bound, out);
      return;
    case FormulaKind::ForallFo:
      collect_free_preds(a.body(), bound, out);
      return;
    default: {
      Predicate p = binder_pred(a);
      bool fresh = bound.insert(p).second;
      collect_free_preds(a.body(), bound, out);
      if (fresh) bound.erase(p);
    }
  }
}

void collect_names(const Formula& a, std::set<std::string>& out) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return;
    case FormulaKind::Atom:
      out.insert(a.pred().name);
      for (const auto& t : a.args()) collect_vars(t, out);
      return;
    case FormulaKind::Arrow:
      collect_names(a.lhs(), out);
      collect_names(a.rhs(), out);
      return;
    default:
      out.insert(a.var());
      collect_names(a.body(), out);
  }
}

// Atoms over `from` become atoms over `to` with the same arguments.
Formula rename_pred(const Formula& a, const Predicate& from, const Predicate& to) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return a;
    case FormulaKind::Atom:
      return a.pred() == from ? Formula::atom(to, a.args()) : a;
    case FormulaKind::Arrow:
      return Formula::arrow(rename_pred(a.lhs(), from, to), rename_pred(a.rhs(), from, to));
    case FormulaKind::ForallFo:
      return Formula::forall_fo(a.var(), rename_pred(a.body(), from, to));
    default: {
      Predicate bp = binder_pred(a);
      if (bp == from) return a;
      if (bp == to) {
        std::set<std::string> taken = all_names(a.body());
        taken.insert(to.name);
        taken.insert(from.name);
        std::string fresh = fresh_name(a.var(), taken);
        Predicate fp{bp.kind, fresh};
        Formula body = rename_pred(a.body(), bp, fp);
        return rebuild_quantifier(a, fresh, rename_pred(body, from, to));
      }
      return rebuild_quantifier(a, a.var(), rename_pred(a.body(), from, to));
    }
  }
}

}  // namespace

bool alpha_eq(const Formula& a, const Formula& b) {
  AlphaEnv env;
  return formula_alpha(a, b, env);
}

bool alpha_eq(const PredAbstraction& a, const PredAbstraction& b) {
  if (a.params.size() != b.params.size()) return false;
  AlphaEnv env;
  for (std::size_t i = 0; i < a.params.size(); ++i) env.fo.emplace_back(a.params[i], b.params[i]);
  return formula_alpha(a.body, b.body, env);
}

std::set<std::string> free_fo_vars(const Formula& a) {
  std::set<std::string> bound, out;
  collect_free_fo(a, bound, out);
  return out;
}

std::set<Predicate> free_preds(const Formula& a) {
  std::set<Predicate> bound, out;
  collect_free_preds(a, bound, out);
  return out;
}

std::set<std::string> all_names(const Formula& a) {
  std::set<std::string> out;
  collect_names(a, out);
  return out;
}

bool pred_free_in(const Formula& a, const Predicate& p) { return free_preds(a).count(p) > 0; }

std::size_t size(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return 1;
    case FormulaKind::Atom: {
      std::size_t n = 1;
      for (const auto& t : a.args()) n += t.size();
      return n;
    }
    case FormulaKind::Arrow:
      return 1 + size(a.lhs()) + size(a.rhs());
    default:
      return 1 + size(a.body());
  }
}

Formula subst_fo(const Formula& a, const std::string& x, const FoTerm& t) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return a;
    case FormulaKind::Atom: {
      std::vector<FoTerm> args = a.args();
      for (auto& arg : args) arg = subst_fo(arg, x, t);
      return Formula::atom(a.pred(), std::move(args));
    }
    case FormulaKind::Arrow:
      return Formula::arrow(subst_fo(a.lhs(), x, t), subst_fo(a.rhs(), x, t));
    case FormulaKind::ForallFo: {
      if (a.var() == x) return a;
      if (!free_fo_vars(a.body()).count(x)) return a;
      std::set<std::string> tv = vars_of(t);
      if (tv.count(a.var())) {
        std::set<std::string> taken = all_names(a.body());
        taken.insert(tv.begin(), tv.end());
        taken.insert(x);
        std::string fresh = fresh_name(a.var(), taken);
        Formula body = subst_fo(a.body(), a.var(), FoTerm::var(fresh));
        return Formula::forall_fo(fresh, subst_fo(body, x, t));
      }
      return Formula::forall_fo(a.var(), subst_fo(a.body(), x, t));
    }
    default:
      return rebuild_quantifier(a, a.var(), subst_fo(a.body(), x, t));
  }
}

Formula subst_pred(const Formula& a, const Predicate& x, const PredAbstraction& g) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return a;
    case FormulaKind::Atom: {
      if (a.pred() != x) return a;
      if (a.args().size() != g.params.size()) {
        throw PreconditionViolated("arity mismatch substituting for " + x.name);
      }
      // Rename parameters apart before the sequential substitution.
      std::set<std::string> taken = all_names(g.body);
      for (const auto& arg : a.args()) collect_vars(arg, taken);
      taken.insert(g.params.begin(), g.params.end());
      Formula body = g.body;
      std::vector<std::string> fresh;
      for (const auto& p : g.params) {
        std::string f = fresh_name(p + "_", taken);
        taken.insert(f);
        body = subst_fo(body, p, FoTerm::var(f));
        fresh.push_back(f);
      }
      for (std::size_t i = 0; i < fresh.size(); ++i) body = subst_fo(body, fresh[i], a.args()[i]);
      return body;
    }
    case FormulaKind::Arrow:
      return Formula::arrow(subst_pred(a.lhs(), x, g), subst_pred(a.rhs(), x, g));
    case FormulaKind::ForallFo: {
      std::set<std::string> gv = free_fo_vars(g.body);
      for (const auto& p : g.params) gv.erase(p);
      if (gv.count(a.var()) && pred_free_in(a.body(), x)) {
        std::set<std::string> taken = all_names(a.body());
        taken.insert(gv.begin(), gv.end());
        std::string fresh = fresh_name(a.var(), taken);
        Formula body = subst_fo(a.body(), a.var(), FoTerm::var(fresh));
        return Formula::forall_fo(fresh, subst_pred(body, x, g));
      }
      return Formula::forall_fo(a.var(), subst_pred(a.body(), x, g));
    }
    default: {
      Predicate bp = binder_pred(a);
      if (bp == x) return a;
      std::set<Predicate> gp = free_preds(g.body);
      if (gp.count(bp) && pred_free_in(a.body(), x)) {
        std::set<std::string> taken = all_names(a.body());
        taken.merge(all_names(g.body));
        taken.insert(x.name);
        std::string fresh = fresh_name(a.var(), taken);
        Formula body = rename_pred(a.body(), bp, Predicate{bp.kind, fresh});
        return rebuild_quantifier(a, fresh, subst_pred(body, x, g));
      }
      return rebuild_quantifier(a, a.var(), subst_pred(a.body(), x, g));
    }
  }
}

Formula open_quantifier(const Formula& q, const std::string& name) {
  if (q.is(FormulaKind::ForallFo)) return subst_fo(q.body(), q.var(), FoTerm::var(name));
  Predicate bp = binder_pred(q);
  return rename_pred(q.body(), bp, Predicate{bp.kind, name});
}

namespace {
Formula nat_with(const FoTerm& x, Predicate::Kind kind, bool negate) {
  Predicate X{kind, "X"};
  auto at = [&](FoTerm t) {
    Formula f = Formula::atom(X, {std::move(t)});
    return negate ? Formula::negation(f) : f;
  };
  Formula step = Formula::forall_fo("y", Formula::arrow(at(FoTerm::var("y")), at(FoTerm::succ(FoTerm::var("y")))));
  Formula body = Formula::arrows({at(FoTerm::zero()), step}, at(x));
  return kind == Predicate::Kind::Classical ? Formula::forall_classical("X", body) : Formula::forall_so("X", body);
}
}  // namespace

Formula nat(const FoTerm& x) { return nat_with(x, Predicate::Kind::Var, false); }
Formula nat_star(const FoTerm& x) { return nat_with(x, Predicate::Kind::Var, true); }
Formula nat_classical(const FoTerm& x) { return nat_with(x, Predicate::Kind::Classical, false); }

Formula nat_prop() {
  Formula X = Formula::atom(Predicate::var("X"));
  return Formula::forall_so("X", Formula::arrows({X, Formula::arrow(X, X)}, X));
}

}  // namespace mixlogic
