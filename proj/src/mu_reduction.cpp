#include <functional>
#include <unordered_set>

#include "mixlogic/reduction.hpp"

namespace mixlogic {

namespace {

// Builds the argument appended to a naming [α]w found at λ-depth `lam`
// and μ-depth `mu` below the binder of α.
using ArgAt = std::function<Term(std::uint32_t lam, std::uint32_t mu)>;

// u[v/*α]: every [α]w inside `t` becomes [α](w)v. `mu` counts the μ-binders
// between α's binder (inclusive) and t, so α has index `mu` at a naming
// directly inside t.
Term append_to_namings(const Term& t, std::uint32_t lam, std::uint32_t mu, const ArgAt& arg) {
  switch (t.kind()) {
    case TermKind::Lam:
      return Term::lam(t.name(), append_to_namings(t.body(), lam + 1, mu, arg));
    case TermKind::App:
      return Term::app(append_to_namings(t.fun(), lam, mu, arg), append_to_namings(t.arg(), lam, mu, arg));
    case TermKind::Mu: {
      Term body = append_to_namings(t.body(), lam, mu + 1, arg);
      if (t.target().bound && t.target().index == mu) body = Term::app(body, arg(lam, mu + 1));
      return Term::mu(t.name(), t.target(), body);
    }
    default:
      return t;
  }
}

// Applies append_to_namings to a μ-node's own naming and body.
Term append_in_mu(const Term& node, const ArgAt& arg) {
  Term body = append_to_namings(node.body(), 0, 1, arg);
  if (node.target().bound && node.target().index == 0) body = Term::app(body, arg(0, 1));
  return Term::mu(node.name(), node.target(), body);
}

bool some_naming(const Term& t, std::uint32_t mu, const std::function<bool(const Term&)>& pred) {
  switch (t.kind()) {
    case TermKind::Lam:
      return some_naming(t.body(), mu, pred);
    case TermKind::App:
      return some_naming(t.fun(), mu, pred) || some_naming(t.arg(), mu, pred);
    case TermKind::Mu:
      if (t.target().bound && t.target().index == mu && pred(t.body())) return true;
      return some_naming(t.body(), mu + 1, pred);
    default:
      return false;
  }
}

bool binder_used(const Term& node) {
  return some_naming(node.body(), 1, [](const Term&) { return true; });
}

bool names_abstraction(const Term& node) {
  if (node.target().bound && node.target().index == 0 && node.body().is(TermKind::Lam)) return true;
  return some_naming(node.body(), 1, [](const Term& w) { return w.is(TermKind::Lam); });
}

// [β := α] where β is the binder `depth` μ-levels above a naming.
MuTarget rename_target(const MuTarget& t, std::uint32_t depth, const MuTarget& alpha) {
  if (!t.bound || t.index < depth) return t;
  if (t.index == depth) return alpha.bound ? MuTarget::at(alpha.index + depth) : alpha;
  return MuTarget::at(t.index - 1);
}

Term rename_mu(const Term& t, std::uint32_t depth, const MuTarget& alpha) {
  switch (t.kind()) {
    case TermKind::Lam:
      return Term::lam(t.name(), rename_mu(t.body(), depth, alpha));
    case TermKind::App:
      return Term::app(rename_mu(t.fun(), depth, alpha), rename_mu(t.arg(), depth, alpha));
    case TermKind::Mu:
      return Term::mu(t.name(), rename_target(t.target(), depth, alpha), rename_mu(t.body(), depth + 1, alpha));
    default:
      return t;
  }
}

struct Contraction {
  const char* rule;
  Term result;
};

std::optional<Contraction> contract(const Term& t) {
  if (t.is(TermKind::App)) {
    const Term& f = t.fun();
    if (f.is(TermKind::Lam)) return Contraction{"C1", instantiate(f.body(), t.arg())};
    if (f.is(TermKind::Mu)) {
      const Term v = t.arg();
      return Contraction{"C2", append_in_mu(f, [&v](std::uint32_t lam, std::uint32_t mu) {
                           return shift(v, static_cast<int>(lam), static_cast<int>(mu));
                         })};
    }
    return std::nullopt;
  }
  if (!t.is(TermKind::Mu)) return std::nullopt;
  const Term& body = t.body();
  if (body.is(TermKind::Mu)) {
    Term renamed = rename_mu(body.body(), 1, t.target());
    return Contraction{"S1", Term::mu(t.name(), rename_target(body.target(), 0, t.target()), renamed)};
  }
  if (t.target().bound && t.target().index == 0 && !binder_used(t)) {
    return Contraction{"S2", shift(body, 0, -1)};
  }
  if (names_abstraction(t)) {
    Term lifted = Term::mu(t.name(), t.target(), shift(body, 1, 0));
    Term inner = append_in_mu(lifted, [](std::uint32_t lam, std::uint32_t) { return Term::bound(lam); });
    return Contraction{"S3", Term::lam("x", inner)};
  }
  return std::nullopt;
}

std::optional<Term> step_at(const Term& t, std::string& path, std::string& rule, bool outermost) {
  if (outermost) {
    if (auto c = contract(t)) {
      rule = c->rule;
      return c->result;
    }
  }
  switch (t.kind()) {
    case TermKind::App: {
      const char first = outermost ? 'f' : 'a';
      for (char side : {first, first == 'f' ? 'a' : 'f'}) {
        path.push_back(side);
        const Term& sub = side == 'f' ? t.fun() : t.arg();
        if (auto r = step_at(sub, path, rule, outermost)) {
          return side == 'f' ? Term::app(*r, t.arg()) : Term::app(t.fun(), *r);
        }
        path.pop_back();
      }
      break;
    }
    case TermKind::Lam:
    case TermKind::Mu: {
      path.push_back(t.is(TermKind::Lam) ? 'l' : 'm');
      if (auto r = step_at(t.body(), path, rule, outermost)) {
        return t.is(TermKind::Lam) ? Term::lam(t.name(), *r) : Term::mu(t.name(), t.target(), *r);
      }
      path.pop_back();
      break;
    }
    default:
      break;
  }
  if (!outermost) {
    if (auto c = contract(t)) {
      rule = c->rule;
      return c->result;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Step> mu_step(const Term& t, MuStrategy strategy) {
  std::string path, rule;
  auto r = step_at(t, path, rule, strategy == MuStrategy::LeftmostOutermost);
  if (!r) return std::nullopt;
  return Step{rule, path.empty() ? "-" : path, *r};
}

ReductionTrace mu_reduce(const MuTerm& t, Budget b, MuStrategy strategy) {
  ReductionTrace trace{t.term(), {}, false};
  Term cur = t.term();
  while (auto step = mu_step(cur, strategy)) {
    if (trace.steps.size() == b.max_steps) {
      trace.exhausted = true;
      break;
    }
    cur = step->result;
    trace.steps.push_back(std::move(*step));
  }
  return trace;
}

Tristate mu_head_equiv(const MuTerm& a, const MuTerm& b, Budget bud) {
  ReductionTrace ta = mu_reduce(a, bud);
  ReductionTrace tb = mu_reduce(b, bud);
  std::unordered_set<Term, TermHash> seen{ta.initial};
  for (const auto& s : ta.steps) seen.insert(s.result);
  if (seen.count(tb.initial)) return Tristate::True;
  for (const auto& s : tb.steps) {
    if (seen.count(s.result)) return Tristate::True;
  }
  if (!ta.exhausted && !tb.exhausted) return Tristate::False;
  return Tristate::Inconclusive;
}

}  // namespace mixlogic
