#include "mixlogic/term.hpp"

#include <functional>

#include "mixlogic/error.hpp"
#include "mixlogic/term_syntax.hpp"

namespace mixlogic {

namespace detail {

struct TermNode {
  TermKind kind;
  std::uint32_t index = 0;
  std::string name;
  MuTarget target;
  Term a;
  Term b;
  std::size_t size = 1;
  std::size_t hash = 0;

  static Term make(TermNode n) {
    std::size_t h = std::hash<int>{}(static_cast<int>(n.kind)) * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    switch (n.kind) {
      case TermKind::Bound:
        mix(n.index);
        break;
      case TermKind::Free:
      case TermKind::Stack:
        mix(std::hash<std::string>{}(n.name));
        break;
      case TermKind::Lam:
        mix(n.a.hash());
        n.size = 1 + n.a.size();
        break;
      case TermKind::App:
        mix(n.a.hash());
        mix(n.b.hash());
        n.size = 1 + n.a.size() + n.b.size();
        break;
      case TermKind::Mu:
        mix(n.target.bound ? n.target.index : std::hash<std::string>{}(n.target.name));
        mix(n.target.bound);
        mix(n.a.hash());
        n.size = 1 + n.a.size();
        break;
      case TermKind::Control:
        break;
    }
    n.hash = h;
    return Term(std::make_shared<const TermNode>(std::move(n)));
  }
};

}  // namespace detail

using detail::TermNode;

Term Term::var(std::string name) {
  return TermNode::make({TermKind::Free, 0, std::move(name), {}, {}, {}});
}
Term Term::bound(std::uint32_t index) { return TermNode::make({TermKind::Bound, index, {}, {}, {}, {}}); }
Term Term::lam(std::string hint, Term body) {
  return TermNode::make({TermKind::Lam, 0, std::move(hint), {}, std::move(body), {}});
}
Term Term::app(Term fun, Term arg) {
  return TermNode::make({TermKind::App, 0, {}, {}, std::move(fun), std::move(arg)});
}
Term Term::apply(Term head, std::span<const Term> args) {
  for (const auto& a : args) head = app(std::move(head), a);
  return head;
}
Term Term::control() {
  static const Term c = TermNode::make({TermKind::Control, 0, {}, {}, {}, {}});
  return c;
}
Term Term::stack(std::string name) {
  return TermNode::make({TermKind::Stack, 0, std::move(name), {}, {}, {}});
}
Term Term::mu(std::string hint, MuTarget target, Term body) {
  return TermNode::make({TermKind::Mu, 0, std::move(hint), std::move(target), std::move(body), {}});
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
std::uint32_t Term::index() const { return node_->index; }
const Term& Term::body() const { return node_->a; }
const Term& Term::fun() const { return node_->a; }
const Term& Term::arg() const { return node_->b; }
const MuTarget& Term::target() const { return node_->target; }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& x, const Term& y) {
  if (x.node_ == y.node_) return true;
  if (x.hash() != y.hash() || x.size() != y.size() || x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case TermKind::Bound:
      return x.index() == y.index();
    case TermKind::Free:
    case TermKind::Stack:
      return x.name() == y.name();
    case TermKind::Control:
      return true;
    case TermKind::Lam:
      return x.body() == y.body();
    case TermKind::App:
      return x.fun() == y.fun() && x.arg() == y.arg();
    case TermKind::Mu:
      return x.target() == y.target() && x.body() == y.body();
  }
  return false;
}

MuTerm::MuTerm(Term t) : term_(std::move(t)) {
  if (!is_mu_term(term_)) {
    throw PreconditionViolated("a λμ-term may not contain C or stack constants");
  }
}

// -- queries -----------------------------------------------------------------

bool alpha_eq(const Term& a, const Term& b) { return a == b; }

namespace {

template <class F>
void visit(const Term& t, F&& f) {
  f(t);
  switch (t.kind()) {
    case TermKind::Lam:
    case TermKind::Mu:
      visit(t.body(), f);
      break;
    case TermKind::App:
      visit(t.fun(), f);
      visit(t.arg(), f);
      break;
    default:
      break;
  }
}

bool lambda_cp_at(const Term& t, bool argument_position) {
  switch (t.kind()) {
    case TermKind::Stack:
      return argument_position;
    case TermKind::Lam:
      return lambda_cp_at(t.body(), false);
    case TermKind::App:
      return lambda_cp_at(t.fun(), false) && lambda_cp_at(t.arg(), true);
    case TermKind::Mu:
      return false;
    default:
      return true;
  }
}

bool closed_at(const Term& t, std::uint32_t lam_depth, std::uint32_t mu_depth) {
  switch (t.kind()) {
    case TermKind::Bound:
      return t.index() < lam_depth;
    case TermKind::Lam:
      return closed_at(t.body(), lam_depth + 1, mu_depth);
    case TermKind::App:
      return closed_at(t.fun(), lam_depth, mu_depth) && closed_at(t.arg(), lam_depth, mu_depth);
    case TermKind::Mu:
      if (t.target().bound && t.target().index >= mu_depth + 1) return false;
      return closed_at(t.body(), lam_depth, mu_depth + 1);
    default:
      return true;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  visit(t, [&](const Term& s) {
    if (s.is(TermKind::Free)) out.insert(s.name());
  });
  return out;
}

std::set<std::string> stack_constants(const Term& t) {
  std::set<std::string> out;
  visit(t, [&](const Term& s) {
    if (s.is(TermKind::Stack)) out.insert(s.name());
  });
  return out;
}

std::set<std::string> free_mu_vars(const Term& t) {
  std::set<std::string> out;
  visit(t, [&](const Term& s) {
    if (s.is(TermKind::Mu) && !s.target().bound) out.insert(s.target().name);
  });
  return out;
}

bool contains_control(const Term& t) {
  bool found = false;
  visit(t, [&](const Term& s) { found = found || s.is(TermKind::Control); });
  return found;
}

bool contains_mu(const Term& t) {
  bool found = false;
  visit(t, [&](const Term& s) { found = found || s.is(TermKind::Mu); });
  return found;
}

bool is_pure(const Term& t) {
  bool ok = true;
  visit(t, [&](const Term& s) {
    ok = ok && !s.is(TermKind::Control) && !s.is(TermKind::Stack) && !s.is(TermKind::Mu);
  });
  return ok;
}

bool is_lambda_c(const Term& t) {
  bool ok = true;
  visit(t, [&](const Term& s) { ok = ok && !s.is(TermKind::Stack) && !s.is(TermKind::Mu); });
  return ok;
}

bool is_lambda_cp(const Term& t) { return lambda_cp_at(t, false); }

bool is_mu_term(const Term& t) {
  bool ok = true;
  visit(t, [&](const Term& s) { ok = ok && !s.is(TermKind::Control) && !s.is(TermKind::Stack); });
  return ok;
}

bool is_locally_closed(const Term& t) { return closed_at(t, 0, 0); }

// -- spines ------------------------------------------------------------------

Spine unwind(const Term& t) {
  std::vector<Term> rev;
  const Term* cur = &t;
  while (cur->is(TermKind::App)) {
    rev.push_back(cur->arg());
    cur = &cur->fun();
  }
  return {*cur, std::vector<Term>(rev.rbegin(), rev.rend())};
}

Term rewind(const Term& head, std::span<const Term> args) { return Term::apply(head, args); }

// -- index plumbing ----------------------------------------------------------

Term shift(const Term& t, int lam_delta, int mu_delta, std::uint32_t lam_cutoff,
           std::uint32_t mu_cutoff) {
  if (lam_delta == 0 && mu_delta == 0) return t;
  switch (t.kind()) {
    case TermKind::Bound:
      if (t.index() >= lam_cutoff) {
        return Term::bound(static_cast<std::uint32_t>(static_cast<int>(t.index()) + lam_delta));
      }
      return t;
    case TermKind::Lam:
      return Term::lam(t.name(), shift(t.body(), lam_delta, mu_delta, lam_cutoff + 1, mu_cutoff));
    case TermKind::App:
      return Term::app(shift(t.fun(), lam_delta, mu_delta, lam_cutoff, mu_cutoff),
                       shift(t.arg(), lam_delta, mu_delta, lam_cutoff, mu_cutoff));
    case TermKind::Mu: {
      MuTarget target = t.target();
      if (target.bound && target.index >= mu_cutoff + 1) {
        target.index = static_cast<std::uint32_t>(static_cast<int>(target.index) + mu_delta);
      }
      return Term::mu(t.name(), target, shift(t.body(), lam_delta, mu_delta, lam_cutoff, mu_cutoff + 1));
    }
    default:
      return t;
  }
}

namespace {

Term instantiate_at(const Term& t, std::uint32_t lam_depth, std::uint32_t mu_depth, const Term& value) {
  switch (t.kind()) {
    case TermKind::Bound:
      if (t.index() == lam_depth) return shift(value, static_cast<int>(lam_depth), static_cast<int>(mu_depth));
      if (t.index() > lam_depth) return Term::bound(t.index() - 1);
      return t;
    case TermKind::Lam:
      return Term::lam(t.name(), instantiate_at(t.body(), lam_depth + 1, mu_depth, value));
    case TermKind::App:
      return Term::app(instantiate_at(t.fun(), lam_depth, mu_depth, value),
                       instantiate_at(t.arg(), lam_depth, mu_depth, value));
    case TermKind::Mu:
      return Term::mu(t.name(), t.target(), instantiate_at(t.body(), lam_depth, mu_depth + 1, value));
    default:
      return t;
  }
}

Term close_at(const Term& t, const std::string& name, std::uint32_t depth) {
  switch (t.kind()) {
    case TermKind::Free:
      return t.name() == name ? Term::bound(depth) : t;
    case TermKind::Lam:
      return Term::lam(t.name(), close_at(t.body(), name, depth + 1));
    case TermKind::App:
      return Term::app(close_at(t.fun(), name, depth), close_at(t.arg(), name, depth));
    case TermKind::Mu:
      return Term::mu(t.name(), t.target(), close_at(t.body(), name, depth));
    default:
      return t;
  }
}

// Turn free μ-name `name` into the binder at relative depth `depth`.
Term close_mu_at(const Term& t, const std::string& name, std::uint32_t depth) {
  switch (t.kind()) {
    case TermKind::Lam:
      return Term::lam(t.name(), close_mu_at(t.body(), name, depth));
    case TermKind::App:
      return Term::app(close_mu_at(t.fun(), name, depth), close_mu_at(t.arg(), name, depth));
    case TermKind::Mu: {
      MuTarget target = t.target();
      if (!target.bound && target.name == name) target = MuTarget::at(depth + 1);
      return Term::mu(t.name(), target, close_mu_at(t.body(), name, depth + 1));
    }
    default:
      return t;
  }
}

Term open_mu_at(const Term& t, const std::string& name, std::uint32_t depth) {
  switch (t.kind()) {
    case TermKind::Lam:
      return Term::lam(t.name(), open_mu_at(t.body(), name, depth));
    case TermKind::App:
      return Term::app(open_mu_at(t.fun(), name, depth), open_mu_at(t.arg(), name, depth));
    case TermKind::Mu: {
      // Inside this node the binder being opened sits at index depth + 1.
      MuTarget target = t.target();
      if (target.bound && target.index == depth + 1) {
        target = MuTarget::free(name);
      } else if (target.bound && target.index > depth + 1) {
        target.index -= 1;
      }
      return Term::mu(t.name(), target, open_mu_at(t.body(), name, depth + 1));
    }
    default:
      return t;
  }
}

Term substitute_at(const Term& t, const Substitution& s, bool argument_position) {
  switch (t.kind()) {
    case TermKind::Free: {
      auto it = s.vars.find(t.name());
      return it == s.vars.end() ? t : it->second;
    }
    case TermKind::Lam:
      return Term::lam(t.name(), substitute_at(t.body(), s, false));
    case TermKind::Mu:
      return Term::mu(t.name(), t.target(), substitute_at(t.body(), s, false));
    case TermKind::App: {
      Term fun = substitute_at(t.fun(), s, false);
      if (t.arg().is(TermKind::Stack)) {
        auto it = s.stacks.find(t.arg().name());
        if (it != s.stacks.end()) return Term::apply(fun, it->second);
        return Term::app(fun, t.arg());
      }
      return Term::app(fun, substitute_at(t.arg(), s, true));
    }
    default:
      (void)argument_position;
      return t;
  }
}

}  // namespace

Term Term::abstract(const std::string& name, const Term& body) {
  return Term::lam(name, close_at(body, name, 0));
}

Term Term::mu_abstract(const std::string& binder, const std::string& target, const Term& body) {
  MuTarget t = target == binder ? MuTarget::at(0) : MuTarget::free(target);
  return Term::mu(binder, t, close_mu_at(body, binder, 0));
}

Term instantiate(const Term& body, const Term& value) { return instantiate_at(body, 0, 0, value); }

Term open(const Term& body, const std::string& name) { return instantiate(body, Term::var(name)); }

OpenedMu open_mu(const Term& mu_node, const std::string& name) {
  MuTarget target = mu_node.target();
  if (target.bound && target.index == 0) {
    target = MuTarget::free(name);
  } else if (target.bound) {
    target.index -= 1;
  }
  return {target, open_mu_at(mu_node.body(), name, 0)};
}

Term substitute(const Term& t, const Substitution& s) {
  if (s.vars.empty() && s.stacks.empty()) return t;
  return substitute_at(t, s, false);
}

// -- numerals and combinators ------------------------------------------------

Term church(unsigned n) {
  Term body = Term::bound(1);  // x under λx.λf.
  for (unsigned i = 0; i < n; ++i) body = Term::app(Term::bound(0), body);
  return Term::lam("x", Term::lam("f", body));
}

std::optional<unsigned> church_value(const Term& t) {
  if (!t.is(TermKind::Lam) || !t.body().is(TermKind::Lam)) return std::nullopt;
  const Term* body = &t.body().body();
  unsigned n = 0;
  while (body->is(TermKind::App) && body->fun().is(TermKind::Bound) && body->fun().index() == 0) {
    body = &body->arg();
    ++n;
  }
  if (!body->is(TermKind::Bound) || body->index() != 1) return std::nullopt;
  return n;
}

namespace {

struct BuiltinDef {
  const char* name;
  const char* source;
};

// G, F and delta refer to succ and zero; they are spliced in by substitution.
constexpr BuiltinDef kBuiltins[] = {
    {"zero", "\\x.\\f.x"},
    {"succ", "\\n.\\x.\\f.f (n x f)"},
    {"delta", "\\f.f zero"},
    {"G", "\\x.\\y.x (\\z.y (succ z))"},
    {"F", "\\x.\\y.x (succ y)"},
    {"T1", "\\n.n delta G"},
    {"T2", "\\n.\\f.n f F zero"},
    {"abort", "\\x.C (\\y.x)"},
    {"Cprime", "\\x.C (\\d.x (\\y.x (\\z.d y)))"},
    {"muC", "\\x.mu a.[phi] x (\\y.mu b.[a] y)"},
};

}  // namespace

Term builtin(std::string_view name) {
  for (const auto& def : kBuiltins) {
    if (name != def.name) continue;
    Term t = parse_term(def.source);
    Substitution s;
    for (const char* dep : {"zero", "succ", "delta", "G", "F"}) {
      if (std::string_view(dep) != name && free_vars(t).count(dep)) s.vars.emplace(dep, builtin(dep));
    }
    return substitute(t, s);
  }
  throw PreconditionViolated("unknown builtin '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& def : kBuiltins) out.emplace_back(def.name);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

}  // namespace mixlogic
