#include "mixlogic/equations.hpp"

#include <deque>
#include <functional>
#include <set>

#include "mixlogic/term.hpp"

namespace mixlogic {

FoTerm apply_subst(const FoSubstitution& s, const FoTerm& t) {
  if (t.kind == FoTerm::Kind::Var) {
    auto it = s.find(t.name);
    return it == s.end() ? t : it->second;
  }
  FoTerm out = t;
  for (auto& a : out.args) a = apply_subst(s, a);
  return out;
}

namespace {

FoTerm resolve(const FoSubstitution& s, const FoTerm& t) {
  if (t.kind == FoTerm::Kind::Var) {
    auto it = s.find(t.name);
    return it == s.end() ? t : resolve(s, it->second);
  }
  FoTerm out = t;
  for (auto& a : out.args) a = resolve(s, a);
  return out;
}

bool unify_into(const FoTerm& a, const FoTerm& b, FoSubstitution& s) {
  FoTerm x = resolve(s, a), y = resolve(s, b);
  if (x == y) return true;
  if (y.kind == FoTerm::Kind::Var && x.kind != FoTerm::Kind::Var) std::swap(x, y);
  if (x.kind == FoTerm::Kind::Var) {
    if (occurrences(y, x.name) > 0) return false;
    s[x.name] = y;
    return true;
  }
  if (x.kind != y.kind || x.name != y.name || x.args.size() != y.args.size()) return false;
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (!unify_into(x.args[i], y.args[i], s)) return false;
  }
  return true;
}

bool orientable(const FoTerm& l, const FoTerm& r) {
  if (l.size() <= r.size()) return false;
  for (const auto& v : vars_of(r)) {
    if (occurrences(r, v) > occurrences(l, v)) return false;
  }
  return true;
}

std::optional<RewriteRule> orient(const FoTerm& a, const FoTerm& b) {
  if (orientable(a, b)) return RewriteRule{a, b};
  if (orientable(b, a)) return RewriteRule{b, a};
  return std::nullopt;
}

FoTerm rename_apart(const FoTerm& t, const std::string& suffix) {
  if (t.kind == FoTerm::Kind::Var) return FoTerm::var(t.name + suffix);
  FoTerm out = t;
  for (auto& a : out.args) a = rename_apart(a, suffix);
  return out;
}

void positions(const FoTerm& t, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (t.kind == FoTerm::Kind::Var) return;
  out.push_back(cur);
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    cur.push_back(i);
    positions(t.args[i], cur, out);
    cur.pop_back();
  }
}

struct StepCounter {
  std::size_t left;
  bool spend() {
    if (left == 0) return false;
    --left;
    return true;
  }
};

std::optional<FoTerm> normalize(const std::vector<RewriteRule>& rules, const FoTerm& t, StepCounter& c) {
  FoTerm cur = t;
  for (auto& a : cur.args) {
    auto n = normalize(rules, a, c);
    if (!n) return std::nullopt;
    a = std::move(*n);
  }
  for (const auto& r : rules) {
    FoSubstitution s;
    if (match(r.lhs, cur, s)) {
      if (!c.spend()) return std::nullopt;
      return normalize(rules, apply_subst(s, r.rhs), c);
    }
  }
  return cur;
}

// All terms reachable from t in one equational step, either direction.
void neighbours(const EquationSet& e, const FoTerm& t, std::vector<FoTerm>& out) {
  std::vector<std::size_t> cur;
  // Variables are positions too: an equation x = u may rewrite them.
  std::vector<std::vector<std::size_t>> all;
  std::function<void(const FoTerm&, std::vector<std::size_t>&)> every = [&](const FoTerm& u, std::vector<std::size_t>& p) {
    all.push_back(p);
    for (std::size_t i = 0; i < u.args.size(); ++i) {
      p.push_back(i);
      every(u.args[i], p);
      p.pop_back();
    }
  };
  every(t, cur);
  for (const auto& p : all) {
    FoTerm sub = *subterm_at(t, p);
    for (const auto& eq : e) {
      for (int dir = 0; dir < 2; ++dir) {
        const FoTerm& from = dir ? eq.rhs : eq.lhs;
        const FoTerm& to = dir ? eq.lhs : eq.rhs;
        bool ok = true;
        for (const auto& v : vars_of(to)) ok = ok && vars_of(from).count(v);
        if (!ok) continue;
        FoSubstitution s;
        if (match(from, sub, s)) out.push_back(replace_at(t, p, apply_subst(s, to)));
      }
    }
  }
}

}  // namespace

std::optional<FoSubstitution> unify(const FoTerm& a, const FoTerm& b) {
  FoSubstitution s;
  if (!unify_into(a, b, s)) return std::nullopt;
  FoSubstitution out;
  for (const auto& [k, v] : s) out[k] = resolve(s, v);
  return out;
}

bool match(const FoTerm& pattern, const FoTerm& t, FoSubstitution& s) {
  if (pattern.kind == FoTerm::Kind::Var) {
    auto [it, inserted] = s.emplace(pattern.name, t);
    return inserted || it->second == t;
  }
  if (pattern.kind != t.kind || pattern.name != t.name || pattern.args.size() != t.args.size()) return false;
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (!match(pattern.args[i], t.args[i], s)) return false;
  }
  return true;
}

std::optional<FoTerm> subterm_at(const FoTerm& t, const std::vector<std::size_t>& path) {
  const FoTerm* cur = &t;
  for (std::size_t i : path) {
    if (i >= cur->args.size()) return std::nullopt;
    cur = &cur->args[i];
  }
  return *cur;
}

FoTerm replace_at(const FoTerm& t, const std::vector<std::size_t>& path, const FoTerm& u) {
  if (path.empty()) return u;
  FoTerm out = t;
  std::vector<std::size_t> rest(path.begin() + 1, path.end());
  out.args.at(path[0]) = replace_at(t.args.at(path[0]), rest, u);
  return out;
}

std::optional<std::vector<RewriteRule>> complete(const EquationSet& e, Budget b) {
  std::vector<RewriteRule> rules;
  for (const auto& eq : e) {
    if (eq.lhs == eq.rhs) continue;
    auto r = orient(eq.lhs, eq.rhs);
    if (!r) return std::nullopt;
    rules.push_back(*r);
  }
  StepCounter counter{b.max_steps};
  constexpr std::size_t kMaxRules = 64;
  for (bool added = true; added;) {
    added = false;
    for (std::size_t i = 0; i < rules.size() && !added; ++i) {
      for (std::size_t j = 0; j < rules.size() && !added; ++j) {
        FoTerm l2 = rename_apart(rules[j].lhs, "'"), r2 = rename_apart(rules[j].rhs, "'");
        std::vector<std::vector<std::size_t>> ps;
        std::vector<std::size_t> cur;
        positions(rules[i].lhs, cur, ps);
        for (const auto& p : ps) {
          if (p.empty() && i == j) continue;
          auto sigma = unify(*subterm_at(rules[i].lhs, p), l2);
          if (!sigma) continue;
          FoTerm left = apply_subst(*sigma, rules[i].rhs);
          FoTerm right = apply_subst(*sigma, replace_at(rules[i].lhs, p, r2));
          auto nl = normalize(rules, left, counter);
          auto nr = normalize(rules, right, counter);
          if (!nl || !nr) return std::nullopt;
          if (*nl == *nr) continue;
          auto r = orient(*nl, *nr);
          if (!r || rules.size() >= kMaxRules) return std::nullopt;
          rules.push_back(*r);
          added = true;
          break;
        }
      }
    }
  }
  return rules;
}

std::optional<FoTerm> normal_form(const std::vector<RewriteRule>& rules, const FoTerm& t, Budget b) {
  StepCounter c{b.max_steps};
  return normalize(rules, t, c);
}

Tristate equal_modulo(const EquationSet& e, const FoTerm& a, const FoTerm& b, Budget bud) {
  if (a == b) return Tristate::True;
  if (auto rules = complete(e)) {
    StepCounter c{bud.max_steps};
    auto na = normalize(*rules, a, c);
    auto nb = normalize(*rules, b, c);
    if (!na || !nb) return Tristate::Inconclusive;
    return *na == *nb ? Tristate::True : Tristate::False;
  }
  std::set<FoTerm> seen{a};
  std::deque<FoTerm> queue{a};
  while (!queue.empty()) {
    if (seen.size() > bud.max_steps) return Tristate::Inconclusive;
    FoTerm t = queue.front();
    queue.pop_front();
    std::vector<FoTerm> next;
    neighbours(e, t, next);
    for (auto& n : next) {
      if (n == b) return Tristate::True;
      if (seen.insert(n).second) queue.push_back(std::move(n));
    }
  }
  // The whole equivalence class of a was enumerated.
  return Tristate::False;
}

namespace {

void signature(const FoTerm& t, std::map<std::string, std::size_t>& sig) {
  if (t.kind == FoTerm::Kind::Var) return;
  sig[t.name] = t.args.size();
  for (const auto& a : t.args) signature(a, sig);
}

std::vector<FoTerm> ground_terms(const std::map<std::string, std::size_t>& sig, std::size_t max_size) {
  std::vector<std::vector<FoTerm>> by_size(max_size + 1);
  for (std::size_t n = 1; n <= max_size; ++n) {
    for (const auto& [f, arity] : sig) {
      if (arity == 0) {
        if (n == 1) by_size[1].push_back(f == "0" ? FoTerm::zero() : FoTerm::constant(f));
        continue;
      }
      // Distribute n - 1 symbols over `arity` arguments.
      std::vector<FoTerm> args;
      std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t k, std::size_t left) {
        if (k == arity) {
          if (left == 0) by_size[n].push_back(FoTerm::fun(f, args));
          return;
        }
        for (std::size_t s = 1; s <= left; ++s) {
          for (const auto& t : by_size[s]) {
            args.push_back(t);
            fill(k + 1, left - s);
            args.pop_back();
          }
        }
      };
      fill(0, n - 1);
    }
  }
  std::vector<FoTerm> out;
  for (auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  return out;
}

Tristate combine(Tristate acc, Tristate next) {
  if (acc == Tristate::False || next == Tristate::False) return Tristate::False;
  if (acc == Tristate::Inconclusive || next == Tristate::Inconclusive) return Tristate::Inconclusive;
  return Tristate::True;
}

}  // namespace

Tristate check_adequate(const EquationSet& e, Budget bud, std::size_t max_size) {
  std::map<std::string, std::size_t> sig{{"0", 0}, {"s", 1}};
  for (const auto& eq : e) {
    signature(eq.lhs, sig);
    signature(eq.rhs, sig);
  }
  std::vector<FoTerm> terms = ground_terms(sig, max_size);
  Tristate result = Tristate::True;
  for (const auto& a : terms) {
    Tristate z = equal_modulo(e, FoTerm::succ(a), FoTerm::zero(), bud);
    if (z == Tristate::True) return Tristate::False;
    if (z == Tristate::Inconclusive) result = Tristate::Inconclusive;
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      Tristate ss = equal_modulo(e, FoTerm::succ(terms[i]), FoTerm::succ(terms[j]), bud);
      if (ss == Tristate::False) continue;
      Tristate plain = equal_modulo(e, terms[i], terms[j], bud);
      if (ss == Tristate::True && plain == Tristate::False) return Tristate::False;
      if (plain != Tristate::True) result = Tristate::Inconclusive;
    }
  }
  return result;
}

namespace {

Tristate formula_eq(const EquationSet& e, const Formula& a, const Formula& b, Budget bud) {
  if (a.kind() != b.kind()) return Tristate::False;
  switch (a.kind()) {
    case FormulaKind::Bottom:
      return Tristate::True;
    case FormulaKind::Atom: {
      if (a.pred() != b.pred() || a.args().size() != b.args().size()) return Tristate::False;
      Tristate acc = Tristate::True;
      for (std::size_t i = 0; i < a.args().size(); ++i) acc = combine(acc, equal_modulo(e, a.args()[i], b.args()[i], bud));
      return acc;
    }
    case FormulaKind::Arrow:
      return combine(formula_eq(e, a.lhs(), b.lhs(), bud), formula_eq(e, a.rhs(), b.rhs(), bud));
    default: {
      std::set<std::string> taken = all_names(a);
      taken.merge(all_names(b));
      std::string fresh = fresh_name(a.var(), taken);
      return formula_eq(e, open_quantifier(a, fresh), open_quantifier(b, fresh), bud);
    }
  }
}

}  // namespace

Tristate formula_equal_modulo(const EquationSet& e, const Formula& a, const Formula& b, Budget bud) {
  return formula_eq(e, a, b, bud);
}

}  // namespace mixlogic
