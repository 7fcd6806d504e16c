#include "mixlogic/classify.hpp"

#include <algorithm>
#include <map>

#include "mixlogic/error.hpp"
#include "mixlogic/term.hpp"

namespace mixlogic {

std::optional<Predicate> ending(const Formula& a) {
  const Formula* cur = &a;
  for (;;) {
    switch (cur->kind()) {
      case FormulaKind::Bottom:
        return std::nullopt;
      case FormulaKind::Atom:
        return cur->pred();
      case FormulaKind::Arrow:
        cur = &cur->rhs();
        break;
      default:
        cur = &cur->body();
    }
  }
}

bool ends_with(const Formula& a, const Predicate& x) {
  auto e = ending(a);
  return e && *e == x;
}

bool ends_with_bottom(const Formula& a) { return !ending(a).has_value(); }

bool is_classical_type(const Formula& a) {
  auto e = ending(a);
  return !e || e->kind == Predicate::Kind::Classical;
}

bool in_omega_plus(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
    case FormulaKind::Atom:
      return true;
    case FormulaKind::Arrow:
      return in_omega_minus(a.lhs()) && in_omega_plus(a.rhs());
    default:
      return in_omega_plus(a.body());
  }
}

bool in_omega_minus(const Formula& a) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
    case FormulaKind::Atom:
      return true;
    case FormulaKind::Arrow:
      return in_omega_plus(a.lhs()) && in_omega_minus(a.rhs());
    case FormulaKind::ForallFo:
      return in_omega_minus(a.body());
    case FormulaKind::ForallSo:
      return in_omega_minus(a.body()) && !pred_free_in(a.body(), Predicate::var(a.var()));
    case FormulaKind::ForallClassical:
      return in_omega_minus(a.body()) && !pred_free_in(a.body(), Predicate::classical(a.var()));
  }
  return false;
}

PolarityClass polarity(const Formula& a) {
  bool p = in_omega_plus(a), n = in_omega_minus(a);
  if (p && n) return PolarityClass::Both;
  if (p) return PolarityClass::Positive;
  if (n) return PolarityClass::Negative;
  return PolarityClass::Neither;
}

const char* to_string(PolarityClass p) {
  switch (p) {
    case PolarityClass::Positive:
      return "positive";
    case PolarityClass::Negative:
      return "negative";
    case PolarityClass::Both:
      return "both";
    case PolarityClass::Neither:
      return "neither";
  }
  return "";
}

Formula instantiate_quantifier(const Formula& q, const std::variant<FoTerm, PredAbstraction>& value) {
  if (q.is(FormulaKind::ForallFo)) {
    if (!std::holds_alternative<FoTerm>(value)) throw PreconditionViolated("first-order quantifier needs a term");
    return subst_fo(q.body(), q.var(), std::get<FoTerm>(value));
  }
  if (!q.is_quantifier() || !std::holds_alternative<PredAbstraction>(value)) {
    throw PreconditionViolated("second-order quantifier needs a predicate abstraction");
  }
  Predicate x = q.is(FormulaKind::ForallClassical) ? Predicate::classical(q.var()) : Predicate::var(q.var());
  return subst_pred(q.body(), x, std::get<PredAbstraction>(value));
}

namespace {

bool mentions(const FoTerm& t, const std::set<std::string>& names) {
  if (t.kind == FoTerm::Kind::Var) return names.count(t.name) > 0;
  for (const auto& a : t.args) {
    if (mentions(a, names)) return true;
  }
  return false;
}

class Matcher {
 public:
  struct Meta {
    FormulaKind kind;
    std::string original;
  };

  Matcher(std::map<std::string, Meta> fo_metas, std::map<Predicate, Meta> so_metas)
      : fo_metas_(std::move(fo_metas)), so_metas_(std::move(so_metas)) {}

  bool match(const Formula& p, const Formula& b) {
    if (p.is(FormulaKind::Atom) && so_metas_.count(p.pred())) {
      deferred_.push_back({p.pred(), p.args(), b, locals_fo_, locals_so_});
      return true;
    }
    if (p.kind() != b.kind()) return false;
    switch (p.kind()) {
      case FormulaKind::Bottom:
        return true;
      case FormulaKind::Atom: {
        if (p.pred() != b.pred() || p.args().size() != b.args().size()) return false;
        for (std::size_t i = 0; i < p.args().size(); ++i) {
          if (!match_term(p.args()[i], b.args()[i])) return false;
        }
        return true;
      }
      case FormulaKind::Arrow:
        return match(p.lhs(), b.lhs()) && match(p.rhs(), b.rhs());
      default: {
        std::string local = "!" + std::to_string(counter_++);
        if (p.is(FormulaKind::ForallFo)) {
          locals_fo_.insert(local);
        } else {
          locals_so_.insert(Predicate{p.is(FormulaKind::ForallClassical) ? Predicate::Kind::Classical
                                                                          : Predicate::Kind::Var,
                                      local});
        }
        return match(open_quantifier(p, local), open_quantifier(b, local));
      }
    }
  }

  bool resolve_predicates() {
    std::map<Predicate, std::vector<const Deferred*>> by_meta;
    for (const auto& d : deferred_) by_meta[d.meta].push_back(&d);
    for (const auto& [meta, occs] : by_meta) {
      auto g = find_abstraction(meta, occs);
      if (!g) return false;
      so_assign_.emplace(meta, *g);
    }
    return true;
  }

  std::optional<FoTerm> fo_value(const std::string& meta) const {
    auto it = fo_assign_.find(meta);
    if (it == fo_assign_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<PredAbstraction> so_value(const Predicate& meta) const {
    auto it = so_assign_.find(meta);
    if (it == so_assign_.end()) return std::nullopt;
    return it->second;
  }

 private:
  struct Deferred {
    Predicate meta;
    std::vector<FoTerm> args;
    Formula target;
    std::set<std::string> locals_fo;
    std::set<Predicate> locals_so;
  };

  bool match_term(const FoTerm& p, const FoTerm& t) {
    if (p.kind == FoTerm::Kind::Var && fo_metas_.count(p.name)) {
      auto it = fo_assign_.find(p.name);
      if (it != fo_assign_.end()) return it->second == t;
      if (mentions(t, locals_fo_)) return false;
      fo_assign_.emplace(p.name, t);
      return true;
    }
    if (p.kind != t.kind || p.name != t.name || p.args.size() != t.args.size()) return false;
    for (std::size_t i = 0; i < p.args.size(); ++i) {
      if (!match_term(p.args[i], t.args[i])) return false;
    }
    return true;
  }

  // First-order metavariables that only occur under `meta` are not fixed by
  // matching; they are tried against the first-order subterms of the targets.
  std::optional<PredAbstraction> find_abstraction(const Predicate& meta, const std::vector<const Deferred*>& occs) {
    std::vector<std::string> open;
    std::set<FoTerm> candidates;
    for (const auto* d : occs) {
      for (const auto& a : d->args) {
        for (const auto& v : vars_of(a)) {
          if (!fo_metas_.count(v) || fo_assign_.count(v)) continue;
          if (std::find(open.begin(), open.end(), v) == open.end()) open.push_back(v);
          candidates.insert(FoTerm::var(fo_metas_.at(v).original));
        }
      }
      collect_subterms(d->target, d->locals_fo, candidates);
    }
    std::size_t attempts = 0;
    return assign_open(meta, occs, open, 0, std::vector<FoTerm>(candidates.begin(), candidates.end()), attempts);
  }

  std::optional<PredAbstraction> assign_open(const Predicate& meta, const std::vector<const Deferred*>& occs,
                                             const std::vector<std::string>& open, std::size_t i,
                                             const std::vector<FoTerm>& candidates, std::size_t& attempts) {
    if (i == open.size()) {
      ++attempts;
      return abstract_over(meta, occs);
    }
    for (const auto& c : candidates) {
      if (attempts >= kMaxAttempts) break;
      fo_assign_[open[i]] = c;
      if (auto g = assign_open(meta, occs, open, i + 1, candidates, attempts)) return g;
    }
    fo_assign_.erase(open[i]);
    return std::nullopt;
  }

  static void collect_subterms(const FoTerm& t, const std::set<std::string>& locals, std::set<FoTerm>& out) {
    if (!mentions(t, locals)) out.insert(t);
    for (const auto& a : t.args) collect_subterms(a, locals, out);
  }

  static void collect_subterms(const Formula& f, const std::set<std::string>& locals, std::set<FoTerm>& out) {
    switch (f.kind()) {
      case FormulaKind::Bottom:
        return;
      case FormulaKind::Atom:
        for (const auto& a : f.args()) collect_subterms(a, locals, out);
        return;
      case FormulaKind::Arrow:
        collect_subterms(f.lhs(), locals, out);
        collect_subterms(f.rhs(), locals, out);
        return;
      default: {
        std::set<std::string> inner = locals;
        if (f.is(FormulaKind::ForallFo)) inner.insert(f.var());
        collect_subterms(f.body(), inner, out);
      }
    }
  }

  // The body of the abstraction is read off all occurrences at once: at each
  // first-order position it is the common term, a parameter whose actual
  // arguments are exactly the terms found there, or a function symbol over
  // such positions.
  std::optional<PredAbstraction> abstract_over(const Predicate& meta, const std::vector<const Deferred*>& occs) {
    Generalizer g;
    std::vector<Formula> targets;
    for (const auto* d : occs) {
      std::vector<FoTerm> args;
      for (const auto& a : d->args) args.push_back(apply_fo(a));
      if (!g.actual.empty() && args.size() != g.actual[0].size()) return std::nullopt;
      for (const auto& a : args) {
        for (const auto& v : vars_of(a)) g.taken.insert(v);
      }
      g.actual.push_back(std::move(args));
      g.forbidden.push_back(d->locals_fo);
      targets.push_back(d->target);
      for (const auto& name : all_names(d->target)) g.taken.insert(name);
    }
    for (std::size_t i = 0; i < g.actual[0].size(); ++i) {
      g.params.push_back(fresh_name("y" + std::to_string(i + 1), g.taken));
      g.taken.insert(g.params.back());
    }
    auto body = g.formula(targets);
    if (!body) return std::nullopt;
    PredAbstraction abs{g.params, *body};
    if (!acceptable(meta, abs, occs, g.actual)) return std::nullopt;
    return abs;
  }

  struct Generalizer {
    std::vector<std::vector<FoTerm>> actual;
    std::vector<std::set<std::string>> forbidden;
    std::vector<std::string> params;
    std::set<std::string> taken;

    std::optional<FoTerm> term(const std::vector<FoTerm>& us) const {
      bool same = std::all_of(us.begin(), us.end(), [&](const FoTerm& u) { return u == us[0]; });
      bool free_of_locals = std::none_of(forbidden.begin(), forbidden.end(),
                                         [&](const std::set<std::string>& f) { return mentions(us[0], f); });
      if (same && free_of_locals) return us[0];
      for (std::size_t i = 0; i < params.size(); ++i) {
        bool fits = true;
        for (std::size_t k = 0; k < us.size() && fits; ++k) fits = actual[k][i] == us[k];
        if (fits) return FoTerm::var(params[i]);
      }
      if (us[0].kind != FoTerm::Kind::Fun) return std::nullopt;
      for (const auto& u : us) {
        if (u.kind != FoTerm::Kind::Fun || u.name != us[0].name || u.args.size() != us[0].args.size()) return std::nullopt;
      }
      FoTerm out = us[0];
      for (std::size_t j = 0; j < out.args.size(); ++j) {
        std::vector<FoTerm> column;
        for (const auto& u : us) column.push_back(u.args[j]);
        auto a = term(column);
        if (!a) return std::nullopt;
        out.args[j] = *a;
      }
      return out;
    }

    std::optional<Formula> formula(const std::vector<Formula>& ts) {
      const Formula& f = ts[0];
      for (const auto& t : ts) {
        if (t.kind() != f.kind()) return std::nullopt;
      }
      switch (f.kind()) {
        case FormulaKind::Bottom:
          return f;
        case FormulaKind::Atom: {
          for (const auto& t : ts) {
            if (t.pred() != f.pred() || t.args().size() != f.args().size()) return std::nullopt;
          }
          std::vector<FoTerm> args;
          for (std::size_t j = 0; j < f.args().size(); ++j) {
            std::vector<FoTerm> column;
            for (const auto& t : ts) column.push_back(t.args()[j]);
            auto a = term(column);
            if (!a) return std::nullopt;
            args.push_back(*a);
          }
          return Formula::atom(f.pred(), std::move(args));
        }
        case FormulaKind::Arrow: {
          std::vector<Formula> l, r;
          for (const auto& t : ts) {
            l.push_back(t.lhs());
            r.push_back(t.rhs());
          }
          auto lf = formula(l);
          if (!lf) return std::nullopt;
          auto rf = formula(r);
          if (!rf) return std::nullopt;
          return Formula::arrow(*lf, *rf);
        }
        default: {
          std::string name = fresh_name(f.var(), taken);
          taken.insert(name);
          std::vector<Formula> bodies;
          for (const auto& t : ts) bodies.push_back(open_quantifier(t, name));
          auto b = formula(bodies);
          if (!b) return std::nullopt;
          if (f.is(FormulaKind::ForallFo)) return Formula::forall_fo(name, *b);
          if (f.is(FormulaKind::ForallSo)) return Formula::forall_so(name, *b);
          return Formula::forall_classical(name, *b);
        }
      }
    }
  };

  bool acceptable(const Predicate& meta, const PredAbstraction& g, const std::vector<const Deferred*>& occs,
                  const std::vector<std::vector<FoTerm>>& actual) const {
    if (meta.kind == Predicate::Kind::Classical && !is_classical_type(g.body)) return false;
    std::set<std::string> fv = free_fo_vars(g.body);
    for (const auto& p : g.params) fv.erase(p);
    std::set<Predicate> fp = free_preds(g.body);
    for (std::size_t k = 0; k < occs.size(); ++k) {
      for (const auto& v : fv) {
        if (occs[k]->locals_fo.count(v)) return false;
      }
      for (const auto& p : fp) {
        if (occs[k]->locals_so.count(p)) return false;
      }
      if (actual[k].size() != g.params.size()) return false;
      Formula inst = subst_pred(Formula::atom(meta, actual[k]), meta, g);
      if (!alpha_eq(inst, occs[k]->target)) return false;
    }
    return true;
  }

  FoTerm apply_fo(const FoTerm& t) const {
    if (t.kind == FoTerm::Kind::Var) {
      auto it = fo_assign_.find(t.name);
      return it == fo_assign_.end() ? t : it->second;
    }
    FoTerm out = t;
    for (auto& a : out.args) a = apply_fo(a);
    return out;
  }

  std::map<std::string, Meta> fo_metas_;
  std::map<Predicate, Meta> so_metas_;
  std::map<std::string, FoTerm> fo_assign_;
  std::map<Predicate, PredAbstraction> so_assign_;
  std::vector<Deferred> deferred_;
  std::set<std::string> locals_fo_;
  std::set<Predicate> locals_so_;
  std::size_t counter_ = 0;
  static constexpr std::size_t kMaxAttempts = 4096;
};

std::optional<InstanceWitness> try_strip(const Formula& a, const Formula& b, std::size_t j) {
  std::map<std::string, Matcher::Meta> fo_metas;
  std::map<Predicate, Matcher::Meta> so_metas;
  std::vector<std::pair<std::string, Matcher::Meta>> order;
  Formula body = a;
  for (std::size_t k = 0; k < j; ++k) {
    std::string meta = "?" + std::to_string(k);
    Matcher::Meta m{body.kind(), body.var()};
    if (body.is(FormulaKind::ForallFo)) {
      fo_metas.emplace(meta, m);
    } else {
      Predicate::Kind pk =
          body.is(FormulaKind::ForallClassical) ? Predicate::Kind::Classical : Predicate::Kind::Var;
      so_metas.emplace(Predicate{pk, meta}, m);
    }
    order.emplace_back(meta, m);
    body = open_quantifier(body, meta);
  }
  Matcher matcher(fo_metas, so_metas);
  if (!matcher.match(body, b) || !matcher.resolve_predicates()) return std::nullopt;
  InstanceWitness w;
  for (const auto& [meta, m] : order) {
    if (m.kind == FormulaKind::ForallFo) {
      w.bindings.push_back({m.kind, m.original, matcher.fo_value(meta).value_or(FoTerm::var(m.original))});
      continue;
    }
    Predicate::Kind pk = m.kind == FormulaKind::ForallClassical ? Predicate::Kind::Classical : Predicate::Kind::Var;
    auto g = matcher.so_value(Predicate{pk, meta});
    w.bindings.push_back(
        {m.kind, m.original, g.value_or(PredAbstraction{{}, Formula::atom(Predicate{pk, m.original})})});
  }
  return w;
}

}  // namespace

std::optional<InstanceWitness> instantiates(const Formula& a, const Formula& b) {
  if (alpha_eq(a, b)) return InstanceWitness{};
  std::size_t prefix = 0;
  for (const Formula* cur = &a; cur->is_quantifier(); cur = &cur->body()) ++prefix;
  for (std::size_t j = 1; j <= prefix; ++j) {
    if (auto w = try_strip(a, b, j)) return w;
  }
  return std::nullopt;
}

}  // namespace mixlogic
