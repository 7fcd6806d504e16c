#include "mixlogic/integer_machines.hpp"

#include <sstream>

#include "mixlogic/error.hpp"
#include "mixlogic/term_syntax.hpp"

namespace mixlogic {

const char* to_string(ValueFailure f) {
  switch (f) {
    case ValueFailure::BudgetExhausted:
      return "BudgetExhausted";
    case ValueFailure::BadHead:
      return "BadHead";
    case ValueFailure::Inconsistent:
      return "Inconsistent";
  }
  return "?";
}

namespace {

ValueResult failure(ValueFailure f, std::string msg) { return {std::nullopt, f, std::move(msg)}; }

struct Names {
  std::string x, g, stack_prefix;
  std::string stack(unsigned i) const { return stack_prefix + std::to_string(i); }
};

Names names_for(const Term& theta) {
  std::set<std::string> taken = free_vars(theta);
  Names n;
  n.x = fresh_name("x", taken);
  taken.insert(n.x);
  n.g = fresh_name("g", taken);
  std::set<std::string> stacks = stack_constants(theta);
  n.stack_prefix = "p";
  auto clashes = [&] {
    for (const auto& s : stacks) {
      if (s.rfind(n.stack_prefix, 0) == 0) return true;
    }
    return false;
  };
  while (clashes()) n.stack_prefix += "_";
  return n;
}

// Index j of the stack constant #p_j with j <= i, if `t` is one.
std::optional<unsigned> stack_index(const Term& t, const Names& names, unsigned i) {
  if (!t.is(TermKind::Stack)) return std::nullopt;
  for (unsigned j = 0; j <= i; ++j) {
    if (t.name() == names.stack(j)) return j;
  }
  return std::nullopt;
}

Term segment_start(const ValueTrace& v, const Names& names, unsigned i) {
  if (i == 0) {
    std::vector<Term> args{Term::var(names.x), Term::var(names.g), Term::stack(names.stack(0))};
    return Term::apply(v.t[0], args);
  }
  return Term::app(v.t[i], Term::stack(names.stack(i)));
}

// d(i) = n - I(i): d(0) = 0 and d(i+1) = d(r_i) + 1.
std::optional<std::string> fill_indices(ValueTrace& v) {
  std::vector<unsigned> d(v.m + 1, 0);
  for (unsigned i = 0; i < v.m; ++i) d[i + 1] = d[v.r[i]] + 1;
  v.n = d[v.r[v.m]];
  for (unsigned i = 0; i <= v.m; ++i) {
    if (d[i] > v.n) return "I(" + std::to_string(i) + ") would be negative";
  }
  v.I.clear();
  for (unsigned i = 0; i <= v.m; ++i) v.I.push_back(v.n - d[i]);
  if (v.I[0] != v.n || v.I[v.r[v.m]] != 0) return "index map violates I(0) = n or I(r_m) = 0";
  for (unsigned i = 0; i < v.m; ++i) {
    if (v.I[i + 1] + 1 != v.I[v.r[i]]) return "index map violates I(i+1) = I(r_i) - 1";
  }
  return std::nullopt;
}

}  // namespace

ValueResult extract_value(const Term& theta, Budget bud) {
  if (!is_lambda_cp(theta)) throw PreconditionViolated("extract_value expects a ΛCP term");
  Names names = names_for(theta);
  ValueTrace v;
  v.t.push_back(theta);
  std::size_t remaining = bud.max_steps;
  for (unsigned i = 0;; ++i) {
    if (remaining == 0) return failure(ValueFailure::BudgetExhausted, "budget exhausted before segment " + std::to_string(i));
    ReductionTrace tr = stack_reduce(segment_start(v, names, i), Budget(remaining));
    // Every segment costs at least one unit so the loop is bounded.
    remaining -= std::min(remaining, std::max<std::size_t>(tr.step_count(), 1));
    if (tr.exhausted) return failure(ValueFailure::BudgetExhausted, "segment " + std::to_string(i) + " did not stop");
    Spine sp = unwind(tr.final_term());
    v.segments.push_back(std::move(tr));
    bool head_g = sp.head.is(TermKind::Free) && sp.head.name() == names.g;
    bool head_x = sp.head.is(TermKind::Free) && sp.head.name() == names.x;
    if (head_g && sp.args.size() == 2 && !sp.args[0].is(TermKind::Stack)) {
      if (auto j = stack_index(sp.args[1], names, i)) {
        v.r.push_back(*j);
        v.t.push_back(sp.args[0]);
        continue;
      }
    }
    if (head_x && sp.args.size() == 1) {
      if (auto j = stack_index(sp.args[0], names, i)) {
        v.r.push_back(*j);
        v.m = i;
        break;
      }
    }
    return failure(ValueFailure::BadHead, "segment " + std::to_string(i) + " ends in " + to_string(v.segments.back().final_term()));
  }
  if (auto err = fill_indices(v)) return failure(ValueFailure::Inconsistent, *err);
  return {std::move(v), ValueFailure::BadHead, {}};
}

ValueResult extract_value_open(const Term& theta, const Term& a, const Term& F,
                               const std::vector<std::vector<Term>>& stacks, Budget bud) {
  ValueResult base = extract_value(theta, bud);
  if (!base) return base;
  Names names = names_for(theta);
  Substitution sigma;
  sigma.vars.emplace(names.x, a);
  sigma.vars.emplace(names.g, F);
  for (unsigned i = 0; i < stacks.size(); ++i) sigma.stacks.emplace(names.stack(i), stacks[i]);

  const ValueTrace& v = *base.trace;
  ValueTrace out = v;
  out.segments.clear();
  for (auto& t : out.t) t = substitute(t, sigma);
  std::size_t remaining = bud.max_steps;
  for (unsigned i = 0; i <= v.m; ++i) {
    Term start = substitute(segment_start(v, names, i), sigma);
    Term target = substitute(v.segments[i].final_term(), sigma);
    if (remaining == 0) return failure(ValueFailure::BudgetExhausted, "budget exhausted before segment " + std::to_string(i));
    ReductionTrace tr = head_c_reduce_until(start, target, Budget(remaining));
    remaining -= tr.step_count();
    if (tr.exhausted) return failure(ValueFailure::BudgetExhausted, "segment " + std::to_string(i) + " did not reach its image");
    if (!(tr.final_term() == target)) {
      return failure(ValueFailure::Inconsistent, "segment " + std::to_string(i) + " stops at " + to_string(tr.final_term()));
    }
    out.segments.push_back(std::move(tr));
  }
  return {std::move(out), ValueFailure::BadHead, {}};
}

std::string to_string(const ValueTrace& v) {
  std::ostringstream os;
  auto list = [&os](const std::vector<unsigned>& xs) {
    os << "[";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << "]";
  };
  os << "n=" << v.n << " m=" << v.m << " I=";
  list(v.I);
  os << " r=";
  list(v.r);
  return os.str();
}

// -- λμ integers ----------------------------------------------------------------

bool in_nxf(const MuTerm& u, const std::string& x, const std::string& f) {
  const Term* t = &u.term();
  for (;;) {
    switch (t->kind()) {
      case TermKind::Free:
        return t->name() == x;
      case TermKind::App:
        if (!t->fun().is(TermKind::Free) || t->fun().name() != f) return false;
        t = &t->arg();
        break;
      case TermKind::Mu:
        t = &t->body();
        break;
      default:
        return false;
    }
  }
}

bool RepSet::contains(unsigned n) const { return from_ ? n >= *from_ : elements_.count(n) > 0; }

std::optional<unsigned> RepSet::singleton() const {
  if (from_ || elements_.size() != 1) return std::nullopt;
  return *elements_.begin();
}

RepSet RepSet::successor() const {
  if (from_) return at_least(*from_ + 1);
  std::set<unsigned> s;
  for (unsigned n : elements_) s.insert(n + 1);
  return finite(std::move(s));
}

RepSet RepSet::intersect(const RepSet& o) const {
  if (from_ && o.from_) return at_least(std::max(*from_, *o.from_));
  if (from_) return o.intersect(*this);
  std::set<unsigned> s;
  for (unsigned n : elements_) {
    if (o.contains(n)) s.insert(n);
  }
  return finite(std::move(s));
}

std::string to_string(const RepSet& s) {
  if (!s.is_finite()) return s.lower_bound() == 0 ? "all" : "{" + std::to_string(s.lower_bound()) + ", ...}";
  std::string out = "{";
  bool first = true;
  for (unsigned n : s.elements()) {
    out += (first ? "" : ", ") + std::to_string(n);
    first = false;
  }
  return out + "}";
}

namespace {

struct RepEval {
  bool empty_family = false;

  RepSet eval(const Term& t) {
    switch (t.kind()) {
      case TermKind::Free:
        return RepSet::finite({0});
      case TermKind::App:
        return eval(t.arg()).successor();
      case TermKind::Mu: {
        std::vector<RepSet> family;
        if (t.target().bound && t.target().index == 0) family.push_back(eval(t.body()));
        collect(t.body(), 1, family);
        if (family.empty()) {
          empty_family = true;
          return RepSet::all();
        }
        RepSet out = family[0];
        for (std::size_t i = 1; i < family.size(); ++i) out = out.intersect(family[i]);
        return out;
      }
      default:
        throw PreconditionViolated("rep expects a term of the grammar x | (f)u | mu a.[b]u");
    }
  }

  // Bodies of the namings in t that target the binder `depth` μ-levels up.
  void collect(const Term& t, std::uint32_t depth, std::vector<RepSet>& family) {
    if (t.is(TermKind::App)) {
      collect(t.arg(), depth, family);
    } else if (t.is(TermKind::Mu)) {
      if (t.target().bound && t.target().index == depth) family.push_back(eval(t.body()));
      collect(t.body(), depth + 1, family);
    }
  }
};

std::set<std::string> grammar_names(const Term& t) {
  std::set<std::string> fv = free_vars(t);
  if (fv.size() > 2) throw PreconditionViolated("rep expects at most the variables x and f");
  return fv;
}

void require_grammar(const MuTerm& u) {
  std::set<std::string> fv = grammar_names(u.term());
  // The variable in argument position is x; the other one, if any, is f.
  const Term* t = &u.term();
  while (!t->is(TermKind::Free)) {
    if (t->is(TermKind::App)) {
      t = &t->arg();
    } else if (t->is(TermKind::Mu)) {
      t = &t->body();
    } else {
      throw PreconditionViolated("rep expects a term of the grammar x | (f)u | mu a.[b]u");
    }
  }
  std::string x = t->name();
  fv.erase(x);
  std::string f = fv.empty() ? fresh_name("f", {x}) : *fv.begin();
  if (!in_nxf(u, x, f)) throw PreconditionViolated("rep expects a term of the grammar x | (f)u | mu a.[b]u");
}

}  // namespace

RepSet rep(const MuTerm& u) {
  require_grammar(u);
  return RepEval{}.eval(u.term());
}

bool rep_uses_empty_family(const MuTerm& u) {
  require_grammar(u);
  RepEval e;
  e.eval(u.term());
  return e.empty_family;
}

const char* to_string(MuIntegerClass::Verdict v) {
  using V = MuIntegerClass::Verdict;
  switch (v) {
    case V::Integer:
      return "integer";
    case V::NotNormal:
      return "not-normal";
    case V::NoPrefix:
      return "no-prefix";
    case V::Grammar:
      return "grammar";
    case V::FreeMuVariable:
      return "free-mu-variable";
    case V::NotSingleton:
      return "rep-not-singleton";
  }
  return "?";
}

MuIntegerClass classify_mu_integer(const MuTerm& t) {
  using V = MuIntegerClass::Verdict;
  if (mu_step(t.term())) return {V::NotNormal};
  const Term& outer = t.term();
  if (!outer.is(TermKind::Lam) || !outer.body().is(TermKind::Lam)) return {V::NoPrefix};
  std::set<std::string> taken = free_vars(outer);
  std::string x = fresh_name("x", taken);
  taken.insert(x);
  std::string f = fresh_name("f", taken);
  Term body = open(open(outer.body(), x).body(), f);
  if (!is_mu_term(body) || !in_nxf(MuTerm(body), x, f)) return {V::Grammar};
  if (!free_mu_vars(body).empty()) return {V::FreeMuVariable};
  RepEval e;
  RepSet s = e.eval(body);
  auto n = s.singleton();
  if (!n) return {V::NotSingleton, 0, e.empty_family};
  return {V::Integer, *n, e.empty_family};
}

}  // namespace mixlogic
