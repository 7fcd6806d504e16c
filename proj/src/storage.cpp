#include "mixlogic/storage.hpp"

#include <map>
#include <sstream>

#include "mixlogic/error.hpp"
#include "mixlogic/integer_machines.hpp"
#include "mixlogic/term_syntax.hpp"

namespace mixlogic {

namespace {

Term f_power(unsigned n, Term x) {
  for (unsigned i = 0; i < n; ++i) x = Term::app(Term::var("f"), x);
  return x;
}

Term succ_power(unsigned n) {
  Term t = church(0);
  for (unsigned i = 0; i < n; ++i) t = Term::app(builtin("succ"), t);
  return t;
}

std::set<std::string> names_of(std::initializer_list<Term> ts) {
  std::set<std::string> out;
  for (const auto& t : ts) {
    auto fv = free_vars(t);
    out.insert(fv.begin(), fv.end());
  }
  return out;
}

StorageReport base_report(const Term& candidate, const CorpusEntry& e) {
  StorageReport r{candidate, e.n, e.index, e.label, e.theta, StorageReport::Outcome::HeadMismatch, 0, 0, {}, {}, true, {}};
  return r;
}

// Decides the outcome from the payload w of (f)w.
void judge_payload(StorageReport& r, const Term& w, Budget bud) {
  r.payload = w;
  if (!is_pure(w)) {
    r.notes = "payload is not a λ-term";
    return;
  }
  auto nf = beta_normalize(w, bud);
  if (!nf) {
    r.outcome = StorageReport::Outcome::Exhausted;
    r.notes = "payload has no normal form within the budget";
    return;
  }
  auto k = church_value(*nf);
  if (!k) {
    r.notes = "payload normal form " + to_string(*nf) + " is not a numeral";
    return;
  }
  r.tau_value = *k;
  if (*k != r.n) {
    r.notes = "payload value " + std::to_string(*k) + " differs from " + std::to_string(r.n);
    return;
  }
  r.outcome = StorageReport::Outcome::Simulated;
}

void mark_uniformity(std::vector<StorageReport>& reports) {
  std::map<unsigned, const StorageReport*> first;
  for (auto& r : reports) {
    auto [it, inserted] = first.emplace(r.n, &r);
    if (inserted) continue;
    const StorageReport& f = *it->second;
    r.uniform_payload = f.payload && r.payload && *f.payload == *r.payload;
  }
}

StorageReport verify_entry(const Term& candidate, const CorpusEntry& e, Budget bud) {
  StorageReport r = base_report(candidate, e);
  Term f = Term::var(fresh_name("f", names_of({candidate, e.theta})));
  ReductionTrace tr = head_c_reduce(Term::app(Term::app(candidate, e.theta), f), bud);
  r.head_steps = tr.step_count();
  r.reached = tr.final_term();
  if (tr.exhausted) {
    r.outcome = StorageReport::Outcome::Exhausted;
    r.notes = "no head normal form within the budget";
    return r;
  }
  Spine sp = unwind(tr.final_term());
  if (!(sp.head == f) || sp.args.size() != 1) {
    r.notes = "head is not (f)w";
    return r;
  }
  judge_payload(r, sp.args[0], bud);
  return r;
}

}  // namespace

Term backtracking_integer(unsigned n) {
  Term inner = Term::app(Term::control(), Term::abstract("k2", Term::app(Term::var("k"), f_power(n, Term::var("x")))));
  Term outer = Term::app(Term::control(), Term::abstract("k", Term::app(Term::var("k"), f_power(n, inner))));
  return Term::abstract("x", Term::abstract("f", outer));
}

Term c_wrapped_integer(unsigned n) {
  return Term::app(Term::control(), Term::abstract("k", Term::app(Term::var("k"), church(n))));
}

std::vector<CorpusEntry> pure_corpus(unsigned lo, unsigned hi) {
  std::vector<CorpusEntry> out;
  Term k = parse_term("\\a.\\b.a");
  for (unsigned n = lo; n <= hi; ++n) {
    out.push_back({n, 0, "church", church(n), false});
    out.push_back({n, 1, "succ-chain", succ_power(n), false});
    out.push_back({n, 2, "redex-wrapped", Term::app(Term::app(k, succ_power(n)), church(0)), false});
  }
  return out;
}

std::vector<CorpusEntry> classical_corpus(unsigned lo, unsigned hi) {
  std::vector<CorpusEntry> out;
  for (unsigned n = lo; n <= hi; ++n) {
    out.push_back({n, 3, "c-wrapped", c_wrapped_integer(n), true});
    out.push_back({n, 4, "backtracking", backtracking_integer(n), true});
  }
  return out;
}

std::vector<CorpusEntry> theta_corpus(unsigned lo, unsigned hi) {
  std::vector<CorpusEntry> out;
  for (unsigned n = lo; n <= hi; ++n) {
    auto p = pure_corpus(n, n);
    auto c = classical_corpus(n, n);
    out.insert(out.end(), p.begin(), p.end());
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<CorpusEntry> mu_corpus(unsigned lo, unsigned hi) {
  std::vector<CorpusEntry> out;
  for (unsigned n = lo; n <= hi; ++n) {
    out.push_back({n, 0, "church", church(n), false});
    if (n == 0) continue;
    Term body = Term::mu_abstract("a", "a", Term::app(Term::var("f"), Term::mu_abstract("b", "a", f_power(n, Term::var("x")))));
    out.push_back({n, 1, "mu-named", Term::abstract("x", Term::abstract("f", body)), false});
  }
  return out;
}

const char* to_string(StorageReport::Outcome o) {
  switch (o) {
    case StorageReport::Outcome::Simulated:
      return "Simulated";
    case StorageReport::Outcome::HeadMismatch:
      return "HeadMismatch";
    case StorageReport::Outcome::Exhausted:
      return "Exhausted";
  }
  return "?";
}

std::string to_string(const StorageReport& r) {
  std::ostringstream os;
  os << "n=" << r.n << " rep=" << r.label << " " << to_string(r.outcome);
  if (r.simulated()) os << " value=" << r.tau_value;
  os << " steps=" << r.head_steps;
  if (!r.uniform_payload) os << " payload-differs";
  if (!r.notes.empty()) os << " (" << r.notes << ")";
  return os.str();
}

std::vector<StorageReport> verify_storage(const Term& candidate, const std::vector<CorpusEntry>& corpus, Budget bud) {
  std::vector<StorageReport> out;
  for (const auto& e : corpus) out.push_back(verify_entry(candidate, e, bud));
  mark_uniformity(out);
  return out;
}

std::vector<StorageReport> verify_storage_classical(const Term& candidate, unsigned lo, unsigned hi, Budget bud) {
  std::vector<StorageReport> out = verify_storage(candidate, classical_corpus(lo, hi), bud);
  for (auto& r : out) {
    ValueResult v = extract_value(r.representative, bud);
    if (!v || v.trace->n != r.n) {
      r.outcome = StorageReport::Outcome::HeadMismatch;
      r.notes += (r.notes.empty() ? "" : "; ") + std::string("representative is not an integer of value ") +
                 std::to_string(r.n);
    }
  }
  return out;
}

std::vector<StorageReport> verify_storage_mu(const MuTerm& candidate, const std::vector<CorpusEntry>& corpus, Budget bud) {
  std::vector<StorageReport> out;
  for (const auto& e : corpus) {
    StorageReport r = base_report(candidate.term(), e);
    Term f = Term::var(fresh_name("f", names_of({candidate.term(), e.theta})));
    MuTerm left(Term::app(Term::app(candidate.term(), e.theta), f));
    ReductionTrace tr = mu_reduce(left, bud);
    r.head_steps = tr.step_count();
    r.reached = tr.final_term();
    if (tr.exhausted) {
      r.outcome = StorageReport::Outcome::Exhausted;
      r.notes = "no normal form within the budget";
      out.push_back(std::move(r));
      continue;
    }
    // (f)w, or μa[a](f)w with a not used in w.
    Term body = tr.final_term();
    bool named = false;
    if (body.is(TermKind::Mu) && body.target().bound && body.target().index == 0) {
      body = body.body();
      named = true;
    }
    Spine sp = unwind(body);
    if (!(sp.head == f) || sp.args.size() != 1 || (named && !is_locally_closed(sp.args[0]))) {
      r.notes = "normal form is not (f)w or mu a.[a](f)w";
      out.push_back(std::move(r));
      continue;
    }
    Term w = sp.args[0];
    r.payload = w;
    MuIntegerClass cls = classify_mu_integer(MuTerm(w));
    if (!cls.is_integer() || cls.n != e.n) {
      r.notes = std::string("payload classification: ") + to_string(cls.verdict);
      if (cls.is_integer()) r.notes += " " + std::to_string(cls.n);
      out.push_back(std::move(r));
      continue;
    }
    r.tau_value = cls.n;
    std::string a = fresh_name("a", free_mu_vars(w));
    MuTerm right(Term::mu_abstract(a, a, Term::app(f, w)));
    Tristate eq = mu_head_equiv(left, right, bud);
    if (eq != Tristate::True) {
      r.outcome = eq == Tristate::Inconclusive ? StorageReport::Outcome::Exhausted : StorageReport::Outcome::HeadMismatch;
      r.notes = "not μ-head equivalent to mu a.[a](f)w";
    } else if (!(w == church(e.n))) {
      r.notes = "payload is a λμ integer of value " + std::to_string(cls.n) + " but not church(n)";
    } else {
      r.outcome = StorageReport::Outcome::Simulated;
    }
    out.push_back(std::move(r));
  }
  mark_uniformity(out);
  return out;
}

Characterization characterize_bottom_arrow(const Term& candidate, unsigned lo, unsigned hi, Budget bud) {
  Characterization c;
  std::set<std::string> taken = free_vars(candidate);
  std::string z = fresh_name("z", taken);
  taken.insert(z);
  for (unsigned k = lo; k <= hi; ++k) {
    std::vector<Term> args{Term::var(z)};
    for (unsigned i = 1; i <= k; ++i) args.push_back(Term::var(fresh_name(z + std::to_string(i), taken)));
    ReductionTrace tr = head_c_reduce(Term::apply(candidate, args), bud);
    if (tr.exhausted || !(tr.final_term() == Term::var(z))) {
      c.exhausted = tr.exhausted;
      c.arity = k;
      c.message = tr.exhausted ? "no head normal form within the budget" : "stops at " + to_string(tr.final_term());
      c.trace = std::move(tr);
      return c;
    }
    c.trace = std::move(tr);
  }
  c.confirmed = true;
  return c;
}

namespace {

struct Chain {
  std::vector<Term> starts;
  std::vector<Term> ends;
  unsigned m = 0;
};

}  // namespace

Characterization characterize_cc(const Term& candidate, unsigned lo, unsigned hi, Budget bud) {
  Characterization c;
  std::set<std::string> taken = free_vars(candidate);
  Term t = Term::var(fresh_name("t", taken));
  taken.insert(t.name());
  Term p = Term::stack("p");
  auto refute = [&c](ReductionTrace tr, std::string msg) {
    c.exhausted = tr.exhausted;
    c.message = tr.exhausted ? "no head normal form within the budget" : std::move(msg);
    c.trace = std::move(tr);
    return c;
  };

  Chain chain;
  std::vector<Term> ys;
  Term start = Term::apply(candidate, std::vector{t, p});
  for (unsigned i = 0;; ++i) {
    if (i > bud.max_steps) return refute(ReductionTrace{start, {}, true}, "");
    ReductionTrace tr = stack_reduce(start, bud);
    if (tr.exhausted) return refute(std::move(tr), "");
    Spine sp = unwind(tr.final_term());
    chain.starts.push_back(start);
    chain.ends.push_back(tr.final_term());
    if (sp.head == t && sp.args.size() == 1 && !sp.args[0].is(TermKind::Stack)) {
      Term y = Term::var(fresh_name("y" + std::to_string(i + 1), taken));
      taken.insert(y.name());
      ys.push_back(y);
      start = Term::app(sp.args[0], y);
      c.trace = std::move(tr);
      continue;
    }
    bool ends_on_y = false;
    for (const auto& y : ys) ends_on_y = ends_on_y || sp.head == y;
    if (i > 0 && ends_on_y && sp.args.size() == 1 && sp.args[0] == p) {
      chain.m = i;
      c.trace = std::move(tr);
      break;
    }
    std::string msg = "step " + std::to_string(i) + " stops at " + to_string(tr.final_term());
    return refute(std::move(tr), msg);
  }

  for (unsigned k = lo; k <= hi; ++k) {
    Substitution sigma;
    std::vector<Term> args;
    for (unsigned i = 1; i <= k; ++i) args.push_back(Term::var(fresh_name("z" + std::to_string(i), taken)));
    sigma.stacks.emplace(p.name(), args);
    for (std::size_t i = 0; i < chain.starts.size(); ++i) {
      Term target = substitute(chain.ends[i], sigma);
      ReductionTrace tr = head_c_reduce_until(substitute(chain.starts[i], sigma), target, bud);
      if (!(tr.final_term() == target)) {
        c.arity = k;
        std::string msg = "with " + std::to_string(k) + " arguments, step " + std::to_string(i) + " misses " + to_string(target);
        return refute(std::move(tr), msg);
      }
    }
  }
  c.confirmed = true;
  c.m = chain.m;
  return c;
}

}  // namespace mixlogic
