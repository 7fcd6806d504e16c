#include "mixlogic/reduction.hpp"

#include <json.hpp>
#include <sstream>

#include "mixlogic/error.hpp"
#include "mixlogic/term_syntax.hpp"

namespace mixlogic {

Budget::Budget(std::size_t steps) : max_steps(steps) {
  if (steps == 0) throw PreconditionViolated("budget must be positive");
}

std::string format_trace(const ReductionTrace& trace, TraceFormat format) {
  if (format == TraceFormat::Structured) {
    nlohmann::ordered_json doc;
    doc["initial"] = to_string(trace.initial);
    doc["steps"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
      const Step& s = trace.steps[k];
      doc["steps"].push_back({{"step", k + 1}, {"rule", s.rule}, {"path", s.path}, {"term", to_string(s.result)}});
    }
    doc["step_count"] = trace.step_count();
    doc["exhausted"] = trace.exhausted;
    doc["final"] = to_string(trace.final_term());
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const Step& s = trace.steps[k];
    os << "step " << k + 1 << ": " << s.rule << " @ " << s.path << " => " << to_string(s.result) << "\n";
  }
  return os.str();
}

namespace {

std::string root_or(std::string path) { return path.empty() ? "-" : path; }

// Contracts the root redex of t by rule 1 or rule 2, if there is one. Over
// ΛCP the first argument of either rule must not be a stack constant.
std::optional<Step> root_c_step(const Term& t, bool stacks) {
  Spine s = unwind(t);
  if (s.args.empty()) return std::nullopt;
  if (stacks && s.args[0].is(TermKind::Stack)) return std::nullopt;
  if (s.head.is(TermKind::Lam)) {
    Term reduct = instantiate(s.head.body(), s.args[0]);
    Term result = rewind(reduct, std::span(s.args).subspan(1));
    return Step{"beta", root_or(std::string(s.args.size() - 1, 'f')), result};
  }
  if (s.head.is(TermKind::Control)) {
    std::vector<Term> rest;
    for (std::size_t i = 1; i < s.args.size(); ++i) rest.push_back(shift(s.args[i], 1, 0));
    Term k = Term::lam("x", Term::apply(Term::bound(0), rest));
    return Step{"C", "-", Term::app(s.args[0], k)};
  }
  return std::nullopt;
}

ReductionTrace run_root(const Term& t, Budget b, bool stacks) {
  ReductionTrace trace{t, {}, false};
  Term cur = t;
  while (auto step = root_c_step(cur, stacks)) {
    if (trace.steps.size() == b.max_steps) {
      trace.exhausted = true;
      break;
    }
    cur = step->result;
    trace.steps.push_back(std::move(*step));
  }
  return trace;
}

struct BudgetExhausted {};

class Normalizer {
 public:
  explicit Normalizer(std::size_t max) : max_(max) {}

  Term nf(const Term& t) {
    Term cur = t;
    for (;;) {
      Spine s = unwind(cur);
      if (s.head.is(TermKind::Lam) && !s.args.empty()) {
        if (++steps_ > max_) throw BudgetExhausted{};
        cur = rewind(instantiate(s.head.body(), s.args[0]), std::span(s.args).subspan(1));
        continue;
      }
      Term head = s.head;
      if (head.is(TermKind::Lam)) {
        head = Term::lam(head.name(), nf(head.body()));
      } else if (head.is(TermKind::Mu)) {
        head = Term::mu(head.name(), head.target(), nf(head.body()));
      }
      for (auto& a : s.args) a = nf(a);
      return rewind(head, s.args);
    }
  }

 private:
  std::size_t max_;
  std::size_t steps_ = 0;
};

// Leftmost-outermost β-redex, contracted in place.
std::optional<Term> beta_step_at(const Term& t, std::string& path) {
  switch (t.kind()) {
    case TermKind::App: {
      if (t.fun().is(TermKind::Lam)) return instantiate(t.fun().body(), t.arg());
      path.push_back('f');
      if (auto r = beta_step_at(t.fun(), path)) return Term::app(*r, t.arg());
      path.back() = 'a';
      if (auto r = beta_step_at(t.arg(), path)) return Term::app(t.fun(), *r);
      path.pop_back();
      return std::nullopt;
    }
    case TermKind::Lam:
    case TermKind::Mu: {
      path.push_back(t.is(TermKind::Lam) ? 'l' : 'm');
      if (auto r = beta_step_at(t.body(), path)) {
        return t.is(TermKind::Lam) ? Term::lam(t.name(), *r) : Term::mu(t.name(), t.target(), *r);
      }
      path.pop_back();
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

ReductionTrace head_reduce(const Term& t, Budget b) {
  if (!is_pure(t)) throw PreconditionViolated("head_reduce expects a pure λ-term");
  ReductionTrace trace{t, {}, false};
  Term cur = t;
  for (;;) {
    std::vector<const Term*> lams;
    const Term* inner = &cur;
    while (inner->is(TermKind::Lam)) {
      lams.push_back(inner);
      inner = &inner->body();
    }
    Spine s = unwind(*inner);
    if (!s.head.is(TermKind::Lam) || s.args.empty()) break;
    if (trace.steps.size() == b.max_steps) {
      trace.exhausted = true;
      break;
    }
    Term next = rewind(instantiate(s.head.body(), s.args[0]), std::span(s.args).subspan(1));
    for (auto it = lams.rbegin(); it != lams.rend(); ++it) next = Term::lam((*it)->name(), next);
    std::string path = std::string(lams.size(), 'l') + std::string(s.args.size() - 1, 'f');
    trace.steps.push_back({"beta", root_or(path), next});
    cur = next;
  }
  return trace;
}

std::optional<Step> head_c_step(const Term& t) { return root_c_step(t, false); }

ReductionTrace head_c_reduce_until(const Term& t, const Term& target, Budget b) {
  ReductionTrace trace{t, {}, false};
  Term cur = t;
  while (!(cur == target)) {
    auto step = root_c_step(cur, false);
    if (!step) break;
    if (trace.steps.size() == b.max_steps) {
      trace.exhausted = true;
      break;
    }
    cur = step->result;
    trace.steps.push_back(std::move(*step));
  }
  return trace;
}

ReductionTrace head_c_reduce(const Term& t, Budget b) {
  if (contains_mu(t)) throw PreconditionViolated("head_c_reduce expects a λC-term");
  return run_root(t, b, false);
}

ReductionTrace stack_reduce(const Term& t, Budget b) {
  if (!is_lambda_cp(t)) throw PreconditionViolated("stack_reduce expects a ΛCP term");
  return run_root(t, b, true);
}

std::optional<Term> beta_normalize(const Term& t, Budget b) {
  try {
    return Normalizer(b.max_steps).nf(t);
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

ReductionTrace beta_reduce(const Term& t, Budget b) {
  ReductionTrace trace{t, {}, false};
  Term cur = t;
  for (;;) {
    std::string path;
    auto next = beta_step_at(cur, path);
    if (!next) break;
    if (trace.steps.size() == b.max_steps) {
      trace.exhausted = true;
      break;
    }
    trace.steps.push_back({"beta", root_or(path), *next});
    cur = *next;
  }
  return trace;
}

CSolvability is_c_solvable(const Term& t, Budget b) {
  ReductionTrace trace = head_c_reduce(t, b);
  if (trace.exhausted) return {CSolvability::Outcome::NotWithinBudget, {}, {}, trace.final_term()};
  Spine s = unwind(trace.final_term());
  if (s.head.is(TermKind::Free)) {
    return {CSolvability::Outcome::Solvable, s.head.name(), s.args, trace.final_term()};
  }
  return {CSolvability::Outcome::Unsolvable, {}, {}, trace.final_term()};
}

}  // namespace mixlogic
