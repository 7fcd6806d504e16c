#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mixlogic/budget.hpp"
#include "mixlogic/term.hpp"

namespace mixlogic {

/// One contraction. `path` addresses the redex from the root: l = λ-body,
/// f = function part, a = argument part, m = μ-body; "-" is the root.
struct Step {
  std::string rule;
  std::string path;
  Term result;
};

struct ReductionTrace {
  Term initial;
  std::vector<Step> steps;
  /// Budget ran out before a normal form of the relation was reached.
  bool exhausted = false;

  std::size_t step_count() const { return steps.size(); }
  const Term& final_term() const { return steps.empty() ? initial : steps.back().result; }
};

enum class TraceFormat { Text, Structured };
/// Text: one `step <k>: <rule> @ <path> => <term>` line per step.
/// Structured: a JSON document.
std::string format_trace(const ReductionTrace& trace, TraceFormat format);

/// Head reduction ≻ of pure λ-terms, under leading abstractions.
ReductionTrace head_reduce(const Term& t, Budget b = Budget());
/// Head C-reduction ≻_C: rule 1 (β at the head) and rule 2
/// ((C)t t1..tn → (t)λx.(x)t1..tn), both at the root of the term.
ReductionTrace head_c_reduce(const Term& t, Budget b = Budget());
/// One root step of rule 1 or rule 2, or nullopt when there is none.
std::optional<Step> head_c_step(const Term& t);
/// Head C-reduction of t that stops as soon as `target` is reached. The
/// final term differs from `target` when it is never reached.
ReductionTrace head_c_reduce_until(const Term& t, const Term& target, Budget b = Budget());
/// ▷_C on ΛCP terms: the same two rules with stack constants allowed.
ReductionTrace stack_reduce(const Term& t, Budget b = Budget());

/// Leftmost-outermost β-normal form; C, stack constants and μ-nodes are
/// inert. nullopt when the budget runs out.
std::optional<Term> beta_normalize(const Term& t, Budget b = Budget());
/// The same reduction recorded step by step.
ReductionTrace beta_reduce(const Term& t, Budget b = Budget());

struct CSolvability {
  enum class Outcome { Solvable, Unsolvable, NotWithinBudget };
  Outcome outcome;
  /// Solvable: the head variable and its arguments.
  std::string head;
  std::vector<Term> args;
  /// The term where head C-reduction stopped.
  std::optional<Term> final_term;
};
CSolvability is_c_solvable(const Term& t, Budget b = Budget());

// -- λμ ----------------------------------------------------------------------

enum class MuStrategy { LeftmostOutermost, RightmostInnermost };

/// Reduction by C1, C2, S1, S2, S3. At each position the computation
/// rules are tried before the simplification rules.
ReductionTrace mu_reduce(const MuTerm& t, Budget b = Budget(),
                         MuStrategy strategy = MuStrategy::LeftmostOutermost);

/// One step of the given strategy, or nullopt at normal form.
std::optional<Step> mu_step(const Term& t, MuStrategy strategy = MuStrategy::LeftmostOutermost);

Tristate mu_head_equiv(const MuTerm& a, const MuTerm& b, Budget bud = Budget());

}  // namespace mixlogic
