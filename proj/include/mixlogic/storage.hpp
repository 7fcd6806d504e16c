#pragma once

// Operational checks of storage operators, and of the two trace shapes of
// terms typed ⊥ → X_C and ¬¬X_C → X_C.

#include <optional>
#include <string>
#include <vector>

#include "mixlogic/budget.hpp"
#include "mixlogic/reduction.hpp"
#include "mixlogic/term.hpp"

namespace mixlogic {

struct CorpusEntry {
  unsigned n;
  /// Position among the representatives of n.
  unsigned index;
  std::string label;
  Term theta;
  /// Uses C.
  bool classical;
};

/// Representatives of each n in [lo, hi]: church(n), (succ)^n 0 and
/// (λa.λb.a)((succ)^n 0) 0 (pure); (C)λk.(k)n and the backtracking integer
/// λx.λf.(C)λk.(k)((f)^n((C)λk'.(k)((f)^n x))) (classical).
std::vector<CorpusEntry> theta_corpus(unsigned lo, unsigned hi);
std::vector<CorpusEntry> pure_corpus(unsigned lo, unsigned hi);
std::vector<CorpusEntry> classical_corpus(unsigned lo, unsigned hi);
/// Normal λμ integers: λx.λf.(f)^n x and, for n ≥ 1, λx.λf.μa[a](f)μb[a](f)^n x.
std::vector<CorpusEntry> mu_corpus(unsigned lo, unsigned hi);

Term backtracking_integer(unsigned n);
Term c_wrapped_integer(unsigned n);

struct StorageReport {
  enum class Outcome { Simulated, HeadMismatch, Exhausted };
  Term candidate;
  unsigned n;
  unsigned index;
  std::string label;
  Term representative;
  Outcome outcome;
  /// Simulated: value of the payload and steps to reach the (f)-head.
  unsigned tau_value = 0;
  std::size_t head_steps = 0;
  /// The term where reduction stopped.
  std::optional<Term> reached;
  std::optional<Term> payload;
  /// Payload α-equal to the payload of the first representative of n.
  bool uniform_payload = true;
  std::string notes;

  bool simulated() const { return outcome == Outcome::Simulated; }
};

const char* to_string(StorageReport::Outcome o);
/// One line: `n=<n> rep=<label> <outcome> ...`.
std::string to_string(const StorageReport& r);

/// (T)θ f under head C-reduction must stop at (f)w with w β-normalizing to
/// church(n). The budget applies per entry.
std::vector<StorageReport> verify_storage(const Term& candidate, const std::vector<CorpusEntry>& corpus,
                                          Budget bud = Budget());
/// verify_storage on the classical corpus; also extracts the value of each θ
/// and records a mismatch with n.
std::vector<StorageReport> verify_storage_classical(const Term& candidate, unsigned lo, unsigned hi,
                                                    Budget bud = Budget());
/// (T)θ f under mu_reduce must reach (f)w or μa[a](f)w with w = church(n),
/// and be μ-head equivalent to μa[a](f)w.
std::vector<StorageReport> verify_storage_mu(const MuTerm& candidate, const std::vector<CorpusEntry>& corpus,
                                             Budget bud = Budget());

struct Characterization {
  bool confirmed = false;
  bool exhausted = false;
  /// Chain length for characterize_cc.
  unsigned m = 0;
  /// Arity that failed, if any.
  std::optional<unsigned> arity;
  /// The last run, or the deviating one.
  std::optional<ReductionTrace> trace;
  std::string message;
};

/// For each arity k in [lo, hi]: (T)z z1..zk head C-reduces to z.
Characterization characterize_bottom_arrow(const Term& candidate, unsigned lo, unsigned hi, Budget bud = Budget());
/// (T)t #p ≻_C (t)V1 and (Vi)yi ≻_C (t)V(i+1) until some (Vm)ym ≻_C (yj)#p;
/// then replays the chain with #p := z1..zk for each k in [lo, hi].
Characterization characterize_cc(const Term& candidate, unsigned lo, unsigned hi, Budget bud = Budget());

}  // namespace mixlogic
