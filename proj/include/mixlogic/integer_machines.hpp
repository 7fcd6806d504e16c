#pragma once

// Value extraction for classical integers through stack constants, and the
// syntactic characterization of normal λμ integers.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mixlogic/budget.hpp"
#include "mixlogic/reduction.hpp"
#include "mixlogic/term.hpp"

namespace mixlogic {

/// Segment i starts from (t_i)#p_i (segment 0 from (θ)x g #p_0) and ends in
/// (g)t_{i+1}#p_{r_i}, or in (x)#p_{r_m} for the last one.
struct ValueTrace {
  unsigned n = 0;
  /// Number of g-segments.
  unsigned m = 0;
  /// I(0..m).
  std::vector<unsigned> I;
  /// r_0..r_m.
  std::vector<unsigned> r;
  std::vector<ReductionTrace> segments;
  /// t[0] is θ, t[i] the term passed to g at the end of segment i-1.
  std::vector<Term> t;
};

enum class ValueFailure { BudgetExhausted, BadHead, Inconsistent };
const char* to_string(ValueFailure f);

struct ValueResult {
  std::optional<ValueTrace> trace;
  ValueFailure failure = ValueFailure::BadHead;
  std::string message;

  explicit operator bool() const { return trace.has_value(); }
};

/// Runs (θ)x g #p_0 and the following segments under stack_reduce. The
/// budget bounds the total number of steps.
ValueResult extract_value(const Term& theta, Budget bud = Budget());

/// The same run with x := a, g := F and #p_i := stacks[i] (stack constants
/// beyond the list are left in place). Each segment must pass through the
/// image of the corresponding segment end of extract_value(θ); traces stop
/// there.
ValueResult extract_value_open(const Term& theta, const Term& a, const Term& F,
                               const std::vector<std::vector<Term>>& stacks, Budget bud = Budget());

/// Formats `n=<n> m=<m> I=[..] r=[..]`.
std::string to_string(const ValueTrace& v);

// -- λμ integers ----------------------------------------------------------------

/// u ::= x | (f)u | μα[β]u, with x and f free variable names.
bool in_nxf(const MuTerm& u, const std::string& x, const std::string& f);

/// A set of naturals that is either finite or {k, k+1, ...}.
class RepSet {
 public:
  static RepSet finite(std::set<unsigned> s) { return RepSet(std::move(s), std::nullopt); }
  static RepSet at_least(unsigned k) { return RepSet({}, k); }
  static RepSet all() { return at_least(0); }

  bool is_finite() const { return !from_.has_value(); }
  const std::set<unsigned>& elements() const { return elements_; }
  unsigned lower_bound() const { return *from_; }
  bool contains(unsigned n) const;
  std::optional<unsigned> singleton() const;

  RepSet successor() const;
  RepSet intersect(const RepSet& o) const;

  friend bool operator==(const RepSet& a, const RepSet& b) = default;

 private:
  RepSet(std::set<unsigned> s, std::optional<unsigned> from) : elements_(std::move(s)), from_(from) {}
  std::set<unsigned> elements_;
  std::optional<unsigned> from_;
};

/// `{0, 2}`, `all` or `{3, 4, ...}`.
std::string to_string(const RepSet& s);

/// rep(x) = {0}, rep((f)u) = rep(u)+1, rep(μα[β]u) = ⋂ rep(v) over the
/// namings [α]v in [β]u, all of ℕ for an empty family. `x` and `f` are
/// taken from the only free variables. Throws PreconditionViolated outside
/// the grammar.
RepSet rep(const MuTerm& u);
/// Whether some μ-binder in u names no subterm.
bool rep_uses_empty_family(const MuTerm& u);

struct MuIntegerClass {
  enum class Verdict { Integer, NotNormal, NoPrefix, Grammar, FreeMuVariable, NotSingleton };
  Verdict verdict;
  unsigned n = 0;
  /// Some rep intersection in the body was over an empty family.
  bool empty_family = false;

  bool is_integer() const { return verdict == Verdict::Integer; }
};
const char* to_string(MuIntegerClass::Verdict v);

MuIntegerClass classify_mu_integer(const MuTerm& t);

}  // namespace mixlogic
