#pragma once

// Explicit typing derivations for AF2, C2, M2, M and FD2, and their checker.
// Nothing is inferred: every instantiation, equation use and bound name is
// recorded in the tree, and check() verifies each node against its rule.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mixlogic/equations.hpp"
#include "mixlogic/formula.hpp"
#include "mixlogic/term.hpp"

namespace mixlogic {

enum class System { AF2, C2, M2, M, FD2 };

enum class RuleTag {
  Ax,         // x : A in Γ
  ArrIntro,   // λ-abstraction
  ArrElim,    // application
  FoGen,      // ∀x introduction
  FoInst,     // ∀x elimination
  SoGen,      // ∀X introduction
  SoInst,     // ∀X elimination
  Eq,         // rewriting a first-order argument with an equation
  CAxiom,     // the typing of C
  ClassGen,   // ∀X_C introduction
  ClassInst,  // ∀X_C elimination, classical witnesses only
  MuNaming,   // μβ[α]t
};

const char* to_string(System s);
const char* to_string(RuleTag r);
std::optional<System> parse_system(std::string_view s);
std::optional<RuleTag> parse_rule_tag(std::string_view s);

using Context = std::vector<std::pair<std::string, Formula>>;

struct Sequent {
  Context lambda_ctx;
  Term subject;
  Formula type;
  Context mu_ctx;
};

/// Rule (8): the equation (1-based index), the instance of its variables,
/// the position of the rewritten first-order term inside the premise type,
/// and the direction.
struct EqWitness {
  std::size_t equation = 0;
  bool left_to_right = true;
  /// Arrow: 0 = left, 1 = right; quantifier: 0 = body; atom: argument
  /// index, then argument indices inside the first-order term.
  std::vector<std::size_t> position;
  FoSubstitution instance;
};

using Witness = std::variant<std::monostate, FoTerm, PredAbstraction, EqWitness>;

struct DerivationNode {
  RuleTag rule;
  Sequent conclusion;
  Witness witness;
  std::vector<DerivationNode> premises;
};

struct Derivation {
  std::string name;
  System system;
  EquationSet equations;
  DerivationNode root;
};

enum class InvalidReason {
  BadWitness,
  SideConditionViolated,
  WrongSystem,
  ContextMismatch,
  NonClassicalInstantiation,
  SubjectMismatch,
  TypeMismatch,
  ArityMismatch,
  BadEquation,
  PremiseCount,
};
const char* to_string(InvalidReason r);

struct CheckResult {
  bool valid = true;
  /// "root", "root.0", "root.0.1", ...: premise indices from the root.
  std::string path;
  InvalidReason reason = InvalidReason::BadWitness;
  std::string message;

  explicit operator bool() const { return valid; }
};

CheckResult check(const Derivation& d);

/// Root subject and type.
std::pair<Term, Formula> subject_of(const Derivation& d);

/// Lifts a C2 derivation to M2 over the classical translation of every
/// formula. Throws PreconditionViolated if `d` is not a valid C2 derivation.
Derivation embed_c2_in_m2(const Derivation& d);

/// Formula at a position (see EqWitness) as a first-order term, if it is one.
std::optional<FoTerm> fo_term_at(const Formula& a, const std::vector<std::size_t>& position);
/// a with the first-order term at `position` replaced by u.
std::optional<Formula> replace_fo_at(const Formula& a, const std::vector<std::size_t>& position, const FoTerm& u);

}  // namespace mixlogic
