#pragma once

// Syntactic classifications of formulas: what a type ends with, classical
// types, the ∀-positive / ∀-negative classes, and the instantiation
// preorder ◁.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mixlogic/formula.hpp"

namespace mixlogic {

/// The atom a formula ends with after stripping premises and quantifiers:
/// ⊥ (nullopt) or a predicate.
std::optional<Predicate> ending(const Formula& a);
bool ends_with(const Formula& a, const Predicate& x);
bool ends_with_bottom(const Formula& a);
/// Ends with ⊥ or with a classical variable.
bool is_classical_type(const Formula& a);

enum class PolarityClass { Positive, Negative, Both, Neither };
bool in_omega_plus(const Formula& a);
bool in_omega_minus(const Formula& a);
PolarityClass polarity(const Formula& a);
const char* to_string(PolarityClass p);

struct InstanceBinding {
  FormulaKind quantifier;  // ForallFo, ForallSo or ForallClassical
  std::string var;
  std::variant<FoTerm, PredAbstraction> value;
};

/// Witness of a ◁ b: the instantiated prefix quantifiers in order. Empty
/// when a and b are α-equal.
struct InstanceWitness {
  std::vector<InstanceBinding> bindings;
};

/// Decides whether b is obtained from a by instantiating some of its
/// leading quantifiers. Classical variables only accept classical types.
std::optional<InstanceWitness> instantiates(const Formula& a, const Formula& b);

/// Instantiates the leading quantifier of q; throws PreconditionViolated on
/// a kind or arity mismatch.
Formula instantiate_quantifier(const Formula& q, const std::variant<FoTerm, PredAbstraction>& value);

}  // namespace mixlogic
