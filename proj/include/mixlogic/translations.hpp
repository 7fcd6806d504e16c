#pragma once

#include "mixlogic/formula.hpp"

namespace mixlogic {

/// Name of the ordinary variable standing for the classical variable X_C.
std::string godel_name(const std::string& classical_var);

/// Gödel translation: X_C(t̄) ↦ ¬X*(t̄), ∀X_C ↦ ∀X*, everything else
/// unchanged. Throws PreconditionViolated if some X* already occurs.
Formula godel(const Formula& a);
/// Every atom A ↦ ¬A. Throws PreconditionViolated on classical variables.
Formula simple_godel(const Formula& a);
/// Classical translation: X ↦ X_C for every second-order variable.
/// Throws PreconditionViolated on classical variables.
Formula classical(const Formula& a);
/// Propositional erasure: drops first-order quantifiers and arguments.
Formula prop_erase(const Formula& a);

PredAbstraction godel(const PredAbstraction& g);
PredAbstraction classical(const PredAbstraction& g);

}  // namespace mixlogic
