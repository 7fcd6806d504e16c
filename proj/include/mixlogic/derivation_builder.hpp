#pragma once

// Bottom-up construction of derivation nodes. Each function computes the
// conclusion from its premises; contexts of several premises are merged.
// Throws PreconditionViolated when the premises do not fit the rule.

#include <optional>
#include <string>
#include <vector>

#include "mixlogic/derivation.hpp"

namespace mixlogic::build {

/// x : ctx(x) with x as the only hypothesis.
DerivationNode ax(const Context& ctx, const std::string& x);
/// Discharges x from the λ-context. `type` is required when x is not used.
DerivationNode intro(const std::string& x, const DerivationNode& p, std::optional<Formula> type = std::nullopt);
DerivationNode elim(const DerivationNode& fun, const DerivationNode& arg);

DerivationNode fo_gen(const std::string& v, const DerivationNode& p);
DerivationNode so_gen(const std::string& v, const DerivationNode& p);
DerivationNode class_gen(const std::string& v, const DerivationNode& p);

DerivationNode fo_inst(const DerivationNode& p, const FoTerm& t);
DerivationNode so_inst(const DerivationNode& p, const PredAbstraction& g);
DerivationNode class_inst(const DerivationNode& p, const PredAbstraction& g);

/// Rewrites the first-order term at `position` with equation `index` (1-based).
DerivationNode eq(const DerivationNode& p, const EquationSet& e, std::size_t index, bool left_to_right,
                  std::vector<std::size_t> position, FoSubstitution instance);

/// C with its C2 type or, when `classical` is set, its M2 type.
DerivationNode c_axiom(bool classical, Context ctx = {});

/// μbeta[alpha] over the premise. The conclusion type is beta's declared
/// type, else `type`, else ⊥.
DerivationNode naming(const std::string& beta, const std::string& alpha, const DerivationNode& p,
                      std::optional<Formula> type = std::nullopt);

}  // namespace mixlogic::build
