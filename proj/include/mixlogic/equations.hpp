#pragma once

// The equational theory ≈ generated by a set of first-order equations.
//
// Equations are oriented by size into rewrite rules and completed by
// critical-pair analysis. When completion succeeds the system is convergent
// and ≈ is decided by comparing normal forms; otherwise a bounded search
// over equational rewrites can confirm equalities but never refute them.

#include <map>
#include <optional>
#include <vector>

#include "mixlogic/budget.hpp"
#include "mixlogic/formula.hpp"
#include "mixlogic/formula_syntax.hpp"

namespace mixlogic {

struct RewriteRule {
  FoTerm lhs;
  FoTerm rhs;
};

using FoSubstitution = std::map<std::string, FoTerm>;

FoTerm apply_subst(const FoSubstitution& s, const FoTerm& t);
/// Most general unifier, with occurs check.
std::optional<FoSubstitution> unify(const FoTerm& a, const FoTerm& b);
/// σ with σ(pattern) = t, extending `s`.
bool match(const FoTerm& pattern, const FoTerm& t, FoSubstitution& s);

/// Subterm at a 0-based argument path, or nullopt when the path leaves the term.
std::optional<FoTerm> subterm_at(const FoTerm& t, const std::vector<std::size_t>& path);
FoTerm replace_at(const FoTerm& t, const std::vector<std::size_t>& path, const FoTerm& u);

/// Convergent rewrite system for `e`, or nullopt if orientation or completion fails.
std::optional<std::vector<RewriteRule>> complete(const EquationSet& e, Budget b = Budget(10000));
/// Normal form under a terminating rule set; nullopt if the budget runs out.
std::optional<FoTerm> normal_form(const std::vector<RewriteRule>& rules, const FoTerm& t, Budget b = Budget());

Tristate equal_modulo(const EquationSet& e, const FoTerm& a, const FoTerm& b, Budget bud = Budget());

/// Searches ground terms up to `max_size` for s(a) ≈ 0, or s(a) ≈ s(b) with a ≉ b.
Tristate check_adequate(const EquationSet& e, Budget bud = Budget(), std::size_t max_size = 5);

/// A ≈ B: identical up to bound names except for first-order arguments
/// that are equal modulo `e`.
Tristate formula_equal_modulo(const EquationSet& e, const Formula& a, const Formula& b, Budget bud = Budget());

}  // namespace mixlogic
