#pragma once

// Seeded random generators for property tests and the acceptance suite.
// Every generator draws only from the Rng it is given, so a seed fixes the
// whole sequence.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mixlogic/formula.hpp"
#include "mixlogic/reduction.hpp"
#include "mixlogic/term.hpp"

namespace mixlogic::testkit {

using Rng = std::mt19937_64;

/// Uniform in [0, n).
std::size_t pick(Rng& rng, std::size_t n);
bool coin(Rng& rng, double p = 0.5);

// -- λ-terms -------------------------------------------------------------------

struct TermShape {
  unsigned depth = 5;
  /// Free variables the generator may use.
  std::vector<std::string> free = {"a", "b", "c"};
  /// Probability that an application gets an abstraction in function position.
  double redex_bias = 0.4;
};

Term random_pure_term(Rng& rng, const TermShape& shape = {});
/// Head reduction one step at a time; nullopt as soon as a term grows past
/// `max_size` nodes. The trace is exhausted when `budget` runs out.
std::optional<ReductionTrace> bounded_head_reduce(const Term& t, std::size_t budget, std::size_t max_size);
constexpr std::size_t kMaxTermSize = 2000;
/// A pure term whose head reduction stops within `budget` steps, after at
/// least `min_steps` steps, with every term of the trace within kMaxTermSize.
Term random_head_terminating(Rng& rng, const TermShape& shape, std::size_t budget, std::size_t min_steps = 1);
/// Pure term with some occurrences of C.
Term random_lambda_c_term(Rng& rng, const TermShape& shape = {});
/// λC term with stack constants from `stacks` in argument position.
Term random_cp_term(Rng& rng, const TermShape& shape, const std::vector<std::string>& stacks);
/// λμ-term over free μ-variables `mu_free`.
Term random_mu_term(Rng& rng, const TermShape& shape, const std::vector<std::string>& mu_free = {"k"});

// -- formulas ------------------------------------------------------------------

/// Fixed signature: first-order variables x, y, z; function symbols 0, s, p;
/// predicate variables X (unary) and Y (nullary); classical variables Zc
/// (unary) and Wc (nullary); the unary symbol @D.
struct FormulaShape {
  unsigned depth = 4;
  bool classical = true;
};

FoTerm random_fo_term(Rng& rng, unsigned depth = 2);
Formula random_formula(Rng& rng, const FormulaShape& shape = {});
/// A formula that ends with ⊥ or with a classical variable.
Formula random_classical_type(Rng& rng, const FormulaShape& shape = {});
/// Arity of a predicate of the fixed signature.
std::size_t arity_of(const std::string& pred_name);
/// `\z. G` for unary names, a bare G otherwise; classical_body forces G to
/// be a classical type.
PredAbstraction random_pred_abstraction(Rng& rng, std::size_t arity, bool classical_body, const FormulaShape& shape = {});

/// B with A ◁ B: instantiates between 0 and all leading quantifiers of `a`
/// with random witnesses of the right kind and arity.
Formula random_instance(Rng& rng, const Formula& a);
/// B with A ≈ B over {p(0) = 0, p(s(x)) = x}: one first-order subterm t is
/// replaced by p(s(t)), or a p(s(t)) / p(0) is contracted.
Formula random_equal_variant(Rng& rng, const Formula& a);

// -- λμ integer candidates -----------------------------------------------------

/// A term around the grammar u ::= x | (f)u | μα[β]u, kept as data so that
/// membership can be decided without the library.
struct MuShape {
  enum class LayerKind { F, Mu, OtherHead, Lambda, TwoArgs };
  struct Layer {
    LayerKind kind;
    std::string binder, target;
  };
  enum class Leaf { X, F, Other };
  /// Number of leading abstractions; the first binds x, the second f.
  unsigned lambdas = 2;
  std::vector<Layer> layers;
  Leaf leaf = Leaf::X;

  std::string text() const;
};

/// Mostly grammar-shaped candidates with a share of near misses.
MuShape random_mu_shape(Rng& rng, unsigned max_layers = 6);

}  // namespace mixlogic::testkit
