#pragma once

// Second-order formulas over first-order terms. Binders are named and all
// substitutions are capture-avoiding; alpha_eq compares up to renaming of
// bound first- and second-order variables.

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mixlogic {

struct FoTerm {
  enum class Kind : std::uint8_t { Var, Const, Fun };
  Kind kind = Kind::Const;
  std::string name;
  std::vector<FoTerm> args;

  static FoTerm var(std::string n) { return {Kind::Var, std::move(n), {}}; }
  static FoTerm constant(std::string n) { return {Kind::Const, std::move(n), {}}; }
  static FoTerm fun(std::string f, std::vector<FoTerm> a) { return {Kind::Fun, std::move(f), std::move(a)}; }
  static FoTerm zero() { return constant("0"); }
  static FoTerm succ(FoTerm t) { return fun("s", {std::move(t)}); }
  /// s^n(0)
  static FoTerm numeral(unsigned n);

  std::size_t size() const;
  friend bool operator==(const FoTerm& a, const FoTerm& b) = default;
  /// Arbitrary total order, for ordered containers.
  friend bool operator<(const FoTerm& a, const FoTerm& b);
};

std::set<std::string> vars_of(const FoTerm& t);
FoTerm subst_fo(const FoTerm& t, const std::string& x, const FoTerm& u);
/// Number of occurrences of variable x in t.
std::size_t occurrences(const FoTerm& t, const std::string& x);

/// Predicate of an atom. Symbols are constants (surface `@D`); Var and
/// Classical are the ordinary and classical second-order variables, two
/// disjoint namespaces (surface `X` and `Xc`).
struct Predicate {
  enum class Kind : std::uint8_t { Symbol, Var, Classical };
  Kind kind = Kind::Var;
  std::string name;

  static Predicate symbol(std::string n) { return {Kind::Symbol, std::move(n)}; }
  static Predicate var(std::string n) { return {Kind::Var, std::move(n)}; }
  static Predicate classical(std::string n) { return {Kind::Classical, std::move(n)}; }
  bool is_variable() const { return kind != Kind::Symbol; }
  friend bool operator==(const Predicate& a, const Predicate& b) = default;
  friend auto operator<=>(const Predicate& a, const Predicate& b) = default;
};

enum class FormulaKind : std::uint8_t { Bottom, Atom, Arrow, ForallFo, ForallSo, ForallClassical };

namespace detail {
struct FormulaNode;
}

class Formula {
 public:
  static Formula bottom();
  static Formula atom(Predicate p, std::vector<FoTerm> args = {});
  static Formula arrow(Formula lhs, Formula rhs);
  /// A → ⊥
  static Formula negation(Formula a);
  static Formula forall_fo(std::string x, Formula body);
  static Formula forall_so(std::string x, Formula body);
  static Formula forall_classical(std::string x, Formula body);
  /// {A1, ..., An → B}
  static Formula arrows(const std::vector<Formula>& premises, Formula conclusion);

  FormulaKind kind() const;
  bool is(FormulaKind k) const { return kind() == k; }
  bool is_quantifier() const;
  bool is_negation() const;

  const Predicate& pred() const;
  const std::vector<FoTerm>& args() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  /// Bound variable of a quantifier.
  const std::string& var() const;
  const Formula& body() const;

  /// Syntactic identity, bound names included; use alpha_eq for equality.
  bool identical(const Formula& other) const;

 private:
  friend struct detail::FormulaNode;
  Formula() = default;
  explicit Formula(std::shared_ptr<const detail::FormulaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
};

/// A second-order witness λy1..yn.G, written `\y1 y2. G`.
struct PredAbstraction {
  std::vector<std::string> params;
  Formula body;
};

bool alpha_eq(const Formula& a, const Formula& b);
bool alpha_eq(const PredAbstraction& a, const PredAbstraction& b);

std::set<std::string> free_fo_vars(const Formula& a);
std::set<Predicate> free_preds(const Formula& a);
/// Variables (first-order and predicate names) free or bound anywhere in a.
std::set<std::string> all_names(const Formula& a);
bool pred_free_in(const Formula& a, const Predicate& p);
std::size_t size(const Formula& a);

/// A[t/x]
Formula subst_fo(const Formula& a, const std::string& x, const FoTerm& t);
/// A[G/X] for a predicate variable X (ordinary or classical).
Formula subst_pred(const Formula& a, const Predicate& x, const PredAbstraction& g);
/// Replace the bound variable of a quantifier by `name` and return the body.
Formula open_quantifier(const Formula& q, const std::string& name);

/// Library formulas.
/// N[x] = ∀X{X(0), ∀y(X(y) → X(sy)) → X(x)}
Formula nat(const FoTerm& x);
/// N*[x] = ∀X{¬X(0), ∀y(¬X(y) → ¬X(sy)) → ¬X(x)}
Formula nat_star(const FoTerm& x);
/// N^C[x]: N[x] with X classical.
Formula nat_classical(const FoTerm& x);
/// N = ∀X{X, (X → X) → X}
Formula nat_prop();

}  // namespace mixlogic
