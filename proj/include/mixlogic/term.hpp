#pragma once

// Terms of the pure λ-calculus, λC (with the control constant C), ΛCP
// (stack constants in argument position) and the λμ-calculus, in one
// locally nameless representation: bound λ- and μ-variables are de Bruijn
// indices in two independent index spaces, free variables carry names.
// Structural equality is therefore α-equivalence.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mixlogic {

namespace detail {
struct TermNode;
}

enum class TermKind : std::uint8_t { Bound, Free, Lam, App, Control, Stack, Mu };

/// The [β] of μα[β]t: a bound μ-index counted from the innermost enclosing
/// μ-binder (0 is the μ that carries the naming) or a free μ-variable.
struct MuTarget {
  bool bound = false;
  std::uint32_t index = 0;
  std::string name;

  static MuTarget at(std::uint32_t i) { return {true, i, {}}; }
  static MuTarget free(std::string n) { return {false, 0, std::move(n)}; }

  friend bool operator==(const MuTarget& a, const MuTarget& b) {
    return a.bound == b.bound && (a.bound ? a.index == b.index : a.name == b.name);
  }
};

class Term {
 public:
  static Term var(std::string name);
  static Term bound(std::uint32_t index);
  /// λ with an already nameless body; `hint` is only used for printing.
  static Term lam(std::string hint, Term body);
  /// λname.body, binding the free occurrences of `name` in `body`.
  static Term abstract(const std::string& name, const Term& body);
  static Term app(Term fun, Term arg);
  static Term apply(Term head, std::span<const Term> args);
  static Term control();
  static Term stack(std::string name);
  static Term mu(std::string hint, MuTarget target, Term body);
  /// μbinder[target]body where `binder` and `target` are μ-variable names
  /// as they occur free in `body`.
  static Term mu_abstract(const std::string& binder, const std::string& target,
                          const Term& body);

  TermKind kind() const;
  bool is(TermKind k) const { return kind() == k; }

  /// Variable name (Free), stack-constant name (Stack) or binder hint (Lam, Mu).
  const std::string& name() const;
  std::uint32_t index() const;
  const Term& body() const;
  const Term& fun() const;
  const Term& arg() const;
  const MuTarget& target() const;

  std::size_t size() const;
  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  friend struct detail::TermNode;
  Term() = default;
  explicit Term(std::shared_ptr<const detail::TermNode> n) : node_(std::move(n)) {}

  std::shared_ptr<const detail::TermNode> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// A λμ-term: a Term without C and without stack constants.
class MuTerm {
 public:
  explicit MuTerm(Term t);
  const Term& term() const { return term_; }
  friend bool operator==(const MuTerm& a, const MuTerm& b) { return a.term_ == b.term_; }

 private:
  Term term_;
};

/// Simultaneous substitution. `vars` replaces free λ-variables; `stacks`
/// is the P-substitution part: an argument-position occurrence (t)p with
/// stacks[p] = u1..un becomes (t)u1..un.
struct Substitution {
  std::map<std::string, Term> vars;
  std::map<std::string, std::vector<Term>> stacks;
};

// -- queries -----------------------------------------------------------------

bool alpha_eq(const Term& a, const Term& b);
std::set<std::string> free_vars(const Term& t);
std::set<std::string> stack_constants(const Term& t);
std::set<std::string> free_mu_vars(const Term& t);
bool contains_control(const Term& t);
bool contains_mu(const Term& t);
bool is_pure(const Term& t);
bool is_lambda_c(const Term& t);
bool is_lambda_cp(const Term& t);
bool is_mu_term(const Term& t);
/// No dangling de Bruijn index (λ or μ).
bool is_locally_closed(const Term& t);

// -- application spines ------------------------------------------------------

struct Spine {
  Term head;
  std::vector<Term> args;
};
Spine unwind(const Term& t);
Term rewind(const Term& head, std::span<const Term> args);

// -- index plumbing ----------------------------------------------------------

Term shift(const Term& t, int lam_delta, int mu_delta, std::uint32_t lam_cutoff = 0,
           std::uint32_t mu_cutoff = 0);
/// Body of a λ with bound index 0 replaced by `value` (β-contraction).
Term instantiate(const Term& body, const Term& value);
/// Body of a λ with its bound variable turned into the free variable `name`.
Term open(const Term& body, const std::string& name);

struct OpenedMu {
  MuTarget target;
  Term body;
};
/// Naming and body of a μ-node with its binder turned into the free μ-variable `name`.
OpenedMu open_mu(const Term& mu_node, const std::string& name);

Term substitute(const Term& t, const Substitution& s);

// -- numerals and closed combinators -----------------------------------------

/// λx.λf.(f)^n x
Term church(unsigned n);
/// n when t is church(n).
std::optional<unsigned> church_value(const Term& t);
/// Closed terms by name: succ, zero, delta, G, F, T1, T2, abort, Cprime, muC.
Term builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// Deterministic name generator: `base`, then base1, base2, ... skipping taken names.
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

}  // namespace mixlogic
