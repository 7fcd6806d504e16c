#include "mixlogic/fixtures.hpp"

#include <functional>
#include <map>

#include "mixlogic/derivation_builder.hpp"
#include "mixlogic/derivation_io.hpp"
#include "mixlogic/error.hpp"
#include "mixlogic/formula_syntax.hpp"

namespace mixlogic {

namespace {

using namespace build;

Formula fml(std::string_view s) { return parse_formula(s); }

FoTerm var(const std::string& v) { return FoTerm::var(v); }

// x : X(0), f : ∀y(X(y) → X(sy))
Context nat_hyps() {
  return {{"x", fml("X(0)")}, {"f", fml("forall y (X(y) -> X(s(y)))")}};
}

DerivationNode close_nat(const DerivationNode& body) {
  Context g = nat_hyps();
  return so_gen("X", intro("x", intro("f", body, g[1].second), g[0].second));
}

DerivationNode zero() { return close_nat(ax(nat_hyps(), "x")); }

DerivationNode church_n(unsigned n) {
  DerivationNode t = ax(nat_hyps(), "x");
  for (unsigned k = 0; k < n; ++k) t = elim(fo_inst(ax(nat_hyps(), "f"), FoTerm::numeral(k)), t);
  return close_nat(t);
}

// ⊢ λx.λf.(f)^n x : ∀X{X → (X → X) → X}
DerivationNode church_prop(unsigned n) {
  Context g{{"x", fml("X")}, {"f", fml("X -> X")}};
  DerivationNode t = ax(g, "x");
  for (unsigned k = 0; k < n; ++k) t = elim(ax(g, "f"), t);
  return so_gen("X", intro("x", intro("f", t, g[1].second), g[0].second));
}

// ⊢ λn.λx.λf.(f)((n)x)f : ∀y(N[y] → N[sy])
DerivationNode succ() {
  Context g = nat_hyps();
  g.insert(g.begin(), {"n", nat(var("y"))});
  DerivationNode n = so_inst(ax(g, "n"), PredAbstraction{{"z"}, fml("X(z)")});
  DerivationNode nxf = elim(elim(n, ax(g, "x")), ax(g, "f"));
  DerivationNode body = elim(fo_inst(ax(g, "f"), var("y")), nxf);
  return fo_gen("y", intro("n", close_nat(body)));
}

Formula neg(Formula a) { return Formula::negation(std::move(a)); }

// ⊢ (s)(s)0 : N[ss0]
DerivationNode succ_two() {
  DerivationNode one = elim(fo_inst(succ(), FoTerm::zero()), zero());
  return elim(fo_inst(succ(), FoTerm::numeral(1)), one);
}

DerivationNode succ_chain(unsigned n) {
  DerivationNode t = zero();
  for (unsigned k = 0; k < n; ++k) t = elim(fo_inst(succ(), FoTerm::numeral(k)), t);
  return t;
}

// ⊢ (λa.λb.a)((succ)^n 0) 0 : N[s^n 0]
DerivationNode redex_wrapped(unsigned n) {
  Context g{{"a", nat(FoTerm::numeral(n))}, {"b", nat(FoTerm::zero())}};
  DerivationNode k = intro("a", intro("b", ax(g, "a"), g[1].second));
  return elim(elim(k, succ_chain(n)), zero());
}

// ⊢ (C)λk.(k)n : N[s^n 0]
DerivationNode c_wrapped(unsigned n) {
  Formula nn = nat(FoTerm::numeral(n));
  Context g{{"k", neg(nn)}};
  DerivationNode dn = intro("k", elim(ax(g, "k"), church_n(n)));
  return elim(so_inst(c_axiom(false), PredAbstraction{{}, nn}), dn);
}

// ⊢ λx.λf.(C)λk.(k)((f)^n((C)λk2.(k)((f)^n x))) : N[s^n 0]
DerivationNode backtracking(unsigned n) {
  Context g = nat_hyps();
  FoTerm top = FoTerm::numeral(n);
  g.push_back({"k", neg(Formula::atom(Predicate::var("X"), {top}))});
  g.push_back({"k2", neg(fml("X(0)"))});
  auto iterate = [&](DerivationNode t) {
    for (unsigned i = 0; i < n; ++i) t = elim(fo_inst(ax(g, "f"), FoTerm::numeral(i)), t);
    return t;
  };
  auto c_at = [](const Formula& a) { return so_inst(c_axiom(false), PredAbstraction{{}, a}); };
  DerivationNode inner_body = intro("k2", elim(ax(g, "k"), iterate(ax(g, "x"))), g[3].second);
  DerivationNode inner = elim(c_at(fml("X(0)")), inner_body);
  DerivationNode outer_body = intro("k", elim(ax(g, "k"), iterate(inner)));
  return close_nat(elim(c_at(g[2].second.lhs()), outer_body));
}

// ⊢ δ : ¬¬N[0]
DerivationNode delta() {
  Context g{{"f", neg(nat(FoTerm::zero()))}};
  return intro("f", elim(ax(g, "f"), zero()));
}

// ⊢ G : ∀y(¬¬N[y] → ¬¬N[sy])
DerivationNode g_step() {
  Context g{{"x", neg(neg(nat(var("y"))))}, {"y", neg(nat(FoTerm::succ(var("y"))))}, {"z", nat(var("y"))}};
  DerivationNode sz = elim(fo_inst(succ(), var("y")), ax(g, "z"));
  DerivationNode inner = intro("z", elim(ax(g, "y"), sz));
  return fo_gen("y", intro("x", intro("y", elim(ax(g, "x"), inner))));
}

// ⊢ T1 : ∀x{N*[x] → ¬¬N[x]}
DerivationNode t1() {
  Context g{{"n", nat_star(var("x"))}};
  PredAbstraction not_nat{{"z"}, neg(nat(var("z")))};
  DerivationNode n = so_inst(ax(g, "n"), not_nat);
  return fo_gen("x", intro("n", elim(elim(n, delta()), g_step())));
}

// ⊢ λν.λf.(f)(C)(T1)ν : ∀x{N*[x] → ¬¬N[x]}
DerivationNode remark_t() {
  Context g{{"nu", nat_star(var("x"))}, {"f", neg(nat(var("x")))}};
  DerivationNode stored = elim(fo_inst(t1(), var("x")), ax(g, "nu"));
  DerivationNode c = so_inst(c_axiom(false), PredAbstraction{{}, nat(var("x"))});
  DerivationNode body = elim(ax(g, "f"), elim(c, stored));
  return fo_gen("x", intro("nu", intro("f", body)));
}

// ⊢ (C)λk.(k)2 : N[ss0]
DerivationNode c_church2() { return c_wrapped(2); }

// ⊢ λx.λf.x : N[p(s(0))] using p(s(x)) = x right to left.
EquationSet pred_equations() { return parse_equations("p(0) = 0\np(s(x)) = x\n"); }

DerivationNode pred() {
  DerivationNode x = eq(ax(nat_hyps(), "x"), pred_equations(), 2, false, {0}, {{"x", FoTerm::zero()}});
  return close_nat(x);
}

PredAbstraction classical_x() { return {{}, fml("Xc")}; }

// ⊢ λx.(C)λy.x : ∀X_C{⊥ → X_C}
DerivationNode abort_() {
  Context g{{"x", Formula::bottom()}, {"y", fml("~Xc")}};
  DerivationNode dn = intro("y", ax(g, "x"), g[1].second);
  return class_gen("X", intro("x", elim(class_inst(c_axiom(true), classical_x()), dn)));
}

// ⊢ λx.(C)λd.(x)λy.(x)λz.(d)y : ∀X_C{¬¬X_C → X_C}
DerivationNode cprime() {
  Context g{{"x", fml("~~Xc")}, {"y", fml("Xc")}, {"z", fml("Xc")}, {"d", fml("~Xc")}};
  DerivationNode dy = elim(ax(g, "d"), ax(g, "y"));
  DerivationNode xz = elim(ax(g, "x"), intro("z", dy, g[2].second));
  DerivationNode xy = elim(ax(g, "x"), intro("y", xz));
  DerivationNode c = elim(class_inst(c_axiom(true), classical_x()), intro("d", xy));
  return class_gen("X", intro("x", c));
}

// ⊢ λx.μα[φ](x)λy.μβ[α]y : ∀X{¬¬X → X}
DerivationNode mu_c() {
  Context g{{"x", fml("~~X")}, {"y", fml("X")}};
  DerivationNode named = naming("b", "a", ax(g, "y"));
  DerivationNode applied = elim(ax(g, "x"), intro("y", named));
  return so_gen("X", intro("x", naming("a", "phi", applied)));
}

// (C)λd.(d)y ▷ (λd.(d)y)λx.x ▷ (λx.x)y ▷ y, all of type ⊥ under y : ⊥.
Context bottom_ctx() { return {{"y", Formula::bottom()}}; }

DerivationNode d_applied() {
  Context g{{"d", fml("~_|_")}, {"y", Formula::bottom()}};
  return intro("d", elim(ax(g, "d"), ax(g, "y")));
}

DerivationNode identity_bottom() { return intro("x", ax({{"x", Formula::bottom()}}, "x")); }

DerivationNode bottom_step(int i) {
  switch (i) {
    case 0:
      return elim(so_inst(c_axiom(false), PredAbstraction{{}, Formula::bottom()}), d_applied());
    case 1:
      return elim(d_applied(), identity_bottom());
    case 2:
      return elim(identity_bottom(), ax(bottom_ctx(), "y"));
    default:
      return ax(bottom_ctx(), "y");
  }
}

struct Entry {
  System system;
  std::function<DerivationNode()> root;
  std::function<EquationSet()> equations;
};

const std::vector<std::pair<std::string, Entry>>& catalogue() {
  static const std::vector<std::pair<std::string, Entry>> entries = [] {
    auto none = [] { return EquationSet{}; };
    std::vector<std::pair<std::string, Entry>> v = {
        {"zero", {System::AF2, zero, none}},
        {"succ", {System::AF2, succ, none}},
        {"church2", {System::AF2, [] { return church_n(2); }, none}},
        {"succ-two", {System::AF2, succ_two, none}},
        {"church2-prop", {System::AF2, [] { return church_prop(2); }, none}},
        {"pred", {System::AF2, pred, pred_equations}},
        {"T1", {System::AF2, t1, none}},
        {"C-axiom", {System::C2, [] { return c_axiom(false); }, none}},
        {"C-church2", {System::C2, c_church2, none}},
        {"remark-T", {System::C2, remark_t, none}},
        {"abort", {System::M2, abort_, none}},
        {"Cprime", {System::M2, cprime, none}},
        {"muC", {System::FD2, mu_c, none}},
    };
    for (int i = 0; i < 4; ++i) {
      v.push_back({"bottom-step" + std::to_string(i), {System::C2, [i] { return bottom_step(i); }, none}});
    }
    return v;
  }();
  return entries;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, e] : catalogue()) out.push_back(name);
  return out;
}

Derivation build_fixture(std::string_view name) {
  for (const auto& [n, e] : catalogue()) {
    if (n == name) return {n, e.system, e.equations(), e.root()};
  }
  throw PreconditionViolated("unknown fixture '" + std::string(name) + "'");
}

Derivation integer_derivation(std::string_view kind, unsigned n) {
  std::string name = std::string(kind) + "-" + std::to_string(n);
  if (kind == "church") return {name, System::AF2, {}, church_n(n)};
  if (kind == "succ-chain") return {name, System::AF2, {}, succ_chain(n)};
  if (kind == "redex-wrapped") return {name, System::AF2, {}, redex_wrapped(n)};
  if (kind == "c-wrapped") return {name, System::C2, {}, c_wrapped(n)};
  if (kind == "backtracking") return {name, System::C2, {}, backtracking(n)};
  throw PreconditionViolated("no integer derivation of kind '" + std::string(kind) + "'");
}

std::vector<std::string> bottom_step_fixture_names() {
  return {"bottom-step0", "bottom-step1", "bottom-step2", "bottom-step3"};
}

std::filesystem::path default_fixture_dir() { return MIXLOGIC_FIXTURE_DIR; }

std::filesystem::path fixture_path(const std::filesystem::path& dir, std::string_view name) {
  return dir / "derivations" / (std::string(name) + ".deriv");
}

Derivation load_fixture(const std::filesystem::path& dir, std::string_view name) {
  return load_derivation(fixture_path(dir, name));
}

std::vector<std::filesystem::path> generate_fixtures(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir / "derivations");
  std::vector<std::filesystem::path> written;
  for (const auto& name : fixture_names()) {
    auto path = fixture_path(dir, name);
    save_derivation(build_fixture(name), path);
    written.push_back(path);
  }
  return written;
}

}  // namespace mixlogic
