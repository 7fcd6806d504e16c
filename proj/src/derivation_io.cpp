#include "mixlogic/derivation_io.hpp"

#include <fstream>
#include <sstream>

#include "mixlogic/error.hpp"
#include "mixlogic/formula_syntax.hpp"
#include "mixlogic/term_syntax.hpp"
#include "sexpr.hpp"

namespace mixlogic {

namespace {

using detail::SExpr;

[[noreturn]] void fail_at(const SExpr& e, const std::string& msg) { throw ParseError(e.line, e.column, msg); }

// Runs an embedded parser and moves its error positions into the file.
template <class F>
auto embedded(const SExpr& e, F parse) {
  if (e.kind != SExpr::Kind::String) fail_at(e, "expected a string");
  try {
    return parse(e.text);
  } catch (const ParseError& err) {
    std::size_t line = e.line + err.line() - 1;
    std::size_t col = err.line() == 1 ? e.column + err.column() : err.column();
    throw ParseError(line, col, err.message());
  }
}

const std::string& atom(const SExpr& e) {
  if (e.kind != SExpr::Kind::Atom) fail_at(e, "expected a word");
  return e.text;
}

std::size_t number(const SExpr& e) {
  const std::string& s = atom(e);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail_at(e, "expected a number");
  return std::stoul(s);
}

Context read_context(const SExpr& form) {
  Context ctx;
  for (std::size_t i = 1; i < form.items.size(); ++i) {
    const SExpr& entry = form.items[i];
    if (!entry.is_list() || entry.items.size() != 2) fail_at(entry, "expected (label \"formula\")");
    ctx.emplace_back(atom(entry.items[0]), embedded(entry.items[1], parse_formula));
  }
  return ctx;
}

const SExpr& single(const SExpr& form) {
  if (form.items.size() != 2) fail_at(form, "(" + form.items[0].text + " ...) takes one argument");
  return form.items[1];
}

Witness read_witness(const SExpr& form) {
  const SExpr& w = single(form);
  if (w.is_form("term")) return embedded(single(w), parse_fo_term);
  if (w.is_form("pred")) {
    if (w.items.size() != 3 || !w.items[1].is_list()) fail_at(w, "expected (pred (params ...) \"formula\")");
    PredAbstraction g{{}, embedded(w.items[2], parse_formula)};
    for (const auto& p : w.items[1].items) g.params.push_back(atom(p));
    return g;
  }
  if (w.is_form("eq")) {
    if (w.items.size() < 3) fail_at(w, "expected (eq N lr|rl ...)");
    EqWitness ew;
    ew.equation = number(w.items[1]);
    const std::string& dir = atom(w.items[2]);
    if (dir != "lr" && dir != "rl") fail_at(w.items[2], "direction is lr or rl");
    ew.left_to_right = dir == "lr";
    for (std::size_t i = 3; i < w.items.size(); ++i) {
      const SExpr& part = w.items[i];
      if (part.is_form("position")) {
        for (std::size_t k = 1; k < part.items.size(); ++k) ew.position.push_back(number(part.items[k]));
      } else if (part.is_form("instance")) {
        for (std::size_t k = 1; k < part.items.size(); ++k) {
          const SExpr& b = part.items[k];
          if (!b.is_list() || b.items.size() != 2) fail_at(b, "expected (var \"term\")");
          ew.instance[atom(b.items[0])] = embedded(b.items[1], parse_fo_term);
        }
      } else {
        fail_at(part, "expected (position ...) or (instance ...)");
      }
    }
    return ew;
  }
  fail_at(w, "unknown witness");
}

DerivationNode read_node(const SExpr& e) {
  if (!e.is_form("rule") || e.items.size() < 2) fail_at(e, "expected (rule TAG ...)");
  auto tag = parse_rule_tag(atom(e.items[1]));
  if (!tag) fail_at(e.items[1], "unknown rule '" + e.items[1].text + "'");
  Context lambda_ctx, mu_ctx;
  std::optional<Term> subject;
  std::optional<Formula> type;
  Witness witness;
  std::vector<DerivationNode> premises;
  for (std::size_t i = 2; i < e.items.size(); ++i) {
    const SExpr& f = e.items[i];
    if (f.is_form("ctx")) {
      lambda_ctx = read_context(f);
    } else if (f.is_form("muctx")) {
      mu_ctx = read_context(f);
    } else if (f.is_form("term")) {
      subject = embedded(single(f), parse_term);
    } else if (f.is_form("type")) {
      type = embedded(single(f), parse_formula);
    } else if (f.is_form("witness")) {
      witness = read_witness(f);
    } else if (f.is_form("premises")) {
      for (std::size_t k = 1; k < f.items.size(); ++k) premises.push_back(read_node(f.items[k]));
    } else {
      fail_at(f, "unexpected field in rule");
    }
  }
  if (!subject) fail_at(e, "rule without (term ...)");
  if (!type) fail_at(e, "rule without (type ...)");
  return {*tag, Sequent{std::move(lambda_ctx), *subject, *type, std::move(mu_ctx)}, std::move(witness),
          std::move(premises)};
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

void write_context(std::ostream& os, const char* head, const Context& ctx) {
  if (ctx.empty()) return;
  os << " (" << head;
  for (const auto& [l, f] : ctx) os << " (" << l << " " << quote(to_string(f)) << ")";
  os << ")";
}

void write_node(std::ostream& os, const DerivationNode& n, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  os << pad << "(rule " << to_string(n.rule);
  write_context(os, "ctx", n.conclusion.lambda_ctx);
  write_context(os, "muctx", n.conclusion.mu_ctx);
  os << "\n" << pad << "  (term " << quote(to_string(n.conclusion.subject)) << ")";
  os << " (type " << quote(to_string(n.conclusion.type)) << ")";
  if (const auto* t = std::get_if<FoTerm>(&n.witness)) {
    os << "\n" << pad << "  (witness (term " << quote(to_string(*t)) << "))";
  } else if (const auto* g = std::get_if<PredAbstraction>(&n.witness)) {
    os << "\n" << pad << "  (witness (pred (";
    for (std::size_t i = 0; i < g->params.size(); ++i) os << (i ? " " : "") << g->params[i];
    os << ") " << quote(to_string(g->body)) << "))";
  } else if (const auto* ew = std::get_if<EqWitness>(&n.witness)) {
    os << "\n" << pad << "  (witness (eq " << ew->equation << (ew->left_to_right ? " lr" : " rl") << " (position";
    for (auto p : ew->position) os << " " << p;
    os << ") (instance";
    for (const auto& [v, t] : ew->instance) os << " (" << v << " " << quote(to_string(t)) << ")";
    os << ")))";
  }
  if (!n.premises.empty()) {
    os << "\n" << pad << "  (premises";
    for (const auto& p : n.premises) {
      os << "\n";
      write_node(os, p, indent + 4);
    }
    os << ")";
  }
  os << ")";
}

}  // namespace

Derivation read_derivation(std::string_view text) {
  auto top = detail::read_sexprs(text);
  if (top.size() != 1) throw ParseError(1, 1, "expected exactly one (derivation ...) form");
  const SExpr& d = top[0];
  if (!d.is_form("derivation") || d.items.size() < 2) fail_at(d, "expected (derivation NAME ...)");
  std::string name = atom(d.items[1]);
  std::optional<System> system;
  EquationSet equations;
  std::optional<DerivationNode> root;
  for (std::size_t i = 2; i < d.items.size(); ++i) {
    const SExpr& f = d.items[i];
    if (f.is_form("system")) {
      system = parse_system(atom(single(f)));
      if (!system) fail_at(single(f), "unknown system '" + single(f).text + "'");
    } else if (f.is_form("equations")) {
      for (std::size_t k = 1; k < f.items.size(); ++k) equations.push_back(embedded(f.items[k], parse_equation));
    } else if (f.is_form("rule")) {
      if (root) fail_at(f, "a derivation has one root rule");
      root = read_node(f);
    } else {
      fail_at(f, "unexpected field in derivation");
    }
  }
  if (!system) fail_at(d, "derivation without (system ...)");
  if (!root) fail_at(d, "derivation without a root rule");
  return {name, *system, std::move(equations), std::move(*root)};
}

std::string write_derivation(const Derivation& d) {
  std::ostringstream os;
  os << "(derivation " << d.name << "\n  (system " << to_string(d.system) << ")";
  if (!d.equations.empty()) {
    os << "\n  (equations";
    for (const auto& e : d.equations) os << " " << quote(to_string(e));
    os << ")";
  }
  os << "\n";
  write_node(os, d.root, 2);
  os << ")\n";
  return os.str();
}

Derivation load_derivation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return read_derivation(ss.str());
}

void save_derivation(const Derivation& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_derivation(d);
}

}  // namespace mixlogic
