#include "mixlogic/formula_syntax.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "lexer.hpp"

namespace mixlogic {

namespace {

using detail::Tok;
using detail::TokenCursor;

bool is_upper(const std::string& s) { return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])); }
bool is_lower(const std::string& s) { return !s.empty() && std::islower(static_cast<unsigned char>(s[0])); }

// Uppercase names ending in a lowercase `c` are classical: `Xc` is X_C.
Predicate classify_pred_name(const std::string& name) {
  if (name.size() >= 2 && name.back() == 'c') return Predicate::classical(name.substr(0, name.size() - 1));
  return Predicate::var(name);
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view src) : cur_(src) {}

  Formula formula_all() {
    Formula f = formula();
    cur_.expect_end();
    return f;
  }
  FoTerm term_all() {
    FoTerm t = term();
    cur_.expect_end();
    return t;
  }
  PredAbstraction abstraction_all() {
    PredAbstraction g{{}, Formula::bottom()};
    if (cur_.accept("\\")) {
      while (cur_.peek().kind == Tok::Ident) {
        std::string p = cur_.next().text;
        if (!is_lower(p)) cur_.fail("expected a first-order parameter");
        g.params.push_back(p);
      }
      cur_.expect(".");
    }
    g.body = formula();
    cur_.expect_end();
    return g;
  }
  Equation equation_all() {
    FoTerm l = term();
    cur_.expect("=");
    FoTerm r = term();
    cur_.expect_end();
    return {l, r};
  }

 private:
  Formula formula() {
    Formula lhs = unary();
    if (cur_.accept("->")) return Formula::arrow(lhs, formula());
    return lhs;
  }

  std::string pred_name() {
    std::string name = cur_.next().text;
    if (cur_.at_punct("*")) {
      cur_.next();
      name += "*";
    }
    return name;
  }

  Formula unary() {
    if (cur_.at_ident("forall")) {
      cur_.next();
      if (cur_.peek().kind != Tok::Ident) cur_.fail("expected a variable after forall");
      std::string v = pred_name();
      if (is_lower(v)) return Formula::forall_fo(v, unary());
      Predicate p = classify_pred_name(v);
      if (p.kind == Predicate::Kind::Classical) return Formula::forall_classical(p.name, unary());
      return Formula::forall_so(p.name, unary());
    }
    if (cur_.accept("~")) return Formula::negation(unary());
    if (cur_.accept("_|_")) return Formula::bottom();
    if (cur_.accept("(")) {
      Formula f = formula();
      cur_.expect(")");
      return f;
    }
    if (cur_.accept("{")) {
      std::vector<Formula> items{formula()};
      while (cur_.accept(",")) items.push_back(formula());
      cur_.expect("}");
      Formula last = items.back();
      items.pop_back();
      return Formula::arrows(items, last);
    }
    const auto& tok = cur_.peek();
    if (tok.kind == Tok::Sigil) {
      std::string name = cur_.next().text;
      return Formula::atom(Predicate::symbol(name), atom_args());
    }
    if (tok.kind == Tok::Ident && is_upper(tok.text)) {
      Predicate p = classify_pred_name(pred_name());
      return Formula::atom(p, atom_args());
    }
    cur_.fail("expected a formula");
  }

  std::vector<FoTerm> atom_args() {
    std::vector<FoTerm> args;
    if (!cur_.accept("(")) return args;
    args.push_back(term());
    while (cur_.accept(",")) args.push_back(term());
    cur_.expect(")");
    return args;
  }

  FoTerm term() {
    const auto& tok = cur_.peek();
    if (tok.kind == Tok::Number) {
      std::string digits = cur_.next().text;
      return FoTerm::numeral(static_cast<unsigned>(std::stoul(digits)));
    }
    if (tok.kind == Tok::Ident && is_lower(tok.text) && tok.text != "forall") {
      std::string name = cur_.next().text;
      if (!cur_.accept("(")) return FoTerm::var(name);
      if (cur_.accept(")")) return FoTerm::constant(name);
      std::vector<FoTerm> args{term()};
      while (cur_.accept(",")) args.push_back(term());
      cur_.expect(")");
      return FoTerm::fun(name, std::move(args));
    }
    cur_.fail("expected a first-order term");
  }

  TokenCursor cur_;
};

void print_term(const FoTerm& t, std::ostream& os) {
  switch (t.kind) {
    case FoTerm::Kind::Var:
      os << t.name;
      return;
    case FoTerm::Kind::Const:
      os << t.name;
      if (t.name != "0") os << "()";
      return;
    case FoTerm::Kind::Fun:
      os << t.name << "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) os << ", ";
        print_term(t.args[i], os);
      }
      os << ")";
      return;
  }
}

void print_formula(const Formula& a, std::ostream& os);

void print_unary(const Formula& a, std::ostream& os) {
  bool wrap = a.is(FormulaKind::Arrow) && !a.is_negation();
  if (wrap) os << "(";
  print_formula(a, os);
  if (wrap) os << ")";
}

void print_formula(const Formula& a, std::ostream& os) {
  switch (a.kind()) {
    case FormulaKind::Bottom:
      os << "_|_";
      return;
    case FormulaKind::Atom:
      os << to_string(a.pred());
      if (!a.args().empty()) {
        os << "(";
        for (std::size_t i = 0; i < a.args().size(); ++i) {
          if (i) os << ", ";
          print_term(a.args()[i], os);
        }
        os << ")";
      }
      return;
    case FormulaKind::Arrow:
      if (a.is_negation()) {
        os << "~";
        print_unary(a.lhs(), os);
        return;
      }
      print_unary(a.lhs(), os);
      os << " -> ";
      print_formula(a.rhs(), os);
      return;
    case FormulaKind::ForallFo:
    case FormulaKind::ForallSo:
      os << "forall " << a.var() << " ";
      print_unary(a.body(), os);
      return;
    case FormulaKind::ForallClassical:
      os << "forall " << a.var() << "c ";
      print_unary(a.body(), os);
      return;
  }
}

template <class F>
auto reparse_lines(std::string_view text, std::size_t line, F&& f) {
  try {
    return f(text);
  } catch (const ParseError& e) {
    throw ParseError(line + e.line() - 1, e.column(), e.message());
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).formula_all(); }
FoTerm parse_fo_term(std::string_view text) { return FormulaParser(text).term_all(); }
PredAbstraction parse_pred_abstraction(std::string_view text) { return FormulaParser(text).abstraction_all(); }
Equation parse_equation(std::string_view text) { return FormulaParser(text).equation_all(); }

EquationSet parse_equations(std::string_view text) {
  EquationSet out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line.substr(first, 2) == "//") continue;
    out.push_back(reparse_lines(line, line_no, [](std::string_view l) { return parse_equation(l); }));
    if (end == text.size()) break;
  }
  return out;
}

std::string to_string(const Predicate& p) {
  switch (p.kind) {
    case Predicate::Kind::Symbol:
      return "@" + p.name;
    case Predicate::Kind::Classical:
      return p.name + "c";
    default:
      return p.name;
  }
}

std::string to_string(const Formula& a) {
  std::ostringstream os;
  print_formula(a, os);
  return os.str();
}

std::string to_string(const FoTerm& t) {
  std::ostringstream os;
  print_term(t, os);
  return os.str();
}

std::string to_string(const PredAbstraction& g) {
  std::string out;
  if (!g.params.empty()) {
    out = "\\";
    for (std::size_t i = 0; i < g.params.size(); ++i) out += (i ? " " : "") + g.params[i];
    out += ". ";
  }
  return out + to_string(g.body);
}

std::string to_string(const Equation& e) { return to_string(e.lhs) + " = " + to_string(e.rhs); }

std::ostream& operator<<(std::ostream& os, const Formula& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const FoTerm& t) { return os << to_string(t); }

}  // namespace mixlogic
