#include "mixlogic/term_syntax.hpp"

#include <ostream>
#include <sstream>

#include "lexer.hpp"

namespace mixlogic {

namespace {

using detail::Tok;
using detail::TokenCursor;

bool is_reserved(const std::string& name) { return name == "C" || name == "mu" || name == "forall"; }

class TermParser {
 public:
  explicit TermParser(std::string_view src) : cur_(src) {}

  Term parse_all() {
    Term t = term();
    cur_.expect_end();
    return t;
  }

 private:
  bool starts_atom() const {
    const auto& t = cur_.peek();
    if (t.kind == Tok::Ident || t.kind == Tok::Stack) return true;
    return cur_.at_punct("(") || cur_.at_punct("\\");
  }

  Term term() {
    Term head = atom();
    while (starts_atom()) head = Term::app(head, atom());
    return head;
  }

  Term atom() {
    if (cur_.accept("\\")) return lambda();
    if (cur_.at_ident("mu")) return mu();
    if (cur_.accept("(")) {
      Term t = term();
      cur_.expect(")");
      return t;
    }
    const auto& tok = cur_.peek();
    if (tok.kind == Tok::Stack) return Term::stack(cur_.next().text);
    if (tok.kind == Tok::Ident) {
      std::string name = cur_.next().text;
      if (name == "C") return Term::control();
      if (is_reserved(name)) throw ParseError(tok.line, tok.column, "'" + name + "' is reserved");
      return Term::var(name);
    }
    cur_.fail("expected a term");
  }

  std::string binder_name() {
    const auto& tok = cur_.peek();
    std::string name = cur_.expect_ident("a variable name");
    if (is_reserved(name)) throw ParseError(tok.line, tok.column, "'" + name + "' cannot be bound");
    return name;
  }

  Term lambda() {
    std::vector<std::string> names{binder_name()};
    while (cur_.peek().kind == Tok::Ident && !cur_.at_ident("mu")) names.push_back(binder_name());
    cur_.expect(".");
    Term body = term();
    for (auto it = names.rbegin(); it != names.rend(); ++it) body = Term::abstract(*it, body);
    return body;
  }

  Term mu() {
    cur_.next();
    std::string binder = binder_name();
    cur_.expect(".");
    cur_.expect("[");
    std::string target = binder_name();
    cur_.expect("]");
    Term body = term();
    return Term::mu_abstract(binder, target, body);
  }

  TokenCursor cur_;
};

class Printer {
 public:
  explicit Printer(const Term& root) : lam_taken_(free_vars(root)), mu_taken_(free_mu_vars(root)) {}

  void print(const Term& t, std::ostream& os) {
    switch (t.kind()) {
      case TermKind::Bound:
        if (t.index() < lam_scope_.size()) {
          os << lam_scope_[lam_scope_.size() - 1 - t.index()];
        } else {
          os << "?" << t.index();
        }
        return;
      case TermKind::Free:
        os << t.name();
        return;
      case TermKind::Control:
        os << "C";
        return;
      case TermKind::Stack:
        os << "#" << t.name();
        return;
      case TermKind::Lam: {
        std::string name = choose(t.name(), "x", lam_scope_, lam_taken_);
        os << "\\" << name << ".";
        lam_scope_.push_back(name);
        print(t.body(), os);
        lam_scope_.pop_back();
        return;
      }
      case TermKind::Mu: {
        std::string name = choose(t.name(), "a", mu_scope_, mu_taken_);
        os << "mu " << name << ".[";
        const MuTarget& target = t.target();
        if (!target.bound) {
          os << target.name;
        } else if (target.index == 0) {
          os << name;
        } else if (target.index <= mu_scope_.size()) {
          os << mu_scope_[mu_scope_.size() - target.index];
        } else {
          os << "?" << target.index;
        }
        os << "] ";
        mu_scope_.push_back(name);
        print(t.body(), os);
        mu_scope_.pop_back();
        return;
      }
      case TermKind::App: {
        const Term& f = t.fun();
        bool wrap_fun = f.is(TermKind::Lam) || f.is(TermKind::Mu);
        if (wrap_fun) os << "(";
        print(f, os);
        if (wrap_fun) os << ")";
        os << " ";
        const Term& a = t.arg();
        bool wrap_arg = a.is(TermKind::App) || a.is(TermKind::Lam) || a.is(TermKind::Mu);
        if (wrap_arg) os << "(";
        print(a, os);
        if (wrap_arg) os << ")";
        return;
      }
    }
  }

 private:
  static std::string choose(const std::string& hint, const char* fallback,
                            const std::vector<std::string>& scope, const std::set<std::string>& taken) {
    std::string base = hint.empty() || is_reserved(hint) ? fallback : hint;
    std::set<std::string> avoid = taken;
    avoid.insert(scope.begin(), scope.end());
    avoid.insert("C");
    avoid.insert("mu");
    avoid.insert("forall");
    return fresh_name(base, avoid);
  }

  std::set<std::string> lam_taken_;
  std::set<std::string> mu_taken_;
  std::vector<std::string> lam_scope_;
  std::vector<std::string> mu_scope_;
};

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse_all(); }

MuTerm parse_mu_term(std::string_view text) {
  Term t = parse_term(text);
  if (!is_mu_term(t)) throw ParseError(1, 1, "a λμ-term may not contain C or stack constants");
  return MuTerm(t);
}

std::string to_string(const Term& t) {
  std::ostringstream os;
  Printer(t).print(t, os);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }

}  // namespace mixlogic
