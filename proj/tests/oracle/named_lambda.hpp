#pragma once

// A deliberately naive λ-calculus with named variables, used as a
// reference for the library's nameless engine. Substitution renames
// binders with a global counter; normal order is leftmost-outermost.
// Only pure terms: identifiers, `\x.`, application and parentheses.

#include <cctype>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

struct Node;
using Ptr = std::shared_ptr<const Node>;

struct Node {
  enum Kind { Var, Lam, App } kind;
  std::string name;
  Ptr a, b;
};

inline Ptr var(std::string n) { return std::make_shared<Node>(Node{Node::Var, std::move(n), nullptr, nullptr}); }
inline Ptr lam(std::string n, Ptr body) { return std::make_shared<Node>(Node{Node::Lam, std::move(n), body, nullptr}); }
inline Ptr app(Ptr f, Ptr x) { return std::make_shared<Node>(Node{Node::App, "", f, x}); }

class Parser {
 public:
  explicit Parser(std::string s) : s_(std::move(s)) {}
  Ptr parse() {
    Ptr t = term();
    skip();
    if (i_ != s_.size()) throw std::runtime_error("oracle: trailing input");
    return t;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  std::string ident() {
    skip();
    std::size_t j = i_;
    while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '\'')) ++j;
    if (j == i_) throw std::runtime_error("oracle: expected identifier");
    std::string out = s_.substr(i_, j - i_);
    i_ = j;
    return out;
  }
  bool atom_start() {
    skip();
    return i_ < s_.size() && (s_[i_] == '(' || s_[i_] == '\\' || std::isalnum(static_cast<unsigned char>(s_[i_])));
  }
  Ptr atom() {
    skip();
    if (s_[i_] == '(') {
      ++i_;
      Ptr t = term();
      skip();
      ++i_;
      return t;
    }
    if (s_[i_] == '\\') {
      ++i_;
      std::string x = ident();
      skip();
      ++i_;  // '.'
      return lam(x, term());
    }
    return var(ident());
  }
  Ptr term() {
    Ptr t = atom();
    while (atom_start()) t = app(t, atom());
    return t;
  }
  std::string s_;
  std::size_t i_ = 0;
};

inline void free_vars(const Ptr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case Node::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      break;
    case Node::Lam: {
      bool had = bound.count(t->name);
      bound.insert(t->name);
      free_vars(t->a, bound, out);
      if (!had) bound.erase(t->name);
      break;
    }
    case Node::App:
      free_vars(t->a, bound, out);
      free_vars(t->b, bound, out);
      break;
  }
}

inline std::set<std::string> fv(const Ptr& t) {
  std::set<std::string> bound, out;
  free_vars(t, bound, out);
  return out;
}

inline std::string fresh() {
  static unsigned counter = 0;
  return "v_" + std::to_string(counter++);
}

/// t[v/x], renaming every binder that could capture.
inline Ptr subst(const Ptr& t, const std::string& x, const Ptr& v) {
  switch (t->kind) {
    case Node::Var:
      return t->name == x ? v : t;
    case Node::App:
      return app(subst(t->a, x, v), subst(t->b, x, v));
    case Node::Lam: {
      if (t->name == x) return t;
      if (fv(v).count(t->name)) {
        std::string y = fresh();
        return lam(y, subst(subst(t->a, t->name, var(y)), x, v));
      }
      return lam(t->name, subst(t->a, x, v));
    }
  }
  return t;
}

/// One leftmost-outermost β-step, or nullptr at normal form.
inline Ptr step(const Ptr& t) {
  if (t->kind == Node::App) {
    if (t->a->kind == Node::Lam) return subst(t->a->a, t->a->name, t->b);
    if (Ptr f = step(t->a)) return app(f, t->b);
    if (Ptr x = step(t->b)) return app(t->a, x);
    return nullptr;
  }
  if (t->kind == Node::Lam) {
    if (Ptr b = step(t->a)) return lam(t->name, b);
  }
  return nullptr;
}

inline std::optional<Ptr> normalize(Ptr t, std::size_t budget) {
  for (std::size_t k = 0; k < budget; ++k) {
    Ptr n = step(t);
    if (!n) return t;
    t = n;
  }
  return std::nullopt;
}

/// Number of head steps to head normal form (under leading λs), or nullopt.
inline std::optional<std::size_t> head_steps(Ptr t, std::size_t budget) {
  for (std::size_t k = 0; k <= budget; ++k) {
    const Node* cur = t.get();
    std::vector<std::string> binders;
    while (cur->kind == Node::Lam) {
      binders.push_back(cur->name);
      cur = cur->a.get();
    }
    const Node* h = cur;
    std::vector<Ptr> args;
    while (h->kind == Node::App) {
      args.push_back(h->b);
      h = h->a.get();
    }
    if (h->kind != Node::Lam || args.empty()) return k;
    // rebuild: (λx.u) a_last ... with a_last the innermost argument
    Ptr hp = std::make_shared<Node>(*h);
    Ptr r = subst(hp->a, hp->name, args.back());
    for (auto it = args.rbegin() + 1; it != args.rend(); ++it) r = app(r, *it);
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) r = lam(*it, r);
    t = r;
  }
  return std::nullopt;
}

inline std::string print(const Ptr& t) {
  switch (t->kind) {
    case Node::Var:
      return t->name;
    case Node::Lam:
      return "(\\" + t->name + "." + print(t->a) + ")";
    case Node::App:
      return "(" + print(t->a) + " " + print(t->b) + ")";
  }
  return {};
}

/// α-equivalence by pairing binders on a stack.
inline bool alpha_equal(const Ptr& a, const Ptr& b, std::vector<std::pair<std::string, std::string>>& env) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Node::Var:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == a->name || it->second == b->name) return it->first == a->name && it->second == b->name;
      }
      return a->name == b->name;
    case Node::Lam: {
      env.emplace_back(a->name, b->name);
      bool eq = alpha_equal(a->a, b->a, env);
      env.pop_back();
      return eq;
    }
    case Node::App:
      return alpha_equal(a->a, b->a, env) && alpha_equal(a->b, b->b, env);
  }
  return false;
}

inline bool alpha_equal(const Ptr& a, const Ptr& b) {
  std::vector<std::pair<std::string, std::string>> env;
  return alpha_equal(a, b, env);
}

}  // namespace oracle
