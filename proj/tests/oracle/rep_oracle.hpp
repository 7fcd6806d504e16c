#pragma once

// Reference for rep on the grammar u ::= x | (f)u | μα[β]u, with named
// μ-variables and membership decided clause by clause.

#include <string>
#include <vector>

namespace oracle {

struct Layer {
  bool is_f;
  std::string binder, target;
};

/// Layers from the outside in; the innermost term is x.
using GrammarTerm = std::vector<Layer>;

inline std::string print(const GrammarTerm& u, std::size_t from = 0) {
  if (from == u.size()) return "x";
  const Layer& l = u[from];
  if (l.is_f) return "f (" + print(u, from + 1) + ")";
  return "mu " + l.binder + ".[" + l.target + "] " + print(u, from + 1);
}

inline std::size_t count_f(const GrammarTerm& u) {
  std::size_t n = 0;
  for (const auto& l : u) n += l.is_f;
  return n;
}

inline bool member(unsigned n, const GrammarTerm& u, std::size_t from = 0) {
  if (from == u.size()) return n == 0;
  const Layer& l = u[from];
  if (l.is_f) return n >= 1 && member(n - 1, u, from + 1);
  // Bodies v of every [α]v inside [β]u, α being this binder.
  std::vector<std::size_t> bodies;
  if (l.target == l.binder) bodies.push_back(from + 1);
  for (std::size_t j = from + 1; j < u.size(); ++j) {
    if (u[j].is_f) continue;
    if (u[j].binder == l.binder) break;  // shadowed from here on, its own target included
    if (u[j].target == l.binder) bodies.push_back(j + 1);
  }
  for (std::size_t b : bodies) {
    if (!member(n, u, b)) return false;
  }
  return true;
}

}  // namespace oracle
