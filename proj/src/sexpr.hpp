#pragma once

// Minimal s-expression reader for derivation files. Atoms are bare words,
// strings are double-quoted with no escapes, ';' starts a line comment.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mixlogic::detail {

struct SExpr {
  enum class Kind { Atom, String, List };
  Kind kind = Kind::Atom;
  std::string text;
  std::vector<SExpr> items;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is_list() const { return kind == Kind::List; }
  /// A list whose first item is the atom `head`.
  bool is_form(std::string_view head) const;
};

std::vector<SExpr> read_sexprs(std::string_view text);

}  // namespace mixlogic::detail
