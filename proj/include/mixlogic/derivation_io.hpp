#pragma once

// Text form of derivations:
//
//   (derivation NAME (system AF2) (equations "p(s(x)) = x" ...)
//     (rule TAG (ctx (x "A") ...) (muctx (a "A") ...) (term "t") (type "A")
//           (witness W) (premises (rule ...) ...)))
//
// W is (term "s(0)"), (pred (z ...) "A") or
// (eq N lr|rl (position i ...) (instance (x "t") ...)).
// Strings hold term and formula syntax verbatim; ';' starts a comment.

#include <filesystem>
#include <string>
#include <string_view>

#include "mixlogic/derivation.hpp"

namespace mixlogic {

/// Throws ParseError, with positions in `text`.
Derivation read_derivation(std::string_view text);
std::string write_derivation(const Derivation& d);

Derivation load_derivation(const std::filesystem::path& path);
void save_derivation(const Derivation& d, const std::filesystem::path& path);

}  // namespace mixlogic
