#pragma once

// Surface syntax for terms:
//   \x. t  or  \x y. t     abstraction (extends as far right as possible)
//   t u                    application, left-associative; (t)u also works
//   C                      the control constant
//   #p                     stack constant
//   mu a.[b] t             μα[β]t
// `C` and `mu` are reserved and cannot name variables.

#include <iosfwd>
#include <string>
#include <string_view>

#include "mixlogic/term.hpp"

namespace mixlogic {

/// Throws ParseError with 1-based line and column.
Term parse_term(std::string_view text);
/// As parse_term, but rejects C and stack constants.
MuTerm parse_mu_term(std::string_view text);

/// Prints with binder hints, renaming where needed so that the output
/// parses back to an α-equal term.
std::string to_string(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace mixlogic
