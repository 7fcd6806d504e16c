#pragma once

// Surface syntax for formulas:
//   _|_                    bottom
//   A -> B                 implication, right-associative
//   ~A                     A -> _|_
//   {A, B -> C}            A -> B -> C
//   forall x A             first-order quantifier (lowercase variable)
//   forall X A             second-order quantifier (uppercase variable)
//   forall Xc A            classical quantifier (uppercase, trailing `c`)
//   X(t1, ..., tn), Xc(t), @D(t)
//                          atoms over a variable, a classical variable, a symbol
// A quantifier or `~` applies to the unary formula right after it.
// First-order terms: variables (lowercase), 0, numerals as sugar for s^n(0),
// f(t1, ..., tn), and nullary constants written c().

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mixlogic/formula.hpp"

namespace mixlogic {

struct Equation {
  FoTerm lhs;
  FoTerm rhs;
};
using EquationSet = std::vector<Equation>;

Formula parse_formula(std::string_view text);
FoTerm parse_fo_term(std::string_view text);
/// `\y1 y2. G`, or a bare formula for a 0-ary abstraction.
PredAbstraction parse_pred_abstraction(std::string_view text);
Equation parse_equation(std::string_view text);
/// One `lhs = rhs` per line; blank lines and lines starting with `//` are skipped.
EquationSet parse_equations(std::string_view text);

std::string to_string(const Formula& a);
std::string to_string(const FoTerm& t);
std::string to_string(const PredAbstraction& g);
std::string to_string(const Predicate& p);
std::string to_string(const Equation& e);
std::ostream& operator<<(std::ostream& os, const Formula& a);
std::ostream& operator<<(std::ostream& os, const FoTerm& t);

}  // namespace mixlogic
