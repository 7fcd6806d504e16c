#pragma once

// The shipped derivations. Each one is built in code and also stored as a
// file under <fixture dir>/derivations/<name>.deriv; the two must agree.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mixlogic/derivation.hpp"

namespace mixlogic {

std::vector<std::string> fixture_names();
/// Throws PreconditionViolated on an unknown name.
Derivation build_fixture(std::string_view name);

/// The fixture directory configured at build time.
std::filesystem::path default_fixture_dir();
std::filesystem::path fixture_path(const std::filesystem::path& dir, std::string_view name);
Derivation load_fixture(const std::filesystem::path& dir, std::string_view name);
/// Writes every fixture file; returns the paths written.
std::vector<std::filesystem::path> generate_fixtures(const std::filesystem::path& dir);

/// Derivation of ⊢ θ : N[s^n 0] for the storage corpus representatives:
/// kind is church, succ-chain, redex-wrapped (AF2), c-wrapped or
/// backtracking (C2).
Derivation integer_derivation(std::string_view kind, unsigned n);

/// Consecutive head C-reduction steps of one term of type ⊥, each typed in C2.
std::vector<std::string> bottom_step_fixture_names();

}  // namespace mixlogic
