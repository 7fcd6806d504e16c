#pragma once

#include <cstddef>

namespace mixlogic {

/// Step limit for anything that may diverge.
struct Budget {
  static constexpr std::size_t kDefaultSteps = 100000;
  /// Throws PreconditionViolated on 0.
  explicit Budget(std::size_t max_steps = kDefaultSteps);
  std::size_t max_steps;
};

/// Answer of a bounded decision procedure.
enum class Tristate { False, True, Inconclusive };

}  // namespace mixlogic
