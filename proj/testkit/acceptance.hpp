#pragma once

// The acceptance suite: ten criteria, each a pass/fail verdict over fixed
// corpora, shipped fixtures and seeded generated inputs.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace mixlogic::testkit {

struct AcceptanceOptions {
  std::filesystem::path fixture_dir;
  std::uint64_t seed = 1;
  std::size_t budget = 100000;
};

struct CriterionResult {
  unsigned id = 0;
  std::string title;
  bool passed = false;
  /// Number of individual checks and of failed ones.
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// First failure, or a short summary on success.
  std::string detail;
  double seconds = 0;
};

constexpr unsigned kCriterionCount = 10;

CriterionResult run_criterion(unsigned id, const AcceptanceOptions& opts);
/// All criteria in order, or only those listed in `only`.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, const std::vector<unsigned>& only = {});
/// `criterion <id> PASS|FAIL <title>: <checks> checks, <failures> failed (<detail>)`,
/// with the elapsed time appended when `timing` is set.
std::string format_result(const CriterionResult& r, bool timing = false);

}  // namespace mixlogic::testkit
