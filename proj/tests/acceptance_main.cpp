// Runs every acceptance criterion and prints one line per criterion.
// Optional arguments: a fixture directory, then a seed.

#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance.hpp"
#include "mixlogic/fixtures.hpp"

int main(int argc, char** argv) {
  mixlogic::testkit::AcceptanceOptions opts;
  opts.fixture_dir = argc > 1 ? std::filesystem::path(argv[1]) : mixlogic::default_fixture_dir();
  if (argc > 2) opts.seed = std::stoull(argv[2]);
  bool ok = true;
  for (unsigned id = 1; id <= mixlogic::testkit::kCriterionCount; ++id) {
    auto r = mixlogic::testkit::run_criterion(id, opts);
    std::cout << mixlogic::testkit::format_result(r, true) << std::endl;
    ok = ok && r.passed;
  }
  std::cout << (ok ? "all criteria pass" : "some criteria fail") << std::endl;
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
