#pragma once

// The mixlogic command line. Exit codes: 0 success, 1 semantic failure,
// 2 parse or usage error.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mixlogic/reduction.hpp"

namespace mixlogic::cli {

struct Config {
  std::size_t budget = Budget::kDefaultSteps;
  std::uint64_t seed = 1;
  bool trace = false;
  TraceFormat trace_format = TraceFormat::Text;
  std::filesystem::path fixture_dir;
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixlogic::cli
