#pragma once

#include <string>
#include <vector>

#include "schubert/cache.hpp"

namespace schubert {

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::vector<std::string> lines;  // one PASS/FAIL line per check
};

const std::vector<std::string>& suite_names();

// Throws InvalidArgument for an unknown suite name.
SuiteReport run_suite(const std::string& suite, int max_rank, const Cache* cache, std::size_t cap);

}  // namespace schubert
