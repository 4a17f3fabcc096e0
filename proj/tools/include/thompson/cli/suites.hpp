#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thompson/cli/document.hpp"

namespace thompson::cli {

struct SuiteOptions {
  int base = 2;
  std::uint64_t seed = 7;
  int samples = 0;  // 0 selects the suite's default
  int max_index = 6;
  int witness_count = 10;
};

/// eq1, icc, lemma32, prop33, relations, phi, semidirect, central.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
Report run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace thompson::cli
