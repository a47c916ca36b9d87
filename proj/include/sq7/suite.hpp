#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace sq7 {

struct SuiteOptions {
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
  bool timing = false;
  int jobs = 0;
};

struct SuiteResult {
  std::vector<nlohmann::ordered_json> records;
  bool ok = true;
  std::string first_failure;
  /// Human-readable table.
  std::string summary;
};

/// "certificates", "lemmas", "discharging", "scan" or "all". Throws
/// std::invalid_argument for other names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

const std::vector<std::string>& suite_names();

}  // namespace sq7
