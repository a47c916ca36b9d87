#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sq7/catalog.hpp"
#include "sq7/choosability.hpp"

namespace sq7 {

using Record = nlohmann::ordered_json;

struct LemmaOptions {
  /// Overrides the catalogued mode of exhaustive and sampled variants.
  std::optional<CheckMode> mode;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
  bool timing = false;
};

struct LemmaReport {
  std::string lemma;
  VerificationMode mode = VerificationMode::Sampled;
  /// One record per case variant plus auxiliary checks, in a fixed order.
  std::vector<Record> records;
  bool ok = true;
  std::string first_failure;
};

/// Throws UnknownLemma, DetectionOnly.
LemmaReport verify_lemma(const std::string& lemma_id, const LemmaOptions& opts = {});

/// Check of one catalogued configuration (any variant name).
Record verify_configuration(const std::string& lemma_id, const Configuration& cfg, const LemmaOptions& opts,
                            bool& ok);

Record to_record(const ListAssignment& L);

}  // namespace sq7
