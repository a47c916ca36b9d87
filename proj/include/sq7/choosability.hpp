#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sq7/catalog.hpp"
#include "sq7/graph.hpp"
#include "sq7/list_coloring.hpp"

namespace sq7 {

enum class CheckMode { Exhaustive, Sampled };

struct ChoosabilityOptions {
  CheckMode mode = CheckMode::Exhaustive;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
  int palette_cap = 14;
  /// Direct enumeration is used up to this estimated count; beyond it the
  /// exhaustive check factors through a small vertex separator.
  double exhaustive_limit = 1e8;
};

struct SampleStats {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int palette = 0;
  std::uint64_t rejected_draws = 0;  // draws discarded for violating constraints
  std::uint64_t uncolorable = 0;
};

struct Verdict {
  enum class Status { Holds, Counterexample, SampledPass };
  Status status = Status::Holds;
  /// "exhaustive", "exhaustive-separator" or "sampled".
  std::string method;
  std::optional<ListAssignment> witness;
  /// Canonical assignments checked (exhaustive) or trials run (sampled).
  std::uint64_t checked = 0;
  std::optional<SampleStats> stats;
  std::vector<int> separator;

  bool ok() const { return status != Status::Counterexample; }
};

std::string to_string(Verdict::Status s);

/// `g` is the graph to colour (already squared by the caller).
Verdict check_choosability(const Graph& g, const std::vector<int>& sizes,
                           const std::vector<ListConstraint>& constraints,
                           const ChoosabilityOptions& opts = {});

/// Exhaustive check factored through `separator`: no edge of g may join two
/// components of g - separator and no constraint may span two of them.
Verdict check_choosability_separated(const Graph& g, const std::vector<int>& sizes,
                                     const std::vector<ListConstraint>& constraints,
                                     const std::vector<int>& separator);

/// Serial reference for the direct exhaustive check.
Verdict check_choosability_serial(const Graph& g, const std::vector<int>& sizes,
                                  const std::vector<ListConstraint>& constraints);

/// Smallest separator (at most two vertices) minimising the factored work, if any.
std::optional<std::vector<int>> find_small_separator(const Graph& g, const std::vector<int>& sizes);

}  // namespace sq7
