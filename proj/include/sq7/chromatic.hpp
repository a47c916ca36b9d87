#pragma once

#include <optional>
#include <vector>

#include "sq7/graph.hpp"

namespace sq7 {

inline constexpr int kChromaticOrderBound = 30;

/// A proper colouring with colours 0..k-1, or nullopt. DSATUR branching.
std::optional<std::vector<int>> k_coloring(const Graph& g, int k);

/// Exact chromatic number. Throws SizeBound when g.order() > bound.
int chromatic_number(const Graph& g, int bound = kChromaticOrderBound);

}  // namespace sq7
