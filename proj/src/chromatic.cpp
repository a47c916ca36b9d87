#include "sq7/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "sq7/errors.hpp"

namespace sq7 {

namespace {

struct Dsatur {
  const Graph& g;
  int k;
  std::vector<int> color;
  std::vector<std::uint64_t> seen;  // colours on coloured neighbours

  bool run(int remaining) {
    if (remaining == 0) return true;
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (color[v] >= 0) continue;
      int sat = std::popcount(seen[v]);
      if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = g.degree(v);
      }
    }
    // New colours are interchangeable; try at most one unused colour.
    int used = 0;
    for (int c : color) used = std::max(used, c + 1);
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      if (seen[best] >> c & 1) continue;
      color[best] = c;
      std::vector<std::uint64_t> saved;
      for (int w : g.neighbors(best)) saved.push_back(seen[w]);
      for (int w : g.neighbors(best)) seen[w] |= std::uint64_t{1} << c;
      if (run(remaining - 1)) return true;
      for (std::size_t i = 0; i < saved.size(); ++i) seen[g.neighbors(best)[i]] = saved[i];
      color[best] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> k_coloring(const Graph& g, int k) {
  if (k < 0 || k > 64) throw std::invalid_argument("k outside 0..64");
  Dsatur s{g, k, std::vector<int>(g.order(), -1), std::vector<std::uint64_t>(g.order(), 0)};
  if (!s.run(g.order())) return std::nullopt;
  return s.color;
}

int chromatic_number(const Graph& g, int bound) {
  if (g.order() > bound) throw SizeBound("chromatic_number: order exceeds " + std::to_string(bound));
  if (g.order() == 0) return 0;
  int lo = g.size() > 0 ? 2 : 1;
  int hi = std::min(g.order(), g.max_degree() + 1);  // Brooks-free upper bound
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (k_coloring(g, mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

}  // namespace sq7
