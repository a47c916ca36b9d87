#include <algorithm>
#include <functional>
#include <set>

#include "sq7/catalog.hpp"
#include "sq7/planarity.hpp"

namespace sq7 {

namespace {

// Pattern vertices in BFS order per component, so each new vertex (after the
// first of a component) has an already-mapped neighbour.
std::vector<int> search_order(const Graph& p) {
  std::vector<int> order;
  std::vector<char> seen(p.order(), 0);
  for (int s = 0; s < p.order(); ++s) {
    if (seen[s]) continue;
    std::size_t head = order.size();
    order.push_back(s);
    seen[s] = 1;
    while (head < order.size()) {
      int u = order[head++];
      for (int w : p.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
    }
  }
  return order;
}

// Calls visit(mapping) for every injective edge-preserving map; stops when visit returns false.
void enumerate_maps(const Graph& pattern, const Graph& host, bool bijective,
                    const std::function<bool(const std::vector<int>&)>& visit) {
  const int np = pattern.order();
  if (np > host.order()) return;
  auto order = search_order(pattern);
  std::vector<int> map(np, -1);
  std::vector<char> used(host.order(), 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int k) {
    if (stop) return;
    if (k == np) {
      if (!visit(map)) stop = true;
      return;
    }
    int p = order[k];
    int anchor = -1;
    for (int q : pattern.neighbors(p))
      if (map[q] >= 0) {
        anchor = map[q];
        break;
      }
    auto try_host = [&](int h) {
      if (used[h]) return;
      if (host.degree(h) < pattern.degree(p)) return;
      if (bijective && host.degree(h) != pattern.degree(p)) return;
      for (int q : pattern.neighbors(p))
        if (map[q] >= 0 && !host.has_edge(h, map[q])) return;
      if (bijective)
        for (int q = 0; q < np; ++q)
          if (map[q] >= 0 && !pattern.has_edge(p, q) && host.has_edge(h, map[q])) return;
      map[p] = h;
      used[h] = 1;
      rec(k + 1);
      used[h] = 0;
      map[p] = -1;
    };
    if (anchor >= 0) {
      for (int h : host.neighbors(anchor)) {
        try_host(h);
        if (stop) return;
      }
    } else {
      for (int h = 0; h < host.order(); ++h) {
        try_host(h);
        if (stop) return;
      }
    }
  };
  rec(0);
}

std::vector<int> canonical_key(const std::vector<int>& m, const std::vector<std::vector<int>>& autos) {
  std::vector<int> best = m;
  std::vector<int> cand(m.size());
  for (const auto& s : autos) {
    for (std::size_t p = 0; p < m.size(); ++p) cand[p] = m[s[p]];
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<Occurrence> collect(const Graph& pattern, const Graph& host,
                                const std::function<bool(const std::vector<int>&)>& accept) {
  auto autos = automorphisms(pattern);
  std::set<std::vector<int>> seen;
  std::vector<Occurrence> out;
  enumerate_maps(pattern, host, false, [&](const std::vector<int>& m) {
    if (!accept(m)) return true;
    if (seen.insert(canonical_key(m, autos)).second) out.push_back({m});
    return true;
  });
  return out;
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  std::vector<std::vector<int>> out;
  enumerate_maps(g, g, true, [&](const std::vector<int>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<Occurrence> find_subgraph_occurrences(const Graph& host, const Graph& pattern) {
  return collect(pattern, host, [](const std::vector<int>&) { return true; });
}

std::vector<Occurrence> find_occurrences(const PlaneGraph& host, const Configuration& cfg) {
  if (!cfg.face_based()) return find_subgraph_occurrences(host.graph(), cfg.pattern);
  return collect(cfg.pattern, host.graph(), [&](const std::vector<int>& m) {
    for (const auto& cyc : cfg.face_cycles) {
      std::vector<int> image;
      for (int v : cyc) image.push_back(m[v]);
      if (!bounds_face(host, image)) return false;
    }
    return true;
  });
}

}  // namespace sq7
