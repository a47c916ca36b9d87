#include "sq7/corpus.hpp"

#include <array>
#include <map>
#include <random>
#include <stdexcept>

#include "sq7/planarity.hpp"

namespace sq7 {

Graph generalized_petersen(int n, int k) {
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n + i);
    g.add_edge(n + i, n + (i + k) % n);
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

std::vector<NamedGraph> builtin_graphs() {
  return {
      {"K4", complete_graph(4)},
      {"Q3", generalized_petersen(4, 1)},
      {"prism3", generalized_petersen(3, 1)},
      {"prism5", generalized_petersen(5, 1)},
      {"prism6", generalized_petersen(6, 1)},
      {"dodecahedron", generalized_petersen(10, 2)},
      {"Petersen", generalized_petersen(5, 2)},
      {"C5", cycle_graph(5)},
  };
}

std::vector<NamedPlaneGraph> builtin_embedded() {
  std::vector<NamedPlaneGraph> out;
  for (auto& [name, g] : builtin_graphs()) {
    if (name == "C5") continue;  // not cubic
    if (auto rot = planar_embedding(g)) out.push_back({name, PlaneGraph(g, *rot)});
  }
  return out;
}

PlaneGraph random_cubic_plane_graph(int vertices, std::uint64_t seed) {
  if (vertices < 4) throw std::invalid_argument("need at least 4 triangulation vertices");
  std::mt19937_64 rng(seed);
  using Tri = std::array<int, 3>;
  // Consistently oriented triangles of K4.
  std::vector<Tri> tris = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  std::map<std::pair<int, int>, int> owner;  // directed edge -> triangle
  auto index_all = [&] {
    owner.clear();
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
      for (int i = 0; i < 3; ++i) owner[{tris[t][i], tris[t][(i + 1) % 3]}] = t;
  };
  int n = 4;
  while (n < vertices) {
    const int t = std::uniform_int_distribution<int>(0, static_cast<int>(tris.size()) - 1)(rng);
    const auto [a, b, c] = tris[t];
    tris[t] = {a, b, n};
    tris.push_back({b, c, n});
    tris.push_back({c, a, n});
    ++n;
  }
  index_all();
  std::vector<int> degree(n, 0);
  for (const auto& [e, _] : owner) ++degree[e.first];
  const int flips = 4 * n;
  for (int k = 0; k < flips; ++k) {
    const int t1 = std::uniform_int_distribution<int>(0, static_cast<int>(tris.size()) - 1)(rng);
    const int i = std::uniform_int_distribution<int>(0, 2)(rng);
    const int a = tris[t1][i], b = tris[t1][(i + 1) % 3], c = tris[t1][(i + 2) % 3];
    const int t2 = owner.at({b, a});
    int d = -1;
    for (int j = 0; j < 3; ++j)
      if (tris[t2][j] != a && tris[t2][j] != b) d = tris[t2][j];
    if (owner.count({c, d}) || degree[a] <= 3 || degree[b] <= 3) continue;
    tris[t1] = {a, d, c};
    tris[t2] = {d, b, c};
    --degree[a];
    --degree[b];
    ++degree[c];
    ++degree[d];
    index_all();
  }
  // Dual: one vertex per triangle, rotation follows the triangle's edges.
  const int f = static_cast<int>(tris.size());
  Graph g(f);
  Rotation rot(f);
  for (int t = 0; t < f; ++t)
    for (int i = 0; i < 3; ++i) {
      const int across = owner.at({tris[t][(i + 1) % 3], tris[t][i]});
      g.add_edge(t, across);
      rot[t].push_back(across);
    }
  return PlaneGraph(g, rot);
}

}  // namespace sq7
