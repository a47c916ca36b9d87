#include "sq7/planarity.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace sq7 {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

BGraph to_boost(const Graph& g) {
  BGraph b(g.order());
  int idx = 0;
  for (auto [u, v] : g.edges()) {
    auto e = boost::add_edge(u, v, b).first;
    boost::put(boost::edge_index, b, e, idx++);
  }
  return b;
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (std::size_t s = 0; s < n; ++s) {
    bool fwd = true, bwd = true;
    for (std::size_t i = 0; i < n && (fwd || bwd); ++i) {
      if (a[i] != b[(s + i) % n]) fwd = false;
      if (a[i] != b[(s + n - i) % n]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

}  // namespace

bool is_planar(const Graph& g) {
  BGraph b = to_boost(g);
  return boost::boyer_myrvold_planarity_test(b);
}

std::optional<Rotation> planar_embedding(const Graph& g) {
  BGraph b = to_boost(g);
  std::vector<std::vector<BEdge>> storage(boost::num_vertices(b));
  auto emb = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, b));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = b,
                                           boost::boyer_myrvold_params::embedding = emb))
    return std::nullopt;
  Rotation rot(g.order());
  for (int v = 0; v < g.order(); ++v)
    for (const BEdge& e : storage[v]) {
      int s = static_cast<int>(boost::source(e, b)), t = static_cast<int>(boost::target(e, b));
      rot[v].push_back(s == v ? t : s);
    }
  return rot;
}

bool bounds_face(const PlaneGraph& pg, const std::vector<int>& cycle) {
  return std::any_of(pg.faces().begin(), pg.faces().end(),
                     [&](const Face& f) { return cyclic_equal(f.vertices, cycle); });
}

std::optional<PlaneGraph> embed_with_faces(const Graph& g,
                                           const std::vector<std::vector<int>>& face_cycles) {
  Graph aug = g;
  for (const auto& cyc : face_cycles) {
    int hub = aug.add_vertex();
    for (int v : cyc) aug.add_edge(hub, v);
  }
  auto rot = planar_embedding(aug);
  if (!rot) return std::nullopt;
  Rotation base(g.order());
  for (int v = 0; v < g.order(); ++v)
    for (int w : (*rot)[v])
      if (w < g.order()) base[v].push_back(w);
  PlaneGraph pg(g, std::move(base));
  for (const auto& cyc : face_cycles)
    if (!bounds_face(pg, cyc)) return std::nullopt;
  return pg;
}

}  // namespace sq7
