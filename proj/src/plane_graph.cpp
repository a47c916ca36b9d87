#include "sq7/plane_graph.hpp"

#include <algorithm>

#include "sq7/errors.hpp"

namespace sq7 {

namespace {

void validate(const Graph& g, const Rotation& rot) {
  if (static_cast<int>(rot.size()) != g.order())
    throw MalformedRotation("rotation has " + std::to_string(rot.size()) +
                            " entries for " + std::to_string(g.order()) + " vertices");
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v))
      throw MalformedRotation("rotation at vertex " + std::to_string(v) +
                              " is not a permutation of its neighbours");
  }
}

}  // namespace

PlaneGraph::PlaneGraph(Graph g, Rotation rotation) : g_(std::move(g)), rot_(std::move(rotation)) {
  validate(g_, rot_);
  const int n = g_.order();
  pos_.resize(n);
  dart_face_.resize(n);
  for (int v = 0; v < n; ++v) {
    const auto& nb = g_.neighbors(v);
    pos_[v].resize(nb.size());
    for (std::size_t i = 0; i < rot_[v].size(); ++i) {
      auto k = std::lower_bound(nb.begin(), nb.end(), rot_[v][i]) - nb.begin();
      pos_[v][k] = static_cast<int>(i);
    }
    dart_face_[v].assign(rot_[v].size(), -1);
  }
  for (int u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < rot_[u].size(); ++i) {
      if (dart_face_[u][i] >= 0) continue;
      Face f;
      int fid = static_cast<int>(faces_.size());
      int a = u, b = rot_[u][i];
      while (dart_face_[a][dart_index(a, b)] < 0) {
        dart_face_[a][dart_index(a, b)] = fid;
        f.vertices.push_back(a);
        f.darts.emplace_back(a, b);
        int c = successor(b, a);
        a = b;
        b = c;
      }
      faces_.push_back(std::move(f));
    }
  }
}

int PlaneGraph::dart_index(int u, int v) const {
  const auto& nb = g_.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) throw std::invalid_argument("not an edge");
  return pos_[u][it - nb.begin()];
}

int PlaneGraph::successor(int v, int u) const {
  const auto& r = rot_[v];
  return r[(dart_index(v, u) + 1) % r.size()];
}

int PlaneGraph::predecessor(int v, int u) const {
  const auto& r = rot_[v];
  return r[(dart_index(v, u) + r.size() - 1) % r.size()];
}

int PlaneGraph::face_of_dart(int u, int v) const { return dart_face_[u][dart_index(u, v)]; }

bool PlaneGraph::euler_holds() const {
  const Graph& g = g_;
  std::vector<int> comp(g.order(), -1);
  int components = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    auto d = bfs_distances(g, s);
    for (int v = 0; v < g.order(); ++v)
      if (d[v] >= 0) comp[v] = components;
    ++components;
  }
  // Faces are traced per component, so each component has its own outer face.
  // Isolated vertices contribute no darts, hence no traced face; count one each.
  long faces = static_cast<long>(faces_.size());
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) ++faces;
  return g.order() - static_cast<long>(g.size()) + faces == 2L * components;
}

std::vector<Face> trace_faces(const Graph& g, const Rotation& rotation) {
  return PlaneGraph(g, rotation).faces();
}

}  // namespace sq7
