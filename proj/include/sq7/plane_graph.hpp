#pragma once

#include <vector>

#include "sq7/graph.hpp"

namespace sq7 {

using Rotation = std::vector<std::vector<int>>;

/// Boundary walk of one face. darts[i] = (vertices[i], vertices[i+1 mod len]).
struct Face {
  std::vector<int> vertices;
  std::vector<Edge> darts;
  int length() const { return static_cast<int>(darts.size()); }
};

/// Graph with a combinatorial embedding.
/// rotation[v] lists every neighbour of v exactly once in cyclic order.
/// Faces are traced with next(u->v) = (v -> successor of u in rotation[v]).
class PlaneGraph {
 public:
  /// Throws MalformedRotation if rotation[v] is not a permutation of N(v).
  PlaneGraph(Graph g, Rotation rotation);

  const Graph& graph() const { return g_; }
  const Rotation& rotation() const { return rot_; }
  const std::vector<Face>& faces() const { return faces_; }

  int successor(int v, int u) const;
  int predecessor(int v, int u) const;
  int face_of_dart(int u, int v) const;

  /// V - E + F == 2 * #components with faces traced per component; equivalent
  /// to the rotation being planar.
  bool euler_holds() const;

 private:
  int dart_index(int u, int v) const;

  Graph g_;
  Rotation rot_;
  std::vector<std::vector<int>> pos_;        // pos_[v][k] = index of neighbours(v)[k] in rot_[v]
  std::vector<std::vector<int>> dart_face_;  // indexed like rot_
  std::vector<Face> faces_;
};

/// Faces of `rotation` on `g`; order follows the first dart (u ascending, rotation order).
std::vector<Face> trace_faces(const Graph& g, const Rotation& rotation);

}  // namespace sq7
