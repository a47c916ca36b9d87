#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sq7/graph.hpp"
#include "sq7/plane_graph.hpp"

namespace sq7 {

/// Outer n-cycle, inner vertices i joined to i+k (mod n), spokes between.
Graph generalized_petersen(int n, int k);
Graph complete_graph(int n);
Graph cycle_graph(int n);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// K4, Q3, triangular/pentagonal/hexagonal prisms, dodecahedron, Petersen, C5.
std::vector<NamedGraph> builtin_graphs();

struct NamedPlaneGraph {
  std::string name;
  PlaneGraph graph;
};

/// The planar members of builtin_graphs() with some planar embedding.
std::vector<NamedPlaneGraph> builtin_embedded();

/// Connected cubic plane graph: the dual of a random triangulation on
/// `vertices` >= 4 points (stacked insertions followed by random flips).
PlaneGraph random_cubic_plane_graph(int vertices, std::uint64_t seed);

}  // namespace sq7
