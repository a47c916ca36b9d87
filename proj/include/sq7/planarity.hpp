#pragma once

#include <optional>
#include <vector>

#include "sq7/graph.hpp"
#include "sq7/plane_graph.hpp"

namespace sq7 {

bool is_planar(const Graph& g);

/// Rotation system of some planar embedding, or nullopt if g is not planar.
std::optional<Rotation> planar_embedding(const Graph& g);

/// Planar embedding in which every cycle of `face_cycles` bounds a face.
/// Each cycle is a vertex sequence whose consecutive pairs are edges of g.
/// Returns nullopt if no such embedding was found.
std::optional<PlaneGraph> embed_with_faces(const Graph& g,
                                           const std::vector<std::vector<int>>& face_cycles);

/// True iff some face of pg has the cyclic boundary `cycle` (either direction).
bool bounds_face(const PlaneGraph& pg, const std::vector<int>& cycle);

}  // namespace sq7
