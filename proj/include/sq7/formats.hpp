#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "sq7/graph.hpp"
#include "sq7/plane_graph.hpp"

namespace sq7 {

/// One graph per line; optional ">>graph6<<" header; blank lines skipped.
/// Throws ParseError carrying the 1-based line number.
std::vector<Graph> read_graph6(std::istream& in);
Graph parse_graph6(const std::string& line, std::size_t line_no = 1);
std::string to_graph6(const Graph& g);

/// plantri planar_code. Entries are 1 byte, or 2 bytes little-endian when the
/// order byte is 0. Rotation is the listed neighbour order.
/// ParseError::line is the 1-based record index.
std::vector<PlaneGraph> read_planar_code(std::istream& in);
void write_planar_code(std::ostream& out, const std::vector<PlaneGraph>& graphs);

}  // namespace sq7
