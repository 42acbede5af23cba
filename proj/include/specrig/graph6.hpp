#ifndef SPECRIG_GRAPH6_HPP
#define SPECRIG_GRAPH6_HPP

#include <string>
#include <vector>

#include "specrig/graph.hpp"

namespace specrig {

// graph6 interchange format: 6-bit big-endian groups of the upper
// adjacency triangle in column-major order, each byte offset by 63.
// Encoding is bit-exact; parse rejects bad bytes, wrong length and
// nonzero padding.

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line); // throws parse_error

// One graph per line; blank lines and an optional ">>graph6<<" header are
// skipped. Errors carry the 1-based line number.
std::vector<Graph> read_graph6_file(const std::string& path);

} // namespace specrig

#endif
