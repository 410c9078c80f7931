#pragma once

#include "spanres/multigraph.hpp"

#include <iosfwd>
#include <string>

namespace spanres {

// Text graph format:
//
//   graph <vertex_count>
//   edge <u> <v> <weight>
//
// with 0-based endpoints, weights written as an integer or "p/q", and lines
// starting with '#' ignored. Throws ParseError on malformed input.
Multigraph read_graph(std::istream& in);

// Reads from the named file, or from standard input when path is "-".
Multigraph read_graph_file(const std::string& path);

// Deterministic writer: header line, then edges in stored order.
void write_graph(std::ostream& out, const Multigraph& g);

std::string graph_to_string(const Multigraph& g);

}  // namespace spanres
