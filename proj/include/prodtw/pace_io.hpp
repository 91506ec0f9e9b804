#pragma once

#include <iosfwd>
#include <string>

#include "prodtw/errors.hpp"
#include "prodtw/graph.hpp"

namespace prodtw {

/// PACE 2017 graph format: `c` comment lines, a `p tw <n> <m>` header, then m
/// lines `u v` with 1-based vertex ids. Loops and parallel edges are rejected.
/// Throws parse_error with the offending line number.
Graph read_gr(std::istream& in);
Graph read_gr_file(const std::string& path);

/// Writes the header, an optional `c` comment, and the sorted 1-based edges.
void write_gr(std::ostream& out, const Graph& g, const std::string& comment = "");
void write_gr_file(const std::string& path, const Graph& g, const std::string& comment = "");

} // namespace prodtw
