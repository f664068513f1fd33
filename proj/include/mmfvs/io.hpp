#ifndef MMFVS_IO_HPP
#define MMFVS_IO_HPP

#include <string>
#include <vector>

#include "mmfvs/graph.hpp"

namespace mmfvs {

/// DIMACS edge format: `c` comments, one `p edge <n> <m>` header, then
/// m lines `e <u> <v>` with 1-based endpoints in [1, n]. Internally the
/// graph uses 0-based ids; the shift happens here and only here.
/// Throws std::invalid_argument with a line number on malformed input,
/// out-of-range endpoints, self-loops, and duplicate edges.
Graph parse_graph(const std::string& text);

/// Normalized output: header, then edges ascending; optional comment
/// lines (without the leading "c ") are emitted first.
std::string serialize_graph(const Graph& g,
                            const std::vector<std::string>& comments = {});

/// One 1-based vertex id per line; `#` starts a comment. Returns the
/// 0-based internal set; range-checks against g.
VertexSet parse_solution(const std::string& text, const Graph& g);

std::string serialize_solution(const VertexSet& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace mmfvs

#endif
