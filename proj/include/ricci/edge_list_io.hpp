#pragma once

#include "ricci/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ricci {

/// Edge-list text format: one "u v" pair per line, whitespace-separated
/// decimal ids; '#' starts a comment; blank lines ignored.
/// Throws ParseError with the 1-based line number on malformed input.
std::vector<Edge> read_edge_list(std::istream& in);
std::vector<Edge> read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace ricci
