#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "netcurv/graph.hpp"

namespace netcurv {

/// Text edge-list format: one "source target [weight]" line per edge,
/// whitespace separated, '#' comment lines and blank lines ignored.
/// Errors carry the offending 1-based line number.
std::vector<EdgeListEntry> parse_edge_list(std::istream& in, const std::string& source_name);

/// Vertex-weight format: "vertex weight" per line, same comment rules.
std::vector<std::pair<std::string, double>> parse_vertex_weights(std::istream& in,
                                                                 const std::string& source_name);

std::vector<EdgeListEntry> read_edge_list_file(const std::string& path);
std::vector<std::pair<std::string, double>> read_vertex_weight_file(const std::string& path);

/// Parses the edge list (and optional vertex-weight file, whose entries
/// seed the vertex order) into a graph.
DirectedGraph load_graph(const std::string& edge_list_path,
                         const std::string& vertex_weight_path = "");

/// Writes "label label" lines (weight appended when != 1), in edge order.
void write_edge_list(std::ostream& out, const DirectedGraph& g);

/// Writes "label weight" lines for every vertex, in index order.
void write_vertex_weights(std::ostream& out, const DirectedGraph& g);

}  // namespace netcurv
