#pragma once

#include <iosfwd>
#include <string>

#include "outersq/graph.hpp"

namespace outersq {

enum class Format { EdgeList, Dimacs };

Format parse_format(const std::string& name);

// Edge list: "n m" then m lines "u v", 0-based; '#' starts a comment.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// DIMACS .col: "p edge n m" and "e u v" lines, 1-based; 'c' lines are comments.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

Graph read_graph(std::istream& in, Format f);
Graph read_graph_file(const std::string& path, Format f);
void write_graph(std::ostream& out, const Graph& g, Format f);

}  // namespace outersq
