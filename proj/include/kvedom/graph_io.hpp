#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kvedom/graph.hpp"

namespace kvedom::io {

enum class Format { EdgeList, Dimacs };

/// `n m` header then m lines `u v`, 0-based. `#` starts a comment.
Graph read_edge_list(std::istream& in);

/// `p edge n m` header and `e u v` lines, 1-based. Lines starting with `c` are comments.
Graph read_dimacs(std::istream& in);

Graph read_graph(std::istream& in, Format format);
Graph read_graph_file(const std::string& path, Format format);

/// Writes the edge-list format, edges in id order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// Solution files: cardinality on the first line, sorted ids on the second.
VertexSet read_solution(std::istream& in);
void write_solution(std::ostream& out, const VertexSet& d);

/// Partial (s,t) labelling: `v R` marks, `u v s` demands.
struct LabelSpec {
  std::vector<Vertex> red;
  struct Demand {
    Vertex u;
    Vertex v;
    int s;
  };
  std::vector<Demand> demands;
};

LabelSpec read_labels(std::istream& in);

/// Splits a line into whitespace tokens after stripping a `#` comment.
std::vector<std::string> tokenize(const std::string& line);

/// Parses a non-negative int; throws InputError naming `what` otherwise.
int parse_int(const std::string& token, const char* what);

}  // namespace kvedom::io
