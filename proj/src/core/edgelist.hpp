#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace gp {

// Text edge-list format, LF line endings:
//   - lines whose first character is '#' are comments and may appear anywhere;
//   - the first non-comment line is the header "U n m" (undirected) or
//     "D n m" (directed);
//   - exactly m non-comment lines "u v" follow, 0-based; undirected edges must
//     satisfy u < v, directed arcs only u != v; duplicates are rejected.
// Writers emit the canonical form: header, then edges in lexicographic order.

// Result of loading: exactly one of graph/digraph is set.
struct LoadedGraph {
    std::optional<Graph> graph;
    std::optional<Digraph> digraph;

    bool directed() const { return digraph.has_value(); }
};

// Parses edge-list text. `source_name` labels ParseError messages
// ("name:line: what").
LoadedGraph parse_edge_list(const std::string& text,
                            const std::string& source_name = "<string>");

// Reads and parses a file; IoError if it cannot be opened.
LoadedGraph load_edge_list(const std::string& path);

// Renders the canonical text form. Comments (without the leading '#') are
// emitted first, one line each; they must not contain newlines.
std::string format_edge_list(const Graph& g,
                             const std::vector<std::string>& comments = {});
std::string format_edge_list(const Digraph& d,
                             const std::vector<std::string>& comments = {});

// Writes the canonical text form to a file; IoError on failure.
void write_edge_list(const std::string& path, const Graph& g,
                     const std::vector<std::string>& comments = {});
void write_edge_list(const std::string& path, const Digraph& d,
                     const std::vector<std::string>& comments = {});

}  // namespace gp
