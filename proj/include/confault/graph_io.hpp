#ifndef CONFAULT_GRAPH_IO_HPP
#define CONFAULT_GRAPH_IO_HPP

#include <string>

#include "confault/digraph.hpp"

namespace confault {

// Parallel edge literals in the input are collapsed; the count is kept so
// the CLI can warn without failing the load.
struct LoadedGraph {
    Digraph graph;
    int duplicate_count{};
};

// Accepts either of the two on-disk formats and dispatches on the first
// non-blank character: '{' means the JSON object {"n": ..., "edges":
// [[tail, head], ...]}, anything else a DOT digraph restricted to integer
// vertex ids, "a -> b" chains and bare node statements.
LoadedGraph parse_graph_text(const std::string& text);

LoadedGraph load_graph(const std::string& path);

std::string graph_to_json(const Digraph& g);

void write_graph_file(const Digraph& g, const std::string& path);

}  // namespace confault

#endif
