#ifndef CONFAULT_DIGRAPH_HPP
#define CONFAULT_DIGRAPH_HPP

#include <utility>
#include <vector>

#include "confault/int_matrix.hpp"

namespace confault {

// Vertex ids are 1-based everywhere the user can see them (files, CLI,
// reports). Internal arrays are 0-based; conversion happens at the edge.
using VertexId = int;

struct Edge {
    VertexId tail{};
    VertexId head{};
    auto operator<=>(const Edge&) const = default;
};

// Immutable digraph with unit edge weights, no self-loops, no parallel
// edges. All operations on it are pure functions.
class Digraph {
public:
    // Validates endpoints, rejects self-loops, deduplicates silently.
    Digraph(int n, std::vector<Edge> edges);

    static Digraph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted, unique
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(Edge e) const;
    bool contains_all(const std::vector<Edge>& f) const;

    // out_neighbors()[v-1] lists heads of edges with tail v, ascending.
    const std::vector<std::vector<VertexId>>& out_neighbors() const { return out_; }
    // in_neighbors()[v-1] lists tails of edges with head v, ascending.
    const std::vector<std::vector<VertexId>>& in_neighbors() const { return in_; }

    int in_degree(VertexId v) const { return static_cast<int>(in_[v - 1].size()); }

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
};

// In-degree Laplacian L = Delta - A. Row i carries the in-degree of vertex
// i on the diagonal and -1 in column j for every edge (j, i).
IntMatrix laplacian(const Digraph& g);

// [A]_{ji} = 1 iff edge (i, j) is present (row = head, column = tail).
IntMatrix adjacency(const Digraph& g);

// Edges whose head lies in x and tail does not.
std::vector<Edge> in_cut(const Digraph& g, const std::vector<VertexId>& x);

// Edges whose tail lies in x and head does not.
std::vector<Edge> out_cut(const Digraph& g, const std::vector<VertexId>& x);

// Same vertex set, edge set minus f. Throws MissingEdgeError if any member
// of f is absent.
Digraph remove_edges(const Digraph& g, const std::vector<Edge>& f);

// out_cut({v}) united with in_cut({v}).
std::vector<Edge> incident_edges(const Digraph& g, VertexId v);

}  // namespace confault

#endif
