#ifndef CONFAULT_PATHS_HPP
#define CONFAULT_PATHS_HPP

#include <vector>

#include "confault/bigint.hpp"
#include "confault/digraph.hpp"

namespace confault {

// Sentinel for "no path". Finite distances are always in [0, n-1], so -1
// is unambiguous; comparisons against it must be explicit.
inline constexpr int kUnreachable = -1;

// Directed distances from every vertex to a fixed target.
struct DistanceVector {
    VertexId target{};
    std::vector<int> dist;  // dist[v-1]; kUnreachable when v cannot reach target

    int at(VertexId v) const { return dist[static_cast<size_t>(v - 1)]; }
    bool reachable(VertexId v) const { return at(v) != kUnreachable; }
};

// Number of simple directed source->target paths of a given length.
struct PathCount {
    VertexId source{};
    VertexId target{};
    int length{};  // kUnreachable when no path exists at all
    Int count{};
};

enum class SubgraphMode { strict, relaxed };

// Edges guaranteed to lie on a shortest path toward root: keep (tau, theta)
// with tail != root whenever d(tau, root) = d(theta, root) + 1.
struct ShortestPathsSubgraph {
    Digraph base;
    VertexId root{};
    std::vector<Edge> kept_edges;  // sorted
};

// Breadth-first search over reversed edges.
DistanceVector distances_to(const Digraph& g, VertexId target);

// Distance and number of shortest source->target paths, by layered dynamic
// programming (shortest walks are simple, so the count is exact). Returns
// (0, 1) for source == target and (kUnreachable, 0) when no path exists.
PathCount shortest_path_count(const Digraph& g, VertexId source, VertexId target);

// Exhaustive count of simple paths of length exactly k. Exponential in the
// worst case; meant for small instances and as a cross-check oracle.
// Throws BadLengthError unless 1 <= k <= n-1.
PathCount count_paths_of_length(const Digraph& g, VertexId source, VertexId target, int k);

// Strict mode requires every other vertex to reach root and throws
// NotCoReachableError otherwise; relaxed mode drops edges with an endpoint
// at infinite distance.
ShortestPathsSubgraph shortest_paths_subgraph(const Digraph& g, VertexId root, SubgraphMode mode);

// Vertices from which every other vertex is reachable, ascending.
std::vector<VertexId> out_branching_roots(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

// Brute-force count of root-rooted spanning out-branchings: picks one
// in-edge per non-root vertex and keeps the choices that leave every vertex
// reachable from root. Throws TooLargeError for n > 8.
Int enumerate_outbranchings(const Digraph& g, VertexId root);

}  // namespace confault

#endif
