#include "confault/paths.hpp"

#include <algorithm>
#include <queue>

#include "confault/errors.hpp"

namespace confault {

namespace {

void check_vertex(const Digraph& g, VertexId v) {
    if (v < 1 || v > g.vertex_count()) throw OutOfRangeError(v, g.vertex_count());
}

// Vertices reachable from start along forward edges, as a mask over 1..n.
std::vector<char> forward_reachable(const Digraph& g, VertexId start) {
    std::vector<char> seen(g.vertex_count() + 1, 0);
    std::queue<VertexId> q;
    seen[start] = 1;
    q.push(start);
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (VertexId w : g.out_neighbors()[u - 1]) {
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    return seen;
}

}  // namespace

DistanceVector distances_to(const Digraph& g, VertexId target) {
    check_vertex(g, target);
    DistanceVector dv;
    dv.target = target;
    dv.dist.assign(g.vertex_count(), kUnreachable);
    std::queue<VertexId> q;
    dv.dist[target - 1] = 0;
    q.push(target);
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (VertexId w : g.in_neighbors()[u - 1]) {
            if (dv.dist[w - 1] == kUnreachable) {
                dv.dist[w - 1] = dv.dist[u - 1] + 1;
                q.push(w);
            }
        }
    }
    return dv;
}

PathCount shortest_path_count(const Digraph& g, VertexId source, VertexId target) {
    check_vertex(g, source);
    check_vertex(g, target);
    if (source == target) return {source, target, 0, 1};

    const DistanceVector dv = distances_to(g, target);
    if (!dv.reachable(source)) return {source, target, kUnreachable, 0};

    // count[v] = number of shortest v->target paths. Every edge on a
    // shortest path drops the distance by exactly one, so accumulating in
    // order of increasing distance visits each vertex after its successors.
    std::vector<VertexId> order;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (dv.reachable(v)) order.push_back(v);
    std::sort(order.begin(), order.end(),
              [&](VertexId a, VertexId b) { return dv.at(a) < dv.at(b); });

    std::vector<Int> count(g.vertex_count() + 1, 0);
    count[target] = 1;
    for (VertexId v : order) {
        if (v == target) continue;
        for (VertexId w : g.out_neighbors()[v - 1])
            if (dv.reachable(w) && dv.at(w) == dv.at(v) - 1) count[v] += count[w];
    }
    return {source, target, dv.at(source), count[source]};
}

namespace {

Int count_simple_paths(const Digraph& g, VertexId cur, VertexId target, int remaining,
                       std::vector<char>& visited) {
    if (remaining == 0) return cur == target ? 1 : 0;
    Int total = 0;
    for (VertexId w : g.out_neighbors()[cur - 1]) {
        if (visited[w]) continue;
        visited[w] = 1;
        total += count_simple_paths(g, w, target, remaining - 1, visited);
        visited[w] = 0;
    }
    return total;
}

}  // namespace

PathCount count_paths_of_length(const Digraph& g, VertexId source, VertexId target, int k) {
    check_vertex(g, source);
    check_vertex(g, target);
    if (k < 1 || k > g.vertex_count() - 1) throw BadLengthError(k, g.vertex_count());
    std::vector<char> visited(g.vertex_count() + 1, 0);
    visited[source] = 1;
    return {source, target, k, count_simple_paths(g, source, target, k, visited)};
}

ShortestPathsSubgraph shortest_paths_subgraph(const Digraph& g, VertexId root, SubgraphMode mode) {
    check_vertex(g, root);
    const DistanceVector dv = distances_to(g, root);
    if (mode == SubgraphMode::strict) {
        for (VertexId v = 1; v <= g.vertex_count(); ++v)
            if (!dv.reachable(v)) throw NotCoReachableError(v, root);
    }
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        if (e.tail == root) continue;
        if (!dv.reachable(e.tail) || !dv.reachable(e.head)) continue;
        if (dv.at(e.tail) == dv.at(e.head) + 1) kept.push_back(e);
    }
    return {g, root, std::move(kept)};
}

std::vector<VertexId> out_branching_roots(const Digraph& g) {
    std::vector<VertexId> roots;
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        const auto seen = forward_reachable(g, v);
        if (std::count(seen.begin() + 1, seen.end(), 1) == g.vertex_count()) roots.push_back(v);
    }
    return roots;
}

bool is_strongly_connected(const Digraph& g) {
    const auto fwd = forward_reachable(g, 1);
    if (std::count(fwd.begin() + 1, fwd.end(), 1) != g.vertex_count()) return false;
    const DistanceVector dv = distances_to(g, 1);
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        if (!dv.reachable(v)) return false;
    return true;
}

Int enumerate_outbranchings(const Digraph& g, VertexId root) {
    check_vertex(g, root);
    const int n = g.vertex_count();
    if (n > 8) throw TooLargeError(n, 8);

    std::vector<VertexId> others;
    for (VertexId v = 1; v <= n; ++v)
        if (v != root) others.push_back(v);
    for (VertexId v : others)
        if (g.in_neighbors()[v - 1].empty()) return 0;

    // parent[v] = chosen in-neighbor of v; reachability from root then
    // certifies the choice spans an out-branching (n-1 edges, one in-edge
    // per non-root vertex, so reaching everything rules out circles).
    std::vector<VertexId> parent(n + 1, 0);
    std::vector<std::vector<VertexId>> children(n + 1);
    Int count = 0;

    auto spans = [&]() {
        for (auto& c : children) c.clear();
        for (VertexId v : others) children[parent[v]].push_back(v);
        std::vector<char> seen(n + 1, 0);
        std::queue<VertexId> q;
        seen[root] = 1;
        q.push(root);
        int reached = 1;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (VertexId w : children[u]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
        return reached == n;
    };

    // Odometer over the in-neighbor choices of the non-root vertices.
    std::vector<size_t> pick(others.size(), 0);
    while (true) {
        for (size_t t = 0; t < others.size(); ++t)
            parent[others[t]] = g.in_neighbors()[others[t] - 1][pick[t]];
        if (spans()) ++count;
        size_t t = 0;
        while (t < others.size()) {
            if (++pick[t] < g.in_neighbors()[others[t] - 1].size()) break;
            pick[t] = 0;
            ++t;
        }
        if (t == others.size()) break;
    }
    return count;
}

}  // namespace confault
