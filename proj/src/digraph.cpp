#include "confault/digraph.hpp"

#include <algorithm>

#include "confault/errors.hpp"

namespace confault {

Digraph::Digraph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw OutOfRangeError(n, 1);
    for (const Edge& e : edges) {
        if (e.tail < 1 || e.tail > n) throw OutOfRangeError(e.tail, n);
        if (e.head < 1 || e.head > n) throw OutOfRangeError(e.head, n);
        if (e.tail == e.head) throw SelfLoopError(e.tail);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    out_.resize(n_);
    in_.resize(n_);
    for (const Edge& e : edges_) {
        out_[e.tail - 1].push_back(e.head);
        in_[e.head - 1].push_back(e.tail);
    }
}

Digraph Digraph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [t, h] : pairs) edges.push_back({t, h});
    return Digraph(n, std::move(edges));
}

bool Digraph::has_edge(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Digraph::contains_all(const std::vector<Edge>& f) const {
    return std::all_of(f.begin(), f.end(), [&](Edge e) { return has_edge(e); });
}

IntMatrix laplacian(const Digraph& g) {
    const int n = g.vertex_count();
    IntMatrix l(n, n);
    for (const Edge& e : g.edges()) {
        l.at(e.head - 1, e.tail - 1) -= 1;
        l.at(e.head - 1, e.head - 1) += 1;
    }
    return l;
}

IntMatrix adjacency(const Digraph& g) {
    const int n = g.vertex_count();
    IntMatrix a(n, n);
    for (const Edge& e : g.edges()) a.at(e.head - 1, e.tail - 1) = 1;
    return a;
}

namespace {

std::vector<char> membership(const Digraph& g, const std::vector<VertexId>& x) {
    std::vector<char> in_x(g.vertex_count() + 1, 0);
    for (VertexId v : x) {
        if (v < 1 || v > g.vertex_count()) throw OutOfRangeError(v, g.vertex_count());
        in_x[v] = 1;
    }
    return in_x;
}

}  // namespace

std::vector<Edge> in_cut(const Digraph& g, const std::vector<VertexId>& x) {
    const auto in_x = membership(g, x);
    std::vector<Edge> cut;
    for (const Edge& e : g.edges())
        if (in_x[e.head] && !in_x[e.tail]) cut.push_back(e);
    return cut;
}

std::vector<Edge> out_cut(const Digraph& g, const std::vector<VertexId>& x) {
    const auto in_x = membership(g, x);
    std::vector<Edge> cut;
    for (const Edge& e : g.edges())
        if (in_x[e.tail] && !in_x[e.head]) cut.push_back(e);
    return cut;
}

Digraph remove_edges(const Digraph& g, const std::vector<Edge>& f) {
    for (const Edge& e : f)
        if (!g.has_edge(e)) throw MissingEdgeError(e.tail, e.head);
    std::vector<Edge> sorted_f(f);
    std::sort(sorted_f.begin(), sorted_f.end());
    std::vector<Edge> kept;
    kept.reserve(g.edges().size());
    std::set_difference(g.edges().begin(), g.edges().end(), sorted_f.begin(), sorted_f.end(),
                        std::back_inserter(kept));
    return Digraph(g.vertex_count(), std::move(kept));
}

std::vector<Edge> incident_edges(const Digraph& g, VertexId v) {
    if (v < 1 || v > g.vertex_count()) throw OutOfRangeError(v, g.vertex_count());
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (e.tail == v || e.head == v) out.push_back(e);
    return out;
}

}  // namespace confault
