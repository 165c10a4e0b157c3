#include "confault/detect.hpp"

#include <algorithm>
#include <queue>

#include "confault/errors.hpp"
#include "confault/paths.hpp"

namespace confault {

namespace {

void check_vertex(const Digraph& g, VertexId v) {
    if (v < 1 || v > g.vertex_count()) throw OutOfRangeError(v, g.vertex_count());
}

void check_failure_set(const Digraph& g, const std::vector<Edge>& f) {
    for (const Edge& e : f) {
        if (e.tail < 1 || e.tail > g.vertex_count()) throw OutOfRangeError(e.tail, g.vertex_count());
        if (e.head < 1 || e.head > g.vertex_count()) throw OutOfRangeError(e.head, g.vertex_count());
        if (!g.has_edge(e)) throw MissingEdgeError(e.tail, e.head);
    }
}

std::vector<char> forward_reachable(const Digraph& g, VertexId start) {
    std::vector<char> seen(g.vertex_count() + 1, 0);
    std::queue<VertexId> q;
    seen[start] = 1;
    q.push(start);
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (VertexId w : g.out_neighbors()[u - 1])
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
    }
    return seen;
}

}  // namespace

EdgeWitnessResult prop1_check(const Digraph& g, const std::vector<Edge>& f, VertexId i) {
    check_vertex(g, i);
    check_failure_set(g, f);
    const DistanceVector dv = distances_to(g, i);
    for (const Edge& e : f) {
        const int d_tail = dv.at(e.tail);
        const int d_head = dv.at(e.head);
        if (d_head == kUnreachable) continue;
        if (d_tail == kUnreachable || d_tail > d_head) return {Verdict::positive, e};
    }
    return {Verdict::negative, std::nullopt};
}

Prop2Result prop2_check(const Digraph& g, const std::vector<Edge>& f, VertexId i) {
    check_vertex(g, i);
    check_failure_set(g, f);
    if (f.empty()) return {Verdict::not_applicable, std::nullopt, std::nullopt};
    const VertexId head = f.front().head;
    for (const Edge& e : f)
        if (e.head != head) return {Verdict::not_applicable, std::nullopt, std::nullopt};

    const Digraph g2 = remove_edges(g, f);
    const auto from_head = forward_reachable(g2, head);
    for (VertexId root : out_branching_roots(g2))
        if (root != head && from_head[root]) return {Verdict::positive, head, root};
    return {Verdict::negative, head, std::nullopt};
}

bool cor2_check(const Digraph& g) {
    for (const Edge& e : g.edges())
        if (!is_strongly_connected(remove_edges(g, {e}))) return false;
    return true;
}

EdgeWitnessResult cor3_check(const Digraph& g, const std::vector<Edge>& f, VertexId i) {
    check_vertex(g, i);
    check_failure_set(g, f);
    std::vector<Edge> kept;
    try {
        kept = shortest_paths_subgraph(g, i, SubgraphMode::strict).kept_edges;
    } catch (const NotCoReachableError&) {
        return {Verdict::not_applicable, std::nullopt};
    }
    for (const Edge& e : f)
        if (std::binary_search(kept.begin(), kept.end(), e)) return {Verdict::positive, e};
    return {Verdict::negative, std::nullopt};
}

DistinguishVerdict exact_detectable(const Digraph& g, const std::vector<Edge>& f, VertexId i) {
    check_vertex(g, i);
    return is_distinguishable(g, remove_edges(g, f), i);
}

DetectReport detectability_report(const Digraph& g, const std::vector<Edge>& f, VertexId i) {
    DetectReport rep;
    rep.failure_set = f;
    rep.observer = i;
    rep.prop1 = prop1_check(g, f, i);
    rep.prop2 = prop2_check(g, f, i);
    rep.cor3 = cor3_check(g, f, i);
    rep.exact = exact_detectable(g, f, i);
    return rep;
}

DetectReport node_failure_detectable(const Digraph& g, VertexId v, VertexId i) {
    return detectability_report(g, incident_edges(g, v), i);
}

namespace {

std::vector<Edge> relaxed_kept(const Digraph& g, VertexId v) {
    return shortest_paths_subgraph(g, v, SubgraphMode::relaxed).kept_edges;
}

}  // namespace

ObservationPlan greedy_observation_set(const Digraph& g, ObserveMode mode) {
    const int n = g.vertex_count();
    ObservationPlan plan;

    if (mode == ObserveMode::set_cover) {
        std::vector<std::vector<Edge>> kept(n);
        for (VertexId v = 1; v <= n; ++v) kept[v - 1] = relaxed_kept(g, v);

        std::vector<Edge> uncovered = g.edges();  // stays sorted
        while (!uncovered.empty()) {
            VertexId best = 0;
            size_t best_gain = 0;
            for (VertexId v = 1; v <= n; ++v) {
                size_t gain = 0;
                for (const Edge& e : kept[v - 1])
                    if (std::binary_search(uncovered.begin(), uncovered.end(), e)) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best = v;
                }
            }
            if (best == 0) break;
            std::vector<Edge> newly;
            for (const Edge& e : kept[best - 1])
                if (std::binary_search(uncovered.begin(), uncovered.end(), e)) newly.push_back(e);
            std::vector<Edge> rest;
            std::set_difference(uncovered.begin(), uncovered.end(), newly.begin(), newly.end(),
                                std::back_inserter(rest));
            uncovered = std::move(rest);
            plan.observers.push_back(best);
            plan.covered.push_back(std::move(newly));
        }
        plan.residual = std::move(uncovered);
        return plan;
    }

    Digraph work = g;
    while (work.edge_count() > 0) {
        VertexId best = 0;
        size_t best_gain = 0;
        for (VertexId v = 1; v <= n; ++v) {
            const size_t gain = relaxed_kept(work, v).size();
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        if (best == 0) break;
        std::vector<Edge> picked = relaxed_kept(work, best);
        work = remove_edges(work, picked);
        plan.observers.push_back(best);
        plan.covered.push_back(std::move(picked));
    }
    plan.residual = work.edges();
    return plan;
}

}  // namespace confault
