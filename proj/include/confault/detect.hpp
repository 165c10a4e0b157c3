#ifndef CONFAULT_DETECT_HPP
#define CONFAULT_DETECT_HPP

#include <optional>
#include <vector>

#include "confault/digraph.hpp"
#include "confault/distinguish.hpp"

namespace confault {

// The graphical criteria are sufficient conditions only, and two of them
// carry applicability hypotheses, so "did not apply" is reported apart
// from "applied and failed".
enum class Verdict { positive, negative, not_applicable };

struct EdgeWitnessResult {
    Verdict verdict{};
    std::optional<Edge> witness;
};

struct Prop2Result {
    Verdict verdict{};
    std::optional<VertexId> common_head;
    std::optional<VertexId> root;
};

struct DetectReport {
    std::vector<Edge> failure_set;
    VertexId observer{};
    EdgeWitnessResult prop1;
    Prop2Result prop2;
    EdgeWitnessResult cor3;
    DistinguishVerdict exact;
};

enum class ObserveMode { set_cover, literal };

// Greedy choice of observer vertices whose shortest-paths subgraphs cover
// the edge set. covered[k] holds the edges newly covered by observers[k];
// residual lists edges no observer's subgraph reaches.
struct ObservationPlan {
    std::vector<VertexId> observers;
    std::vector<std::vector<Edge>> covered;
    std::vector<Edge> residual;
};

// Positive iff some failed edge has its tail strictly farther from the
// observer than its head (distances in the intact digraph; an unreachable
// head never qualifies). Returns the first such edge.
EdgeWitnessResult prop1_check(const Digraph& g, const std::vector<Edge>& f, VertexId i);

// Applies only when all failed edges share one head. Positive iff, after
// removing them, some other vertex is an out-branching root of the residual
// digraph and is reachable from the common head within it.
Prop2Result prop2_check(const Digraph& g, const std::vector<Edge>& f, VertexId i);

// True iff removing any single edge leaves the digraph strongly connected;
// then every single-link failure is detectable from every agent.
bool cor2_check(const Digraph& g);

// Applies only when every other vertex can reach the observer. Positive
// iff the failure set meets the observer's shortest-paths subgraph.
EdgeWitnessResult cor3_check(const Digraph& g, const std::vector<Edge>& f, VertexId i);

// Exact oracle: the failure set is jointly detectable iff the intact and
// failed digraphs are distinguishable from the observer.
DistinguishVerdict exact_detectable(const Digraph& g, const std::vector<Edge>& f, VertexId i);

// Runs every criterion above plus the exact oracle.
DetectReport detectability_report(const Digraph& g, const std::vector<Edge>& f, VertexId i);

// Node failure as the loss of all edges incident to v.
DetectReport node_failure_detectable(const Digraph& g, VertexId v, VertexId i);

// set_cover computes every relaxed shortest-paths subgraph on the original
// digraph once and greedily covers; literal removes each picked subgraph
// and recomputes on the shrunken digraph. Ties go to the smallest vertex
// id, and both modes stop as soon as the best marginal coverage is empty.
ObservationPlan greedy_observation_set(const Digraph& g, ObserveMode mode = ObserveMode::set_cover);

}  // namespace confault

#endif
