#include <algorithm>
#include <random>
#include <vector>

#include "confault/detect.hpp"
#include "confault/errors.hpp"
#include "confault/paths.hpp"
#include "doctest.h"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using confault::Digraph;
using confault::Edge;
using confault::ObservationPlan;
using confault::ObserveMode;
using confault::Verdict;

TEST_CASE("prop1_check") {
    const auto pos = prop1_check(ex3_g(), {{1, 2}}, 4);
    CHECK(pos.verdict == Verdict::positive);
    CHECK(pos.witness == Edge{1, 2});

    // first qualifying edge in the given order is reported
    const auto multi = prop1_check(ex3_g(), {{1, 3}, {1, 2}}, 4);
    CHECK(multi.verdict == Verdict::positive);
    CHECK(multi.witness == Edge{1, 3});

    CHECK(prop1_check(ex3_g(), {{1, 2}}, 1).verdict == Verdict::negative);

    // an unreachable head never qualifies
    const auto g = Digraph::from_edge_list(3, {{1, 2}, {2, 1}, {1, 3}});
    CHECK(prop1_check(g, {{1, 3}}, 1).verdict == Verdict::negative);

    CHECK(prop1_check(ex3_g(), {}, 2).verdict == Verdict::negative);
    CHECK_THROWS_AS(prop1_check(ex3_g(), {{4, 1}}, 2), confault::MissingEdgeError);
    CHECK_THROWS_AS(prop1_check(ex3_g(), {{1, 2}}, 9), confault::OutOfRangeError);
}

TEST_CASE("prop1 positives are confirmed by the exact oracle") {
    std::mt19937 rng(7301);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracles::random_digraph(rng, 3 + trial % 5, 0.45);
        if (g.edge_count() == 0) continue;
        const auto f = oracles::random_failure(rng, g, 2);
        for (int i = 1; i <= g.vertex_count(); ++i)
            if (prop1_check(g, f, i).verdict == Verdict::positive)
                CHECK(exact_detectable(g, f, i).distinguishable);
    }
}

TEST_CASE("prop2_check") {
    const auto pos = prop2_check(ex3_g(), {{1, 2}}, 1);
    CHECK(pos.verdict == Verdict::positive);
    CHECK(pos.common_head == 2);
    CHECK(pos.root == 1);

    const auto neg = prop2_check(ex3_g(), {{2, 4}}, 1);
    CHECK(neg.verdict == Verdict::negative);
    CHECK(neg.common_head == 4);
    CHECK(!neg.root.has_value());

    CHECK(prop2_check(star5(), {{1, 5}}, 2).verdict == Verdict::negative);

    const auto mixed = prop2_check(ex3_g(), {{1, 2}, {1, 3}}, 1);
    CHECK(mixed.verdict == Verdict::not_applicable);
    CHECK(!mixed.common_head.has_value());
    CHECK(prop2_check(ex3_g(), {}, 1).verdict == Verdict::not_applicable);

    // shared head, both edges lost at once; the only remaining root is the
    // head itself, which does not qualify
    const auto joint = prop2_check(ex3_g(), {{1, 3}, {2, 3}}, 1);
    CHECK(joint.common_head == 3);
    CHECK(joint.verdict == Verdict::negative);
}

TEST_CASE("prop2 positives are confirmed by the exact oracle") {
    std::mt19937 rng(7302);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracles::random_digraph(rng, 3 + trial % 5, 0.45);
        if (g.edge_count() == 0) continue;
        const auto f = oracles::random_failure(rng, g, 2);
        for (int i = 1; i <= g.vertex_count(); ++i)
            if (prop2_check(g, f, i).verdict == Verdict::positive)
                CHECK(exact_detectable(g, f, i).distinguishable);
    }
}

TEST_CASE("cor2_check") {
    CHECK(cor2_check(bitriangle()));
    CHECK(!cor2_check(cycle3()));
    CHECK(!cor2_check(ex3_g()));

    // the guarantee it states: every single failure, every observer
    const auto tri = bitriangle();
    for (const Edge& e : tri.edges())
        for (int i = 1; i <= 3; ++i)
            CHECK(exact_detectable(tri, {e}, i).distinguishable);
}

TEST_CASE("cor3_check") {
    const auto pos = cor3_check(ex3_g(), {{1, 2}}, 4);
    CHECK(pos.verdict == Verdict::positive);
    CHECK(pos.witness == Edge{1, 2});

    CHECK(cor3_check(ex3_g(), {{3, 2}}, 4).verdict == Verdict::negative);
    CHECK(cor3_check(ex3_g(), {{1, 2}}, 1).verdict == Verdict::not_applicable);

    std::mt19937 rng(7303);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracles::random_digraph(rng, 3 + trial % 5, 0.5);
        if (g.edge_count() == 0) continue;
        const auto f = oracles::random_failure(rng, g, 2);
        for (int i = 1; i <= g.vertex_count(); ++i)
            if (cor3_check(g, f, i).verdict == Verdict::positive)
                CHECK(exact_detectable(g, f, i).distinguishable);
    }
}

TEST_CASE("exact_detectable and the full report") {
    CHECK(exact_detectable(ex3_g(), {{1, 2}}, 1).distinguishable);
    CHECK(exact_detectable(ex3_g(), {{1, 2}}, 1).first_divergent_moment == 3);
    CHECK(!exact_detectable(ex3_g(), {{2, 4}}, 1).distinguishable);

    const auto rep = detectability_report(ex3_g(), {{1, 2}}, 1);
    CHECK(rep.failure_set == std::vector<Edge>{{1, 2}});
    CHECK(rep.observer == 1);
    CHECK(rep.prop1.verdict == Verdict::negative);
    CHECK(rep.prop2.verdict == Verdict::positive);
    CHECK(rep.cor3.verdict == Verdict::not_applicable);
    CHECK(rep.exact.distinguishable);
}

TEST_CASE("node_failure_detectable") {
    const auto rep = node_failure_detectable(ex2_g(), 4, 1);
    CHECK(rep.failure_set == std::vector<Edge>{{2, 4}, {3, 4}});
    CHECK(!rep.exact.distinguishable);
    CHECK(rep.prop2.verdict == Verdict::negative);

    const auto seen = node_failure_detectable(ex2_g(), 4, 4);
    CHECK(seen.exact.distinguishable);
    CHECK(seen.exact.first_divergent_moment == 1);
}

TEST_CASE("greedy_observation_set on the examples") {
    for (ObserveMode mode : {ObserveMode::set_cover, ObserveMode::literal}) {
        const ObservationPlan plan = greedy_observation_set(ex3_g(), mode);
        CHECK(plan.observers == std::vector<int>{4, 1, 2});
        REQUIRE(plan.covered.size() == 3);
        CHECK(plan.covered[0] == std::vector<Edge>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});
        CHECK(plan.covered[1] == std::vector<Edge>{{2, 3}, {3, 1}});
        CHECK(plan.covered[2] == std::vector<Edge>{{3, 2}});
        CHECK(plan.residual.empty());
    }

    const auto star = greedy_observation_set(star5());
    CHECK(star.observers == std::vector<int>{5});
    CHECK(star.covered[0] == star5().edges());
    CHECK(star.residual.empty());

    const auto empty = greedy_observation_set(Digraph(3, {}));
    CHECK(empty.observers.empty());
    CHECK(empty.covered.empty());
    CHECK(empty.residual.empty());

    const auto ring = greedy_observation_set(cycle3());
    CHECK(ring.observers == std::vector<int>{1, 2});
}

TEST_CASE("greedy matches the optimum on the worked example") {
    // brute-force smallest set of observers whose relaxed subgraphs cover E
    const auto g = ex3_g();
    std::vector<std::vector<Edge>> kept;
    for (int v = 1; v <= 4; ++v)
        kept.push_back(shortest_paths_subgraph(g, v, confault::SubgraphMode::relaxed).kept_edges);
    int best = 5;
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<Edge> got;
        for (int v = 0; v < 4; ++v)
            if (mask & (1 << v)) got.insert(got.end(), kept[v].begin(), kept[v].end());
        std::sort(got.begin(), got.end());
        got.erase(std::unique(got.begin(), got.end()), got.end());
        if (got == g.edges()) best = std::min(best, __builtin_popcount(mask));
    }
    CHECK(best == 3);
    CHECK(greedy_observation_set(g).observers.size() == 3);
}

TEST_CASE("observation plans are disjoint covers") {
    std::mt19937 rng(7304);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = oracles::random_digraph(rng, 2 + trial % 7, 0.35);
        for (ObserveMode mode : {ObserveMode::set_cover, ObserveMode::literal}) {
            const ObservationPlan plan = greedy_observation_set(g, mode);
            CHECK(plan.observers.size() <= static_cast<size_t>(g.vertex_count()));
            CHECK(plan.observers.size() == plan.covered.size());

            auto unique_obs = plan.observers;
            std::sort(unique_obs.begin(), unique_obs.end());
            CHECK(std::adjacent_find(unique_obs.begin(), unique_obs.end()) == unique_obs.end());

            std::vector<Edge> all = plan.residual;
            for (const auto& batch : plan.covered) {
                CHECK(!batch.empty());
                all.insert(all.end(), batch.begin(), batch.end());
            }
            std::sort(all.begin(), all.end());
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            CHECK(all == g.edges());

            // every edge lies in its head's relaxed subgraph, so nothing is left over
            CHECK(plan.residual.empty());
        }
    }
}
