#include <cmath>
#include <random>
#include <vector>

#include "confault/digraph.hpp"
#include "confault/distinguish.hpp"
#include "confault/errors.hpp"
#include "confault/sim.hpp"
#include "doctest.h"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using confault::Digraph;
using confault::RealMatrix;
using confault::uniform_grid;

namespace {

// closed-form transition matrices for the first example pair
RealMatrix closed_form_g1(double t) {
    const double e2 = std::exp(-2.0 * t);
    RealMatrix m(3, 3);
    m.at(0, 0) = 0.5 * (1 + e2);
    m.at(0, 1) = 0.0;
    m.at(0, 2) = 0.5 * (1 - e2);
    m.at(1, 0) = 0.5 * (1 - e2);
    m.at(1, 1) = e2;
    m.at(1, 2) = 0.5 * (1 - e2);
    m.at(2, 0) = 0.5 * (1 - e2);
    m.at(2, 1) = 0.0;
    m.at(2, 2) = 0.5 * (1 + e2);
    return m;
}

RealMatrix closed_form_g2(double t) {
    const double e1 = std::exp(-t);
    const double e2 = std::exp(-2.0 * t);
    RealMatrix m(3, 3);
    m.at(0, 0) = 0.5 * (1 + e2);
    m.at(0, 1) = 0.0;
    m.at(0, 2) = 0.5 * (1 - e2);
    m.at(1, 0) = 0.5 * (1 - e2);
    m.at(1, 1) = e1;
    m.at(1, 2) = 0.5 * (1 + e2) - e1;
    m.at(2, 0) = 0.5 * (1 - e2);
    m.at(2, 1) = 0.0;
    m.at(2, 2) = 0.5 * (1 + e2);
    return m;
}

double max_entry_diff(const RealMatrix& a, const RealMatrix& b) {
    double worst = 0.0;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            worst = std::max(worst, std::abs(a.at(r, c) - b.at(r, c)));
    return worst;
}

}  // namespace

TEST_CASE("expm_neg_lt at t = 0 is the identity") {
    const auto m = expm_neg_lt(laplacian(ex3_g()), 0.0);
    CHECK(max_entry_diff(m, RealMatrix::identity(4)) < 1e-15);
}

TEST_CASE("expm_neg_lt matches the closed forms") {
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        CHECK(max_entry_diff(expm_neg_lt(laplacian(ex1_g1()), t), closed_form_g1(t)) < 1e-12);
        CHECK(max_entry_diff(expm_neg_lt(laplacian(ex1_g2()), t), closed_form_g2(t)) < 1e-12);
    }
}

TEST_CASE("transition matrices are stochastic-like: rows sum to one") {
    std::mt19937 rng(7501);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = oracles::random_digraph(rng, 3 + trial % 5, 0.5);
        const auto m = expm_neg_lt(laplacian(g), 0.3 + 0.4 * trial);
        for (int r = 0; r < m.rows(); ++r) {
            double sum = 0.0;
            for (int c = 0; c < m.cols(); ++c) {
                sum += m.at(r, c);
                CHECK(m.at(r, c) > -1e-12);  // entries of e^{-Lt} stay nonnegative
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("semigroup property") {
    std::mt19937 rng(7502);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = oracles::random_digraph(rng, 4, 0.5);
        const auto l = laplacian(g);
        const auto full = expm_neg_lt(l, 1.7);
        const auto split = expm_neg_lt(l, 1.0) * expm_neg_lt(l, 0.7);
        CHECK(max_entry_diff(full, split) < 1e-12);
    }
}

TEST_CASE("expm agrees with a truncated Taylor series at small t") {
    std::mt19937 rng(7503);
    const double t = 1e-3;
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = oracles::random_digraph(rng, 4, 0.5);
        const auto l = laplacian(g);
        RealMatrix taylor = RealMatrix::identity(4);
        RealMatrix term = RealMatrix::identity(4);
        RealMatrix lt(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) lt.at(r, c) = -t * l.at(r, c).convert_to<double>();
        for (int m = 1; m <= 6; ++m) {
            term = (1.0 / m) * (term * lt);
            taylor = taylor + term;
        }
        CHECK(max_entry_diff(expm_neg_lt(l, t), taylor) < 1e-14);
    }
}

TEST_CASE("uniform_grid") {
    const auto grid = uniform_grid(5.0, 500);
    CHECK(grid.size() == 501);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == doctest::Approx(5.0));
    CHECK(grid[100] == doctest::Approx(1.0));
    CHECK_THROWS_AS(uniform_grid(5.0, 0), confault::Error);
    CHECK_THROWS_AS(uniform_grid(-1.0, 10), confault::Error);
}

TEST_CASE("simulate") {
    // known coordinate solution: from e1 in the first example,
    // x2(t) = (1 - e^{-2t}) / 2
    const auto traj = simulate(ex1_g1(), {1.0, 0.0, 0.0}, uniform_grid(2.0, 100));
    REQUIRE(traj.states.size() == 101);
    for (size_t k = 0; k < traj.grid.size(); ++k) {
        const double expect = 0.5 * (1.0 - std::exp(-2.0 * traj.grid[k]));
        CHECK(traj.states[k][1] == doctest::Approx(expect).epsilon(1e-10));
    }

    // x1 is autonomous in the second worked example: in(1) is empty
    const auto flat = simulate(ex2_g(), {3.0, -1.0, 2.0, 0.5}, uniform_grid(4.0, 50));
    for (const auto& state : flat.states) CHECK(state[0] == doctest::Approx(3.0).epsilon(1e-12));

    CHECK_THROWS_AS(simulate(ex1_g1(), {1.0, 0.0}, uniform_grid(1.0, 10)),
                    confault::DimensionMismatchError);
    CHECK_THROWS_AS(simulate(ex1_g1(), {1.0, 0.0, 0.0}, {}), confault::Error);
    CHECK_THROWS_AS(simulate(ex1_g1(), {1.0, 0.0, 0.0}, {-1.0, 0.0}), confault::Error);
    CHECK_THROWS_AS(simulate(ex1_g1(), {1.0, 0.0, 0.0}, {0.0, 0.5, 0.5}), confault::Error);
}

TEST_CASE("consensus: strongly connected digraphs agree in the limit") {
    const auto traj = simulate(bitriangle(), {9.0, 0.0, -3.0}, {40.0});
    const auto& last = traj.states.back();
    CHECK(std::abs(last[0] - last[1]) < 1e-9);
    CHECK(std::abs(last[1] - last[2]) < 1e-9);
}

TEST_CASE("non-uniform grids agree with uniform ones") {
    const auto g = ex3_g();
    const std::vector<double> x0 = {1.0, -2.0, 0.5, 3.0};
    const std::vector<double> ragged = {0.0, 0.31, 0.9, 1.4, 2.75};
    const auto a = simulate(g, x0, ragged);
    for (size_t k = 0; k < ragged.size(); ++k) {
        // singleton grids take the one-exponential path
        const auto b = simulate(g, x0, ragged[k] == 0.0 ? std::vector<double>{0.0}
                                                        : std::vector<double>{ragged[k]});
        for (int v = 0; v < 4; ++v)
            CHECK(a.states[k][static_cast<size_t>(v)] ==
                  doctest::Approx(b.states[0][static_cast<size_t>(v)]).epsilon(1e-11));
    }
}

TEST_CASE("response_gap splits the first example pair from observer 2") {
    const auto grid = uniform_grid(5.0, 200);
    const auto x0 = witness_initial_condition(ex1_g1(), ex1_g2(), 2);
    const auto gap = response_gap(ex1_g1(), ex1_g2(), 2, x0, grid);
    CHECK(gap.observer == 2);
    CHECK(gap.gap.size() == grid.size());
    CHECK(gap.gap.front() == 0.0);

    // |e^{-2t} - e^{-t}| peaks at ln 2 with value 1/4
    CHECK(gap.max_gap == doctest::Approx(0.25).epsilon(1e-3));
    const auto at = [&](double t) { return std::abs(std::exp(-2.0 * t) - std::exp(-t)); };
    for (size_t k = 0; k < grid.size(); ++k)
        CHECK(gap.gap[k] == doctest::Approx(at(grid[k])).epsilon(1e-9));
}

TEST_CASE("response_gap vanishes for indistinguishable pairs and masked states") {
    const auto grid = uniform_grid(5.0, 100);
    const auto gap1 = response_gap(ex1_g1(), ex1_g2(), 1, {0.4, -1.0, 2.2}, grid);
    CHECK(gap1.max_gap < 1e-12);

    // psi = (2 3) fixes this state, so observer 4 sees nothing
    const auto gap4 = response_gap(ex2_g1(), ex2_g2(), 4, {0.0, 5.0, 5.0, 1.0}, grid);
    CHECK(gap4.max_gap < 1e-12);

    // while an unmasked state is visible there
    const auto loud = response_gap(ex2_g1(), ex2_g2(), 4, {0.0, 5.0, 4.0, 1.0}, grid);
    CHECK(loud.max_gap > 1e-3);

    CHECK_THROWS_AS(response_gap(ex1_g1(), ex2_g(), 1, {1, 0, 0}, grid),
                    confault::DimensionMismatchError);
    CHECK_THROWS_AS(response_gap(ex1_g1(), ex1_g2(), 7, {1, 0, 0}, grid),
                    confault::OutOfRangeError);
}
