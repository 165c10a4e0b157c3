#include "confault/sim.hpp"

#include <cmath>
#include <string>

#include "confault/errors.hpp"

namespace confault {

namespace {

RealMatrix to_real(const IntMatrix& m, double scale) {
    RealMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out.at(r, c) = scale * m.at(r, c).convert_to<double>();
    return out;
}

// Degree-13 diagonal Pade approximant with scaling and squaring; accurate
// to roughly unit roundoff once the scaled one-norm is below theta.
RealMatrix expm(const RealMatrix& a) {
    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};
    static const double theta = 5.371920351148152;

    const int n = a.rows();
    int squarings = 0;
    const double norm = one_norm(a);
    if (norm > theta) squarings = static_cast<int>(std::ceil(std::log2(norm / theta)));

    const RealMatrix as = std::ldexp(1.0, -squarings) * a;
    const RealMatrix ident = RealMatrix::identity(n);
    const RealMatrix a2 = as * as;
    const RealMatrix a4 = a2 * a2;
    const RealMatrix a6 = a2 * a4;

    const RealMatrix u =
        as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
              b[1] * ident);
    const RealMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                         b[2] * a2 + b[0] * ident;

    RealMatrix x = solve(v - u, v + u);
    for (int s = 0; s < squarings; ++s) x = x * x;
    return x;
}

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw Error("time grid is empty");
    if (grid.front() < 0.0) throw Error("time grid starts before 0");
    for (size_t k = 1; k < grid.size(); ++k)
        if (grid[k] <= grid[k - 1]) throw Error("time grid must be strictly increasing");
}

bool is_uniform(const std::vector<double>& grid) {
    if (grid.size() < 3) return grid.size() == 2;
    const double dt = grid[1] - grid[0];
    for (size_t k = 1; k < grid.size(); ++k)
        if (std::abs(grid[k] - grid[0] - static_cast<double>(k) * dt) > 1e-9 * (1.0 + std::abs(grid[k])))
            return false;
    return true;
}

}  // namespace

RealMatrix expm_neg_lt(const IntMatrix& l, double t) {
    if (l.rows() != l.cols()) throw NonSquareError(l.rows(), l.cols());
    return expm(to_real(l, -t));
}

std::vector<double> uniform_grid(double tmax, int steps) {
    if (steps < 1) throw Error("grid needs at least one step");
    if (tmax <= 0.0) throw Error("tmax must be positive");
    std::vector<double> grid(static_cast<size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k)
        grid[static_cast<size_t>(k)] = tmax * static_cast<double>(k) / steps;
    return grid;
}

Trajectory simulate(const Digraph& g, const std::vector<double>& x0,
                    const std::vector<double>& grid) {
    if (static_cast<int>(x0.size()) != g.vertex_count())
        throw DimensionMismatchError("initial state has " + std::to_string(x0.size()) +
                                     " entries for a digraph on " +
                                     std::to_string(g.vertex_count()) + " vertices");
    check_grid(grid);

    const IntMatrix l = laplacian(g);
    Trajectory traj;
    traj.grid = grid;
    traj.states.reserve(grid.size());

    std::vector<double> state =
        grid.front() == 0.0 ? x0 : matvec(expm_neg_lt(l, grid.front()), x0);
    traj.states.push_back(state);

    if (is_uniform(grid)) {
        const RealMatrix step = expm_neg_lt(l, grid[1] - grid[0]);
        for (size_t k = 1; k < grid.size(); ++k) {
            state = matvec(step, state);
            traj.states.push_back(state);
        }
    } else {
        for (size_t k = 1; k < grid.size(); ++k)
            traj.states.push_back(matvec(expm_neg_lt(l, grid[k]), x0));
    }
    return traj;
}

ResponseGap response_gap(const Digraph& g1, const Digraph& g2, VertexId i,
                         const std::vector<double>& x0, const std::vector<double>& grid) {
    if (g1.vertex_count() != g2.vertex_count())
        throw DimensionMismatchError("digraphs have " + std::to_string(g1.vertex_count()) +
                                     " and " + std::to_string(g2.vertex_count()) + " vertices");
    if (i < 1 || i > g1.vertex_count()) throw OutOfRangeError(i, g1.vertex_count());

    const Trajectory t1 = simulate(g1, x0, grid);
    const Trajectory t2 = simulate(g2, x0, grid);
    ResponseGap out;
    out.observer = i;
    out.grid = grid;
    out.gap.reserve(grid.size());
    for (size_t k = 0; k < grid.size(); ++k) {
        const double d = std::abs(t1.states[k][static_cast<size_t>(i - 1)] -
                                  t2.states[k][static_cast<size_t>(i - 1)]);
        out.gap.push_back(d);
        if (d > out.max_gap) out.max_gap = d;
    }
    return out;
}

}  // namespace confault
