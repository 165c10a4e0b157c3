#ifndef CONFAULT_SIM_HPP
#define CONFAULT_SIM_HPP

#include <vector>

#include "confault/digraph.hpp"
#include "confault/int_matrix.hpp"
#include "confault/real_matrix.hpp"

namespace confault {

// Sampled solution of x' = -L x. Floating point is used for trajectories
// only; every verdict in this library comes from exact arithmetic, and
// simulation serves as evidence and export.
struct Trajectory {
    std::vector<double> grid;
    std::vector<std::vector<double>> states;  // states[k][v-1] at time grid[k]
};

struct ResponseGap {
    VertexId observer{};
    std::vector<double> grid;
    std::vector<double> gap;  // |x_i difference| per grid point
    double max_gap{};
};

// e^{-L t} by scaling and squaring with a degree-13 Pade approximant.
RealMatrix expm_neg_lt(const IntMatrix& l, double t);

// steps + 1 evenly spaced samples on [0, tmax].
std::vector<double> uniform_grid(double tmax, int steps);

// states[k] = e^{-L grid[k]} x0. A uniform grid is advanced with a single
// precomputed step matrix; arbitrary grids fall back to one exponential
// per sample.
Trajectory simulate(const Digraph& g, const std::vector<double>& x0,
                    const std::vector<double>& grid);

ResponseGap response_gap(const Digraph& g1, const Digraph& g2, VertexId i,
                         const std::vector<double>& x0, const std::vector<double>& grid);

}  // namespace confault

#endif
