#include "confault/distinguish.hpp"

#include <stdexcept>
#include <string>

#include "confault/errors.hpp"
#include "confault/paths.hpp"

namespace confault {

namespace {

void check_vertex(const Digraph& g, VertexId v) {
    if (v < 1 || v > g.vertex_count()) throw OutOfRangeError(v, g.vertex_count());
}

void check_same_order(const Digraph& g1, const Digraph& g2) {
    if (g1.vertex_count() != g2.vertex_count())
        throw DimensionMismatchError("digraphs have " + std::to_string(g1.vertex_count()) +
                                     " and " + std::to_string(g2.vertex_count()) + " vertices");
}

std::vector<Int> indicator_row(int n, VertexId i) {
    std::vector<Int> row(static_cast<size_t>(n), 0);
    row[static_cast<size_t>(i - 1)] = 1;
    return row;
}

void validate_permutation(const PermutationMap& psi, int n) {
    if (static_cast<int>(psi.images.size()) != n)
        throw DimensionMismatchError("permutation on " + std::to_string(psi.images.size()) +
                                     " vertices applied to a digraph on " + std::to_string(n));
    std::vector<char> hit(static_cast<size_t>(n) + 1, 0);
    for (VertexId w : psi.images) {
        if (w < 1 || w > n) throw OutOfRangeError(w, n);
        if (hit[w]) throw Error("permutation images must form a bijection");
        hit[w] = 1;
    }
}

}  // namespace

MomentTable moment_table(const Digraph& g, VertexId i, int m_max) {
    check_vertex(g, i);
    const IntMatrix l = laplacian(g);
    MomentTable table;
    table.observer = i;
    table.rows.push_back(indicator_row(g.vertex_count(), i));
    for (int m = 1; m <= m_max; ++m) table.rows.push_back(row_times_matrix(table.rows.back(), l));
    return table;
}

DistinguishVerdict is_distinguishable(const Digraph& g1, const Digraph& g2, VertexId i) {
    check_same_order(g1, g2);
    check_vertex(g1, i);
    if (g1 == g2) return {};

    const IntMatrix l1 = laplacian(g1);
    const IntMatrix l2 = laplacian(g2);
    const int bound = 2 * g1.vertex_count() - 1;
    std::vector<Int> row1 = indicator_row(g1.vertex_count(), i);
    std::vector<Int> row2 = row1;
    for (int m = 1; m <= bound; ++m) {
        row1 = row_times_matrix(row1, l1);
        row2 = row_times_matrix(row2, l2);
        if (row1 != row2) {
            DistinguishVerdict v;
            v.distinguishable = true;
            v.first_divergent_moment = m;
            v.certificate = theorem3_certificate(g1, g2, i);
            return v;
        }
    }
    return {};
}

std::optional<Theorem3Certificate> theorem3_certificate(const Digraph& g1, const Digraph& g2,
                                                        VertexId i) {
    check_same_order(g1, g2);
    check_vertex(g1, i);
    const DistanceVector d1 = distances_to(g1, i);
    const DistanceVector d2 = distances_to(g2, i);
    for (VertexId v = 1; v <= g1.vertex_count(); ++v) {
        if (v == i) continue;
        if (d1.at(v) != d2.at(v)) {
            Theorem3Certificate cert;
            cert.vertex = v;
            cert.kind = CertificateKind::distance_mismatch;
            cert.dist_first = d1.at(v);
            cert.dist_second = d2.at(v);
            return cert;
        }
        if (!d1.reachable(v)) continue;
        const PathCount c1 = shortest_path_count(g1, v, i);
        const PathCount c2 = shortest_path_count(g2, v, i);
        if (c1.count != c2.count) {
            Theorem3Certificate cert;
            cert.vertex = v;
            cert.kind = CertificateKind::shortest_count_mismatch;
            cert.dist_first = d1.at(v);
            cert.dist_second = d2.at(v);
            cert.count_first = c1.count;
            cert.count_second = c2.count;
            return cert;
        }
    }
    return std::nullopt;
}

bool corollary1_check(const Digraph& g1, const Digraph& g2, VertexId i) {
    check_same_order(g1, g2);
    check_vertex(g1, i);
    return laplacian(g1).row(i - 1) == laplacian(g2).row(i - 1);
}

std::vector<double> witness_initial_condition(const Digraph& g1, const Digraph& g2, VertexId i) {
    const DistinguishVerdict v = is_distinguishable(g1, g2, i);
    if (!v.distinguishable) throw NotDistinguishableError();
    const int m = *v.first_divergent_moment;
    const std::vector<Int> row1 = moment_table(g1, i, m).rows.back();
    const std::vector<Int> row2 = moment_table(g2, i, m).rows.back();
    std::vector<double> x0(row1.size(), 0.0);
    for (size_t c = 0; c < row1.size(); ++c) {
        if (row1[c] != row2[c]) {
            x0[c] = 1.0;
            return x0;
        }
    }
    throw std::logic_error("divergent moment reported but rows agree");
}

IntMatrix permutation_matrix(const PermutationMap& psi) {
    const int n = static_cast<int>(psi.images.size());
    IntMatrix p(n, n);
    for (VertexId v = 1; v <= n; ++v) p.at(psi.apply(v) - 1, v - 1) = 1;
    return p;
}

bool symmetry_masks(const Digraph& g1, const Digraph& g2, const PermutationMap& psi, VertexId i) {
    check_same_order(g1, g2);
    check_vertex(g1, i);
    validate_permutation(psi, g1.vertex_count());
    const IntMatrix p = permutation_matrix(psi);
    return p * laplacian(g1) == laplacian(g2) * p && psi.apply(i) == i;
}

}  // namespace confault
