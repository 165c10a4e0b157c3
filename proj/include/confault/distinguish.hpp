#ifndef CONFAULT_DISTINGUISH_HPP
#define CONFAULT_DISTINGUISH_HPP

#include <optional>
#include <vector>

#include "confault/bigint.hpp"
#include "confault/digraph.hpp"
#include "confault/int_matrix.hpp"

namespace confault {

// rows[m] holds the observer row of L^m: row 0 is the indicator of the
// observer vertex, and each following row is the previous one times L.
struct MomentTable {
    VertexId observer{};
    std::vector<std::vector<Int>> rows;
};

enum class CertificateKind { distance_mismatch, shortest_count_mismatch };

// A vertex whose distance to the observer, or whose shortest-path count at
// equal distance, differs between the two digraphs. Either mismatch forces
// distinguishability, so the certificate is a standalone proof.
struct Theorem3Certificate {
    VertexId vertex{};
    CertificateKind kind{};
    int dist_first{};  // kUnreachable encodes "no path"
    int dist_second{};
    Int count_first{};  // meaningful for shortest_count_mismatch only
    Int count_second{};
};

struct DistinguishVerdict {
    bool distinguishable{};
    std::optional<int> first_divergent_moment;
    std::optional<Theorem3Certificate> certificate;
};

// images[v-1] = psi(v), a bijection on 1..n.
struct PermutationMap {
    std::vector<VertexId> images;

    VertexId apply(VertexId v) const { return images[static_cast<size_t>(v - 1)]; }
};

MomentTable moment_table(const Digraph& g, VertexId i, int m_max);

// Exact decision: the pair is distinguishable from observer i iff the
// moment rows differ for some m in [1, 2n-1]. The bound comes from the
// Cayley-Hamilton theorem applied to the block-diagonal matrix
// diag(L1, L2): both L1^m and L2^m are, simultaneously, the same linear
// combination of powers below 2n, so agreement up to 2n-1 forces agreement
// for every m. Identical digraphs short-circuit to indistinguishable.
DistinguishVerdict is_distinguishable(const Digraph& g1, const Digraph& g2, VertexId i);

// First vertex (ascending) violating the distance / shortest-path-count
// agreement that indistinguishability would force; nullopt if none. The
// conditions are necessary for indistinguishability, not sufficient, so
// nullopt does not imply the pair is indistinguishable.
std::optional<Theorem3Certificate> theorem3_certificate(const Digraph& g1, const Digraph& g2,
                                                        VertexId i);

// True iff row i of the two Laplacians agree, i.e. the digraphs look the
// same in the immediate in-neighborhood of the observer. False implies
// distinguishable at the first moment.
bool corollary1_check(const Digraph& g1, const Digraph& g2, VertexId i);

// Indicator of a coordinate where the first divergent moment rows differ;
// seeds a simulation whose observer responses provably split. Throws
// NotDistinguishableError when no divergent moment exists.
std::vector<double> witness_initial_condition(const Digraph& g1, const Digraph& g2, VertexId i);

// [P]_{psi(j), j} = 1.
IntMatrix permutation_matrix(const PermutationMap& psi);

// True iff P L(G1) = L(G2) P and psi fixes the observer. When this holds,
// any initial state fixed by psi produces identical observer responses in
// the two digraphs, masking the difference between them.
bool symmetry_masks(const Digraph& g1, const Digraph& g2, const PermutationMap& psi, VertexId i);

}  // namespace confault

#endif
