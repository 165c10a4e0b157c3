#ifndef CONFAULT_EXACTALG_HPP
#define CONFAULT_EXACTALG_HPP

#include <string>
#include <vector>

#include "confault/bigint.hpp"
#include "confault/digraph.hpp"

namespace confault {

// Integer polynomial, coefficients ascending by degree, no stored trailing
// zeros. The zero polynomial has an empty coefficient list and degree -1.
struct IntPoly {
    std::vector<Int> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Int leading() const { return coeffs.empty() ? Int(0) : coeffs.back(); }
    Int eval(const Int& s) const;
    void trim();

    bool operator==(const IntPoly&) const = default;
};

// Rendered with descending powers, e.g. "s^3 + 4s^2 + 4s".
std::string to_string(const IntPoly& p);

// Degree/leading-coefficient law for an off-diagonal minor of sI + L:
// degree n - d(i,j) - 1 and |leading| equal to the number of shortest
// i->j paths.
struct Lemma1Report {
    VertexId i{};
    VertexId j{};
    IntPoly poly;
    int expected_degree{};
    Int expected_leading_abs{};
    bool pass{};
};

// det of (sI + L) with row i and column j removed (1-based), exact. The
// determinant is evaluated at integer points and interpolated, so no
// polynomial-entry elimination is needed. Throws DiagonalMinorError if
// i == j.
IntPoly minor_poly(const Digraph& g, VertexId i, VertexId j);

// det(sI + L): monic of degree n with zero constant term.
IntPoly char_poly(const Digraph& g);

// (i,i) cofactor of the Laplacian; equals the number of spanning
// out-branchings rooted at the given vertex.
Int spanning_outbranching_count(const Digraph& g, VertexId root);

// General signed cofactor of the Laplacian, for cross-checks: every
// cofactor in row i agrees with the principal one.
Int laplacian_cofactor(const Digraph& g, VertexId i, VertexId j);

// Number of simple i->j paths of length k recovered from products of
// Laplacian entries over ordered tuples of distinct intermediate vertices,
// sign-normalized. Exponential; throws TooLargeError for n > 8.
Int connectivity_via_laplacian(const Digraph& g, VertexId i, VertexId j, int k);

// Compares minor_poly(i, j) against the degree/leading law. Throws
// InfiniteDistanceError when j is unreachable from i (no law is asserted
// in that case).
Lemma1Report lemma1_verify(const Digraph& g, VertexId i, VertexId j);

}  // namespace confault

#endif
