#include "confault/exactalg.hpp"

#include <stdexcept>
#include <utility>

#include "confault/errors.hpp"
#include "confault/int_matrix.hpp"
#include "confault/paths.hpp"

namespace confault {

Int IntPoly::eval(const Int& s) const {
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
    return acc;
}

void IntPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string to_string(const IntPoly& p) {
    if (p.coeffs.empty()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        const Int& c = p.coeffs[static_cast<size_t>(d)];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || d == 0) out += mag.str();
        if (d == 1)
            out += "s";
        else if (d > 1)
            out += "s^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

namespace {

void check_vertex(const Digraph& g, VertexId v) {
    if (v < 1 || v > g.vertex_count()) throw OutOfRangeError(v, g.vertex_count());
}

IntMatrix h_matrix(const IntMatrix& l, const Int& s) {
    IntMatrix h = l;
    for (int r = 0; r < h.rows(); ++r) h.at(r, r) += s;
    return h;
}

// Newton interpolation through (t, values[t]), t = 0..k, over exact
// rationals. The callers sample genuinely integer polynomials, so every
// coefficient must come out with denominator one.
IntPoly interpolate_at_integer_points(const std::vector<Int>& values) {
    const int k = static_cast<int>(values.size()) - 1;
    std::vector<Rat> dd(values.begin(), values.end());
    for (int level = 1; level <= k; ++level)
        for (int t = k; t >= level; --t) dd[t] = (dd[t] - dd[t - 1]) / level;

    std::vector<Rat> poly;  // ascending coefficients
    for (int t = k; t >= 0; --t) {
        // poly = poly * (x - t) + dd[t]
        std::vector<Rat> next(poly.size() + 1, Rat(0));
        for (size_t m = 0; m < poly.size(); ++m) {
            next[m + 1] += poly[m];
            next[m] -= Rat(t) * poly[m];
        }
        next[0] += dd[t];
        poly = std::move(next);
    }

    IntPoly out;
    out.coeffs.reserve(poly.size());
    for (const Rat& c : poly) {
        if (boost::multiprecision::denominator(c) != 1)
            throw std::logic_error("interpolation produced a non-integer coefficient");
        out.coeffs.push_back(Int(boost::multiprecision::numerator(c)));
    }
    out.trim();
    return out;
}

}  // namespace

IntPoly minor_poly(const Digraph& g, VertexId i, VertexId j) {
    check_vertex(g, i);
    check_vertex(g, j);
    if (i == j) throw DiagonalMinorError(i);
    const int n = g.vertex_count();
    const IntMatrix l = laplacian(g);
    std::vector<Int> values;
    values.reserve(n);
    for (int s = 0; s < n; ++s)
        values.push_back(determinant(h_matrix(l, s).without_row_col(i - 1, j - 1)));
    return interpolate_at_integer_points(values);
}

IntPoly char_poly(const Digraph& g) {
    const int n = g.vertex_count();
    const IntMatrix l = laplacian(g);
    std::vector<Int> values;
    values.reserve(n + 1);
    for (int s = 0; s <= n; ++s) values.push_back(determinant(h_matrix(l, s)));
    return interpolate_at_integer_points(values);
}

Int spanning_outbranching_count(const Digraph& g, VertexId root) {
    check_vertex(g, root);
    return determinant(laplacian(g).without_row_col(root - 1, root - 1));
}

Int laplacian_cofactor(const Digraph& g, VertexId i, VertexId j) {
    check_vertex(g, i);
    check_vertex(g, j);
    const Int det = determinant(laplacian(g).without_row_col(i - 1, j - 1));
    return (i + j) % 2 == 0 ? det : Int(-det);
}

Int connectivity_via_laplacian(const Digraph& g, VertexId i, VertexId j, int k) {
    check_vertex(g, i);
    check_vertex(g, j);
    const int n = g.vertex_count();
    if (n > 8) throw TooLargeError(n, 8);
    if (k < 1) throw BadLengthError(k, n);
    if (i == j) return 0;

    const IntMatrix l = laplacian(g);
    std::vector<char> used(n + 1, 0);
    used[i] = used[j] = 1;
    Int sum = 0;

    // Chains j, t_1, ..., t_{k-1}, i over distinct intermediates; the
    // product picks up one Laplacian entry per consecutive pair.
    auto walk = [&](auto&& self, VertexId at, int left, const Int& prod) -> void {
        if (left == 0) {
            sum += prod * l.at(at - 1, i - 1);
            return;
        }
        for (VertexId t = 1; t <= n; ++t) {
            if (used[t]) continue;
            const Int& entry = l.at(at - 1, t - 1);
            if (entry == 0) continue;
            used[t] = 1;
            self(self, t, left - 1, prod * entry);
            used[t] = 0;
        }
    };
    walk(walk, j, k - 1, Int(1));
    return k % 2 == 0 ? sum : Int(-sum);
}

Lemma1Report lemma1_verify(const Digraph& g, VertexId i, VertexId j) {
    const int n = g.vertex_count();
    const PathCount pc = shortest_path_count(g, i, j);
    if (pc.length == kUnreachable) throw InfiniteDistanceError(i, j);

    Lemma1Report rep;
    rep.i = i;
    rep.j = j;
    rep.poly = minor_poly(g, i, j);
    rep.expected_degree = n - pc.length - 1;
    rep.expected_leading_abs = pc.count;
    Int lead = rep.poly.leading();
    if (lead < 0) lead = -lead;
    rep.pass = rep.poly.degree() == rep.expected_degree && lead == rep.expected_leading_abs;
    return rep;
}

}  // namespace confault
