#include "confault/int_matrix.hpp"

#include <utility>

#include "confault/errors.hpp"

namespace confault {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::without_row_col(int r, int c) const {
    IntMatrix m(rows_ - 1, cols_ - 1);
    for (int i = 0, mi = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (int j = 0, mj = 0; j < cols_; ++j) {
            if (j == c) continue;
            m.at(mi, mj) = at(i, j);
            ++mj;
        }
        ++mi;
    }
    return m;
}

std::vector<Int> IntMatrix::row(int r) const {
    std::vector<Int> out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatchError("matrix product shape mismatch");
    IntMatrix m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("matrix difference shape mismatch");
    IntMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) - b.at(i, j);
    return m;
}

std::vector<Int> row_times_matrix(const std::vector<Int>& v, const IntMatrix& m) {
    if (static_cast<int>(v.size()) != m.rows())
        throw DimensionMismatchError("row-vector length does not match matrix rows");
    std::vector<Int> out(m.cols());
    for (int k = 0; k < m.rows(); ++k) {
        if (v[k] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) out[j] += v[k] * m.at(k, j);
    }
    return out;
}

Int determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw NonSquareError(m.rows(), m.cols());
    const int n = m.rows();
    if (n == 0) return 1;

    // Bareiss: every division below is exact over the integers.
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) { piv = r; break; }
            if (piv < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

}  // namespace confault
