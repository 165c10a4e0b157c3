#ifndef CONFAULT_INT_MATRIX_HPP
#define CONFAULT_INT_MATRIX_HPP

#include <vector>

#include "confault/bigint.hpp"

namespace confault {

// Dense matrix with arbitrary-precision integer entries. Immutable in
// spirit: algorithms build a matrix once and then only read it.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    // Matrix with row r and column c removed (0-based indices).
    IntMatrix without_row_col(int r, int c) const;

    std::vector<Int> row(int r) const;

    bool operator==(const IntMatrix& other) const = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

// Row vector times matrix; the workhorse of the moment iteration.
std::vector<Int> row_times_matrix(const std::vector<Int>& v, const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(IntMatrix m);

}  // namespace confault

#endif
