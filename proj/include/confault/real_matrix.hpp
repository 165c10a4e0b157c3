#ifndef CONFAULT_REAL_MATRIX_HPP
#define CONFAULT_REAL_MATRIX_HPP

#include <vector>

namespace confault {

// Dense double-precision matrix, just enough for the matrix exponential
// and trajectory stepping.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

    static RealMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const double& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
    friend RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
    friend RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
    friend RealMatrix operator*(double s, const RealMatrix& a);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

// Maximum absolute column sum.
double one_norm(const RealMatrix& m);

// Solves A X = B by LU factorization with partial pivoting.
RealMatrix solve(RealMatrix a, RealMatrix b);

std::vector<double> matvec(const RealMatrix& m, const std::vector<double>& x);

}  // namespace confault

#endif
