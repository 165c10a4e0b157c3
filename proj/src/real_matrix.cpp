#include "confault/real_matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "confault/errors.hpp"

namespace confault {

RealMatrix RealMatrix::identity(int n) {
    RealMatrix m(n, n);
    for (int r = 0; r < n; ++r) m.at(r, r) = 1.0;
    return m;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatchError("matrix product shape mismatch");
    RealMatrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const double v = a.at(r, k);
            if (v == 0.0) continue;
            for (int c = 0; c < b.cols_; ++c) out.at(r, c) += v * b.at(k, c);
        }
    return out;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatchError("matrix sum shape mismatch");
    RealMatrix out = a;
    for (size_t t = 0; t < out.a_.size(); ++t) out.a_[t] += b.a_[t];
    return out;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatchError("matrix difference shape mismatch");
    RealMatrix out = a;
    for (size_t t = 0; t < out.a_.size(); ++t) out.a_[t] -= b.a_[t];
    return out;
}

RealMatrix operator*(double s, const RealMatrix& a) {
    RealMatrix out = a;
    for (double& v : out.a_) v *= s;
    return out;
}

double one_norm(const RealMatrix& m) {
    double best = 0.0;
    for (int c = 0; c < m.cols(); ++c) {
        double sum = 0.0;
        for (int r = 0; r < m.rows(); ++r) sum += std::abs(m.at(r, c));
        if (sum > best) best = sum;
    }
    return best;
}

RealMatrix solve(RealMatrix a, RealMatrix b) {
    if (a.rows() != a.cols()) throw NonSquareError(a.rows(), a.cols());
    if (a.rows() != b.rows()) throw DimensionMismatchError("solve shape mismatch");
    const int n = a.rows();

    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int r = k + 1; r < n; ++r)
            if (std::abs(a.at(r, k)) > std::abs(a.at(pivot, k))) pivot = r;
        if (a.at(pivot, k) == 0.0) throw std::runtime_error("singular matrix in solve");
        if (pivot != k) {
            for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
            for (int c = 0; c < b.cols(); ++c) std::swap(b.at(k, c), b.at(pivot, c));
        }
        for (int r = k + 1; r < n; ++r) {
            const double f = a.at(r, k) / a.at(k, k);
            if (f == 0.0) continue;
            a.at(r, k) = 0.0;
            for (int c = k + 1; c < n; ++c) a.at(r, c) -= f * a.at(k, c);
            for (int c = 0; c < b.cols(); ++c) b.at(r, c) -= f * b.at(k, c);
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        for (int c = 0; c < b.cols(); ++c) {
            double acc = b.at(k, c);
            for (int m = k + 1; m < n; ++m) acc -= a.at(k, m) * b.at(m, c);
            b.at(k, c) = acc / a.at(k, k);
        }
    }
    return b;
}

std::vector<double> matvec(const RealMatrix& m, const std::vector<double>& x) {
    if (m.cols() != static_cast<int>(x.size()))
        throw DimensionMismatchError("matvec shape mismatch");
    std::vector<double> out(static_cast<size_t>(m.rows()), 0.0);
    for (int r = 0; r < m.rows(); ++r) {
        double acc = 0.0;
        for (int c = 0; c < m.cols(); ++c) acc += m.at(r, c) * x[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = acc;
    }
    return out;
}

}  // namespace confault
