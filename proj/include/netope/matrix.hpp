#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "netope/errors.hpp"
#include "netope/kernels.hpp"

namespace netope {

// Row-major dense matrix of doubles. Kept deliberately small; all heavy
// arithmetic goes through the kernel layer.
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    static Matrix filled(size_t rows, size_t cols, double v) {
        Matrix m(rows, cols);
        for (auto& x : m.data_) x = v;
        return m;
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    double operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    double* row(size_t i) { return data_.data() + i * cols_; }
    const double* row(size_t i) const { return data_.data() + i * cols_; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    void fill(double v) {
        for (auto& x : data_) x = v;
    }

    bool all_finite() const {
        for (double x : data_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw shape_error("matmul: inner dimensions disagree");
    Matrix c(a.rows(), b.cols());
    kernels::gemm_nn(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
    return c;
}

// a^T * b
inline Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw shape_error("matmul_tn: row counts disagree");
    Matrix c(a.cols(), b.cols());
    kernels::gemm_tn(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
    return c;
}

// a * b^T
inline Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw shape_error("matmul_nt: column counts disagree");
    Matrix c(a.rows(), b.rows());
    kernels::gemm_nt(a.rows(), a.cols(), b.rows(), a.data(), b.data(), c.data());
    return c;
}

inline Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw shape_error("max_abs_diff: shapes disagree");
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a.data()[i] - b.data()[i]));
    return m;
}

}  // namespace netope
