#pragma once

#include "dhf/real.hpp"

#include <cstddef>
#include <vector>

namespace dhf {

// Dense row-major matrix of Reals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Real& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Real& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    Real frobenius() const;
    Real max_abs() const;
    Real max_asymmetry() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Real> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Real& s, const Matrix& a);
// Σ_ij a_ij b_ji
Real trace_product(const Matrix& a, const Matrix& b);
std::vector<Real> column(const Matrix& a, std::size_t j);

// 2x2 blocked square matrix: rows/cols [0,m) are the large component (β=+1),
// [m,2m) the small one (β=-1).
struct BlockMatrix {
    std::size_t m = 0;
    Matrix full;

    BlockMatrix() = default;
    explicit BlockMatrix(std::size_t m_) : m(m_), full(2 * m_, 2 * m_) {}

    static std::size_t offset(int beta, std::size_t m) { return beta > 0 ? 0 : m; }
    Real& operator()(int beta, int beta_p, std::size_t p, std::size_t q) {
        return full(offset(beta, m) + p, offset(beta_p, m) + q);
    }
    const Real& operator()(int beta, int beta_p, std::size_t p, std::size_t q) const {
        return full(offset(beta, m) + p, offset(beta_p, m) + q);
    }
    Matrix block(int beta, int beta_p) const;
};

} // namespace dhf
