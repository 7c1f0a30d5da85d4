#include "dhf/matrix.hpp"

#include "dhf/error.hpp"

namespace dhf {

namespace {
void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}
} // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Real Matrix::frobenius() const {
    Real s;
    for (const auto& v : data_) s += v * v;
    return sqrt(s);
}

Real Matrix::max_abs() const {
    Real m;
    for (const auto& v : data_) m = max(m, abs(v));
    return m;
}

Real Matrix::max_asymmetry() const {
    require(rows_ == cols_, "asymmetry of a non-square matrix");
    Real m;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j) m = max(m, abs((*this)(i, j) - (*this)(j, i)));
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matrix product dimensions");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            const Real& aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum dimensions");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference dimensions");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix operator*(const Real& s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

Real trace_product(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.cols() && a.cols() == b.rows(), "trace product dimensions");
    Real t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
    return t;
}

std::vector<Real> column(const Matrix& a, std::size_t j) {
    std::vector<Real> v(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) v[i] = a(i, j);
    return v;
}

Matrix BlockMatrix::block(int beta, int beta_p) const {
    Matrix b(m, m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) b(p, q) = (*this)(beta, beta_p, p, q);
    return b;
}

} // namespace dhf
