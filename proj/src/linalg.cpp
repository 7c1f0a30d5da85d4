#include "dhf/linalg.hpp"

#include "dhf/error.hpp"
#include "dhf/precision.hpp"

#include <algorithm>
#include <numeric>

namespace dhf {

namespace {

Real off_diagonal(const Matrix& a) {
    Real s;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return sqrt(s);
}

} // namespace

EigenSystem jacobi_eigensolve(const Matrix& input, int max_sweeps) {
    const std::size_t n = input.rows();
    if (input.cols() != n) throw Error(ErrorCode::DimensionMismatch, "eigensolve needs a square matrix");
    Matrix a = input;
    // Symmetrise so that rounding asymmetries in the caller do not bias the rotations.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Real m = (a(i, j) + a(j, i)) / 2;
            a(i, j) = m;
            a(j, i) = m;
        }
    Matrix v = Matrix::identity(n);
    const Real target = tenth_power(working_digits() - 5) * a.frobenius();

    int sweep = 0;
    for (; off_diagonal(a) > target; ++sweep) {
        if (sweep >= max_sweeps) throw Error(ErrorCode::NoConvergence, "Jacobi sweep cap reached");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a(p, q).is_zero()) continue;
                Real theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
                Real t = Real(1) / (abs(theta) + sqrt(theta * theta + 1));
                if (theta.sign() < 0) t = -t;
                Real c = Real(1) / sqrt(t * t + 1);
                Real s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    Real akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Real apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Real vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
    EigenSystem out;
    out.sweeps = sweep;
    out.vectors = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values.push_back(a(order[j], order[j]));
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

Matrix lowdin_orthogonalizer(const Matrix& s) {
    EigenSystem es = jacobi_eigensolve(s);
    const std::size_t n = s.rows();
    if (es.values.front() < tenth_power(working_digits() / 2))
        throw Error(ErrorCode::SingularOverlap, "overlap matrix is (numerically) singular");
    Matrix x(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Real w = Real(1) / sqrt(es.values[k]);
        for (std::size_t i = 0; i < n; ++i) {
            Real uik = es.vectors(i, k) * w;
            for (std::size_t j = 0; j < n; ++j) x(i, j) += uik * es.vectors(j, k);
        }
    }
    return x;
}

} // namespace dhf
