#pragma once

#include "dhf/matrix.hpp"

#include <vector>

namespace dhf {

struct EigenSystem {
    std::vector<Real> values; // ascending
    Matrix vectors;           // column j belongs to values[j]
    int sweeps = 0;
};

// Cyclic Jacobi; stops when the off-diagonal norm is below
// 10^(-digits+5)·‖A‖_F. Throws NoConvergence after max_sweeps.
EigenSystem jacobi_eigensolve(const Matrix& a, int max_sweeps = 100);

// X = S^{-1/2}; throws SingularOverlap if min eig(S) < 10^(-digits/2).
Matrix lowdin_orthogonalizer(const Matrix& s);

} // namespace dhf
