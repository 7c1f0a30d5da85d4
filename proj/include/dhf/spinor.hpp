#pragma once

#include "dhf/real.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dhf {

// One term c·r^power·e^{-ζr} of a radial function.
struct RadialTerm {
    Real coef;
    Real power;
};

struct Spinor {
    int kappa = -1;
    Real n_star;
    Real zeta;
    Real A_plus, B_plus, A_minus, B_minus;
    Real N_apparent;
    std::string label;

    // f^β(r) = (A^β r^n + ζB^β r^{n+1}) e^{-ζr}; β = +1 large, -1 small.
    std::vector<RadialTerm> terms(int beta) const;
    Real radial(int beta, const Real& r) const;
    Real radial_derivative(int beta, const Real& r) const;
    // d f^β/dr minus the right-hand side of the large/small coupling relation.
    Real coupling_residual(int beta, const Real& r) const;
};

struct BasisSet {
    std::vector<Spinor> spinors;
    Real Z;
    Real c;
    Real z_param;

    std::size_t size() const { return spinors.size(); }
};

struct Coupling {
    Real A_plus, B_plus, A_minus, B_minus;
    Real N_apparent;
};

constexpr const char* kDefaultSpeedOfLight = "137.0359895";

// n* = √(κ² + (αZ)²(2z-1)), α = 1/c. z = 1/2 gives |κ|, z = 0 the Dirac γ.
Real principal_quantum(const Real& z_param, const Real& Z, int kappa, const Real& c);

// Null vector of the coefficient-matching system of the coupling relation
// together with N² = κ² + (2n+1)δ_{|κ|κ}. Sign fixed so the first nonzero
// coefficient is positive; overall scale is arbitrary.
Coupling couple_components(const Real& n_star, int kappa);

// Unit total norm Σ_β ∫ (f^β)² dr = 1.
Spinor normalize(const Spinor& s);
Real spinor_norm(const Spinor& s);

Spinor make_spinor(const Real& n_star, const Real& zeta, int kappa, std::string label);

struct ShellSpec {
    int k = 1; // shell index, n*_k = n*_1 + (k-1)
    Real zeta;
    std::optional<Real> zeta_prime;
};

BasisSet build_basis(const Real& Z, const Real& z_param, const std::vector<ShellSpec>& shells, const Real& c);

// 1s(ζ) for N=1; 1s(ζ)1s'(ζ')…(N/2)s(ζ)(N/2)s'(ζ') for even N.
BasisSet build_standard_basis(const Real& Z, const Real& z_param, int N, const Real& zeta,
                              const std::optional<Real>& zeta_prime, const Real& c);

} // namespace dhf
