#pragma once

#include "dhf/real.hpp"

namespace dhf {

struct RadialPair {
    Real n;
    Real n_prime;
    Real zeta;
    Real zeta_prime;
    int L = 0;

    void validate() const;
};

// ε_denom = 10^(-digits/2) at the working precision.
Real degenerate_threshold();

// ℛ⁰_{n,n'}(ζ,ζ') = ₂F₁[1, n+n'+1, n+2; ζ/(ζ+ζ')] via the incomplete beta.
Real hyper_r0(const Real& n, const Real& n_prime, const Real& zeta, const Real& zeta_prime);
// ℛ¹ from ℛ⁰; throws DegenerateDenominator when |n'-1| <= ε_denom.
Real hyper_r1(const Real& n, const Real& n_prime, const Real& zeta, const Real& zeta_prime);
// ℛ^L by the upward recurrence only; throws DegenerateDenominator.
Real hyper_rL_recurrence(const RadialPair& p);
// Public entry: recurrence when stable, series otherwise.
Real hyper_rL(const RadialPair& p);
// Series reference ₂F₁[1, n+n'+1, n+L+2; ζ/(ζ+ζ')].
Real hyper_rL_series(const RadialPair& p);

// R^L_{n,n'}(ζ,ζ') = ∫∫ r1^n r2^n' e^{-ζr1-ζ'r2} r<^L/r>^{L+1} dr1 dr2
Real slater_radial(const RadialPair& p);

} // namespace dhf
