#include "dhf/hyperradial.hpp"

#include "dhf/error.hpp"
#include "dhf/precision.hpp"

#include <algorithm>
#include <cmath>

namespace dhf {

namespace {

// Digits the upward recurrence can lose: each step divides out a factor of
// order x = ζ/(ζ+ζ'), and small denominators amplify rounding further.
int recurrence_extra_digits(const RadialPair& p, const Real& min_denominator) {
    double x = (p.zeta / (p.zeta + p.zeta_prime)).to_double();
    double lost = (p.L + 1) * std::max(0.0, -std::log10(x));
    lost += std::max(0.0, -std::log10(min_denominator.to_double()));
    return static_cast<int>(std::ceil(lost)) + current_context().guard_digits;
}

Real r0_unchecked(const Real& n, const Real& np, const Real& zeta, const Real& zetap) {
    Real s = zeta + zetap;
    Real x = zeta / s;
    Real y = zetap / s;
    // ₂F₁(1, a+b; a+1; x) = a x^{-a} (1-x)^{-b} B_x(a, b) with a = n+1, b = n'.
    return (n + 1) * incomplete_beta(x, n + 1, np) / (pow(x, n + 1) * pow(y, np));
}

Real r1_unchecked(const Real& n, const Real& np, const Real& zeta, const Real& zetap) {
    Real r0 = r0_unchecked(n, np, zeta, zetap);
    return (n + 2) / (np - 1) * (zetap / zeta * r0 - (zeta + zetap) / zeta);
}

} // namespace

void RadialPair::validate() const {
    if (n.sign() <= 0 || n_prime.sign() <= 0)
        throw Error(ErrorCode::DomainError, "radial powers n, n' must be positive");
    if (zeta.sign() <= 0 || zeta_prime.sign() <= 0)
        throw Error(ErrorCode::DomainError, "radial exponents must be positive");
    if (L < 0) throw Error(ErrorCode::DomainError, "multipole order must be non-negative");
}

Real degenerate_threshold() { return tenth_power(working_digits() / 2); }

Real hyper_r0(const Real& n, const Real& n_prime, const Real& zeta, const Real& zeta_prime) {
    RadialPair{n, n_prime, zeta, zeta_prime, 0}.validate();
    return r0_unchecked(n, n_prime, zeta, zeta_prime);
}

Real hyper_r1(const Real& n, const Real& n_prime, const Real& zeta, const Real& zeta_prime) {
    RadialPair p{n, n_prime, zeta, zeta_prime, 1};
    p.validate();
    Real denom = abs(n_prime - 1);
    if (denom <= degenerate_threshold())
        throw Error(ErrorCode::DegenerateDenominator, "n' - 1 vanishes in the L=1 hyper-radial function");
    const PrecisionContext outer = current_context();
    Real r;
    {
        PrecisionScope raised(outer.digits + recurrence_extra_digits(p, denom), outer.guard_digits);
        r = r1_unchecked(n, n_prime, zeta, zeta_prime);
    }
    return round_to_digits(r, outer.digits);
}

Real hyper_rL_recurrence(const RadialPair& p) {
    p.validate();
    if (p.L == 0) return hyper_r0(p.n, p.n_prime, p.zeta, p.zeta_prime);
    const Real eps = degenerate_threshold();
    Real min_denom = abs(p.n_prime - 1);
    for (int l = 0; l + 2 <= p.L; ++l) min_denom = min(min_denom, abs(Real(l + 2) - p.n_prime));
    if (min_denom <= eps)
        throw Error(ErrorCode::DegenerateDenominator, "hyper-radial recurrence denominator vanishes");

    const PrecisionContext outer = current_context();
    Real result;
    {
        PrecisionScope raised(outer.digits + recurrence_extra_digits(p, min_denom), outer.guard_digits);
        const Real n = p.n, np = p.n_prime, z = p.zeta, zp = p.zeta_prime;
        Real prev = r0_unchecked(n, np, z, zp);
        Real cur = (n + 2) / (np - 1) * (zp / z * prev - (z + zp) / z);
        for (int l = 0; l + 2 <= p.L; ++l) {
            Real nl2 = n + (l + 2);
            Real next = (nl2 + 1) / (z * nl2 * (Real(l + 2) - np)) *
                        (zp * nl2 * prev + (z * (Real(l + 1) - np) - zp * nl2) * cur);
            prev = std::move(cur);
            cur = std::move(next);
        }
        result = std::move(cur);
    }
    return round_to_digits(result, outer.digits);
}

Real hyper_rL_series(const RadialPair& p) {
    p.validate();
    return hyp2f1_series(Real(1), p.n + p.n_prime + 1, p.n + (p.L + 2), p.zeta / (p.zeta + p.zeta_prime));
}

Real hyper_rL(const RadialPair& p) {
    try {
        return hyper_rL_recurrence(p);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateDenominator) throw;
    }
    return hyper_rL_series(p);
}

Real slater_radial(const RadialPair& p) {
    p.validate();
    RadialPair swapped{p.n_prime, p.n, p.zeta_prime, p.zeta, p.L};
    Real total = p.n + p.n_prime + 1;
    Real s = p.zeta + p.zeta_prime;
    Real brace = hyper_rL(p) / (p.n + (p.L + 1)) + hyper_rL(swapped) / (p.n_prime + (p.L + 1));
    return gamma(total) / pow(s, total) * brace;
}

} // namespace dhf
