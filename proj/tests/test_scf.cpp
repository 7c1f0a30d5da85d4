#include "oracles.hpp"

#include "dhf/error.hpp"
#include "dhf/precision.hpp"
#include "dhf/scf.hpp"

#include <doctest.h>

using namespace dhf;

namespace {

const Real& light() {
    static const Real c(kDefaultSpeedOfLight);
    return c;
}

Real tol(int slack) { return tenth_power(working_digits() - slack); }

bool close(const Real& a, const Real& b, const Real& eps) {
    return abs(a - b) <= eps * max(Real(1), abs(b));
}

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::ConfigError;
}

} // namespace

TEST_CASE("hydrogenic basis reproduces the Dirac ground state") {
    const Real& c = light();
    for (int Z : {1, 2, 20, 80}) {
        // z = 0 gives n* = γ; with ζ = Z the basis function is the exact 1s1/2
        BasisSet b = build_standard_basis(Real(Z), Real(0), 1, Real(Z), std::nullopt, c);
        ScfConfig cfg;
        cfg.two_electron = false;
        SCFResult res = scf_solve(b, cfg);
        Real aZ = Real(Z) / c;
        Real exact = c * c * (sqrt(Real(1) - aZ * aZ) - Real(1));
        CHECK(close(res.occupied_eps, exact, tol(10)));
        CHECK(close(res.energy_total, Real(2) * exact, tol(10)));
    }
}

TEST_CASE("helium minimal basis energy") {
    // exponent from the N=1 optimisation at 50 digits
    BasisSet b = build_standard_basis(Real(2), Real(0), 1, Real("1.687456989364"), std::nullopt, light());
    SCFResult res = scf_solve(b);
    CHECK(res.converged);
    CHECK(abs(abs(res.energy_total) - Real("2.847793824071")) < Real("1e-9"));
}

TEST_CASE("closed-shell identities at convergence") {
    BasisSet b = build_standard_basis(Real(2), Real("-0.5"), 4, Real("1.45"), Real("2.9"), light());
    Integrals ints = compute_integrals(b);
    SCFResult res = scf_solve(b, ints);
    REQUIRE(res.converged);
    const std::size_t m = b.size();
    const Real& c = b.c;

    // E = 2ε - tr(ρG). ε belongs to F[ρ] while ρ is the last input density,
    // so the two sides agree to second order in the final update: the SCF
    // threshold, not the arithmetic, bounds the gap.
    Matrix G = two_electron_matrix(ints.eri, res.density);
    Real e2 = trace_product(res.density.R.full, G);
    CHECK(close(res.energy_total, Real(2) * res.occupied_eps - e2, tol(15)));
    // with ε replaced by the Rayleigh quotient of the input vector it is exact
    Real rq = trace_product(res.density.R.full, assemble_fock(ints.one, ints.eri, res.density));
    CHECK(close(res.energy_total, Real(2) * rq - e2, tol(8)));
    CHECK(close(total_energy(res.density, ints.one, ints.eri), res.energy_total, tol(8)));

    Matrix ctsc = res.coefficients.transpose() * ints.one.S.full * res.coefficients;
    CHECK((ctsc - Matrix::identity(2 * m)).max_abs() < tol(8));

    CHECK(res.below_count == m);
    CHECK(res.above_count == m);
    const Real c2 = c * c;
    CHECK(res.occupied_eps > Real(-2) * c2);
    CHECK(res.occupied_eps.sign() < 0);
    CHECK(res.eigenvalues[res.occupied_index] == res.occupied_eps);
    CHECK(res.occupied_index == m);

    Matrix F = assemble_fock(ints.one, ints.eri, res.density);
    CHECK(F.max_asymmetry() < tol(8) * F.max_abs());

    REQUIRE(res.history.size() >= 2);
    CHECK(abs(res.history.back().delta) < tenth_power(working_digits() - 15));
    if (!res.oscillatory)
        for (std::size_t i = 2; i < res.history.size(); ++i)
            CHECK(res.history[i].energy <= res.history[i - 1].energy + tol(15));
}

TEST_CASE("empty density gives the bare problem") {
    BasisSet b = build_standard_basis(Real(2), Real(0), 2, Real("1.4"), Real("2.6"), light());
    Integrals ints = compute_integrals(b);
    DensityMatrix zero{BlockMatrix(b.size()), 2};
    Matrix F = assemble_fock(ints.one, ints.eri, zero);
    CHECK((F - ints.one.core_hamiltonian()).max_abs().is_zero());
    CHECK(total_energy(zero, ints.one, ints.eri).is_zero());

    DensityMatrix wrong{BlockMatrix(3), 2};
    CHECK(code_of([&] { total_energy(wrong, ints.one, ints.eri); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { assemble_fock(ints.one, ints.eri, wrong); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("occupied state selection") {
    const Real& c = light();
    const Real c2 = c * c;
    CHECK(select_occupied({Real(-2) * c2 - Real(5), Real(-1)}, c) == 1);
    CHECK(select_occupied({Real(-2) * c2, -c2 + Real(1), Real(3)}, c) == 1);
    CHECK(code_of([&] { select_occupied({Real(-2) * c2, -c2}, c); }) == ErrorCode::NoElectronicState);
}

TEST_CASE("extended helium basis orbital energy window") {
    BasisSet b = build_standard_basis(Real(2), Real(0), 8, Real("1.45296"), Real("2.9063"), light());
    SCFResult res = scf_solve(b);
    REQUIRE(res.converged);
    CHECK(res.below_count == 8);
    CHECK(res.above_count == 8);
    CHECK(res.occupied_eps > Real("-1.1016"));
    CHECK(res.occupied_eps < Real("-0.7344"));
    // staged N=8 value of this model at these exponents
    CHECK(abs(res.energy_total + Real("2.8618132505")) < Real("1e-9"));
}

TEST_CASE("iteration cap raises NoConvergence") {
    BasisSet b = build_standard_basis(Real(2), Real(0), 4, Real("1.4"), Real("2.6"), light());
    ScfConfig cfg;
    cfg.max_iter = 2;
    CHECK(code_of([&] { scf_solve(b, cfg); }) == ErrorCode::NoConvergence);
}
