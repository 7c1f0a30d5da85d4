#include "oracles.hpp"

#include "dhf/error.hpp"
#include "dhf/integrals.hpp"
#include "dhf/precision.hpp"
#include "dhf/spinor.hpp"

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

Real residual_scale(const Spinor& s, const Real& r) {
    return max(Real(1), max(abs(s.radial(1, r)), abs(s.radial(-1, r))));
}

} // namespace

TEST_CASE("principal quantum number") {
    const Real& c = light();
    CHECK(principal_quantum(Real("0.5"), Real(37), -1, c) == Real(1));
    Real aZ = Real(2) / c;
    // z = 0 is the Dirac gamma, z = 1 sits the same distance above 1
    CHECK(close(principal_quantum(Real(0), Real(2), -1, c), sqrt(Real(1) - aZ * aZ), tol(2)));
    CHECK(close(principal_quantum(Real(1), Real(2), -1, c), sqrt(Real(1) + aZ * aZ), tol(2)));
    CHECK(to_fixed(principal_quantum(Real(0), Real(2), -1, c), 12).rfind("0.99989349", 0) == 0);
    CHECK(to_fixed(principal_quantum(Real(1), Real(2), -1, c), 12).rfind("1.00010649", 0) == 0);

    Real prev = principal_quantum(Real("-0.9"), Real(50), -1, c);
    for (int i = -8; i <= 9; ++i) {
        Real cur = principal_quantum(Real(i) / Real(10), Real(50), -1, c);
        CHECK(cur > prev);
        prev = cur;
    }

    CHECK(code_of([&] { principal_quantum(Real("-0.5"), Real(137), -1, c); }) == ErrorCode::InvalidZParameter);
    CHECK(code_of([&] { principal_quantum(Real(0), Real(138), -1, c); }) == ErrorCode::InvalidZParameter);
}

TEST_CASE("component coupling") {
    Coupling a = couple_components(Real(1), -1);
    CHECK(a.N_apparent == Real(1));
    CHECK(a.B_plus.is_zero());
    CHECK(a.B_minus.is_zero());
    CHECK(close(a.A_minus, -a.A_plus, tol(5)));
    CHECK(a.A_plus.sign() > 0);

    Coupling g = couple_components(Real("0.99989349"), -1);
    CHECK(g.N_apparent == Real(1));
    CHECK(close(g.A_minus, -g.A_plus, tol(5)));

    Coupling b = couple_components(Real(2), 1);
    CHECK(close(b.N_apparent, sqrt(Real(6)), tol(5)));

    // scale-unique: a second solve is the same direction
    Coupling b2 = couple_components(Real(2), 1);
    CHECK(close(b.A_plus * b2.B_minus, b.B_minus * b2.A_plus, tol(5)));
    CHECK(close(b.A_minus * b2.B_plus, b.B_plus * b2.A_minus, tol(5)));
}

TEST_CASE("coupling relation holds pointwise") {
    const std::vector<const char*> radii = {"0.1", "0.5", "1", "2", "5", "10"};
    struct Case { const char* n; const char* zeta; int kappa; };
    for (Case cs : {Case{"1", "2", -1}, Case{"0.99989349", "1.7", -1}, Case{"2.0001", "3.3", -1},
                    Case{"2", "1.5", 1}, Case{"2.5", "0.8", 1}, Case{"1", "1.2", 1}}) {
        Spinor s = make_spinor(Real(cs.n), Real(cs.zeta), cs.kappa, "t");
        for (int beta : {1, -1})
            for (const char* r : radii) {
                Real rv(r);
                CHECK(abs(s.coupling_residual(beta, rv)) < tol(10) * residual_scale(s, rv));
            }
    }
    BasisSet b = build_standard_basis(Real(2), Real("0.9"), 8, Real("1.45"), Real("2.9"), light());
    for (const auto& s : b.spinors)
        for (int beta : {1, -1})
            for (const char* r : radii) CHECK(abs(s.coupling_residual(beta, Real(r))) < tol(10) * residual_scale(s, Real(r)));
}

TEST_CASE("normalization") {
    Spinor s = make_spinor(Real(1), Real(2), -1, "1s");
    // unit norm over both components with measure dr: 2·A²·Γ(3)/4³ = 1
    CHECK(close(s.A_plus, Real(4), tol(5)));
    CHECK(close(s.A_minus, Real(-4), tol(5)));
    CHECK(close(spinor_norm(s), Real(1), tol(5)));

    Spinor again = normalize(s);
    CHECK(close(again.A_plus, s.A_plus, tol(2)));

    Spinor big = s;
    for (Real* v : {&big.A_plus, &big.B_plus, &big.A_minus, &big.B_minus}) *v *= Real(7);
    Spinor back = normalize(big);
    CHECK(close(back.A_plus, s.A_plus, tol(2)));
    CHECK(close(back.A_minus, s.A_minus, tol(2)));

    Spinor k = make_spinor(Real("2.3"), Real("1.1"), 1, "p");
    Real n2 = Real(0);
    for (int beta : {1, -1})
        n2 += oracle::radial([&](const Real& r) { Real f = k.radial(beta, r); return f * f; }, Real(1));
    CHECK(close(n2, Real(1), tol(10)));

    Spinor zero = s;
    zero.A_plus = zero.A_minus = Real(0);
    CHECK(code_of([&] { normalize(zero); }) == ErrorCode::ZeroFunction);
}

TEST_CASE("basis construction") {
    const Real& c = light();
    BasisSet one = build_standard_basis(Real(2), Real(0), 1, Real("1.69"), std::nullopt, c);
    REQUIRE(one.size() == 1);
    CHECK(one.spinors[0].label == "1s");

    BasisSet four = build_basis(Real(2), Real(0), {{1, Real("1.4"), Real("2.6")}, {2, Real("1.4"), Real("2.6")}}, c);
    REQUIRE(four.size() == 4);
    CHECK(four.spinors[0].label == "1s");
    CHECK(four.spinors[1].label == "1s'");
    CHECK(four.spinors[2].label == "2s");
    CHECK(four.spinors[3].label == "2s'");
    CHECK(four.spinors[2].n_star - four.spinors[0].n_star == Real(1));
    CHECK(four.spinors[3].zeta == Real("2.6"));

    BasisSet half = build_standard_basis(Real(10), Real("0.5"), 6, Real(9), Real(20), c);
    for (std::size_t i = 0; i < half.size(); ++i) CHECK(half.spinors[i].n_star == Real(static_cast<int>(i / 2 + 1)));

    BlockMatrix S = overlap_block(four);
    for (std::size_t p = 0; p < 4; ++p) CHECK(close(S(1, 1, p, p) + S(-1, -1, p, p), Real(1), tol(10)));

    CHECK(code_of([&] { build_standard_basis(Real(2), Real(0), 2, Real("1.5"), Real("1.5"), c); }) ==
          ErrorCode::DuplicateBasisFunction);
    CHECK(code_of([&] { build_standard_basis(Real(137), Real("-0.5"), 1, Real(100), std::nullopt, c); }) ==
          ErrorCode::InvalidZParameter);
    CHECK(code_of([&] { build_standard_basis(Real(2), Real(0), 3, Real(1), Real(2), c); }) ==
          ErrorCode::ConfigError);
}
