#include "oracles.hpp"

#include "dhf/error.hpp"
#include "dhf/hyperradial.hpp"
#include "dhf/precision.hpp"

#include <doctest.h>

using namespace dhf;

namespace {

Real tol(int slack) { return tenth_power(working_digits() - slack); }

bool close(const Real& a, const Real& b, const Real& eps) {
    return abs(a - b) <= eps * max(Real(1), abs(b));
}

RadialPair pair(const char* n, const char* np, const char* z, const char* zp, int L = 0) {
    return RadialPair{Real(n), Real(np), Real(z), Real(zp), L};
}

Real series(const RadialPair& p) {
    Real x = p.zeta / (p.zeta + p.zeta_prime);
    return hyp2f1_series(Real(1), p.n + p.n_prime + Real(1), p.n + Real(p.L + 2), x);
}

} // namespace

TEST_CASE("R0 base case") {
    CHECK(close(hyper_r0(Real(2), Real(2), Real(2), Real(2)),
                hyp2f1_series(Real(1), Real(5), Real(4), Real("0.5")), tol(10)));
    RadialPair p = pair("2.0001", "1.9999", "3.1", "1.7");
    CHECK(close(hyper_r0(p.n, p.n_prime, p.zeta, p.zeta_prime), series(p), tol(10)));
    Real tiny = hyper_r0(Real(2), Real(3), Real("1e-30"), Real(1));
    CHECK(close(tiny, Real(1), Real("1e-28")));  // first term is ~1.5e-30
}

TEST_CASE("R1 base case") {
    CHECK(close(hyper_r1(Real(2), Real(3), Real(2), Real(2)),
                hyp2f1_series(Real(1), Real(6), Real(5), Real("0.5")), tol(10)));
    CHECK(close(hyper_r1(Real("1.5"), Real("2.5"), Real(1), Real(3)),
                hyp2f1_series(Real(1), Real(5), Real("4.5"), Real("0.25")), tol(10)));
    try {
        hyper_r1(Real(2), Real(1), Real(1), Real(1));
        FAIL("expected DegenerateDenominator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateDenominator);
    }
}

TEST_CASE("RL recurrence against the series") {
    RadialPair p0 = pair("2", "5", "1", "1", 0);
    CHECK(hyper_rL(p0) == hyper_r0(p0.n, p0.n_prime, p0.zeta, p0.zeta_prime));
    RadialPair p2 = pair("2", "5", "1", "1", 2);
    CHECK(close(hyper_rL(p2), hyp2f1_series(Real(1), Real(8), Real(6), Real("0.5")), tol(10)));
    RadialPair p6 = pair("3.7", "8.1", "0.4", "12", 6);
    CHECK(close(hyper_rL_recurrence(p6), series(p6), tol(10)));
}

TEST_CASE("degenerate denominators fall back to the series") {
    for (const char* np : {"2", "3"}) {
        RadialPair p = pair("2", np, "1.3", "0.8", 3);
        try {
            hyper_rL_recurrence(p);
            FAIL("expected DegenerateDenominator");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DegenerateDenominator);
        }
        CHECK(close(hyper_rL(p), hyper_rL_series(p), tol(10)));
        CHECK(close(hyper_rL(p), series(p), tol(10)));
    }
    RadialPair q = pair("2.5", "1", "1", "2", 1);
    CHECK(close(hyper_rL(q), series(q), tol(10)));
}

TEST_CASE("RL agrees with the series on random tuples") {
    oracle::Draw draw(20240611);
    int worst_L = -1;
    Real worst(0);
    for (int i = 0; i < 200; ++i) {
        RadialPair p{draw.uniform(0.5, 12), draw.uniform(0.5, 12), draw.uniform(0.1, 160), draw.uniform(0.1, 160),
                     draw.integer(0, 6)};
        Real ref = series(p);
        Real err = abs(hyper_rL(p) - ref) / ref;
        if (err > worst) {
            worst = err;
            worst_L = p.L;
        }
    }
    INFO("worst relative error " << to_sci(worst, 3) << " at L=" << worst_L);
    CHECK(worst <= tol(10));
}

TEST_CASE("RL against the Euler integral") {
    // independent of both the series and the incomplete beta
    for (auto p : {pair("2.0002", "1.9998", "2.4", "1.6", 0), pair("3.5", "4.25", "0.7", "5.5", 2),
                   pair("1.2", "6.4", "9", "3", 5)}) {
        Real x = p.zeta / (p.zeta + p.zeta_prime);
        Real ref = oracle::hyp2f1_one(p.n + p.n_prime + Real(1), p.n + Real(p.L + 2), x);
        CHECK(close(hyper_rL(p), ref, tol(10)));
    }
}

TEST_CASE("slater radial: classical 1s-1s value") {
    Real v = slater_radial(pair("2", "2", "2", "2"));
    CHECK(close(v, Real(5) / Real(128), tol(10)));
}

TEST_CASE("slater radial against nested quadrature") {
    PrecisionScope scope(30);
    const Real eps("1e-25");
    RadialPair a = pair("2.0002", "2.0002", "4", "4");
    CHECK(close(slater_radial(a), oracle::slater(0, a.n, a.n_prime, a.zeta, a.zeta_prime), eps));
    RadialPair b = pair("1.9998", "3.4", "3.3", "1.2", 1);
    CHECK(close(slater_radial(b), oracle::slater(1, b.n, b.n_prime, b.zeta, b.zeta_prime), eps));
}

TEST_CASE("slater radial properties") {
    oracle::Draw draw(7);
    for (int i = 0; i < 25; ++i) {
        RadialPair p{draw.uniform(0.5, 8), draw.uniform(0.5, 8), draw.uniform(0.2, 20), draw.uniform(0.2, 20), 0};
        Real prev;
        for (int L = 0; L <= 4; ++L) {
            p.L = L;
            Real v = slater_radial(p);
            CHECK(v.sign() > 0);
            if (L > 0) CHECK(v < prev);
            prev = v;

            RadialPair swapped{p.n_prime, p.n, p.zeta_prime, p.zeta, L};
            CHECK(close(slater_radial(swapped), v, tol(10)));

            Real s("2.75");
            RadialPair scaled{p.n, p.n_prime, s * p.zeta, s * p.zeta_prime, L};
            CHECK(close(slater_radial(scaled), pow(s, -(p.n + p.n_prime + Real(1))) * v, tol(10)));
        }
    }
}

TEST_CASE("hyperradial precision stability") {
    RadialPair p = pair("2.0002", "9.7", "0.15", "150", 4);
    Real base = slater_radial(p);
    Real r = hyper_rL(p);
    PrecisionScope up(60);
    RadialPair q = pair("2.0002", "9.7", "0.15", "150", 4);
    CHECK(close(base, slater_radial(q), tenth_power(45)));
    CHECK(close(r, hyper_rL(q), tenth_power(45)));
}

TEST_CASE("invalid pairs are rejected") {
    for (auto p : {pair("0", "1", "1", "1"), pair("1", "-1", "1", "1"), pair("1", "1", "0", "1")}) {
        try {
            p.validate();
            FAIL("expected DomainError");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DomainError);
        }
    }
}
