#include "dhf/precision.hpp"

#include "dhf/error.hpp"

#include <cmath>
#include <string>

namespace dhf {

namespace {

struct ThreadState {
    PrecisionContext ctx;
    mpfr_prec_t bits;
    ThreadState() : bits(digits_to_bits(ctx.digits)) {}
};

ThreadState& state() {
    thread_local ThreadState s;
    return s;
}

constexpr std::size_t kBetaIterationCap = 200000;

// Power series x^a Σ (1-b)_k/k! x^k/(a+k); used for small x.
Real beta_series(const Real& x, const Real& a, const Real& b, const Real& eps) {
    Real sum = Real(1) / a;
    Real coef = 1;
    Real xk = 1;
    for (std::size_t k = 0; k < kBetaIterationCap; ++k) {
        Real kk(static_cast<unsigned long>(k));
        coef *= (kk + 1 - b) / (kk + 1);
        xk *= x;
        Real term = coef * xk / (a + kk + 1);
        sum += term;
        if (abs(term) <= eps * abs(sum)) return pow(x, a) * sum;
    }
    throw Error(ErrorCode::NoConvergence, "incomplete beta series");
}

// Modified Lentz evaluation of the standard continued fraction.
Real beta_cf(const Real& x, const Real& a, const Real& b, const Real& eps) {
    const Real tiny = eps * eps;
    auto guard = [&](Real& v) {
        if (abs(v) < tiny) v = tiny;
    };
    Real qab = a + b, qap = a + 1, qam = a - 1;
    Real c = 1;
    Real d = Real(1) - qab * x / qap;
    guard(d);
    d = Real(1) / d;
    Real h = d;
    for (std::size_t m = 1; m < kBetaIterationCap; ++m) {
        Real mm(static_cast<unsigned long>(m));
        Real m2 = 2 * mm;
        Real aa = mm * (b - mm) * x / ((qam + m2) * (a + m2));
        d = Real(1) + aa * d;
        guard(d);
        c = Real(1) + aa / c;
        guard(c);
        d = Real(1) / d;
        h *= d * c;
        aa = -(a + mm) * (qab + mm) * x / ((a + m2) * (qap + m2));
        d = Real(1) + aa * d;
        guard(d);
        c = Real(1) + aa / c;
        guard(c);
        d = Real(1) / d;
        Real del = d * c;
        h *= del;
        if (abs(del - 1) <= eps) return pow(x, a) * pow(Real(1) - x, b) / a * h;
    }
    throw Error(ErrorCode::NoConvergence, "incomplete beta continued fraction");
}

Real lower_beta(const Real& x, const Real& a, const Real& b, const Real& eps) {
    static const Real small("0.05");
    return x < small ? beta_series(x, a, b, eps) : beta_cf(x, a, b, eps);
}

} // namespace

void PrecisionContext::validate() const {
    if (digits < 30)
        throw Error(ErrorCode::ConfigError,
                    "working precision must be at least 30 digits (got " + std::to_string(digits) + ")");
    if (guard_digits < 0)
        throw Error(ErrorCode::ConfigError, "guard digits must be non-negative");
}

mpfr_prec_t digits_to_bits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 1;
}

mpfr_prec_t detail::thread_bits() { return state().bits; }

const PrecisionContext& current_context() { return state().ctx; }
int working_digits() { return state().ctx.digits; }

PrecisionScope::PrecisionScope(const PrecisionContext& ctx) : saved_(state().ctx) {
    ctx.validate();
    state().ctx = ctx;
    state().bits = digits_to_bits(ctx.digits);
}

PrecisionScope::~PrecisionScope() {
    state().ctx = saved_;
    state().bits = digits_to_bits(saved_.digits);
}

Real tenth_power(int k) { return pow(Real(10), static_cast<long>(-k)); }

Real gamma(const Real& a) {
    if (a.sign() <= 0) throw Error(ErrorCode::NonPositiveArgument, "gamma needs a > 0");
    return mpfr_gamma_of(a);
}

Real lgamma(const Real& a) {
    if (a.sign() <= 0) throw Error(ErrorCode::NonPositiveArgument, "lgamma needs a > 0");
    return mpfr_lngamma_of(a);
}

Real beta(const Real& a, const Real& b) { return gamma(a) * gamma(b) / gamma(a + b); }

Real incomplete_beta(const Real& x, const Real& a, const Real& b) {
    if (x.sign() < 0 || x > Real(1) || a.sign() <= 0 || b.sign() <= 0)
        throw Error(ErrorCode::DomainError, "incomplete_beta needs 0<=x<=1, a>0, b>0");
    const PrecisionContext outer = current_context();
    Real r;
    {
        PrecisionScope raised(outer.internal_digits(), outer.guard_digits);
        Real xx = x, aa = a, bb = b;
        Real eps = tenth_power(outer.internal_digits());
        if (xx.is_zero())
            r = 0;
        else if (xx == Real(1))
            r = beta(aa, bb);
        else if (xx > (aa + 1) / (aa + bb + 2))
            r = beta(aa, bb) - lower_beta(Real(1) - xx, bb, aa, eps);
        else
            r = lower_beta(xx, aa, bb, eps);
    }
    return round_to_digits(r, outer.digits);
}

Real hyp2f1_series(const Real& a, const Real& b, const Real& c, const Real& x, std::size_t term_cap) {
    if (abs(x) >= Real(1)) throw Error(ErrorCode::NoConvergence, "2F1 series needs |x| < 1");
    if (c.sign() <= 0 && floor(c) == c)
        throw Error(ErrorCode::DomainError, "2F1 with c a non-positive integer");
    const PrecisionContext outer = current_context();
    Real sum;
    {
        PrecisionScope raised(outer.internal_digits(), outer.guard_digits);
        Real aa = a, bb = b, cc = c, xx = x;
        Real eps = tenth_power(outer.internal_digits());
        Real term = 1;
        sum = 1;
        bool done = false;
        for (std::size_t k = 0; k < term_cap; ++k) {
            Real kk(static_cast<unsigned long>(k));
            term *= (aa + kk) * (bb + kk) / ((cc + kk) * (kk + 1)) * xx;
            sum += term;
            if (term.is_zero()) {
                done = true;
                break;
            }
            // Bound the tail by a geometric series with the next term ratio.
            Real r = abs((aa + kk + 1) * (bb + kk + 1) / ((cc + kk + 1) * (kk + 2)) * xx);
            if (r < Real(1) && abs(term) * r / (Real(1) - r) < eps * max(Real(1), abs(sum))) {
                done = true;
                break;
            }
        }
        if (!done)
            throw Error(ErrorCode::NoConvergence,
                        "2F1 series exceeded " + std::to_string(term_cap) + " terms");
    }
    return round_to_digits(sum, outer.digits);
}

Real moment_integral(const Real& m, const Real& eta) {
    if (!(m > Real(-1)) || eta.sign() <= 0)
        throw Error(ErrorCode::DomainError, "moment_integral needs m > -1 and eta > 0");
    Real m1 = m + 1;
    return gamma(m1) / pow(eta, m1);
}

} // namespace dhf
