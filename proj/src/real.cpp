#include "dhf/real.hpp"

#include "dhf/error.hpp"
#include "dhf/precision.hpp"

#include <cmath>
#include <ostream>
#include <utility>

namespace dhf {

namespace detail {

void check(mpfr_srcptr v, const char* op) {
    if (mpfr_nan_p(v)) throw Error(ErrorCode::DomainError, std::string("NaN produced by ") + op);
    if (mpfr_inf_p(v)) throw Error(ErrorCode::DomainError, std::string("overflow in ") + op);
}

} // namespace detail

namespace {

template <class F>
Real unary(const Real& a, F f, const char* name) {
    Real r;
    f(r.raw(), a.raw(), MPFR_RNDN);
    detail::check(r.raw(), name);
    return r;
}

template <class F>
Real binary(const Real& a, const Real& b, F f, const char* name) {
    Real r;
    f(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    detail::check(r.raw(), name);
    return r;
}

std::string printf_real(const char* fmt, int digits, const Real& x) {
    char* buf = nullptr;
    int n = mpfr_asprintf(&buf, fmt, digits, x.raw());
    if (n < 0) throw Error(ErrorCode::DomainError, "formatting failed");
    std::string s(buf, static_cast<std::size_t>(n));
    mpfr_free_str(buf);
    return s;
}

} // namespace

Real::Real(double x) {
    init();
    if (!std::isfinite(x)) {
        mpfr_clear(v_);
        throw Error(ErrorCode::DomainError, "non-finite double converted to Real");
    }
    mpfr_set_d(v_, x, MPFR_RNDN);
}

Real::Real(const char* s) {
    init();
    if (mpfr_set_str(v_, s, 10, MPFR_RNDN) != 0 || mpfr_nan_p(v_) || mpfr_inf_p(v_)) {
        mpfr_clear(v_);
        throw Error(ErrorCode::DomainError, std::string("cannot parse number '") + s + "'");
    }
}

Real& Real::operator=(const Real& o) {
    if (this == &o) return *this;
    if (!v_->_mpfr_d)
        mpfr_init2(v_, mpfr_get_prec(o.v_));
    else if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_))
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this == &o) return *this;
    if (!v_->_mpfr_d) {
        v_[0] = o.v_[0];
        o.v_->_mpfr_d = nullptr;
    } else {
        mpfr_swap(v_, o.v_);
    }
    return *this;
}

Real& Real::operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    detail::check(v_, "+=");
    return *this;
}
Real& Real::operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    detail::check(v_, "-=");
    return *this;
}
Real& Real::operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    detail::check(v_, "*=");
    return *this;
}
Real& Real::operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    detail::check(v_, "/=");
    return *this;
}

Real Real::pi() {
    Real r;
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a) { return unary(a, mpfr_neg, "negation"); }
Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add, "+"); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub, "-"); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul, "*"); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div, "/"); }

Real abs(const Real& a) { return unary(a, mpfr_abs, "abs"); }
Real sqrt(const Real& a) { return unary(a, mpfr_sqrt, "sqrt"); }
Real exp(const Real& a) { return unary(a, mpfr_exp, "exp"); }
Real log(const Real& a) { return unary(a, mpfr_log, "log"); }
Real log1p(const Real& a) { return unary(a, mpfr_log1p, "log1p"); }
Real pow(const Real& a, const Real& b) { return binary(a, b, mpfr_pow, "pow"); }
Real pow(const Real& a, long n) {
    Real r;
    mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
    detail::check(r.raw(), "pow");
    return r;
}
Real floor(const Real& a) {
    Real r;
    mpfr_floor(r.raw(), a.raw());
    return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real mpfr_gamma_of(const Real& a) { return unary(a, mpfr_gamma, "gamma"); }
Real mpfr_lngamma_of(const Real& a) { return unary(a, mpfr_lngamma, "lngamma"); }

Real round_to_digits(const Real& x, int digits) {
    Real r = x;
    mpfr_prec_round(r.raw(), digits_to_bits(digits), MPFR_RNDN);
    return r;
}

std::string to_fixed(const Real& x, int decimals) { return printf_real("%.*Rf", decimals, x); }
std::string to_sci(const Real& x, int significant) {
    return printf_real("%.*Re", significant > 0 ? significant - 1 : 0, x);
}

std::string to_exact_string(const Real& x) {
    // mpfr_get_str with n=0 yields enough digits to round-trip at x's precision.
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, 0, x.raw(), MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    if (x.is_zero()) return "0";
    std::string sign;
    if (digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    if (e - 1 != 0) out += "e" + std::to_string(static_cast<long>(e - 1));
    return out;
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
    auto p = os.precision();
    return os << to_sci(x, p > 0 ? static_cast<int>(p) : 17);
}

} // namespace dhf
