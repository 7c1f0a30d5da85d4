#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace dhf {

namespace detail {
// Bits for the calling thread's working precision (initialised to 50 digits).
mpfr_prec_t thread_bits();
void check(mpfr_srcptr v, const char* op);
} // namespace detail

// Value wrapper over mpfr_t. Fresh values (constructors, operator results)
// take the calling thread's working precision; copies keep the source's.
// NaN and infinities never escape: they are reported as Error(DomainError).
class Real {
public:
    Real() { init(); mpfr_set_zero(v_, 1); }
    Real(int x) { init(); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(long x) { init(); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(unsigned long x) { init(); mpfr_set_ui(v_, x, MPFR_RNDN); }
    Real(double x);
    explicit Real(const char* s);
    explicit Real(const std::string& s) : Real(s.c_str()) {}

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        v_[0] = o.v_[0];
        o.v_->_mpfr_d = nullptr;
    }
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real() {
        if (v_->_mpfr_d) mpfr_clear(v_);
    }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static Real pi();

private:
    void init() { mpfr_init2(v_, detail::thread_bits()); }
    mpfr_t v_;
};

Real operator-(const Real& a);
Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);

inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real log1p(const Real& a);
Real pow(const Real& a, const Real& b);
Real pow(const Real& a, long n);
Real floor(const Real& a);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
// Raw MPFR gamma / log-gamma; range checking lives in precision.hpp.
Real mpfr_gamma_of(const Real& a);
Real mpfr_lngamma_of(const Real& a);

// Copy of x rounded to the given number of decimal digits.
Real round_to_digits(const Real& x, int digits);

std::string to_fixed(const Real& x, int decimals);
std::string to_sci(const Real& x, int significant);
// Shortest decimal string that reproduces x at its own precision.
std::string to_exact_string(const Real& x);

std::ostream& operator<<(std::ostream& os, const Real& x);

} // namespace dhf
