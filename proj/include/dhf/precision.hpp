#pragma once

#include "dhf/real.hpp"

#include <cstddef>

namespace dhf {

struct PrecisionContext {
    int digits = 50;
    int guard_digits = 10;

    int internal_digits() const { return digits + guard_digits; }
    void validate() const;
};

mpfr_prec_t digits_to_bits(int digits);

// Context of the calling thread. Threads start at the default context.
const PrecisionContext& current_context();
int working_digits();

// RAII: makes ctx the calling thread's working precision until destruction.
class PrecisionScope {
public:
    explicit PrecisionScope(const PrecisionContext& ctx);
    explicit PrecisionScope(int digits, int guard_digits = 10)
        : PrecisionScope(PrecisionContext{digits, guard_digits}) {}
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    PrecisionContext saved_;
};

// 10^(-k) at working precision.
Real tenth_power(int k);

Real gamma(const Real& a);
Real lgamma(const Real& a);
Real beta(const Real& a, const Real& b);
// Lower incomplete beta B_x(a,b) = ∫₀ˣ t^{a-1}(1-t)^{b-1} dt (not regularised).
Real incomplete_beta(const Real& x, const Real& a, const Real& b);

constexpr std::size_t kHyp2f1TermCap = 1000000;
Real hyp2f1_series(const Real& a, const Real& b, const Real& c, const Real& x,
                   std::size_t term_cap = kHyp2f1TermCap);

// ∫₀^∞ r^m e^{-ηr} dr = Γ(m+1)/η^{m+1}
Real moment_integral(const Real& m, const Real& eta);

} // namespace dhf
