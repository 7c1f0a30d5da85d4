#pragma once

// Independent reference evaluations for the unit tests: double-exponential
// quadrature, Euler-type integral representations and a plain determinant.
// None of this goes through the library's series, continued fractions or
// recurrences.

#include "dhf/matrix.hpp"
#include "dhf/precision.hpp"
#include "dhf/real.hpp"

#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using dhf::Real;

// f(x, b - x): the second argument stays accurate next to the right end.
using Integrand = std::function<Real(const Real&, const Real&)>;
using HalfLine = std::function<Real(const Real&)>;

namespace detail {

inline Real sinh(const Real& t) { return (dhf::exp(t) - dhf::exp(-t)) / Real(2); }
inline Real cosh(const Real& t) { return (dhf::exp(t) + dhf::exp(-t)) / Real(2); }

// Sum of node(t) over t = offset + k·step, k = 0, ±1, ... until the terms die
// out on both sides (node(0) only when include_zero).
template <class Node>
Real ladder(const Node& node, const Real& first, const Real& step, const Real& tiny, const Real& t_max) {
    Real s(0);
    for (int dir : {1, -1}) {
        Real t = dir > 0 ? first : -first;
        int small = 0;
        while (dhf::abs(t) <= t_max) {
            Real v = node(t);
            s += v;
            if (dhf::abs(v) < tiny * dhf::max(Real(1), dhf::abs(s))) {
                if (++small >= 3) break;
            } else {
                small = 0;
            }
            t += dir > 0 ? step : -step;
        }
    }
    return s;
}

template <class Node>
Real refine(const Node& node, const Real& tol, int max_level) {
    const Real tiny = dhf::tenth_power(dhf::working_digits() + 5);
    const Real t_max(8);
    Real h(1);
    Real sum = node(Real(0)) + ladder(node, h, h, tiny, t_max);
    Real prev = h * sum;
    for (int level = 1; level <= max_level; ++level) {
        h /= Real(2);
        sum += ladder(node, h, Real(2) * h, tiny, t_max);
        Real cur = h * sum;
        if (dhf::abs(cur - prev) < tol * dhf::max(Real(1), dhf::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

} // namespace detail

// tanh-sinh on [a, b].
inline Real tanh_sinh(const Integrand& f, const Real& a, const Real& b, const Real& tol, int max_level = 12) {
    const Real half_pi = Real::pi() / Real(2);
    const Real len = b - a;
    auto node = [&](const Real& t) -> Real {
        Real s = half_pi * detail::sinh(t);
        Real e = dhf::exp(Real(2) * s);
        Real left = len * e / (e + Real(1));
        Real right = len / (e + Real(1));
        Real cs = detail::cosh(s);
        Real w = len / Real(2) * half_pi * detail::cosh(t) / (cs * cs);
        return w * f(a + left, right);
    };
    return detail::refine(node, tol, max_level);
}

// exp-sinh on [0, ∞); `scale` should be the decay length of f.
inline Real exp_sinh(const HalfLine& f, const Real& scale, const Real& tol, int max_level = 12) {
    const Real half_pi = Real::pi() / Real(2);
    auto node = [&](const Real& t) -> Real {
        Real x = scale * dhf::exp(half_pi * detail::sinh(t));
        return x * half_pi * detail::cosh(t) * f(x);
    };
    return detail::refine(node, tol, max_level);
}

inline Real default_tol() { return dhf::tenth_power(dhf::working_digits() - 3); }

// Γ(a) = ∫ t^{a-1} e^{-t} dt
inline Real gamma(const Real& a) {
    return exp_sinh([&](const Real& t) { return dhf::pow(t, a - Real(1)) * dhf::exp(-t); }, Real(1), default_tol());
}

// B_x(a,b) by quadrature of the defining integral.
inline Real incomplete_beta(const Real& x, const Real& a, const Real& b) {
    return tanh_sinh(
        [&](const Real& t, const Real& xt) {
            Real one_minus = Real(1) - x + xt;  // 1 - t with t = x - xt
            return dhf::pow(t, a - Real(1)) * dhf::pow(one_minus, b - Real(1));
        },
        Real(0), x, default_tol());
}

// ₂F₁(1, b; c; x) = (c-1) ∫₀¹ (1-t)^{c-2} (1-xt)^{-b} dt,  c > 1.
inline Real hyp2f1_one(const Real& b, const Real& c, const Real& x) {
    Real integral = tanh_sinh(
        [&](const Real& t, const Real& tc) {
            return dhf::pow(tc, c - Real(2)) * dhf::pow(Real(1) - x * t, -b);
        },
        Real(0), Real(1), default_tol());
    return (c - Real(1)) * integral;
}

// ∫ r^m e^{-ηr} dr
inline Real moment(const Real& m, const Real& eta) {
    return exp_sinh([&](const Real& r) { return dhf::pow(r, m) * dhf::exp(-eta * r); }, Real(1) / eta,
                    default_tol());
}

// ∫₀^∞ f(r) dr for a product of decaying exponentials.
inline Real radial(const HalfLine& f, const Real& scale) { return exp_sinh(f, scale, default_tol()); }

// ∫∫ r1^n r2^n' e^{-ζr1-ζ'r2} r<^L / r>^{L+1} dr1 dr2 by nested quadrature.
inline Real slater(int L, const Real& n, const Real& np, const Real& zeta, const Real& zetap) {
    const Real tol = default_tol();
    const Real inner_tol = dhf::tenth_power(dhf::working_digits() - 1);
    auto outer = [&](const Real& r1) -> Real {
        Real below = tanh_sinh(
            [&](const Real& r2, const Real&) { return dhf::pow(r2, np + Real(L)) * dhf::exp(-zetap * r2); },
            Real(0), r1, inner_tol);
        Real above = exp_sinh(
            [&](const Real& s) {
                Real r2 = r1 + s;
                return dhf::pow(r2, np - Real(L + 1)) * dhf::exp(-zetap * r2);
            },
            Real(1) / zetap, inner_tol);
        Real v = below / dhf::pow(r1, static_cast<long>(L + 1)) + above * dhf::pow(r1, static_cast<long>(L));
        return dhf::pow(r1, n) * dhf::exp(-zeta * r1) * v;
    };
    return exp_sinh(outer, Real(1) / zeta, tol, 9);
}

// Determinant by Gaussian elimination with partial pivoting.
inline Real determinant(dhf::Matrix a) {
    const std::size_t n = a.rows();
    Real det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (dhf::abs(a(i, k)) > dhf::abs(a(piv, k))) piv = i;
        if (a(piv, k).is_zero()) return Real(0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            Real f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

// Reproducible uniform draws with 17 significant digits.
class Draw {
public:
    explicit Draw(unsigned seed) : gen_(seed) {}
    Real uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return Real(d(gen_));
    }
    int integer(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen_);
    }

private:
    std::mt19937_64 gen_;
};

inline dhf::Matrix random_symmetric(std::size_t n, Draw& draw) {
    dhf::Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = draw.uniform(-1, 1);
    return a;
}

inline dhf::Matrix random_spd(std::size_t n, Draw& draw) {
    dhf::Matrix b = random_symmetric(n, draw);
    dhf::Matrix s = b * b.transpose();
    for (std::size_t i = 0; i < n; ++i) s(i, i) += Real(n) / Real(10);
    return s;
}

} // namespace oracle
