#include "dhf/spinor.hpp"

#include "dhf/error.hpp"
#include "dhf/linalg.hpp"
#include "dhf/precision.hpp"

#include <cstdlib>

namespace dhf {

namespace {

int delta_abs(int kappa) { return kappa > 0 ? 1 : 0; }

const Real& coef_A(const Spinor& s, int beta) { return beta > 0 ? s.A_plus : s.A_minus; }
const Real& coef_B(const Spinor& s, int beta) { return beta > 0 ? s.B_plus : s.B_minus; }

} // namespace

std::vector<RadialTerm> Spinor::terms(int beta) const {
    std::vector<RadialTerm> out;
    const Real& a = coef_A(*this, beta);
    const Real& b = coef_B(*this, beta);
    if (!a.is_zero()) out.push_back({a, n_star});
    if (!b.is_zero()) out.push_back({zeta * b, n_star + 1});
    return out;
}

Real Spinor::radial(int beta, const Real& r) const {
    Real s;
    for (const auto& t : terms(beta)) s += t.coef * pow(r, t.power);
    return s * exp(-zeta * r);
}

Real Spinor::radial_derivative(int beta, const Real& r) const {
    Real s;
    for (const auto& t : terms(beta)) s += t.coef * (t.power * pow(r, t.power - 1) - zeta * pow(r, t.power));
    return s * exp(-zeta * r);
}

Real Spinor::coupling_residual(int beta, const Real& r) const {
    Real g = Real(beta) * N_apparent - n_star - delta_abs(kappa);
    Real rhs = -Real(beta * kappa) / r * radial(beta, r) + (g / r + zeta) * radial(-beta, r);
    return radial_derivative(beta, r) - rhs;
}

Real principal_quantum(const Real& z_param, const Real& Z, int kappa, const Real& c) {
    if (c.sign() <= 0) throw Error(ErrorCode::DomainError, "speed of light must be positive");
    Real aZ = Z / c;
    Real radicand = Real(kappa * kappa) + aZ * aZ * (2 * z_param - 1);
    if (radicand.sign() <= 0)
        throw Error(ErrorCode::InvalidZParameter, "z-parameter gives a non-positive principal number radicand");
    return sqrt(radicand);
}

Coupling couple_components(const Real& n_star, int kappa) {
    if (n_star.sign() <= 0) throw Error(ErrorCode::DomainError, "n* must be positive");
    if (kappa == 0) throw Error(ErrorCode::DomainError, "kappa must be nonzero");
    const PrecisionContext outer = current_context();
    Coupling out;
    {
        PrecisionScope raised(outer.internal_digits(), outer.guard_digits);
        const int d = delta_abs(kappa);
        const Real n = n_star;
        const Real N = sqrt(Real(kappa * kappa) + (2 * n + 1) * d);

        // Unknowns (A+, B+, A-, B-); three matching equations per β for the
        // r^{n-1}, r^n and r^{n+1} coefficients.
        Matrix m(6, 4);
        for (int side = 0; side < 2; ++side) {
            const int beta = side == 0 ? 1 : -1;
            const std::size_t a_own = side == 0 ? 0 : 2, b_own = a_own + 1;
            const std::size_t a_oth = side == 0 ? 2 : 0, b_oth = a_oth + 1;
            Real g = Real(beta) * N - n - d;
            std::size_t r = 3 * side;
            m(r, a_own) = n + beta * kappa;
            m(r, a_oth) = -g;
            m(r + 1, b_own) = n + 1 + beta * kappa;
            m(r + 1, a_own) = -1;
            m(r + 1, b_oth) = -g;
            m(r + 1, a_oth) = -1;
            m(r + 2, b_own) = 1;
            m(r + 2, b_oth) = 1;
        }
        Matrix gram = m.transpose() * m;
        EigenSystem es = jacobi_eigensolve(gram);
        const Real scale = max(Real(1), gram.max_abs());
        const Real tol = tenth_power(outer.digits - 10) * scale;
        if (es.values[0] > tol)
            throw Error(ErrorCode::NoConsistentCoupling, "coupling system has no nonzero solution");
        if (es.values[1] <= tol)
            throw Error(ErrorCode::NoConsistentCoupling, "coupling solution is not unique up to scale");

        std::vector<Real> x = column(es.vectors, 0);
        Real biggest;
        for (const auto& v : x) biggest = max(biggest, abs(v));
        // Entries at rounding level are structural zeros of the system.
        const Real snap = tenth_power(outer.digits + outer.guard_digits / 2) * biggest;
        for (auto& v : x)
            if (abs(v) <= snap) v = 0;
        int sgn = 0;
        for (const auto& v : x)
            if (!v.is_zero()) {
                sgn = v.sign();
                break;
            }
        for (auto& v : x)
            if (sgn < 0) v = -v;
        out = Coupling{x[0], x[1], x[2], x[3], N};
    }
    auto r = [&](const Real& v) { return round_to_digits(v, outer.digits); };
    return Coupling{r(out.A_plus), r(out.B_plus), r(out.A_minus), r(out.B_minus), r(out.N_apparent)};
}

Real spinor_norm(const Spinor& s) {
    Real total;
    const Real eta = 2 * s.zeta;
    for (int beta : {1, -1}) {
        auto ts = s.terms(beta);
        for (const auto& t : ts)
            for (const auto& u : ts) total += t.coef * u.coef * moment_integral(t.power + u.power, eta);
    }
    return total;
}

Spinor normalize(const Spinor& s) {
    Real norm = spinor_norm(s);
    if (norm <= tenth_power(2 * working_digits()))
        throw Error(ErrorCode::ZeroFunction, "spinor " + s.label + " has vanishing norm");
    Real f = Real(1) / sqrt(norm);
    Spinor out = s;
    out.A_plus = s.A_plus * f;
    out.B_plus = s.B_plus * f;
    out.A_minus = s.A_minus * f;
    out.B_minus = s.B_minus * f;
    return out;
}

Spinor make_spinor(const Real& n_star, const Real& zeta, int kappa, std::string label) {
    if (zeta.sign() <= 0) throw Error(ErrorCode::DomainError, "orbital exponent must be positive");
    Coupling cp = couple_components(n_star, kappa);
    Spinor s;
    s.kappa = kappa;
    s.n_star = n_star;
    s.zeta = zeta;
    s.A_plus = cp.A_plus;
    s.B_plus = cp.B_plus;
    s.A_minus = cp.A_minus;
    s.B_minus = cp.B_minus;
    s.N_apparent = cp.N_apparent;
    s.label = std::move(label);
    return normalize(s);
}

BasisSet build_basis(const Real& Z, const Real& z_param, const std::vector<ShellSpec>& shells, const Real& c) {
    if (Z.sign() <= 0) throw Error(ErrorCode::DomainError, "nuclear charge must be positive");
    if (shells.empty()) throw Error(ErrorCode::DomainError, "empty basis");
    BasisSet b;
    b.Z = Z;
    b.c = c;
    b.z_param = z_param;
    const Real n1 = principal_quantum(z_param, Z, -1, c);
    for (const auto& sh : shells) {
        if (sh.k < 1) throw Error(ErrorCode::DomainError, "shell index must be >= 1");
        Real n = n1 + (sh.k - 1);
        std::string tag = std::to_string(sh.k) + "s";
        b.spinors.push_back(make_spinor(n, sh.zeta, -1, tag));
        if (sh.zeta_prime) b.spinors.push_back(make_spinor(n, *sh.zeta_prime, -1, tag + "'"));
    }
    const Real thr = tenth_power(working_digits() / 2);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            const auto& p = b.spinors[i];
            const auto& q = b.spinors[j];
            if (abs(p.n_star - q.n_star) <= thr && abs(p.zeta - q.zeta) <= thr * max(Real(1), p.zeta))
                throw Error(ErrorCode::DuplicateBasisFunction,
                            "basis functions " + p.label + " and " + q.label + " coincide");
        }
    return b;
}

BasisSet build_standard_basis(const Real& Z, const Real& z_param, int N, const Real& zeta,
                              const std::optional<Real>& zeta_prime, const Real& c) {
    std::vector<ShellSpec> shells;
    if (N == 1) {
        shells.push_back({1, zeta, std::nullopt});
    } else {
        if (N < 2 || N % 2 != 0) throw Error(ErrorCode::ConfigError, "basis size must be 1 or even");
        if (!zeta_prime) throw Error(ErrorCode::ConfigError, "basis size > 1 needs two exponents");
        for (int k = 1; k <= N / 2; ++k) shells.push_back({k, zeta, zeta_prime});
    }
    return build_basis(Z, z_param, shells, c);
}

} // namespace dhf
