#include "dhf/integrals.hpp"

#include "dhf/error.hpp"
#include "dhf/hyperradial.hpp"
#include "dhf/precision.hpp"

#include <array>
#include <map>
#include <ostream>

namespace dhf {

namespace {

struct RealLess {
    bool operator()(const std::array<Real, 4>& a, const std::array<Real, 4>& b) const {
        for (std::size_t i = 0; i < 4; ++i) {
            int c = mpfr_cmp(a[i].raw(), b[i].raw());
            if (c != 0) return c < 0;
        }
        return false;
    }
};

// Product f_p^β f_q^β = Σ coef r^power e^{-eta r}.
struct Density {
    std::vector<RadialTerm> terms;
    Real eta;
};

Density product(const Spinor& p, const Spinor& q, int beta) {
    Density d;
    d.eta = p.zeta + q.zeta;
    for (const auto& t : p.terms(beta))
        for (const auto& u : q.terms(beta)) d.terms.push_back({t.coef * u.coef, t.power + u.power});
    return d;
}

template <class F>
BlockMatrix diagonal_blocks(const BasisSet& basis, F moment_of) {
    const std::size_t m = basis.size();
    BlockMatrix out(m);
    for (int beta : {1, -1})
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = p; q < m; ++q) {
                Density d = product(basis.spinors[p], basis.spinors[q], beta);
                Real v;
                for (const auto& t : d.terms) v += t.coef * moment_of(t.power, d.eta);
                out(beta, beta, p, q) = v;
                out(beta, beta, q, p) = v;
            }
    return out;
}

} // namespace

Matrix OneElectronBlocks::core_hamiltonian() const {
    const std::size_t m = S.m;
    BlockMatrix h(m);
    const Real two_c2 = 2 * c * c;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            h(1, 1, p, q) = V(1, 1, p, q);
            h(1, -1, p, q) = c * Pi(1, -1, p, q);
            h(-1, 1, p, q) = c * Pi(-1, 1, p, q);
            h(-1, -1, p, q) = V(-1, -1, p, q) - two_c2 * S(-1, -1, p, q);
        }
    return h.full;
}

BlockMatrix overlap_block(const BasisSet& basis) {
    return diagonal_blocks(basis, [](const Real& n, const Real& eta) { return moment_integral(n, eta); });
}

BlockMatrix nuclear_block(const BasisSet& basis) {
    const Real Z = basis.Z;
    return diagonal_blocks(basis, [&](const Real& n, const Real& eta) {
        if (!(n > Real(0)))
            throw Error(ErrorCode::DomainError, "nuclear attraction integral diverges at the origin");
        return -Z * moment_integral(n - 1, eta);
    });
}

BlockMatrix kinetic_block(const BasisSet& basis) {
    const std::size_t m = basis.size();
    BlockMatrix out(m);
    // Π^{1,-1}_pq = ∫ f_p^+ (-d/dr + κ/r) f_q^- dr; Π^{-1,1} is its transpose.
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            const Spinor& sp = basis.spinors[p];
            const Spinor& sq = basis.spinors[q];
            if (sp.kappa != sq.kappa) throw Error(ErrorCode::DomainError, "mixed kappa in one basis");
            const Real eta = sp.zeta + sq.zeta;
            Real v;
            for (const auto& t : sp.terms(1))
                for (const auto& u : sq.terms(-1)) {
                    Real m0 = t.power + u.power;
                    v += t.coef * u.coef *
                         (Real(sq.kappa) - u.power) * moment_integral(m0 - 1, eta) +
                         t.coef * u.coef * sq.zeta * moment_integral(m0, eta);
                }
            out(1, -1, p, q) = v;
            out(-1, 1, q, p) = v;
        }
    return out;
}

OneElectronBlocks one_electron_blocks(const BasisSet& basis) {
    return OneElectronBlocks{overlap_block(basis), nuclear_block(basis), kinetic_block(basis), basis.c};
}

EriTensor eri_tensor(const BasisSet& basis) {
    const std::size_t m = basis.size();
    EriTensor eri(m);
    std::map<std::array<Real, 4>, Real, RealLess> cache;
    auto radial = [&](const Real& n, const Real& np, const Real& z, const Real& zp) -> const Real& {
        std::array<Real, 4> key{n, np, z, zp};
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Real v = slater_radial(RadialPair{n, np, z, zp, 0});
        return cache.emplace(std::move(key), std::move(v)).first->second;
    };

    std::vector<std::vector<std::vector<Density>>> dens(2, std::vector<std::vector<Density>>(m, std::vector<Density>(m)));
    for (int side = 0; side < 2; ++side)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q)
                dens[side][p][q] = product(basis.spinors[p], basis.spinors[q], side == 0 ? 1 : -1);

    for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2) {
            const int beta = b1 == 0 ? 1 : -1, beta_p = b2 == 0 ? 1 : -1;
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t q = p; q < m; ++q)
                    for (std::size_t r = 0; r < m; ++r)
                        for (std::size_t s = r; s < m; ++s) {
                            if (b1 == 1 && b2 == 0) {
                                // (pq|rs)^{-+} = (rs|pq)^{+-}
                                Real v = eri.J(1, -1, r, s, p, q);
                                eri.J(beta, beta_p, p, q, r, s) = v;
                                eri.J(beta, beta_p, q, p, r, s) = v;
                                eri.J(beta, beta_p, p, q, s, r) = v;
                                eri.J(beta, beta_p, q, p, s, r) = v;
                                continue;
                            }
                            if (b1 == b2 && (r < p || (r == p && s < q))) continue;
                            const Density& d1 = dens[b1][p][q];
                            const Density& d2 = dens[b2][r][s];
                            Real v;
                            for (const auto& t : d1.terms)
                                for (const auto& u : d2.terms)
                                    v += t.coef * u.coef * radial(t.power, u.power, d1.eta, d2.eta);
                            auto put = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
                                eri.J(beta, beta_p, a, b, c, d) = v;
                                eri.J(beta, beta_p, b, a, c, d) = v;
                                eri.J(beta, beta_p, a, b, d, c) = v;
                                eri.J(beta, beta_p, b, a, d, c) = v;
                            };
                            put(p, q, r, s);
                            if (b1 == b2) put(r, s, p, q);
                        }
        }
    return eri;
}

Integrals compute_integrals(const BasisSet& basis) { return Integrals{one_electron_blocks(basis), eri_tensor(basis)}; }

void dump_matrix(std::ostream& os, const std::string& name, const Matrix& m) {
    os << "# " << name << " " << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_exact_string(m(i, j));
        os << "\n";
    }
}

void dump_integrals(std::ostream& os, const Integrals& ints) {
    dump_matrix(os, "S", ints.one.S.full);
    dump_matrix(os, "V", ints.one.V.full);
    dump_matrix(os, "Pi", ints.one.Pi.full);
    const std::size_t m = ints.eri.size();
    os << "# ERI " << m << " beta beta' p q r s value\n";
    for (int beta : {1, -1})
        for (int beta_p : {1, -1})
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t q = 0; q < m; ++q)
                    for (std::size_t r = 0; r < m; ++r)
                        for (std::size_t s = 0; s < m; ++s)
                            os << beta << " " << beta_p << " " << p << " " << q << " " << r << " " << s << " "
                               << to_exact_string(ints.eri.J(beta, beta_p, p, q, r, s)) << "\n";
}

} // namespace dhf
