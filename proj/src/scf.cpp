#include "dhf/scf.hpp"

#include "dhf/error.hpp"
#include "dhf/precision.hpp"

namespace dhf {

DensityMatrix density_from(const std::vector<Real>& coeffs, std::size_t m) {
    if (coeffs.size() != 2 * m) throw Error(ErrorCode::DimensionMismatch, "coefficient vector length");
    DensityMatrix d{BlockMatrix(m), 2};
    for (std::size_t i = 0; i < 2 * m; ++i)
        for (std::size_t j = 0; j < 2 * m; ++j) d.R.full(i, j) = coeffs[i] * coeffs[j];
    return d;
}

Matrix two_electron_matrix(const EriTensor& eri, const DensityMatrix& rho) {
    const std::size_t m = eri.size();
    if (rho.R.m != m) throw Error(ErrorCode::DimensionMismatch, "density and integrals disagree in size");
    BlockMatrix g(m);
    for (int beta : {1, -1}) {
        // Coulomb: J^{ββ}_pq = Σ_β' Σ_rs ρ^{β'β'}_sr (p^β q^β | r^β' s^β')
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = p; q < m; ++q) {
                Real j;
                for (int beta_p : {1, -1})
                    for (std::size_t r = 0; r < m; ++r)
                        for (std::size_t s = 0; s < m; ++s)
                            j += rho.R(beta_p, beta_p, s, r) * eri.J(beta, beta_p, p, q, r, s);
                Real v = 2 * j;
                g(beta, beta, p, q) += v;
                if (q != p) g(beta, beta, q, p) += v;
            }
        // Exchange: K^{ββ'}_pq = Σ_rs ρ^{ββ'}_sr (p^β s^β | r^β' q^β')
        for (int beta_p : {1, -1})
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t q = 0; q < m; ++q) {
                    Real k;
                    for (std::size_t r = 0; r < m; ++r)
                        for (std::size_t s = 0; s < m; ++s)
                            k += rho.R(beta, beta_p, s, r) * eri.K(beta, beta_p, p, q, r, s);
                    g(beta, beta_p, p, q) -= k;
                }
    }
    return g.full;
}

Matrix assemble_fock(const OneElectronBlocks& blocks, const EriTensor& eri, const DensityMatrix& rho) {
    return blocks.core_hamiltonian() + two_electron_matrix(eri, rho);
}

std::size_t select_occupied(const std::vector<Real>& eigenvalues, const Real& c) {
    const Real floor_ = -c * c;
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        if (eigenvalues[i] > floor_ && (!best || eigenvalues[i] < eigenvalues[*best])) best = i;
    if (!best) throw Error(ErrorCode::NoElectronicState, "no eigenvalue above -c^2");
    return *best;
}

Real total_energy(const DensityMatrix& rho, const OneElectronBlocks& blocks, const EriTensor& eri,
                  bool two_electron) {
    Matrix h = blocks.core_hamiltonian();
    if (rho.R.full.rows() != h.rows()) throw Error(ErrorCode::DimensionMismatch, "density and h disagree in size");
    Matrix w = Real(2) * h;
    if (two_electron) w = w + two_electron_matrix(eri, rho);
    return trace_product(rho.R.full, w);
}

SCFResult scf_solve(const BasisSet& basis, const ScfConfig& cfg) {
    return scf_solve(basis, compute_integrals(basis), cfg);
}

SCFResult scf_solve(const BasisSet& basis, const Integrals& ints, const ScfConfig& cfg) {
    const std::size_t m = basis.size();
    const Real& c = basis.c;
    const Real tol = cfg.tol_scf ? *cfg.tol_scf : tenth_power(working_digits() - 15);
    const Real damping = cfg.damping ? *cfg.damping : (basis.Z >= Real(40) ? Real("0.3") : Real(0));
    if (damping.sign() < 0 || damping >= Real(1)) throw Error(ErrorCode::ConfigError, "damping must lie in [0,1)");

    const Matrix h = ints.one.core_hamiltonian();
    const Matrix x = lowdin_orthogonalizer(ints.one.S.full);
    const Matrix xt = x.transpose();

    auto diagonalize = [&](const Matrix& f, SCFResult& out) {
        EigenSystem es = jacobi_eigensolve(xt * f * x);
        out.eigenvalues = es.values;
        out.coefficients = x * es.vectors;
        out.occupied_index = select_occupied(out.eigenvalues, c);
        out.occupied_eps = out.eigenvalues[out.occupied_index];
    };

    SCFResult res;
    diagonalize(h, res);  // bare-nucleus start
    DensityMatrix rho = density_from(column(res.coefficients, res.occupied_index), m);

    std::optional<Real> previous;
    int quiet = 0;
    for (int it = 1; it <= cfg.max_iter; ++it) {
        Matrix f = cfg.two_electron ? h + two_electron_matrix(ints.eri, rho) : h;
        Real e = trace_product(rho.R.full, h + f);
        Real de = previous ? e - *previous : e;
        diagonalize(f, res);
        res.history.push_back({it, e, de, res.occupied_eps});
        if (previous && it > 2 && de > tol) res.oscillatory = true;
        quiet = (previous && abs(de) < tol) ? quiet + 1 : 0;
        previous = e;
        res.iterations = it;
        if (quiet >= 2) {
            res.converged = true;
            res.energy_total = e;
            res.density = rho;
            break;
        }
        DensityMatrix next = density_from(column(res.coefficients, res.occupied_index), m);
        if (damping.sign() > 0) next.R.full = (Real(1) - damping) * next.R.full + damping * rho.R.full;
        rho = std::move(next);
    }
    if (!res.converged)
        throw Error(ErrorCode::NoConvergence, "SCF did not converge in " + std::to_string(cfg.max_iter) + " iterations");

    const Real floor_ = -c * c;
    for (const auto& ev : res.eigenvalues) (ev < floor_ ? res.below_count : res.above_count)++;
    return res;
}

} // namespace dhf
