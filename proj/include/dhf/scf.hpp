#pragma once

#include "dhf/integrals.hpp"
#include "dhf/linalg.hpp"

#include <optional>
#include <vector>

namespace dhf {

// Closed s1/2² shell: ρ = c cᵀ over both components; each spatial spinor
// carries two electrons.
struct DensityMatrix {
    BlockMatrix R;
    int occupation = 2;
};

DensityMatrix density_from(const std::vector<Real>& coeffs, std::size_t m);

struct ScfConfig {
    std::optional<Real> tol_scf;  // default 10^(-digits+15)
    int max_iter = 200;
    std::optional<Real> damping;  // default 0.3 for Z >= 40, else 0
    bool two_electron = true;
};

struct IterationRecord {
    int iteration;
    Real energy;
    Real delta;
    Real occupied_eps;
};

struct SCFResult {
    std::vector<Real> eigenvalues;  // ascending, 2M entries
    Matrix coefficients;            // columns are eigenvectors in the nonorthogonal basis
    DensityMatrix density;
    Real energy_total;              // signed
    Real occupied_eps;
    std::size_t occupied_index = 0;
    int iterations = 0;
    bool converged = false;
    bool oscillatory = false;
    std::size_t below_count = 0;    // eigenvalues < -c²
    std::size_t above_count = 0;
    std::vector<IterationRecord> history;
};

// F = h + 2J[ρ] - K[ρ]
Matrix assemble_fock(const OneElectronBlocks& blocks, const EriTensor& eri, const DensityMatrix& rho);
// Two-electron part G = 2J[ρ] - K[ρ] alone.
Matrix two_electron_matrix(const EriTensor& eri, const DensityMatrix& rho);

std::size_t select_occupied(const std::vector<Real>& eigenvalues, const Real& c);

// E = tr[ρ(h + F)] = tr[ρ(2h + G)]
Real total_energy(const DensityMatrix& rho, const OneElectronBlocks& blocks, const EriTensor& eri,
                  bool two_electron = true);

SCFResult scf_solve(const BasisSet& basis, const ScfConfig& cfg = {});
SCFResult scf_solve(const BasisSet& basis, const Integrals& ints, const ScfConfig& cfg = {});

} // namespace dhf
