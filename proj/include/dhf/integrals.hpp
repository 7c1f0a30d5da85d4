#pragma once

#include "dhf/matrix.hpp"
#include "dhf/spinor.hpp"

#include <iosfwd>
#include <vector>

namespace dhf {

// Radial functions are used in the reduced (P, Q) form, so every one-electron
// integral carries the measure dr.
struct OneElectronBlocks {
    BlockMatrix S;  // block diagonal
    BlockMatrix V;  // block diagonal
    BlockMatrix Pi; // off-diagonal blocks only
    Real c;

    // h = [[V, cΠ], [cΠᵀ, V - 2c²S]]
    Matrix core_hamiltonian() const;
};

// (p^β q^β | r^β' s^β') over the L=0 multipole, all four component pairs.
class EriTensor {
public:
    EriTensor() = default;
    explicit EriTensor(std::size_t m) : m_(m), data_(4 * m * m * m * m) {}

    std::size_t size() const { return m_; }
    Real& J(int beta, int beta_p, std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
        return data_[index(beta, beta_p, p, q, r, s)];
    }
    const Real& J(int beta, int beta_p, std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
        return data_[index(beta, beta_p, p, q, r, s)];
    }
    // Exchange pattern (p^β s^β | r^β' q^β').
    const Real& K(int beta, int beta_p, std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
        return J(beta, beta_p, p, s, r, q);
    }

private:
    std::size_t index(int beta, int beta_p, std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
        std::size_t b = (beta > 0 ? 0 : 2) + (beta_p > 0 ? 0 : 1);
        return (((b * m_ + p) * m_ + q) * m_ + r) * m_ + s;
    }
    std::size_t m_ = 0;
    std::vector<Real> data_;
};

BlockMatrix overlap_block(const BasisSet& basis);
BlockMatrix nuclear_block(const BasisSet& basis);
BlockMatrix kinetic_block(const BasisSet& basis);
OneElectronBlocks one_electron_blocks(const BasisSet& basis);
EriTensor eri_tensor(const BasisSet& basis);

struct Integrals {
    OneElectronBlocks one;
    EriTensor eri;
};
Integrals compute_integrals(const BasisSet& basis);

// Plain-text dump: one full-precision value per entry, row-major.
void dump_matrix(std::ostream& os, const std::string& name, const Matrix& m);
void dump_integrals(std::ostream& os, const Integrals& ints);

} // namespace dhf
