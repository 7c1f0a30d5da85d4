#pragma once

#include "dhf/scf.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dhf {

struct TrialRecord {
    std::vector<Real> point;
    std::optional<Real> energy;  // empty when the SCF failed at this point
    bool accepted = false;       // replaced the worst vertex with a lower energy
    std::string step;            // initial, reflect, expand, contract, shrink, restart
    std::string failure;         // error text when the SCF failed
};

struct OptimizationTask {
    Real Z;
    Real z_param;
    Real c;
    int N = 1;
    std::vector<Real> seeds;     // ζ for N=1, (ζ, ζ') otherwise
    Real lower;                  // default 1e-3
    Real upper;                  // default 10Z+10
    ScfConfig scf;
    Real opt_tol;                // simplex diameter, default 1e-10
    int max_evaluations = 4000;

    static OptimizationTask standard(const Real& Z, const Real& z_param, const Real& c, int N);
};

struct OptimizationResult {
    std::vector<Real> exponents;
    Real energy;
    int evaluations = 0;
    std::vector<TrialRecord> trace;
    std::vector<std::string> warnings;
};

// Energy of the standard basis at the given exponents.
Real basis_energy(const OptimizationTask& task, const std::vector<Real>& exponents, SCFResult* out = nullptr);

// Nelder–Mead on the signed SCF energy with one restart from the best vertex.
OptimizationResult optimize_exponents(const OptimizationTask& task);

// Generic bounded Nelder–Mead used by optimize_exponents. The objective
// returns nullopt for infeasible points.
using Objective = std::function<std::optional<Real>(const std::vector<Real>&)>;
OptimizationResult nelder_mead(const Objective& f, const std::vector<Real>& seed, const Real& lower,
                               const Real& upper, const Real& tol, int max_evaluations);

struct StageResult {
    int N = 1;
    bool optimized = false;
    std::vector<Real> exponents;
    Real energy;
    SCFResult scf;
    std::optional<OptimizationResult> optimization;
};

// Stages up to N=4 are optimised, each seeded from the previous one; larger
// stages reuse the last optimised (ζ, ζ').
std::vector<StageResult> staged_optimize(const Real& Z, const Real& z_param, const Real& c,
                                         const std::vector<int>& stages, const ScfConfig& scf = {},
                                         std::optional<Real> opt_tol = std::nullopt);

} // namespace dhf
