#include "dhf/optimizer.hpp"

#include "dhf/error.hpp"
#include "dhf/precision.hpp"

#include <algorithm>

namespace dhf {

namespace {

struct Vertex {
    std::vector<Real> x;
    std::optional<Real> f;
};

bool lower_than(const std::optional<Real>& a, const std::optional<Real>& b) {
    if (!a) return false;
    if (!b) return true;
    return *a < *b;
}

Real distance(const std::vector<Real>& a, const std::vector<Real>& b) {
    Real s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return sqrt(s);
}

class Simplex {
public:
    Simplex(const Objective& f, const Real& lo, const Real& hi, int cap, OptimizationResult& out)
        : f_(f), lo_(lo), hi_(hi), cap_(cap), out_(out) {}

    Vertex eval(std::vector<Real> x, const char* step) {
        for (auto& v : x) v = min(max(v, lo_), hi_);
        if (out_.evaluations >= cap_)
            throw Error(ErrorCode::NoProgress, "optimizer exhausted its evaluation budget");
        ++out_.evaluations;
        TrialRecord rec;
        rec.point = x;
        rec.step = step;
        try {
            rec.energy = f_(x);
        } catch (const Error& e) {
            rec.failure = e.what();
        }
        if (!rec.energy && rec.failure.empty()) rec.failure = "objective undefined";
        out_.trace.push_back(rec);
        return Vertex{std::move(x), rec.energy};
    }

    void mark_accepted() { out_.trace.back().accepted = true; }

    // One Nelder–Mead descent from `start`; returns the best vertex once the
    // simplex diameter drops below tol.
    Vertex run(const Vertex& start, const Real& rel_step, const Real& tol, const char* first_step) {
        const std::size_t n = start.x.size();
        std::vector<Vertex> s{start};
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Real> x = start.x;
            Real h = max(abs(x[i]) * rel_step, 100 * tol);
            x[i] = x[i] + h > hi_ ? x[i] - h : x[i] + h;
            s.push_back(eval(x, first_step));
        }
        for (;;) {
            std::stable_sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return lower_than(a.f, b.f); });
            Real diameter;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) diameter = max(diameter, distance(s[i].x, s[j].x));
            if (diameter < tol) return s.front();

            std::vector<Real> centroid(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) centroid[k] += s[i].x[k] / Real(static_cast<long>(n));
            Vertex& worst = s.back();
            auto along = [&](const Real& t) {
                std::vector<Real> x(n);
                for (std::size_t k = 0; k < n; ++k) x[k] = centroid[k] + t * (worst.x[k] - centroid[k]);
                return x;
            };

            Vertex r = eval(along(Real(-1)), "reflect");
            if (lower_than(r.f, s.front().f)) {
                Vertex e = eval(along(Real(-2)), "expand");
                if (lower_than(e.f, r.f)) {
                    mark_accepted();
                    worst = std::move(e);
                } else {
                    out_.trace[out_.trace.size() - 2].accepted = true;
                    worst = std::move(r);
                }
                continue;
            }
            if (lower_than(r.f, s[n - 1].f)) {
                mark_accepted();
                worst = std::move(r);
                continue;
            }
            const bool outside = lower_than(r.f, worst.f);
            Vertex k = eval(along(outside ? Real("-0.5") : Real("0.5")), "contract");
            if (outside ? !lower_than(r.f, k.f) && lower_than(k.f, worst.f) : lower_than(k.f, worst.f)) {
                mark_accepted();
                worst = std::move(k);
                continue;
            }
            for (std::size_t i = 1; i < s.size(); ++i) {
                std::vector<Real> x(n);
                for (std::size_t q = 0; q < n; ++q) x[q] = s[0].x[q] + (s[i].x[q] - s[0].x[q]) / 2;
                s[i] = eval(x, "shrink");
            }
        }
    }

private:
    const Objective& f_;
    Real lo_, hi_;
    int cap_;
    OptimizationResult& out_;
};

} // namespace

OptimizationTask OptimizationTask::standard(const Real& Z, const Real& z_param, const Real& c, int N) {
    OptimizationTask t;
    t.Z = Z;
    t.z_param = z_param;
    t.c = c;
    t.N = N;
    t.seeds = {Z - Real(5) / 16};
    if (N > 1) t.seeds.push_back(2 * Z);
    t.lower = Real("0.001");
    t.upper = 10 * Z + 10;
    t.opt_tol = tenth_power(10);
    return t;
}

Real basis_energy(const OptimizationTask& task, const std::vector<Real>& exponents, SCFResult* out) {
    if (exponents.size() != (task.N == 1 ? 1u : 2u))
        throw Error(ErrorCode::ConfigError, "exponent count does not match the basis size");
    std::optional<Real> zp;
    if (exponents.size() == 2) zp = exponents[1];
    BasisSet b = build_standard_basis(task.Z, task.z_param, task.N, exponents[0], zp, task.c);
    SCFResult r = scf_solve(b, task.scf);
    if (out) *out = r;
    return r.energy_total;
}

OptimizationResult nelder_mead(const Objective& f, const std::vector<Real>& seed, const Real& lower,
                               const Real& upper, const Real& tol, int max_evaluations) {
    if (seed.empty()) throw Error(ErrorCode::ConfigError, "nothing to optimise");
    if (!(lower < upper)) throw Error(ErrorCode::ConfigError, "empty optimisation bounds");
    OptimizationResult out;
    Simplex simplex(f, lower, upper, max_evaluations, out);
    Vertex start = simplex.eval(seed, "initial");
    if (!start.f)
        throw Error(ErrorCode::SCFFailureAtTrialPoint, "objective fails at the seed point: " + out.trace.back().failure);
    Vertex best = simplex.run(start, Real("0.1"), tol, "initial");
    best = simplex.run(best, Real("0.05"), tol, "restart");

    out.exponents = best.x;
    out.energy = *best.f;
    const Real margin = (upper - lower) / 100;
    for (std::size_t i = 0; i < best.x.size(); ++i) {
        if (best.x[i] - lower < margin || upper - best.x[i] < margin)
            out.warnings.push_back("parameter " + std::to_string(i) + " = " + to_sci(best.x[i], 12) +
                                   " lies within 1% of the search bounds");
    }
    return out;
}

OptimizationResult optimize_exponents(const OptimizationTask& task) {
    Objective f = [&](const std::vector<Real>& x) -> std::optional<Real> { return basis_energy(task, x); };
    return nelder_mead(f, task.seeds, task.lower, task.upper, task.opt_tol, task.max_evaluations);
}

std::vector<StageResult> staged_optimize(const Real& Z, const Real& z_param, const Real& c,
                                         const std::vector<int>& stages, const ScfConfig& scf,
                                         std::optional<Real> opt_tol) {
    if (stages.empty()) throw Error(ErrorCode::ConfigError, "empty stage plan");
    for (std::size_t i = 0; i < stages.size(); ++i) {
        if (stages[i] != 1 && (stages[i] < 2 || stages[i] % 2))
            throw Error(ErrorCode::ConfigError, "stage sizes must be 1 or even");
        if (i && stages[i] <= stages[i - 1]) throw Error(ErrorCode::ConfigError, "stage plan must be ascending");
    }
    std::vector<StageResult> out;
    std::optional<Real> zeta1;
    std::optional<std::vector<Real>> pair;
    for (int N : stages) {
        OptimizationTask task = OptimizationTask::standard(Z, z_param, c, N);
        task.scf = scf;
        if (opt_tol) task.opt_tol = *opt_tol;
        StageResult st;
        st.N = N;
        if (N <= 4) {
            if (N == 1) {
                if (zeta1) task.seeds = {*zeta1};
            } else if (pair) {
                task.seeds = *pair;
            } else if (zeta1) {
                task.seeds[0] = *zeta1;
            }
            st.optimization = optimize_exponents(task);
            st.optimized = true;
            st.exponents = st.optimization->exponents;
            if (N == 1)
                zeta1 = st.exponents[0];
            else
                pair = st.exponents;
        } else {
            if (!pair) throw Error(ErrorCode::ConfigError, "a frozen stage needs an earlier optimised two-exponent stage");
            st.exponents = *pair;
        }
        st.energy = basis_energy(task, st.exponents, &st.scf);
        out.push_back(std::move(st));
    }
    return out;
}

} // namespace dhf
