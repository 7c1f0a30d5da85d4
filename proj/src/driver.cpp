#include "dhf/driver.hpp"

#include "dhf/error.hpp"
#include "dhf/precision.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace dhf {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

int parse_int(const std::string& v, const std::string& where) {
    try {
        std::size_t pos = 0;
        int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ConfigError, where + ": expected an integer, got '" + v + "'");
    }
}

bool parse_bool(const std::string& v, const std::string& where) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw Error(ErrorCode::ConfigError, where + ": expected a boolean, got '" + v + "'");
}

void check_real(const std::string& v, const std::string& field) {
    try {
        Real x(v);
        (void)x;
    } catch (const Error&) {
        throw Error(ErrorCode::ConfigError, field + ": '" + v + "' is not a number");
    }
}

bool same_number(const std::string& a, const std::string& b) {
    try {
        return std::stod(a) == std::stod(b);
    } catch (const std::exception&) {
        return a == b;
    }
}

std::string fixed12(const std::string& full) {
    Real x(full);
    return to_fixed(x, 12);
}

} // namespace

void RunConfig::validate() const {
    auto cfg_error = [](const std::string& m) { throw Error(ErrorCode::ConfigError, m); };
    static const std::vector<int> allowed{1, 2, 4, 6, 8};
    if (std::find(allowed.begin(), allowed.end(), N) == allowed.end())
        cfg_error("N: unsupported basis size " + std::to_string(N) + " (use 1, 2, 4, 6 or 8)");
    PrecisionContext{digits, 10}.validate();
    if (output != "text" && output != "json" && output != "csv") cfg_error("output: must be text, json or csv");
    if (table < 0 || table > 2) cfg_error("table: must be 1 or 2");
    if (jobs < 1) cfg_error("jobs: must be at least 1");
    check_real(Z, "Z");
    check_real(z_param, "zparam");
    check_real(c, "c");
    if (tol_scf) check_real(*tol_scf, "tol-scf");
    for (const auto& e : exponents) check_real(e, "zeta");
    if (table == 0 && !opt) {
        std::size_t want = N == 1 ? 1 : 2;
        if (exponents.size() != want)
            cfg_error("zeta: N=" + std::to_string(N) + " needs " + std::to_string(want) +
                      " exponent(s) unless --opt is given");
    }
    if (!stage_plan.empty()) {
        for (std::size_t i = 0; i < stage_plan.size(); ++i) {
            int s = stage_plan[i];
            if (s != 1 && (s < 2 || s % 2)) cfg_error("stage-plan: sizes must be 1 or even");
            if (i && s <= stage_plan[i - 1]) cfg_error("stage-plan: must be ascending");
        }
        if (table == 0 && stage_plan.back() != N) cfg_error("stage-plan: last stage must equal N");
    }
}

std::vector<int> RunConfig::effective_stage_plan() const {
    if (!stage_plan.empty()) return stage_plan;
    std::vector<int> plan;
    for (int s : {1, 2, 4})
        if (s < N) plan.push_back(s);
    plan.push_back(N);
    return plan;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value, const std::string& where) {
    const std::string at = where + " (" + key + ")";
    if (key == "Z")
        cfg.Z = value;
    else if (key == "zparam" || key == "z")
        cfg.z_param = value;
    else if (key == "N")
        cfg.N = parse_int(value, at);
    else if (key == "c")
        cfg.c = value;
    else if (key == "digits")
        cfg.digits = parse_int(value, at);
    else if (key == "tol-scf")
        cfg.tol_scf = value;
    else if (key == "opt")
        cfg.opt = parse_bool(value, at);
    else if (key == "zeta")
        cfg.exponents = split(value, ',');
    else if (key == "stage-plan") {
        cfg.stage_plan.clear();
        for (const auto& s : split(value, ',')) cfg.stage_plan.push_back(parse_int(s, at));
    } else if (key == "jobs")
        cfg.jobs = parse_int(value, at);
    else if (key == "output")
        cfg.output = value;
    else if (key == "table")
        cfg.table = parse_int(value, at);
    else if (key == "two-electron")
        cfg.two_electron = parse_bool(value, at);
    else if (key == "trace")
        cfg.trace = parse_bool(value, at);
    else if (key == "dump")
        cfg.dump_dir = value;
    else if (key == "reference")
        cfg.reference_path = value;
    else
        throw Error(ErrorCode::ConfigError, where + ": unknown key '" + key + "'");
}

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open config file '" + path + "'");
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        const std::string where = path + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw Error(ErrorCode::ConfigError, where + ": expected key=value");
        apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), where);
    }
}

void apply_environment(RunConfig& cfg) {
    if (const char* d = std::getenv("DIRAC_SCF_DIGITS"); d && *d)
        cfg.digits = parse_int(d, "environment (DIRAC_SCF_DIGITS)");
}

StageReport make_stage_report(const StageResult& st) {
    StageReport r;
    r.N = st.N;
    r.optimized = st.optimized;
    for (const auto& e : st.exponents) r.exponents.push_back(to_exact_string(e));
    r.energy = to_exact_string(st.energy);
    r.energy_abs = to_exact_string(abs(st.energy));
    r.occupied_eps = to_exact_string(st.scf.occupied_eps);
    r.below = st.scf.below_count;
    r.above = st.scf.above_count;
    r.iterations = st.scf.iterations;
    r.oscillatory = st.scf.oscillatory;
    if (st.optimization) {
        r.evaluations = st.optimization->evaluations;
        r.warnings = st.optimization->warnings;
    }
    return r;
}

Report run(const RunConfig& cfg) {
    cfg.validate();
    PrecisionScope scope(cfg.digits);
    const Real Z(cfg.Z), z(cfg.z_param), c(cfg.c);
    ScfConfig scf;
    if (cfg.tol_scf) scf.tol_scf = Real(*cfg.tol_scf);
    scf.two_electron = cfg.two_electron;

    Report rep;
    rep.Z = cfg.Z;
    rep.z_param = cfg.z_param;
    rep.c = cfg.c;
    rep.N = cfg.N;
    rep.digits = cfg.digits;
    rep.two_electron = cfg.two_electron;

    std::vector<StageResult> stages;
    if (cfg.opt) {
        stages = staged_optimize(Z, z, c, cfg.effective_stage_plan(), scf);
    } else {
        OptimizationTask task = OptimizationTask::standard(Z, z, c, cfg.N);
        task.scf = scf;
        StageResult st;
        st.N = cfg.N;
        for (const auto& e : cfg.exponents) st.exponents.emplace_back(e);
        st.energy = basis_energy(task, st.exponents, &st.scf);
        stages.push_back(std::move(st));
    }
    for (const auto& st : stages) {
        rep.stages.push_back(make_stage_report(st));
        if (!st.optimization) continue;
        for (const auto& t : st.optimization->trace) {
            OptTraceEntry e{st.N, {}, std::nullopt, t.accepted, t.step};
            for (const auto& x : t.point) e.point.push_back(to_exact_string(x));
            if (t.energy) e.energy = to_exact_string(*t.energy);
            rep.opt_trace.push_back(std::move(e));
        }
    }
    for (const auto& h : stages.back().scf.history)
        rep.scf_trace.push_back({h.iteration, to_exact_string(h.energy), to_exact_string(h.delta),
                                 to_exact_string(h.occupied_eps)});

    if (!cfg.dump_dir.empty()) {
        const auto& last = stages.back();
        std::optional<Real> zp;
        if (last.exponents.size() > 1) zp = last.exponents[1];
        BasisSet b = build_standard_basis(Z, z, last.N, last.exponents[0], zp, c);
        std::filesystem::create_directories(cfg.dump_dir);
        std::ofstream out(std::filesystem::path(cfg.dump_dir) / "integrals.txt");
        dump_integrals(out, compute_integrals(b));
    }
    return rep;
}

std::string report_csv(const Report& r) {
    std::ostringstream os;
    os << "Z,z,N,optimized,zeta,zeta_prime,energy,energy_abs,occupied_eps,below,above,iterations\n";
    for (const auto& s : r.stages) {
        os << r.Z << "," << r.z_param << "," << s.N << "," << (s.optimized ? 1 : 0) << ","
           << (s.exponents.size() > 0 ? s.exponents[0] : "") << "," << (s.exponents.size() > 1 ? s.exponents[1] : "")
           << "," << s.energy << "," << s.energy_abs << "," << s.occupied_eps << "," << s.below << "," << s.above
           << "," << s.iterations << "\n";
    }
    return os.str();
}

std::string render_report(const Report& r, const std::string& format, bool with_trace) {
    if (format == "csv") return report_csv(r);
    const StageReport& fin = r.stages.back();
    if (format == "json") {
        json j;
        j["Z"] = r.Z;
        j["z"] = r.z_param;
        j["N"] = r.N;
        j["c"] = r.c;
        j["digits"] = r.digits;
        j["two_electron"] = r.two_electron;
        j["energy"] = fin.energy;
        j["energy_abs"] = fin.energy_abs;
        j["occupied_eps"] = fin.occupied_eps;
        j["branch_counts"] = {{"below", fin.below}, {"above", fin.above}};
        j["stages"] = json::array();
        for (const auto& s : r.stages)
            j["stages"].push_back({{"N", s.N},
                                   {"optimized", s.optimized},
                                   {"exponents", s.exponents},
                                   {"energy", s.energy},
                                   {"energy_abs", s.energy_abs},
                                   {"occupied_eps", s.occupied_eps},
                                   {"branch_counts", {{"below", s.below}, {"above", s.above}}},
                                   {"iterations", s.iterations},
                                   {"oscillatory", s.oscillatory},
                                   {"evaluations", s.evaluations},
                                   {"warnings", s.warnings}});
        j["scf_trace"] = json::array();
        for (const auto& t : r.scf_trace)
            j["scf_trace"].push_back({{"iteration", t.iteration}, {"energy", t.energy}, {"delta", t.delta}, {"occupied_eps", t.eps}});
        j["optimization_trace"] = json::array();
        for (const auto& t : r.opt_trace)
            j["optimization_trace"].push_back({{"stage_N", t.stage_N},
                                               {"point", t.point},
                                               {"energy", t.energy ? json(*t.energy) : json(nullptr)},
                                               {"accepted", t.accepted},
                                               {"step", t.step}});
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "Z = " << r.Z << "   z = " << r.z_param << "   N = " << r.N << "   digits = " << r.digits
       << "   c = " << r.c << (r.two_electron ? "" : "   (two-electron terms off)") << "\n";
    os << std::left << std::setw(4) << "N" << std::setw(6) << "opt" << std::setw(18) << "zeta" << std::setw(18)
       << "zeta'" << std::setw(20) << "|E|" << std::setw(18) << "eps(occ)" << std::setw(10) << "below/above"
       << "  iter\n";
    for (const auto& s : r.stages) {
        auto ex = [&](std::size_t i) { return i < s.exponents.size() ? fixed12(s.exponents[i]) : std::string("-"); };
        os << std::left << std::setw(4) << s.N << std::setw(6) << (s.optimized ? "yes" : "no") << std::setw(18)
           << ex(0) << std::setw(18) << ex(1) << std::setw(20) << fixed12(s.energy_abs) << std::setw(18)
           << fixed12(s.occupied_eps) << std::setw(11) << (std::to_string(s.below) + "/" + std::to_string(s.above))
           << " " << s.iterations << (s.oscillatory ? " (oscillatory)" : "") << "\n";
        for (const auto& w : s.warnings) os << "  warning: " << w << "\n";
    }
    os << "|E| = " << fixed12(fin.energy_abs) << " a.u.   E = " << fixed12(fin.energy)
       << "   branches: " << fin.below << " below -c^2, " << fin.above << " above\n";
    if (with_trace) {
        os << "SCF trace (final basis):\n";
        for (const auto& t : r.scf_trace)
            os << "  " << std::setw(4) << t.iteration << "  E = " << fixed12(t.energy) << "  dE = "
               << to_sci(Real(t.delta), 3) << "  eps = " << fixed12(t.eps) << "\n";
        if (!r.opt_trace.empty()) {
            os << "optimisation trace:\n";
            for (const auto& t : r.opt_trace) {
                os << "  N=" << t.stage_N << " " << std::setw(9) << t.step;
                for (const auto& x : t.point) os << " " << fixed12(x);
                os << "  " << (t.energy ? fixed12(*t.energy) : std::string("SCF failed"))
                   << (t.accepted ? "  accepted" : "") << "\n";
            }
        }
    }
    return os.str();
}

std::string default_reference_path() {
    if (const char* p = std::getenv("DHF_REFERENCE_CSV"); p && *p) return p;
    return std::string(DHF_DATA_DIR) + "/reference_tables.csv";
}

std::vector<ReferenceEntry> load_reference(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open reference data '" + path + "'");
    std::vector<ReferenceEntry> out;
    std::string line;
    bool header = true;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 6)
            throw Error(ErrorCode::ConfigError, path + ":" + std::to_string(lineno) + ": expected 6 fields");
        out.push_back({parse_int(f[0], path), f[1], f[2], parse_int(f[3], path), f[4], f[5]});
    }
    return out;
}

std::optional<std::string> published_value(const std::vector<ReferenceEntry>& ref, int table, const std::string& Z,
                                       const std::string& z, int N) {
    for (const auto& e : ref)
        if (e.table == table && e.source == "published" && e.N == N && same_number(e.Z, Z) && same_number(e.z, z))
            return e.value;
    return std::nullopt;
}

bool SweepResult::any_failed() const {
    for (const auto& r : rows)
        if (!r.error.empty()) return true;
    return false;
}

SweepResult sweep_rows(int table, const std::vector<std::pair<std::string, std::string>>& rows,
                       const std::vector<int>& columns, const RunConfig& tmpl) {
    SweepResult res;
    res.table = table;
    res.columns = columns;
    for (const auto& [Z, z] : rows) {
        SweepRow row;
        row.Z = Z;
        row.z = z;
        row.digits = tmpl.digits;
        // Heavy ions lose more digits to cancellation in the radial integrals.
        if (std::stod(Z) >= 70) row.digits = std::max(row.digits, 60);
        res.rows.push_back(row);
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < res.rows.size(); i = next++) {
            SweepRow& row = res.rows[i];
            try {
                PrecisionScope scope(row.digits);
                ScfConfig scf;
                if (tmpl.tol_scf) scf.tol_scf = Real(*tmpl.tol_scf);
                auto stages = staged_optimize(Real(row.Z), Real(row.z), Real(tmpl.c), columns, scf);
                for (const auto& st : stages) row.stages.push_back(make_stage_report(st));
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, tmpl.jobs)), res.rows.size());
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return res;
}

SweepResult table_sweep(int table, const RunConfig& tmpl) {
    std::vector<std::pair<std::string, std::string>> rows;
    if (table == 1) {
        for (const char* z : {"-0.9", "-0.5", "-0.1", "0", "0.1", "0.5", "0.9"}) rows.emplace_back("2", z);
        return sweep_rows(1, rows, {1, 2, 4, 6, 8}, tmpl);
    }
    if (table == 2) {
        for (const char* Z : {"4", "8", "10", "14", "16", "18", "20", "30", "40", "50", "60", "70", "80"})
            for (const char* z : {"0", "0.5"}) rows.emplace_back(Z, z);
        return sweep_rows(2, rows, {1, 2, 4, 6}, tmpl);
    }
    throw Error(ErrorCode::ConfigError, "table must be 1 or 2");
}

std::string render_sweep(const SweepResult& s, const std::vector<ReferenceEntry>& ref, const std::string& format) {
    struct Cell {
        const SweepRow* row;
        int N;
        const StageReport* st;
        std::optional<std::string> published;
        std::optional<Real> diff;
    };
    std::vector<std::vector<Cell>> grid;
    for (const auto& row : s.rows) {
        std::vector<Cell> cells;
        for (int N : s.columns) {
            Cell c{&row, N, nullptr, published_value(ref, s.table, row.Z, row.z, N), std::nullopt};
            for (const auto& st : row.stages)
                if (st.N == N) c.st = &st;
            if (c.st && c.published) c.diff = Real(c.st->energy_abs) - Real(*c.published);
            cells.push_back(std::move(c));
        }
        grid.push_back(std::move(cells));
    }
    std::vector<const ReferenceEntry*> literature;
    for (const auto& e : ref)
        if (e.table == s.table && e.source != "published") literature.push_back(&e);

    if (format == "json") {
        json j;
        j["table"] = s.table;
        j["columns"] = s.columns;
        j["rows"] = json::array();
        for (const auto& cells : grid) {
            const SweepRow& row = *cells.front().row;
            json jr{{"Z", row.Z}, {"z", row.z}, {"digits", row.digits}, {"error", row.error}, {"cells", json::array()}};
            for (const auto& c : cells) {
                json jc{{"N", c.N}};
                if (c.st) {
                    jc["energy"] = c.st->energy;
                    jc["energy_abs"] = c.st->energy_abs;
                    jc["exponents"] = c.st->exponents;
                    jc["branch_counts"] = {{"below", c.st->below}, {"above", c.st->above}};
                }
                jc["published"] = c.published ? json(*c.published) : json(nullptr);
                jc["diff"] = c.diff ? json(to_sci(*c.diff, 6)) : json(nullptr);
                jr["cells"].push_back(jc);
            }
            j["rows"].push_back(jr);
        }
        j["literature"] = json::array();
        for (const auto* e : literature)
            j["literature"].push_back({{"Z", e->Z}, {"N", e->N}, {"value", e->value}, {"source", e->source}});
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "table,Z,z,N,energy_abs,published,diff,below,above,status\n";
        for (const auto& cells : grid)
            for (const auto& c : cells) {
                os << s.table << "," << c.row->Z << "," << c.row->z << "," << c.N << ","
                   << (c.st ? c.st->energy_abs : "") << "," << c.published.value_or("") << ","
                   << (c.diff ? to_sci(*c.diff, 6) : "") << "," << (c.st ? std::to_string(c.st->below) : "") << ","
                   << (c.st ? std::to_string(c.st->above) : "") << "," << (c.st ? "ok" : "failed") << "\n";
            }
        return os.str();
    }

    std::ostringstream os;
    os << (s.table == 1 ? "Table I: He total DHF energies |E| (a.u.)" : "Table II: He-like total DHF energies |E| (a.u.)")
       << "\n";
    os << std::left << std::setw(12) << (s.table == 1 ? "z" : "Z / z");
    for (int N : s.columns) os << std::setw(22) << ("N=" + std::to_string(N));
    os << "\n";
    for (const auto& cells : grid) {
        const SweepRow& row = *cells.front().row;
        std::string key = s.table == 1 ? row.z : row.Z + " / " + row.z;
        os << std::setw(12) << key;
        for (const auto& c : cells) os << std::setw(22) << (c.st ? fixed12(c.st->energy_abs) : std::string("FAILED"));
        os << "\n" << std::setw(12) << "  published";
        for (const auto& c : cells) os << std::setw(22) << (c.published ? fixed12(*c.published) : std::string("-"));
        os << "\n" << std::setw(12) << "  diff";
        for (const auto& c : cells) os << std::setw(22) << (c.diff ? to_sci(*c.diff, 3) : std::string("-"));
        os << "\n" << std::setw(12) << "  branches";
        for (const auto& c : cells)
            os << std::setw(22)
               << (c.st ? std::to_string(c.st->below) + "/" + std::to_string(c.st->above) : std::string("-"));
        os << "\n";
        if (!row.error.empty()) os << "  error: " << row.error << "\n";
    }
    if (!literature.empty()) {
        os << "Literature:\n";
        for (const auto* e : literature)
            os << "  " << (s.table == 1 ? "" : "Z=" + e->Z + " ") << "N=" << e->N << "  " << e->value << "  ["
               << e->source << "]\n";
    }
    return os.str();
}

} // namespace dhf
