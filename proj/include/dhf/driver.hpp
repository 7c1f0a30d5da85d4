#pragma once

#include "dhf/optimizer.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dhf {

// Real-valued fields are kept as decimal text so they can be converted at
// whatever precision the run ends up using.
struct RunConfig {
    std::string Z = "2";
    std::string z_param = "0";
    int N = 1;
    std::string c = kDefaultSpeedOfLight;
    int digits = 50;
    std::optional<std::string> tol_scf;
    bool opt = false;
    std::vector<std::string> exponents;
    std::vector<int> stage_plan;
    int jobs = 1;
    std::string output = "text";  // text | json | csv
    int table = 0;                // 0: single run, 1 or 2: table sweep
    bool two_electron = true;
    bool trace = false;
    std::string dump_dir;
    std::string reference_path;

    void validate() const;
    std::vector<int> effective_stage_plan() const;
};

// Apply one key=value setting; `where` is used in diagnostics.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value, const std::string& where);
// Flat key=value file, '#' starts a comment.
void load_config_file(RunConfig& cfg, const std::string& path);
// DIRAC_SCF_DIGITS, if set.
void apply_environment(RunConfig& cfg);

struct StageReport {
    int N = 1;
    bool optimized = false;
    std::vector<std::string> exponents;
    std::string energy;        // signed, full precision
    std::string energy_abs;
    std::string occupied_eps;
    std::size_t below = 0, above = 0;
    int iterations = 0;
    bool oscillatory = false;
    int evaluations = 0;
    std::vector<std::string> warnings;
};

struct TraceEntry {
    int iteration;
    std::string energy, delta, eps;
};

struct OptTraceEntry {
    int stage_N;
    std::vector<std::string> point;
    std::optional<std::string> energy;
    bool accepted;
    std::string step;
};

struct Report {
    std::string Z, z_param, c;
    int N = 1;
    int digits = 50;
    bool two_electron = true;
    std::vector<StageReport> stages;  // last entry is the requested basis
    std::vector<TraceEntry> scf_trace;
    std::vector<OptTraceEntry> opt_trace;
};

StageReport make_stage_report(const StageResult& st);
Report run(const RunConfig& cfg);

std::string render_report(const Report& r, const std::string& format, bool with_trace = false);
std::string report_csv(const Report& r);

// Reference values (published tables and literature) bundled with the code.
struct ReferenceEntry {
    int table = 0;
    std::string Z, z;
    int N = 0;
    std::string value;
    std::string source;
};
std::vector<ReferenceEntry> load_reference(const std::string& path);
std::string default_reference_path();
std::optional<std::string> published_value(const std::vector<ReferenceEntry>& ref, int table, const std::string& Z,
                                       const std::string& z, int N);

struct SweepRow {
    std::string Z, z;
    int digits = 50;
    std::vector<StageReport> stages;
    std::string error;
};

struct SweepResult {
    int table = 1;
    std::vector<int> columns;
    std::vector<SweepRow> rows;
    bool any_failed() const;
};

// Grid of the requested table; rows run concurrently up to cfg.jobs.
SweepResult table_sweep(int table, const RunConfig& tmpl);
// Arbitrary rows: each (Z, z) pair runs the staged plan `columns`.
SweepResult sweep_rows(int table, const std::vector<std::pair<std::string, std::string>>& rows,
                       const std::vector<int>& columns, const RunConfig& tmpl);
std::string render_sweep(const SweepResult& s, const std::vector<ReferenceEntry>& ref, const std::string& format);

} // namespace dhf
