// dhf-stso: total energies of He-like atoms in a Slater-type spinor basis.
#include "dhf/driver.hpp"
#include "dhf/error.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

int exit_code_for(dhf::ErrorCode code) {
    switch (code) {
    case dhf::ErrorCode::ConfigError:
    case dhf::ErrorCode::InvalidZParameter:
    case dhf::ErrorCode::DuplicateBasisFunction:
    case dhf::ErrorCode::DomainError:
        return 1;
    default:
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac-Hartree-Fock energies of He-like atoms in Slater-type spinor orbitals"};
    // Everything is collected as text and applied on top of env/config-file values.
    std::string Z, zparam, N, c, digits, tol, zeta, plan, jobs, output, table, config, dump, reference;
    bool opt = false, no_two_electron = false, trace = false;
    app.add_option("--Z", Z, "nuclear charge");
    app.add_option("--zparam", zparam, "z parameter of the principal-number rule");
    app.add_option("--N", N, "basis size (1, 2, 4, 6, 8)");
    app.add_option("--c", c, "speed of light in a.u. (default 137.0359895)");
    app.add_option("--digits", digits, "working precision in decimal digits (default 50, env DIRAC_SCF_DIGITS)");
    app.add_option("--tol-scf", tol, "SCF energy tolerance (default 1e-(digits-15))");
    app.add_flag("--opt", opt, "optimise exponents (staged plan)");
    app.add_option("--zeta", zeta, "comma-separated exponents: zeta[,zeta']");
    app.add_option("--stage-plan", plan, "comma-separated stage sizes, e.g. 1,2,4,6,8");
    app.add_option("--jobs", jobs, "concurrent sweep rows");
    app.add_option("--output", output, "text, json or csv");
    app.add_option("--table", table, "reproduce table 1 or 2");
    app.add_option("--config", config, "key=value file; flags override it");
    app.add_option("--dump", dump, "directory for a full-precision dump of S, V, Pi and the ERI tensor");
    app.add_option("--reference", reference, "reference-value CSV for table sweeps");
    app.add_flag("--no-two-electron", no_two_electron, "drop electron repulsion (one-electron check)");
    app.add_flag("--trace", trace, "print SCF and optimisation traces in text mode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    dhf::RunConfig cfg;
    try {
        dhf::apply_environment(cfg);
        if (!config.empty()) dhf::load_config_file(cfg, config);
        auto set = [&](const char* flag, const char* key, const std::string& v) {
            if (app.count(flag)) dhf::apply_setting(cfg, key, v, std::string("flag ") + flag);
        };
        set("--Z", "Z", Z);
        set("--zparam", "zparam", zparam);
        set("--N", "N", N);
        set("--c", "c", c);
        set("--digits", "digits", digits);
        set("--tol-scf", "tol-scf", tol);
        set("--zeta", "zeta", zeta);
        set("--stage-plan", "stage-plan", plan);
        set("--jobs", "jobs", jobs);
        set("--output", "output", output);
        set("--table", "table", table);
        set("--dump", "dump", dump);
        set("--reference", "reference", reference);
        if (opt) cfg.opt = true;
        if (no_two_electron) cfg.two_electron = false;
        if (trace) cfg.trace = true;
        cfg.validate();
    } catch (const dhf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (cfg.table) {
            auto ref = dhf::load_reference(cfg.reference_path.empty() ? dhf::default_reference_path()
                                                                      : cfg.reference_path);
            auto sweep = dhf::table_sweep(cfg.table, cfg);
            std::cout << dhf::render_sweep(sweep, ref, cfg.output);
            return sweep.any_failed() ? 3 : 0;
        }
        auto report = dhf::run(cfg);
        std::cout << dhf::render_report(report, cfg.output, cfg.trace);
        return 0;
    } catch (const dhf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
