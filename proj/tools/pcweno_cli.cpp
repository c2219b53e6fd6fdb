#include "pcweno.h"

#include <CLI11.hpp>

#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace {

struct Common {
    std::string config_file;
    std::vector<std::string> sets;
    std::map<std::string, std::string> flags;  // config key -> value
    bool paper_scale = false;
    bool custom = false;
    std::string orders_out;
};

void add_flag(CLI::App* app, Common& c, const std::string& name, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(name, [&c, key](const std::string& v) { c.flags[key] = v; }, help);
}

void add_common(CLI::App* app, Common& c) {
    add_flag(app, c, "--case", "case", "experiment id (see the cases subcommand)");
    add_flag(app, c, "--n", "n", "points (1D) or points per axis (2D)");
    add_flag(app, c, "--nx", "nx", "points along x (2D)");
    add_flag(app, c, "--ny", "ny", "points along y (2D)");
    add_flag(app, c, "--order", "order", "WENO order: 3, 5 or 7");
    add_flag(app, c, "--method", "method", "1: upwind + strategy 1, 2: LF + strategy 2");
    add_flag(app, c, "--splitting", "splitting", "upwind | lf | right");
    add_flag(app, c, "--wb", "wb", "none | s1 | s2");
    add_flag(app, c, "--path", "path", "psi1 | psi2 (Burgers)");
    add_flag(app, c, "--cfl", "cfl", "CFL number in (0,1]");
    add_flag(app, c, "--tfinal", "tfinal", "final time");
    add_flag(app, c, "--bottom", "bottom", "smooth | step (swe1d-perturb)");
    add_flag(app, c, "--ref-n", "ref_n", "fine reference mesh");
    add_flag(app, c, "--out", "out", "output directory for CSV files");
    app->add_option("--config", c.config_file, "key=value config file; flags override it");
    app->add_option("--set", c.sets, "extra key=value settings")->take_all();
    app->add_flag("--paper-scale", c.paper_scale, "use the published mesh sizes");
    app->add_flag("--custom", c.custom, "allow splitting / well-balance pairs outside the presets");
}

int report_failure(pcw_status s) {
    std::fprintf(stderr, "error: %s\n", pcw_last_error());
    return static_cast<int>(s);
}

int execute(Common& c, pcw_status (*fn)(const pcw_config*, pcw_report**)) {
    pcw_config* cfg = nullptr;
    pcw_status s = pcw_config_create(&cfg);
    if (s != PCW_OK) return report_failure(s);
    if (!c.config_file.empty()) s = pcw_config_load(cfg, c.config_file.c_str());
    for (const auto& kv : c.sets)
        if (s == PCW_OK) s = pcw_config_parse(cfg, kv.c_str());
    for (const auto& [k, v] : c.flags)
        if (s == PCW_OK) s = pcw_config_set(cfg, k.c_str(), v.c_str());
    if (s == PCW_OK && c.paper_scale) s = pcw_config_set(cfg, "paper_scale", "1");
    if (s == PCW_OK && c.custom) s = pcw_config_set(cfg, "custom", "1");
    if (s != PCW_OK) {
        pcw_config_destroy(cfg);
        return report_failure(s);
    }
    pcw_report* rep = nullptr;
    s = fn(cfg, &rep);
    pcw_config_destroy(cfg);
    if (s != PCW_OK) return report_failure(s);
    std::fputs(pcw_report_text(rep), stdout);
    if (!c.orders_out.empty()) s = pcw_report_write_orders(rep, c.orders_out.c_str());
    pcw_report_destroy(rep);
    return s == PCW_OK ? 0 : report_failure(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Path-conservative WENO solver for nonconservative hyperbolic systems"};
    app.require_subcommand(1);
    int verbosity = 0;
    bool quiet = false;
    app.add_flag("-v,--verbose", verbosity, "more log output (repeatable)");
    app.add_flag("-q,--quiet", quiet, "errors only");

    Common run_opts, conv_opts, wb_opts;
    auto* run = app.add_subcommand("run", "integrate one case to its final time");
    add_common(run, run_opts);
    auto* conv = app.add_subcommand("convergence", "mesh sweep with error and order table");
    add_common(conv, conv_opts);
    add_flag(conv, conv_opts, "--meshes", "meshes", "comma-separated increasing mesh sizes");
    conv->add_option("--table", conv_opts.orders_out, "write the order table here");
    auto* wb = app.add_subcommand("wellbalance", "drift from the rest state after the final time");
    add_common(wb, wb_opts);
    add_flag(wb, wb_opts, "--eta", "eta", "perturbation amplitude");
    auto* cases = app.add_subcommand("cases", "list registered cases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return PCW_ERR_VALIDATION;
    }

    pcw_set_log_level(quiet ? 3 : (verbosity >= 2 ? 0 : (verbosity == 1 ? 1 : 2)));

    if (cases->parsed()) {
        for (int i = 0; i < pcw_case_count(); ++i) std::printf("%-24s %s\n", pcw_case_id(i), pcw_case_summary(i));
        return 0;
    }
    if (run->parsed()) return execute(run_opts, pcw_run);
    if (conv->parsed()) return execute(conv_opts, pcw_convergence);
    return execute(wb_opts, pcw_wellbalance);
}
