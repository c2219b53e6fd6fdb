#include "pcweno.h"
#include "pcweno/harness.hpp"

#include <spdlog/spdlog.h>

#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

struct pcw_config {
    pcw::RunConfig cfg;
};

struct pcw_report {
    pcw::ExperimentReport rep;
    std::string text;
};

namespace {

thread_local std::string g_last_error;

pcw_status fail(pcw_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

template <class F>
pcw_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return PCW_OK;
    } catch (const pcw::ValidationError& e) {
        return fail(PCW_ERR_VALIDATION, e.what());
    } catch (const pcw::SolverError& e) {
        return fail(PCW_ERR_SOLVER, e.what());
    } catch (const pcw::IoError& e) {
        return fail(PCW_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PCW_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(PCW_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(PCW_ERR_INTERNAL, "unknown failure");
    }
}

template <class Fn>
pcw_status run_with(const pcw_config* cfg, pcw_report** out, Fn fn) {
    if (!cfg || !out) return fail(PCW_ERR_INVALID_ARGUMENT, "null config or output pointer");
    *out = nullptr;
    return guarded([&] {
        auto* r = new pcw_report;
        try {
            r->rep = fn(cfg->cfg);
            r->text = pcw::format_report(r->rep);
        } catch (...) {
            delete r;
            throw;
        }
        *out = r;
    });
}

const pcw::ComponentTable* table(const pcw_report* rep, int comp) {
    if (!rep || comp < 0 || comp >= static_cast<int>(rep->rep.components.size())) return nullptr;
    return &rep->rep.components[comp];
}

}  // namespace

extern "C" {

const char* pcw_last_error(void) { return g_last_error.c_str(); }

void pcw_set_log_level(int level) {
    switch (level) {
        case 0: spdlog::set_level(spdlog::level::debug); break;
        case 1: spdlog::set_level(spdlog::level::info); break;
        case 2: spdlog::set_level(spdlog::level::warn); break;
        default: spdlog::set_level(spdlog::level::err); break;
    }
}

int pcw_case_count(void) { return static_cast<int>(pcw::case_list().size()); }

const char* pcw_case_id(int index) {
    if (index < 0 || index >= pcw_case_count()) return nullptr;
    return pcw::case_list()[index].id.c_str();
}

const char* pcw_case_summary(int index) {
    if (index < 0 || index >= pcw_case_count()) return nullptr;
    return pcw::case_list()[index].summary.c_str();
}

pcw_status pcw_config_create(pcw_config** out) {
    if (!out) return fail(PCW_ERR_INVALID_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new pcw_config; });
}

void pcw_config_destroy(pcw_config* cfg) { delete cfg; }

pcw_status pcw_config_set(pcw_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return fail(PCW_ERR_INVALID_ARGUMENT, "null config, key or value");
    return guarded([&] { pcw::set_option(cfg->cfg, key, value); });
}

pcw_status pcw_config_parse(pcw_config* cfg, const char* text) {
    if (!cfg || !text) return fail(PCW_ERR_INVALID_ARGUMENT, "null config or text");
    return guarded([&] { cfg->cfg = pcw::parse_config(text, cfg->cfg); });
}

pcw_status pcw_config_load(pcw_config* cfg, const char* path) {
    if (!cfg || !path) return fail(PCW_ERR_INVALID_ARGUMENT, "null config or path");
    return guarded([&] {
        std::ifstream in(path);
        if (!in) throw pcw::IoError(std::string("cannot open config '") + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        cfg->cfg = pcw::parse_config(ss.str(), cfg->cfg);
    });
}

pcw_status pcw_config_validate(const pcw_config* cfg) {
    if (!cfg) return fail(PCW_ERR_INVALID_ARGUMENT, "null config");
    return guarded([&] { (void)pcw::make_setup(cfg->cfg); });
}

pcw_status pcw_run(const pcw_config* cfg, pcw_report** out) { return run_with(cfg, out, pcw::run_case); }

pcw_status pcw_convergence(const pcw_config* cfg, pcw_report** out) {
    return run_with(cfg, out, pcw::run_convergence);
}

pcw_status pcw_wellbalance(const pcw_config* cfg, pcw_report** out) {
    return run_with(cfg, out, pcw::run_wellbalance);
}

void pcw_report_destroy(pcw_report* rep) { delete rep; }

const char* pcw_report_text(const pcw_report* rep) { return rep ? rep->text.c_str() : ""; }

double pcw_report_wall_seconds(const pcw_report* rep) { return rep ? rep->rep.wall_seconds : 0.0; }

int pcw_report_component_count(const pcw_report* rep) {
    return rep ? static_cast<int>(rep->rep.components.size()) : 0;
}

const char* pcw_report_component_name(const pcw_report* rep, int comp) {
    const auto* t = table(rep, comp);
    return t ? t->name.c_str() : nullptr;
}

int pcw_report_mesh_count(const pcw_report* rep, int comp) {
    const auto* t = table(rep, comp);
    return t ? static_cast<int>(t->errors.size()) : 0;
}

pcw_status pcw_report_error(const pcw_report* rep, int comp, int mesh, int* n, double* error) {
    const auto* t = table(rep, comp);
    if (!t || mesh < 0 || mesh >= static_cast<int>(t->errors.size()))
        return fail(PCW_ERR_INVALID_ARGUMENT, "component or mesh index out of range");
    if (n) *n = t->errors[mesh].n;
    if (error) *error = t->errors[mesh].error;
    return PCW_OK;
}

pcw_status pcw_report_order(const pcw_report* rep, int comp, int mesh, double* order) {
    const auto* t = table(rep, comp);
    if (!t || !order || mesh < 1 || mesh > static_cast<int>(t->orders.size()))
        return fail(PCW_ERR_INVALID_ARGUMENT, "component or mesh index out of range");
    *order = t->orders[mesh - 1];
    return PCW_OK;
}

pcw_status pcw_report_metric(const pcw_report* rep, const char* name, double* value) {
    if (!rep || !name || !value) return fail(PCW_ERR_INVALID_ARGUMENT, "null report, name or value");
    const auto it = rep->rep.metrics.find(name);
    if (it == rep->rep.metrics.end()) return fail(PCW_ERR_INVALID_ARGUMENT, std::string("no metric '") + name + "'");
    *value = it->second;
    return PCW_OK;
}

pcw_status pcw_report_write_orders(const pcw_report* rep, const char* path) {
    if (!rep || !path) return fail(PCW_ERR_INVALID_ARGUMENT, "null report or path");
    return guarded([&] { pcw::write_order_table(rep->rep, path); });
}

}  // extern "C"
