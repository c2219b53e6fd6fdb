#include "pcweno/harness.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>
#include <sstream>

namespace pcw {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double step_size(const StepChoice& c, double fixed_dt, const TimeConfig& tc, double t) {
    if (fixed_dt <= 0.0) return c.dt;
    return std::min(fixed_dt, tc.t_final - t);
}

template <class FieldT, class AlphaFn, class RhsCall>
FieldT march(const Setup& s, FieldT u, double fixed_dt, RunStats* stats, AlphaFn alpha_of, RhsCall rhs_call) {
    const auto t0 = Clock::now();
    const SystemModel& model = *s.model;
    const double tf = s.time.t_final;
    double t = 0.0;
    int steps = 0;
    fill_ghosts(u, s.bc);
    const RefillFn<FieldT> refill = [&](FieldT& f) { fill_ghosts(f, s.bc); };
    try {
        while (t < tf) {
            const StepChoice c = select_dt(u, model, s.time, t);
            const double dt = step_size(c, fixed_dt, s.time, t);
            const auto alpha = alpha_of(u, c);
            const RhsFn<FieldT> rhs = [&](const FieldT& f) { return rhs_call(f, alpha); };
            ssp_rk3_step(u, rhs, dt, refill);
            t = dt >= tf - t ? tf : t + dt;
            ++steps;
            if (steps % 1000 == 0) spdlog::debug("{}: step {} t = {:.6g}", s.case_id, steps, t);
        }
    } catch (const SolverError& e) {
        spdlog::error("{}: solver abort at t = {:.9g} after {} steps: {}", s.case_id, t, steps, e.what());
        throw;
    }
    if (stats) {
        stats->steps = steps;
        stats->wall_seconds = seconds_since(t0);
    }
    return u;
}

bool lf_global(const Setup& s) {
    return s.scheme.splitting.kind == SplittingKind::LaxFriedrichs && s.scheme.splitting.alpha_mode == LfAlphaMode::Global;
}

std::string component_name(const SystemModel& m, int c) { return m.component_names()[c]; }

int boundary_margin(const Setup& s) { return s.bc == Boundary::Periodic ? 0 : s.scheme.weno.radius() + 1; }

std::string out_path(const RunConfig& cfg, const std::string& stem) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + cfg.out_dir + "': " + ec.message());
    return (std::filesystem::path(cfg.out_dir) / stem).string();
}

std::string mesh_tag(const Setup& s) {
    if (s.dims == 1) return "n" + std::to_string(s.grid1.n());
    return std::to_string(s.grid2.nx()) + "x" + std::to_string(s.grid2.ny());
}

void write_final(const RunConfig& cfg, const Setup& s, ExperimentReport& rep) {
    if (cfg.out_dir.empty()) return;
    const std::string path = out_path(cfg, s.case_id + "_" + mesh_tag(s) + ".csv");
    if (rep.final_1d) write_csv(*rep.final_1d, *s.model, path);
    if (rep.final_2d) write_csv(*rep.final_2d, *s.model, path);
    rep.files.push_back(path);
}

// drift of every tracked component from the rest state
void rest_drift(const Setup& s, ExperimentReport& rep) {
    double worst = 0.0;
    for (int c : s.tracked) {
        ComponentTable t;
        t.name = component_name(*s.model, c);
        double e;
        int n;
        if (s.dims == 1) {
            e = norm(*rep.final_1d, initial_field_1d(s, s.rest), s.norm, c);
            n = s.grid1.n();
        } else {
            e = norm(*rep.final_2d, initial_field_2d(s, s.rest), s.norm, c);
            n = s.grid2.nx();
        }
        t.errors.push_back({n, e});
        rep.components.push_back(t);
        worst = std::max(worst, e);
    }
    rep.norm = s.norm;
    rep.metrics["max_drift"] = worst;
}

ExperimentReport simulate(const Setup& s) {
    ExperimentReport rep;
    rep.case_id = s.case_id;
    rep.norm = s.norm;
    RunStats st;
    if (s.dims == 1) {
        rep.final_1d = integrate(s, initial_field_1d(s, s.initial), 0.0, &st);
    } else {
        rep.final_2d = integrate(s, initial_field_2d(s, s.initial), 0.0, &st);
    }
    rep.steps = st.steps;
    rep.wall_seconds = st.wall_seconds;
    rep.metrics["t_final"] = s.time.t_final;
    return rep;
}

void burgers_riemann_metrics(const Setup& s, ExperimentReport& rep) {
    const Field1D& f = *rep.final_1d;
    std::vector<double> x(f.n()), u(f.n());
    for (int i = 0; i < f.n(); ++i) {
        x[i] = s.grid1.x(i);
        u[i] = f.at(i, 0);
    }
    const auto cr = level_crossings(x, u, 1.5);
    if (!cr.empty()) rep.metrics["front_x"] = cr.back();
    // spread of u and v over the nodes within two cells of the initial discontinuity,
    // relative to the initial jump
    const double dx = s.grid1.dx();
    double jump = 0.0;
    for (int c = 0; c < 2; ++c) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (int i = 0; i < f.n(); ++i) {
            if (std::abs(x[i] - 0.5) > 2.0 * dx + 1e-12) continue;
            lo = std::min(lo, f.at(i, c));
            hi = std::max(hi, f.at(i, c));
        }
        jump = std::max(jump, hi - lo);
    }
    rep.metrics["jump_near_x0"] = jump;
}

void reference_fronts(const RunConfig& cfg, const Setup& s, ExperimentReport& rep) {
    const Setup fine = with_mesh(s, cfg.ref_n);
    RunStats st;
    Profile pc, pf;
    double dx;
    if (s.dims == 1) {
        const Field1D ref = integrate(fine, initial_field_1d(fine, fine.initial), 0.0, &st);
        pc = front_profile(s, *rep.final_1d);
        pf = front_profile(fine, ref);
        dx = s.grid1.dx();
    } else {
        const Field2D ref = integrate(fine, initial_field_2d(fine, fine.initial), 0.0, &st);
        pc = front_profile(s, *rep.final_2d);
        pf = front_profile(fine, ref);
        dx = s.grid2.dx();
    }
    // quarter levels of the reference range; the mean level often sits on a plateau
    const auto [lo, hi] = std::minmax_element(pf.v.begin(), pf.v.end());
    double dist = 0.0;
    for (double q : {0.25, 0.75}) {
        const double level = *lo + q * (*hi - *lo);
        dist = std::max(dist, crossing_distance(level_crossings(pc.s, pc.v, level), level_crossings(pf.s, pf.v, level)));
    }
    rep.metrics["front_distance"] = dist;
    rep.metrics["front_distance_cells"] = dist / dx;
    rep.metrics["reference_seconds"] = st.wall_seconds;
}

std::vector<int> default_meshes(const RunConfig& cfg) {
    if (!cfg.meshes.empty()) return cfg.meshes;
    std::vector<int> m{25, 50, 100, 200, 400};
    if (cfg.paper_scale) m.push_back(800);
    return m;
}

}  // namespace

Field1D integrate(const Setup& s, Field1D u, double fixed_dt, RunStats* stats) {
    const bool global = lf_global(s);
    return march(
        s, std::move(u), fixed_dt, stats, [&](const Field1D&, const StepChoice& c) { return global ? c.max_speed : 0.0; },
        [&](const Field1D& f, double alpha) { return rhs_1d(f, *s.model, s.scheme, alpha); });
}

Field2D integrate(const Setup& s, Field2D u, double fixed_dt, RunStats* stats) {
    const bool global = lf_global(s);
    return march(
        s, std::move(u), fixed_dt, stats,
        [&](const Field2D& f, const StepChoice&) { return global ? lf_global_alpha(f, *s.model) : DirectionalAlpha{}; },
        [&](const Field2D& f, DirectionalAlpha alpha) { return rhs_2d(f, *s.model, s.scheme, alpha); });
}

double burgers_smooth_exact(double x, double t) {
    // w = w0(xi), xi = x - w0(xi) t with w0 = 0.5 |sin(pi xi)| (periodic extension of the [0,1] data)
    auto w0 = [](double xi) { return 0.5 * std::abs(std::sin(std::numbers::pi * xi)); };
    if (t == 0.0) return 0.5 * w0(x);
    double lo = x - 0.5 * t;
    double hi = x;
    // g(xi) = xi + w0(xi) t - x is increasing while t pi / 2 < 1
    for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(x)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid + w0(mid) * t - x < 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * w0(0.5 * (lo + hi));
}

ExperimentReport run_case(const RunConfig& cfg) {
    const Setup s = make_setup(cfg);
    if (find_case(cfg.case_id).accuracy) return run_convergence(cfg);
    ExperimentReport rep = simulate(s);
    if (s.rest) rest_drift(s, rep);
    if (s.case_id == "burgers-riemann") burgers_riemann_metrics(s, rep);
    if (cfg.ref_n > 0) reference_fronts(cfg, s, rep);
    write_final(cfg, s, rep);
    return rep;
}

ExperimentReport run_wellbalance(const RunConfig& cfg) {
    const Setup s = make_setup(cfg);
    if (!s.rest) throw ValidationError("config key 'case': " + s.case_id + " has no rest state to compare against");
    ExperimentReport rep = simulate(s);
    rest_drift(s, rep);
    write_final(cfg, s, rep);
    return rep;
}

ExperimentReport run_convergence(const RunConfig& cfg) {
    const auto t0 = Clock::now();
    const Setup base = make_setup(cfg);
    const std::vector<int> meshes = default_meshes(cfg);
    for (std::size_t m = 1; m < meshes.size(); ++m)
        if (meshes[m] <= meshes[m - 1]) throw ValidationError("config key 'meshes': mesh sizes must increase");
    if (base.dims != 1) throw ValidationError("config key 'case': convergence sweeps are 1D only");

    ExperimentReport rep;
    rep.case_id = base.case_id;
    rep.norm = NormKind::Linf;
    const bool exact = base.case_id == "burgers-smooth";

    std::optional<Field1D> ref;
    if (!exact) {
        int ref_n = cfg.ref_n;
        if (ref_n == 0) ref_n = cfg.paper_scale ? (cfg.order == 7 ? 12800 : 6400) : 1600;
        for (int n : meshes)
            if (ref_n % n != 0) throw ValidationError("config key 'ref_n': " + std::to_string(ref_n) + " is not a multiple of mesh " + std::to_string(n));
        const double ref_dt = cfg.ref_dt > 0.0 ? cfg.ref_dt : 2e-5;
        Setup fine = with_mesh(base, ref_n);
        fine.time.accuracy_order.reset();
        RunStats st;
        ref = integrate(fine, initial_field_1d(fine, fine.initial), ref_dt, &st);
        rep.metrics["reference_n"] = ref_n;
        rep.metrics["reference_seconds"] = st.wall_seconds;
        spdlog::info("{}: reference n = {} in {:.1f} s ({} steps)", base.case_id, ref_n, st.wall_seconds, st.steps);
    }

    for (int c : base.tracked) rep.components.push_back({component_name(*base.model, c), {}, {}});
    for (int n : meshes) {
        const Setup s = with_mesh(base, n);
        RunStats st;
        const Field1D f = integrate(s, initial_field_1d(s, s.initial), 0.0, &st);
        Field1D target(s.grid1, f.nvars(), f.ghost());
        for (int i = 0; i < n; ++i) {
            if (exact) {
                const double w = burgers_smooth_exact(s.grid1.x(i), s.time.t_final);
                for (int c = 0; c < f.nvars(); ++c) target.at(i, c) = w;
            } else {
                const int stride = ref->n() / n;
                for (int c = 0; c < f.nvars(); ++c) target.at(i, c) = ref->at(i * stride, c);
            }
        }
        for (std::size_t q = 0; q < base.tracked.size(); ++q)
            rep.components[q].errors.push_back({n, norm(f, target, NormKind::Linf, base.tracked[q], boundary_margin(s))});
        rep.steps += st.steps;
        spdlog::info("{}: n = {} in {:.2f} s ({} steps)", base.case_id, n, st.wall_seconds, st.steps);
        if (n == meshes.back()) rep.final_1d = f;
    }
    for (auto& t : rep.components)
        if (t.errors.size() >= 2) t.orders = convergence_order(t.errors);
    rep.wall_seconds = seconds_since(t0);

    if (!cfg.out_dir.empty()) {
        const std::string stem = base.case_id + "_order" + std::to_string(cfg.order);
        const std::string table = out_path(cfg, stem + "_errors.csv");
        write_order_table(rep, table);
        rep.files.push_back(table);
        const Setup last = with_mesh(base, meshes.back());
        const std::string path = out_path(cfg, stem + "_" + mesh_tag(last) + ".csv");
        write_csv(*rep.final_1d, *base.model, path);
        rep.files.push_back(path);
    }
    return rep;
}

std::string format_report(const ExperimentReport& rep) {
    std::ostringstream os;
    os << "case " << rep.case_id << "\n";
    const char* nn = rep.norm == NormKind::L1 ? "L1" : "Linf";
    for (const auto& t : rep.components) {
        os << "  " << t.name << " (" << nn << ")\n";
        for (std::size_t m = 0; m < t.errors.size(); ++m) {
            char line[128];
            if (m > 0 && m - 1 < t.orders.size())
                std::snprintf(line, sizeof line, "    n=%-6d error=%.3e order=%.2f\n", t.errors[m].n, t.errors[m].error, t.orders[m - 1]);
            else
                std::snprintf(line, sizeof line, "    n=%-6d error=%.3e\n", t.errors[m].n, t.errors[m].error);
            os << line;
        }
    }
    for (const auto& [k, v] : rep.metrics) os << "  " << k << " = " << v << "\n";
    os << "  steps = " << rep.steps << "\n";
    char wall[64];
    std::snprintf(wall, sizeof wall, "  wall = %.2f s\n", rep.wall_seconds);
    os << wall;
    for (const auto& f : rep.files) os << "  wrote " << f << "\n";
    return os.str();
}

// ---------------------------------------------------------------- fronts

std::vector<double> level_crossings(const std::vector<double>& x, const std::vector<double>& v, double level) {
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const double a = v[i] - level;
        const double b = v[i + 1] - level;
        if (a == 0.0) {
            out.push_back(x[i]);
        } else if ((a < 0.0) != (b < 0.0) && b != 0.0) {
            out.push_back(x[i] + (x[i + 1] - x[i]) * a / (a - b));
        }
    }
    if (!v.empty() && v.back() == level) out.push_back(x.back());
    return out;
}

double crossing_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() && b.empty()) return 0.0;
    if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
    auto one_way = [](const std::vector<double>& p, const std::vector<double>& q) {
        double worst = 0.0;
        for (double x : p) {
            double best = std::numeric_limits<double>::infinity();
            for (double y : q) best = std::min(best, std::abs(x - y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_way(a, b), one_way(b, a));
}

Profile front_profile(const Setup& s, const Field1D& f) {
    Profile p;
    const bool burgers = s.model->n_vars() == 2;
    for (int i = 0; i < f.n(); ++i) {
        p.s.push_back(s.grid1.x(i));
        p.v.push_back(burgers ? f.at(i, 0) : f.at(i, 2) - f.h(i));
    }
    return p;
}

Profile front_profile(const Setup& s, const Field2D& f) {
    if (f.nx() != f.ny()) throw ValidationError("front_profile: diagonal needs nx == ny");
    Profile p;
    const bool propagation = s.case_id.rfind("swe2d-prop", 0) == 0;
    for (int i = 0; i < f.nx(); ++i) {
        p.s.push_back(s.grid2.x(i));
        p.v.push_back(propagation ? f.at(i, i, 0) : f.at(i, i, 3) - f.h(i, i));
    }
    return p;
}

}  // namespace pcw
