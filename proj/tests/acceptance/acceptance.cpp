// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// PCW_ACCEPT_ONLY=1,7,8 restricts the run to the listed criteria.

#include "../unit/oracles.hpp"
#include "pcweno/harness.hpp"
#include "pcweno/pathcons.hpp"

#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace pcw;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

bool finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

std::string join(const std::vector<double>& v, const char* f = "%.2f") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += fmt(f, v[i]);
    }
    return out;
}

// ---------------------------------------------------------------- 1
Outcome c_property_1d() {
    Outcome o;
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (const char* bottom : {"smooth", "step"})
        for (int method : {1, 2}) {
            const auto rep = run_wellbalance(parse_config(fmt("case=swe1d-perturb eta=0 n=200 tfinal=0.15 bottom=%s method=%d", bottom, method)));
            const double d = rep.metrics.at("max_drift");
            worst = std::max(worst, d);
            o.notes.push_back(fmt("%s bottom, method %d: Linf drift %.2e", bottom, method, d));
            if (!(d <= 1e-12)) o.pass = false;
        }
    const double wall = since(t0);
    if (wall >= 10.0) o.pass = false;
    o.detail = fmt("worst drift %.2e (<= 1e-12), %.1f s (< 10 s)", worst, wall);
    return o;
}

// ---------------------------------------------------------------- 2
Outcome c_property_2d() {
    Outcome o;
    double worst = 0.0, wall100 = 0.0;
    for (int n : {50, 100}) {
        const auto t0 = Clock::now();
        const auto rep = run_wellbalance(parse_config(fmt("case=swe2d-rest nx=%d ny=%d tfinal=0.1", n, n)));
        const double wall = since(t0);
        if (n == 100) wall100 = wall;
        std::vector<double> errs;
        for (const auto& c : rep.components) {
            errs.push_back(c.errors.front().error);
            worst = std::max(worst, c.errors.front().error);
            if (!(c.errors.front().error <= 1e-12)) o.pass = false;
        }
        o.notes.push_back(fmt("%dx%d: L1 per component %s, %.1f s", n, n, join(errs, "%.1e").c_str(), wall));
    }
    if (wall100 >= 60.0) o.pass = false;
    o.detail = fmt("worst L1 %.2e (<= 1e-12), %.1f s at 100x100 (< 60 s)", worst, wall100);
    return o;
}

// ---------------------------------------------------------------- 3, 4
ExperimentReport burgers_sweep(const char* path) {
    return run_convergence(parse_config(fmt("case=burgers-smooth method=1 path=%s meshes=25,50,100,200,400", path)));
}

// Linf error against the exact solution away from the data's kink at x = 0
double error_off_kink(int n) {
    const pcw::Setup s = make_setup(parse_config(fmt("case=burgers-smooth method=1 path=psi1 n=%d", n)));
    const Field1D f = integrate(s, initial_field_1d(s, s.initial));
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = s.grid1.x(i);
        if (x < 0.1 || x > 0.9) continue;
        e = std::max(e, std::abs(f.at(i, 0) - burgers_smooth_exact(x, s.time.t_final)));
    }
    return e;
}

Outcome burgers_path1() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto rep = burgers_sweep("psi1");
    const double wall = since(t0);
    const auto& t = rep.components.front();
    const auto& ord = t.orders;
    const double e400 = t.errors.back().error;
    const bool orders_ok = ord.size() >= 2 && ord[ord.size() - 1] >= 4.5 && ord[ord.size() - 2] >= 4.5;
    const bool err_ok = e400 <= 9.95e-12 && e400 >= 9.95e-14;
    o.pass = orders_ok && err_ok && wall < 30.0;
    o.detail = fmt("orders %s (last two >= 4.5), error(400) %.2e (within 10x of 9.95e-13), %.1f s (< 30 s)",
                   join(ord).c_str(), e400, wall);
    const double a = error_off_kink(200), b = error_off_kink(400);
    o.notes.push_back(fmt("away from x = 0: error(200) %.2e, error(400) %.2e, order %.2f", a, b, std::log2(a / b)));
    return o;
}

Outcome burgers_path2() {
    Outcome o;
    const auto rep = burgers_sweep("psi2");
    const auto& ord = rep.components.front().orders;
    for (double q : ord)
        if (!(q >= 0.8 && q <= 1.3)) o.pass = false;
    o.detail = fmt("orders %s (all in [0.8, 1.3])", join(ord).c_str());
    return o;
}

// ---------------------------------------------------------------- 5
Outcome burgers_riemann() {
    Outcome o;
    const auto r1 = run_case(parse_config("case=burgers-riemann n=200 path=psi1 method=1"));
    const double dx = 1.0 / 200;
    const bool has_front = r1.metrics.count("front_x") > 0;
    const double front = has_front ? r1.metrics.at("front_x") : std::numeric_limits<double>::quiet_NaN();
    const bool front_ok = has_front && std::abs(front - 0.8) <= 2.0 * dx;
    const auto r2 = run_case(parse_config("case=burgers-riemann n=200 path=psi2 method=1"));
    // initial jump is 1 in both components
    const double jump = r2.metrics.at("jump_near_x0");
    const bool jump_ok = jump > 0.1;
    o.pass = front_ok && jump_ok;
    o.detail = fmt("psi1 front at %.4f (0.8 +- %.3f), psi2 jump within 2 cells of 0.5: %.3f of total (> 0.1)", front,
                   2.0 * dx, jump);
    return o;
}

// ---------------------------------------------------------------- 6
Outcome swe_accuracy() {
    Outcome o;
    const auto t0 = Clock::now();
    std::vector<double> finest;
    for (int order : {3, 5, 7}) {
        const auto ts = Clock::now();
        const auto rep = run_convergence(parse_config(fmt("case=swe1d-accuracy order=%d meshes=25,50,100,200,400", order)));
        const auto& t = rep.components.front();
        const double q = t.orders.back();
        finest.push_back(q);
        if (!(std::abs(q - order) <= 0.5)) o.pass = false;
        std::vector<double> errs;
        for (const auto& e : t.errors) errs.push_back(e.error);
        o.notes.push_back(fmt("order %d: h1 errors %s, orders %s, %.0f s", order, join(errs, "%.2e").c_str(),
                              join(t.orders).c_str(), since(ts)));
    }
    const double wall = since(t0);
    if (wall >= 300.0) o.pass = false;
    o.detail = fmt("finest-pair h1 orders %s (nominal 3 5 7 +- 0.5), %.0f s (< 300 s)", join(finest).c_str(), wall);
    return o;
}

// ---------------------------------------------------------------- 7
double reduction_gap(int n, const std::function<double(double)>& init, double alpha) {
    ScalarBurgers m;
    const Grid1D g(0.0, 1.0, n);
    Field1D f(g, 1, 3);
    for (int i = 0; i < n; ++i) f.at(i, 0) = init(g.x(i));
    fill_ghosts(f, Boundary::Periodic);
    SchemeConfig c;
    c.splitting.kind = SplittingKind::LaxFriedrichs;
    c.wb = WellBalance::None;
    const Field1D r = rhs_1d(f, m, c, alpha);
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) u[i] = f.at(i, 0);
    const auto ref = oracle::conservative_lf_rhs(u, g.dx(), alpha, [](double v) { return 0.5 * v * v; });
    double gap = 0.0;
    for (int i = 0; i < n; ++i) gap = std::max(gap, std::abs(r.at(i, 0) - ref[i]));
    return gap;
}

Outcome conservative_reduction() {
    Outcome o;
    const double smooth = reduction_gap(64, [](double x) { return 0.5 + 0.25 * std::sin(2 * M_PI * x); }, 0.75);
    const double jump = reduction_gap(50, [](double x) { return x < 0.5 ? 2.0 : 1.0; }, 2.0);
    const double shock = reduction_gap(80, [](double x) { return x < 0.3 || x > 0.7 ? -0.5 : 1.5; }, 1.5);
    o.pass = smooth <= 1e-12 && jump <= 1e-12 && shock <= 1e-12;
    o.detail = fmt("max pointwise gap: smooth %.1e, step %.1e, two-sided jump %.1e (<= 1e-12)", smooth, jump, shock);
    return o;
}

// ---------------------------------------------------------------- 8
double eigen_residual(const RoeData& r) {
    double worst = 0.0;
    for (int l = 0; l < r.eigenvalues.size(); ++l) {
        const StateVec v = r.right.col(l);
        worst = std::max(worst, oracle::max_abs(r.matrix * v - r.eigenvalues[l] * v));
    }
    return worst;
}

struct PairStats {
    double roe = 0.0, roe_single = 0.0, anti = 0.0, eig = 0.0;
};

void check_pair(const SystemModel& m, const oracle::MatrixFn& a, const StateVec& ul, const StateVec& ur, Axis d,
                PairStats& s) {
    const RoeData r = m.roe(ul, ur, d);
    const StateVec lhs = r.matrix * (ur - ul);
    s.roe = std::max(s.roe, oracle::max_abs(lhs - oracle::straight_integral(a, ul, ur)));
    s.roe_single = std::max(s.roe_single, oracle::max_abs(lhs - oracle::straight_integral(a, ul, ur, 1)));
    s.anti = std::max(s.anti, oracle::max_abs(path_integral_fluctuation(m, ul, ur, d) + path_integral_fluctuation(m, ur, ul, d)));
    s.anti = std::max(s.anti, oracle::max_abs(lhs + m.roe_matrix(ur, ul, d) * (ul - ur)));
    s.eig = std::max(s.eig, eigen_residual(r));
}

Outcome roe_suite() {
    Outcome o;
    oracle::Sampler rng;
    const LayerParams lp{10.0, 0.98};
    CoupledBurgers burgers;
    Swe1D swe1(lp, flat_bottom_1d(-2.0));
    Swe2D swe2(lp, flat_bottom_2d(-2.0));
    PairStats sb, s1, s2;
    for (int t = 0; t < 100; ++t) {
        check_pair(burgers, oracle::burgers_a, rng.burgers(), rng.burgers(), Axis::x, sb);
        check_pair(swe1, [&](const StateVec& u) { return oracle::swe1d_a(u, lp.g, lp.r); }, rng.swe1d(), rng.swe1d(),
                   Axis::x, s1);
        const StateVec a = rng.swe2d(), b = rng.swe2d();
        check_pair(swe2, [&](const StateVec& u) { return oracle::swe2d_a(u, lp.g, lp.r, false); }, a, b, Axis::x, s2);
        check_pair(swe2, [&](const StateVec& u) { return oracle::swe2d_a(u, lp.g, lp.r, true); }, a, b, Axis::y, s2);
    }
    for (const auto& [name, s] : {std::pair<const char*, PairStats>{"burgers", sb}, {"swe-1d", s1}, {"swe-2d", s2}}) {
        if (!(s.roe <= 1e-10 && s.anti <= 1e-12 && s.eig <= 1e-9)) o.pass = false;
        o.notes.push_back(fmt("%s: roe %.1e (single-panel 5-node rule %.1e), antisymmetry %.1e, eigen %.1e", name, s.roe,
                              s.roe_single, s.anti, s.eig));
    }
    const double roe = std::max({sb.roe, s1.roe, s2.roe});
    const double anti = std::max({sb.anti, s1.anti, s2.anti});
    const double eig = std::max({sb.eig, s1.eig, s2.eig});
    o.detail = fmt("3 models x 100 pairs: roe residual %.1e (<= 1e-10), antisymmetry %.1e (<= 1e-12), eigen %.1e (<= 1e-9)",
                   roe, anti, eig);
    return o;
}

// ---------------------------------------------------------------- 9
Outcome burgers_stationary() {
    Outcome o;
    const auto rep = run_wellbalance(parse_config("case=burgers-stationary method=2 tfinal=1"));
    const double d = rep.metrics.at("max_drift");
    o.pass = d <= 1e-12;
    o.detail = fmt("Linf drift over T = 1: %.2e (<= 1e-12)", d);
    return o;
}

// ---------------------------------------------------------------- 10
Outcome dam_breaks() {
    Outcome o;
    struct Run {
        const char* label;
        std::string cfg;
    };
    const std::vector<Run> runs = {
        {"swe1d-damflat 200 vs 3200, T = 10", "case=swe1d-damflat n=200 ref_n=3200"},
        {"swe2d-propflat 50 vs 100, T = 0.1", "case=swe2d-propflat nx=50 ny=50 ref_n=100"},
        {"swe2d-propnonflat 50 vs 100, T = 0.1", "case=swe2d-propnonflat nx=50 ny=50 ref_n=100"},
        {"swe2d-circdam-flat 50 vs 100, T = 4", "case=swe2d-circdam-flat nx=50 ny=50 ref_n=100 tfinal=4"},
        {"swe2d-circdam-nonflat 50 vs 100, T = 1", "case=swe2d-circdam-nonflat nx=50 ny=50 ref_n=100 tfinal=1"},
    };
    double worst = 0.0;
    for (const auto& r : runs) {
        const auto t0 = Clock::now();
        try {
            const auto rep = run_case(parse_config(r.cfg));
            const bool ok_values = rep.final_1d ? finite(rep.final_1d->values()) : finite(rep.final_2d->values());
            const double cells = rep.metrics.at("front_distance_cells");
            worst = std::max(worst, cells);
            if (!ok_values || !(cells <= 3.0)) o.pass = false;
            o.notes.push_back(fmt("%s: front distance %.2f cells, finite %s, %.0f s", r.label, cells,
                                  ok_values ? "yes" : "no", since(t0)));
        } catch (const std::exception& e) {
            o.pass = false;
            worst = std::numeric_limits<double>::infinity();
            o.notes.push_back(fmt("%s: aborted: %s", r.label, e.what()));
        }
    }
    o.detail = fmt("%zu runs, worst front distance %.2f coarse cells (<= 3), no NaN", runs.size(), worst);
    return o;
}

std::set<int> selected() {
    std::set<int> out;
    const char* env = std::getenv("PCW_ACCEPT_ONLY");
    if (!env || !*env) {
        for (int i = 1; i <= 10; ++i) out.insert(i);
        return out;
    }
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) out.insert(std::atoi(item.c_str()));
    return out;
}

}  // namespace

int main() {
    spdlog::set_level(spdlog::level::warn);
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all = {
        {1, "well-balance 1D, swe1d-perturb eta = 0", c_property_1d},
        {2, "well-balance 2D, swe2d-rest", c_property_2d},
        {3, "Burgers psi1 accuracy", burgers_path1},
        {4, "Burgers psi2 degradation", burgers_path2},
        {5, "Burgers Riemann fronts", burgers_riemann},
        {6, "two-layer accuracy, orders 3/5/7", swe_accuracy},
        {7, "conservative reduction vs independent WENO-LF", conservative_reduction},
        {8, "Roe and path property suite", roe_suite},
        {9, "Burgers stationary family, strategy 2", burgers_stationary},
        {10, "dam-break and front suite", dam_breaks},
    };
    const auto only = selected();
    int failed = 0;
    for (const auto& c : all) {
        if (!only.count(c.id)) continue;
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
        std::printf("%s  [%2d] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), since(t0));
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    std::printf("%d of %zu criteria failed\n", failed, only.size());
    return failed == 0 ? 0 : 1;
}
