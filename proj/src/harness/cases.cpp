#include "pcweno/harness.hpp"

#include <cmath>
#include <numbers>

namespace pcw {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<CaseInfo> kCases = {
    {"burgers-smooth", 1, "coupled Burgers, 0.25 sin(pi x) data, periodic [0,1], T = 0.1", true},
    {"burgers-riemann", 1, "coupled Burgers, (2,2) | (1,1) at x = 0.5, T = 0.1", false},
    {"burgers-stationary", 1, "coupled Burgers stationary member (1/2 + sin x, 1/2 - sin x), periodic [0,2pi], T = 1", false},
    {"swe1d-perturb", 1, "two-layer water at rest on [-0.2,1] with an eta bump in h1, smooth or step bottom, T = 0.15", false},
    {"swe1d-riemann-1", 1, "two-layer Riemann problem on [0,1], flat bottom, T = 0.1", false},
    {"swe1d-riemann-2", 1, "two-layer Riemann problem on [-5,5], layers swapped at x = 0, T = 1", false},
    {"swe1d-damflat", 1, "internal dam break on [0,10], flat bottom, T = 10", false},
    {"swe1d-damnonflat", 1, "internal dam break on [-5,5] over a Gaussian sill, r = 0.998", false},
    {"swe1d-accuracy", 1, "two-layer smooth sin(8x) data, periodic [-pi/2,3pi/2], T = 0.1", true},
    {"swe2d-rest", 2, "two-layer water at rest over a Gaussian bump on [-1,1]^2, T = 0.1", false},
    {"swe2d-propflat", 2, "interface propagation on [-0.55,0.7]^2, flat bottom, T = 0.1", false},
    {"swe2d-propnonflat", 2, "interface propagation on [-0.55,0.7]^2 over a Gaussian bump, T = 0.1", false},
    {"swe2d-circdam-flat", 2, "internal circular dam break on [-5,5]^2, flat bottom, T = 20", false},
    {"swe2d-circdam-nonflat", 2, "internal circular dam break on [-2,2]^2 over a Gaussian bump, T = 2", false},
};

StateVec vec(std::initializer_list<double> v) {
    StateVec s(static_cast<int>(v.size()));
    int c = 0;
    for (double x : v) s[c++] = x;
    return s;
}

Bottom1D gaussian_1d(double amp, double width, double base) {
    return {[=](double x) { return amp * std::exp(-width * x * x) + base; },
            [=](double x) { return -2.0 * width * x * amp * std::exp(-width * x * x); }};
}

Bottom2D gaussian_2d(double amp, double width, double base) {
    return {[=](double x, double y) { return amp * std::exp(-width * (x * x + y * y)) + base; },
            [=](double x, double y) { return -2.0 * width * x * amp * std::exp(-width * (x * x + y * y)); },
            [=](double x, double y) { return -2.0 * width * y * amp * std::exp(-width * (x * x + y * y)); }};
}

Bottom1D perturb_bottom(const std::string& kind) {
    if (kind == "step") return {[](double x) { return x > 0.5 ? -1.5 : -2.0; }, [](double) { return 0.0; }};
    return {[](double x) { return (x > 0.4 && x < 0.6) ? 0.25 * (std::cos(10.0 * kPi * (x - 0.5)) + 1.0) - 2.0 : -2.0; },
            [](double x) { return (x > 0.4 && x < 0.6) ? -2.5 * kPi * std::sin(10.0 * kPi * (x - 0.5)) : 0.0; }};
}

bool in_omega(double x, double y) {
    return (x < -0.5 && y < 0.0) || ((x + 0.5) * (x + 0.5) + (y + 0.5) * (y + 0.5) < 0.25) || (x < 0.0 && y < -0.5);
}

struct Defaults {
    double a = 0.0, b = 1.0;
    int n = 200;
    int full_n = 200;
    double t_final = 0.1;
    Boundary bc = Boundary::FreeOutflow;
    int method = 2;
};

void apply_method(Setup& s, int method, bool burgers) {
    auto& sp = s.scheme.splitting;
    if (method == 1) {
        sp.kind = burgers ? SplittingKind::RightGoing : SplittingKind::Upwind;
        s.scheme.wb = burgers ? WellBalance::None : WellBalance::Strategy1;
    } else {
        sp.kind = SplittingKind::LaxFriedrichs;
        sp.characteristic = true;
        s.scheme.wb = WellBalance::Strategy2;
    }
}

std::vector<int> all_components(int n) {
    std::vector<int> v(n);
    for (int c = 0; c < n; ++c) v[c] = c;
    return v;
}

}  // namespace

const std::vector<CaseInfo>& case_list() { return kCases; }

const CaseInfo& find_case(const std::string& id) {
    for (const auto& c : kCases)
        if (c.id == id) return c;
    throw ValidationError("config key 'case': unknown case '" + id + "'");
}

Setup make_setup(const RunConfig& cfg) {
    validate_config(cfg);
    const CaseInfo& info = find_case(cfg.case_id);
    const std::string& id = info.id;
    Setup s;
    s.case_id = id;
    s.dims = info.dims;
    Defaults d;
    const bool burgers = id.rfind("burgers", 0) == 0;
    LayerParams lp;
    auto layer = [&](double g, double r) {
        lp.g = cfg.g.value_or(g);
        lp.r = cfg.r.value_or(r);
    };

    if (id == "burgers-smooth") {
        d.method = 1;
        d.bc = Boundary::Periodic;
        s.model = std::make_shared<CoupledBurgers>(cfg.path.value_or(PathFamily::StraightSegments));
        s.initial = [](Point p) { return vec({0.25 * std::sin(kPi * p.x), 0.25 * std::sin(kPi * p.x)}); };
    } else if (id == "burgers-riemann") {
        d.method = 1;
        s.model = std::make_shared<CoupledBurgers>(cfg.path.value_or(PathFamily::StraightSegments));
        s.initial = [](Point p) { return p.x <= 0.5 ? vec({2.0, 2.0}) : vec({1.0, 1.0}); };
    } else if (id == "burgers-stationary") {
        d = {0.0, 2.0 * kPi, 200, 200, 1.0, Boundary::Periodic, 2};
        s.model = std::make_shared<CoupledBurgers>(cfg.path.value_or(PathFamily::StraightSegments));
        s.initial = [](Point p) { return vec({0.5 + std::sin(p.x), 0.5 - std::sin(p.x)}); };
        s.rest = s.initial;
    } else if (id == "swe1d-perturb") {
        d = {-0.2, 1.0, 200, 200, 0.15, Boundary::FreeOutflow, 2};
        layer(10.0, 0.98);
        const Bottom1D bottom = perturb_bottom(cfg.bottom.empty() ? "smooth" : cfg.bottom);
        s.model = std::make_shared<Swe1D>(lp, bottom);
        const double eta = cfg.eta;
        s.initial = [bottom, eta](Point p) {
            const double h1 = (p.x > 0.1 && p.x < 0.2) ? 1.0 + eta : 1.0;
            return vec({h1, 0.0, -1.0 - bottom.z(p.x), 0.0});
        };
        s.rest = [bottom](Point p) { return vec({1.0, 0.0, -1.0 - bottom.z(p.x), 0.0}); };
    } else if (id == "swe1d-riemann-1") {
        layer(10.0, 0.98);
        s.model = std::make_shared<Swe1D>(lp, flat_bottom_1d(-1.0));
        s.initial = [](Point p) { return p.x < 0.3 ? vec({0.5, 1.25, 0.5, 1.25}) : vec({0.45, 1.125, 0.55, 1.375}); };
    } else if (id == "swe1d-riemann-2") {
        d = {-5.0, 5.0, 200, 500, 1.0, Boundary::FreeOutflow, 2};
        layer(9.81, 0.98);
        s.model = std::make_shared<Swe1D>(lp, flat_bottom_1d(-2.0));
        s.initial = [](Point p) { return p.x < 0.0 ? vec({1.8, 0.0, 0.2, 0.0}) : vec({0.2, 0.0, 1.8, 0.0}); };
    } else if (id == "swe1d-damflat") {
        d = {0.0, 10.0, 200, 200, 10.0, Boundary::FreeOutflow, 2};
        layer(10.0, 0.98);
        s.model = std::make_shared<Swe1D>(lp, flat_bottom_1d(-1.0));
        s.initial = [](Point p) { return p.x < 5.0 ? vec({0.2, 0.0, 0.8, 0.0}) : vec({0.8, 0.0, 0.2, 0.0}); };
    } else if (id == "swe1d-damnonflat") {
        d = {-5.0, 5.0, 200, 500, 40.0, Boundary::FreeOutflow, 2};
        layer(9.81, 0.998);
        const Bottom1D bottom = gaussian_1d(0.25, 1.0, -2.0);
        s.model = std::make_shared<Swe1D>(lp, bottom);
        s.initial = [bottom](Point p) {
            const double z = bottom.z(p.x);
            return p.x < 0.0 ? vec({1.6, 0.0, -1.6 - z, 0.0}) : vec({0.7, 0.0, -0.7 - z, 0.0});
        };
    } else if (id == "swe1d-accuracy") {
        d = {-0.5 * kPi, 1.5 * kPi, 200, 200, 0.1, Boundary::Periodic, 1};
        layer(9.81, 0.98);
        s.model = std::make_shared<Swe1D>(lp, flat_bottom_1d(-2.0));
        s.initial = [](Point p) {
            const double w = 0.5 * std::sin(8.0 * p.x);
            return vec({1.0 - w, 0.0, 0.6 + w, 0.0});
        };
    } else if (id == "swe2d-rest") {
        d = {-1.0, 1.0, 100, 100, 0.1, Boundary::FreeOutflow, 2};
        layer(10.0, 0.98);
        const Bottom2D bottom = gaussian_2d(0.05, 100.0, -1.0);
        s.model = std::make_shared<Swe2D>(lp, bottom);
        s.initial = [bottom](Point p) { return vec({0.5, 0.0, 0.0, -0.5 - bottom.z(p.x, p.y), 0.0, 0.0}); };
        s.rest = s.initial;
        s.norm = NormKind::L1;
    } else if (id == "swe2d-propflat" || id == "swe2d-propnonflat") {
        d = {-0.55, 0.7, 100, 400, 0.1, Boundary::FreeOutflow, 2};
        layer(10.0, 0.98);
        const Bottom2D bottom = id == "swe2d-propflat" ? flat_bottom_2d(-1.0) : gaussian_2d(0.05, 100.0, -1.0);
        const bool flat = id == "swe2d-propflat";
        s.model = std::make_shared<Swe2D>(lp, bottom);
        s.initial = [bottom, flat](Point p) {
            const double lift = flat ? 0.0 : -1.0 - bottom.z(p.x, p.y);
            if (in_omega(p.x, p.y)) return vec({0.5, 1.25, 1.25, 0.5 + lift, 1.25, 1.25});
            return vec({0.45, 1.125, 1.125, 0.55 + lift, 1.375, 1.375});
        };
    } else if (id == "swe2d-circdam-flat") {
        d = {-5.0, 5.0, 100, 200, 20.0, Boundary::FreeOutflow, 2};
        layer(9.81, 0.998);
        s.model = std::make_shared<Swe2D>(lp, flat_bottom_2d(-2.0));
        s.initial = [](Point p) {
            const double z = -2.0;
            if (p.x * p.x + p.y * p.y > 4.0) return vec({1.8, 0.0, 0.0, -1.8 - z, 0.0, 0.0});
            return vec({0.2, 0.0, 0.0, -0.2 - z, 0.0, 0.0});
        };
    } else if (id == "swe2d-circdam-nonflat") {
        d = {-2.0, 2.0, 100, 200, 2.0, Boundary::FreeOutflow, 1};
        layer(9.81, 0.98);
        const Bottom2D bottom = gaussian_2d(0.5, 1.0, -2.0);
        s.model = std::make_shared<Swe2D>(lp, bottom);
        s.initial = [bottom](Point p) {
            const double z = bottom.z(p.x, p.y);
            if (p.x * p.x + p.y * p.y > 1.0) return vec({1.8, 0.0, 0.0, -1.8 - z, 0.0, 0.0});
            return vec({0.2, 0.0, 0.0, -0.2 - z, 0.0, 0.0});
        };
    }

    const int n_default = cfg.paper_scale ? d.full_n : d.n;
    if (s.dims == 1) {
        s.grid1 = Grid1D(d.a, d.b, cfg.n > 0 ? cfg.n : n_default);
    } else {
        const int nx = cfg.nx > 0 ? cfg.nx : (cfg.n > 0 ? cfg.n : n_default);
        const int ny = cfg.ny > 0 ? cfg.ny : (cfg.n > 0 ? cfg.n : n_default);
        s.grid2 = Grid2D(d.a, d.b, nx, d.a, d.b, ny);
    }
    s.bc = cfg.bc.value_or(d.bc);
    s.time.cfl = cfg.cfl;
    s.time.t_final = cfg.t_final.value_or(d.t_final);
    if (info.accuracy) s.time.accuracy_order = cfg.order;
    s.time.validate();

    s.scheme.weno.order = cfg.order;
    s.scheme.weno.variant = cfg.variant;
    apply_method(s, cfg.method.value_or(d.method), burgers);
    auto& sp = s.scheme.splitting;
    if (cfg.splitting) sp.kind = *cfg.splitting;
    if (cfg.wb) s.scheme.wb = *cfg.wb;
    if (cfg.characteristic) sp.characteristic = *cfg.characteristic;
    if (cfg.alpha_mode) sp.alpha_mode = *cfg.alpha_mode;
    sp.entropy_eps = cfg.entropy_eps;
    if (!cfg.allow_custom) {
        if (s.scheme.wb == WellBalance::Strategy1 && sp.kind != SplittingKind::Upwind)
            throw ValidationError("config key 'wb': s1 pairs with the upwind splitting (method 1); set custom=1 to override");
        if (s.scheme.wb == WellBalance::Strategy2 && sp.kind != SplittingKind::LaxFriedrichs)
            throw ValidationError("config key 'wb': s2 pairs with the lf splitting (method 2); set custom=1 to override");
    }
    s.scheme.validate(*s.model);

    if (id == "swe1d-accuracy") {
        s.tracked = {0};
    } else {
        s.tracked = all_components(s.model->n_vars());
    }
    return s;
}

Setup with_mesh(const Setup& s, int n) {
    Setup out = s;
    if (s.dims == 1) {
        out.grid1 = Grid1D(s.grid1.a(), s.grid1.b(), n);
    } else {
        const Grid1D& gx = s.grid2.axis(Axis::x);
        const Grid1D& gy = s.grid2.axis(Axis::y);
        out.grid2 = Grid2D(gx.a(), gx.b(), n, gy.a(), gy.b(), n);
    }
    return out;
}

Field1D initial_field_1d(const Setup& s, const std::function<StateVec(Point)>& init) {
    const int nv = s.model->n_vars();
    Field1D f(s.grid1, nv, s.scheme.weno.radius() + 1);
    for (int i = 0; i < f.n(); ++i) {
        const Point p{s.grid1.x(i), 0.0};
        f.set_state(i, init(p));
        f.h(i) = s.model->h_value(p);
    }
    fill_ghosts(f, s.bc);
    return f;
}

Field2D initial_field_2d(const Setup& s, const std::function<StateVec(Point)>& init) {
    const int nv = s.model->n_vars();
    Field2D f(s.grid2, nv, s.scheme.weno.radius() + 1);
    for (int j = 0; j < f.ny(); ++j) {
        for (int i = 0; i < f.nx(); ++i) {
            const Point p{s.grid2.x(i), s.grid2.y(j)};
            f.set_state(i, j, init(p));
            f.h(i, j) = s.model->h_value(p);
        }
    }
    fill_ghosts(f, s.bc);
    return f;
}

}  // namespace pcw
