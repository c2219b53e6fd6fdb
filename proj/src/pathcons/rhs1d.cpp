#include "pcweno/pathcons.hpp"
#include "pcweno/systems.hpp"

#include <algorithm>
#include <cmath>

namespace pcw {

double lf_global_alpha(const Field1D& f, const SystemModel& model) {
    double a = 0.0;
    for (int i = 0; i < f.n(); ++i) a = std::max(a, model.max_wave_speed(f.state(i), Axis::x));
    return a;
}

Field1D rhs_1d(const Field1D& f, const SystemModel& model, const SchemeConfig& cfg, double lf_alpha) {
    if (f.nvars() != model.n_vars()) throw ValidationError("rhs_1d: field and model disagree on components");
    f.grid().require_radius(cfg.weno.radius());
    const bool lf = cfg.splitting.kind == SplittingKind::LaxFriedrichs;
    if (lf && cfg.splitting.alpha_mode == LfAlphaMode::Global && lf_alpha <= 0.0) lf_alpha = lf_global_alpha(f, model);

    Field1D out(f.grid(), f.nvars(), f.ghost());
    const LineView line = line_view(f);
    const double inv_dx = 1.0 / f.grid().dx();
    const bool pointwise_source = model.has_source() && cfg.wb != WellBalance::Strategy1;
    LineAssembler as(model, cfg);
    as.run(line, 0, f.n(), lf_alpha, [&](int i, const HatD& h) {
        double* o = out.data(i);
        for (int c = 0; c < f.nvars(); ++c) o[c] = -(h.minus[c] + h.plus[c]) * inv_dx;
        if (!pointwise_source) return;
        const Point p = line.pos(i);
        const double hx = model.h_gradient(p, Axis::x);
        if (hx == 0.0) return;
        const StateVec u = f.state(i);
        StateVec s = model.source(u, Axis::x);
        if (cfg.wb == WellBalance::Strategy2) {
            const NodeSample anchor{p, f.h(i)};
            s -= model.source(model.stationary_value(anchor, u, anchor), Axis::x);
        }
        for (int c = 0; c < f.nvars(); ++c) o[c] += s[c] * hx;
    });
    return out;
}

Field1D conservative_weno_rhs(const Field1D& f, const std::function<double(double)>& flux, double alpha,
                              const WenoConfig& weno) {
    weno.validate();
    if (f.nvars() != 1) throw ValidationError("conservative_weno_rhs: scalar fields only");
    const int k = weno.radius();
    const int n = f.n();
    if (f.ghost() < k + 1) throw ValidationError("conservative_weno_rhs: ghost width must be at least k+1");
    std::vector<double> fp(n + 2 * k + 2), fm(n + 2 * k + 2);
    // index shift: node j stored at j + k + 1
    for (int j = -k - 1; j <= n + k; ++j) {
        const double u = f.at(j, 0);
        fp[j + k + 1] = 0.5 * (flux(u) + alpha * u);
        fm[j + k + 1] = 0.5 * (flux(u) - alpha * u);
    }
    // numerical flux at j+1/2 for j = -1..n-1
    std::vector<double> num(n + 1);
    for (int j = -1; j < n; ++j) {
        const double left = reconstruct_left(std::span<const double>(&fp[j - k + k + 1], 2 * k + 1), weno);
        const double right = reconstruct_right(std::span<const double>(&fm[j + 1 - k + k + 1], 2 * k + 1), weno);
        num[j + 1] = left + right;
    }
    Field1D out(f.grid(), 1, f.ghost());
    for (int i = 0; i < n; ++i) out.at(i, 0) = -(num[i + 1] - num[i]) / f.grid().dx();
    return out;
}

ReductionReport conservative_reduction_check(const Field1D& f, const WenoConfig& weno) {
    const ScalarBurgers model;
    ReductionReport rep;
    rep.alpha = lf_global_alpha(f, model);
    if (rep.alpha == 0.0) rep.alpha = 1.0;
    SchemeConfig cfg;
    cfg.weno = weno;
    cfg.splitting.kind = SplittingKind::LaxFriedrichs;
    cfg.wb = WellBalance::None;
    const Field1D a = rhs_1d(f, model, cfg, rep.alpha);
    const Field1D b = conservative_weno_rhs(f, &ScalarBurgers::flux, rep.alpha, weno);
    for (int i = 0; i < f.n(); ++i) {
        const double d = std::abs(a.at(i, 0) - b.at(i, 0));
        if (d > rep.max_discrepancy || rep.worst_point < 0) {
            rep.max_discrepancy = d;
            rep.worst_point = i;
        }
    }
    return rep;
}

}  // namespace pcw
