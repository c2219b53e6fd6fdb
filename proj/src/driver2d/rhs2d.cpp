#include "pcweno/driver2d.hpp"

#include <algorithm>

namespace pcw {

LineView slice_view(const Field2D& f, Axis axis, int index) {
    const int limit = axis == Axis::x ? f.ny() : f.nx();
    if (index < -f.ghost() || index >= limit + f.ghost()) throw ValidationError("slice_view: index out of range");
    LineView v;
    v.nvars = f.nvars();
    v.ghost = f.ghost();
    v.axis = axis;
    v.stride = f.node_stride(axis);
    const Grid2D& g = f.grid();
    if (axis == Axis::x) {
        v.states = f.data(0, index);
        v.h = &f.h_samples()[static_cast<std::size_t>(index + f.ghost()) * f.row_extent() + f.ghost()];
        v.n = f.nx();
        v.dx = g.dx();
        v.origin = {g.x(0), g.y(index)};
        v.step = {g.dx(), 0.0};
    } else {
        v.states = f.data(index, 0);
        v.h = &f.h_samples()[static_cast<std::size_t>(f.ghost()) * f.row_extent() + index + f.ghost()];
        v.n = f.ny();
        v.dx = g.dy();
        v.origin = {g.x(index), g.y(0)};
        v.step = {0.0, g.dy()};
    }
    return v;
}

DirectionalAlpha lf_global_alpha(const Field2D& f, const SystemModel& model) {
    DirectionalAlpha a;
    for (int j = 0; j < f.ny(); ++j) {
        for (int i = 0; i < f.nx(); ++i) {
            const StateVec u = f.state(i, j);
            a.x = std::max(a.x, model.max_wave_speed(u, Axis::x));
            a.y = std::max(a.y, model.max_wave_speed(u, Axis::y));
        }
    }
    return a;
}

Field2D rhs_2d(const Field2D& f, const SystemModel& model, const SchemeConfig& cfg, DirectionalAlpha alpha) {
    if (f.nvars() != model.n_vars()) throw ValidationError("rhs_2d: field and model disagree on components");
    f.grid().require_radius(cfg.weno.radius());
    const bool lf = cfg.splitting.kind == SplittingKind::LaxFriedrichs;
    if (lf && cfg.splitting.alpha_mode == LfAlphaMode::Global && (alpha.x <= 0.0 || alpha.y <= 0.0)) {
        const auto a = lf_global_alpha(f, model);
        if (alpha.x <= 0.0) alpha.x = a.x;
        if (alpha.y <= 0.0) alpha.y = a.y;
    }
    Field2D out(f.grid(), f.nvars(), f.ghost());
    const bool pointwise_source = model.has_source() && cfg.wb != WellBalance::Strategy1;
    const int nv = f.nvars();
    LineAssembler as(model, cfg);

    for (Axis d : {Axis::x, Axis::y}) {
        const int lines = d == Axis::x ? f.ny() : f.nx();
        const double inv = 1.0 / (d == Axis::x ? f.grid().dx() : f.grid().dy());
        const double a = d == Axis::x ? alpha.x : alpha.y;
        for (int line = 0; line < lines; ++line) {
            const LineView v = slice_view(f, d, line);
            as.run(v, 0, v.n, a, [&](int p, const HatD& h) {
                const int i = d == Axis::x ? p : line;
                const int j = d == Axis::x ? line : p;
                double* o = out.data(i, j);
                for (int c = 0; c < nv; ++c) o[c] -= (h.minus[c] + h.plus[c]) * inv;
                if (!pointwise_source) return;
                const Point pos = v.pos(p);
                const double hd = model.h_gradient(pos, d);
                if (hd == 0.0) return;
                const StateVec u = f.state(i, j);
                StateVec s = model.source(u, d);
                if (cfg.wb == WellBalance::Strategy2) {
                    const NodeSample anchor{pos, f.h(i, j)};
                    s -= model.source(model.stationary_value(anchor, u, anchor), d);
                }
                for (int c = 0; c < nv; ++c) o[c] += s[c] * hd;
            });
        }
    }
    return out;
}

}  // namespace pcw
