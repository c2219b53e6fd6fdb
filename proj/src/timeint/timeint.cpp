#include "pcweno/timeint.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>

namespace pcw {

void TimeConfig::validate() const {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ValidationError("cfl must lie in (0, 1]");
    if (!(t_final >= 0.0)) throw ValidationError("t_final must be non-negative");
    if (accuracy_order && (*accuracy_order < 1)) throw ValidationError("accuracy order must be positive");
}

double adjust_dt(double dt_cfl, const TimeConfig& cfg, double t) {
    double dt = dt_cfl;
    if (cfg.accuracy_order) dt = std::min(dt, std::pow(dt, *cfg.accuracy_order / 3.0));
    const double left = cfg.t_final - t;
    if (left > 0.0 && dt > left) dt = left;
    return dt;
}

StepChoice select_dt(const Field1D& f, const SystemModel& model, const TimeConfig& cfg, double t) {
    StepChoice c;
    for (int i = 0; i < f.n(); ++i) c.max_speed = std::max(c.max_speed, model.max_wave_speed(f.state(i), Axis::x));
    double dt;
    if (c.max_speed > 0.0) {
        dt = cfg.cfl * f.grid().dx() / c.max_speed;
    } else {
        c.speed_was_zero = true;
        dt = (f.grid().b() - f.grid().a()) / 10.0;
        spdlog::warn("select_dt: zero wave speed, step capped at (b-a)/10 = {}", dt);
    }
    c.dt = adjust_dt(dt, cfg, t);
    return c;
}

StepChoice select_dt(const Field2D& f, const SystemModel& model, const TimeConfig& cfg, double t) {
    StepChoice c;
    double sx = 0.0, sy = 0.0;
    for (int j = 0; j < f.ny(); ++j) {
        for (int i = 0; i < f.nx(); ++i) {
            const StateVec u = f.state(i, j);
            sx = std::max(sx, model.max_wave_speed(u, Axis::x));
            sy = std::max(sy, model.max_wave_speed(u, Axis::y));
        }
    }
    c.max_speed = std::max(sx, sy);
    const double rate = sx / f.grid().dx() + sy / f.grid().dy();
    double dt;
    if (rate > 0.0) {
        dt = cfg.cfl / rate;
    } else {
        c.speed_was_zero = true;
        const Grid1D& gx = f.grid().axis(Axis::x);
        dt = (gx.b() - gx.a()) / 10.0;
        spdlog::warn("select_dt: zero wave speed, step capped at (b-a)/10 = {}", dt);
    }
    c.dt = adjust_dt(dt, cfg, t);
    return c;
}

namespace detail {

void check_finite_stage(const std::vector<double>& values, int stage) {
    for (double v : values) {
        if (!std::isfinite(v)) throw NonFiniteError("non-finite value after Runge-Kutta stage " + std::to_string(stage), stage);
    }
}

}  // namespace detail

}  // namespace pcw
