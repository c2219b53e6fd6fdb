#pragma once

#include "pcweno/model.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <string>

namespace pcw {

struct TimeConfig {
    double cfl = 0.45;
    double t_final = 0.0;
    std::optional<int> accuracy_order;  // dt -> dt^{k/3}, clamped to dt

    void validate() const;
};

struct StepChoice {
    double dt = 0.0;
    double max_speed = 0.0;
    bool speed_was_zero = false;
};

// cfl dx / max speed, or cfl / (sx/dx + sy/dy) in 2D; accuracy rule and
// clipping to t_final applied on top
StepChoice select_dt(const Field1D& f, const SystemModel& model, const TimeConfig& cfg, double t);
StepChoice select_dt(const Field2D& f, const SystemModel& model, const TimeConfig& cfg, double t);

// dt after the accuracy rule and the final-time clip
double adjust_dt(double dt_cfl, const TimeConfig& cfg, double t);

template <class FieldT>
using RhsFn = std::function<FieldT(const FieldT&)>;

template <class FieldT>
using RefillFn = std::function<void(FieldT&)>;

namespace detail {

void check_finite_stage(const std::vector<double>& values, int stage);

}  // namespace detail

// One SSP-RK3 step in place. Ghosts are refilled before every RHS evaluation.
template <class FieldT>
void ssp_rk3_step(FieldT& u, const RhsFn<FieldT>& rhs, double dt, const RefillFn<FieldT>& refill) {
    if (!(dt > 0.0)) throw ValidationError("ssp_rk3_step: dt must be positive");
    auto& u0 = u.values();
    const std::size_t n = u0.size();
    const std::vector<double> base = u0;

    refill(u);
    FieldT l = rhs(u);
    FieldT s = u;
    {
        auto& sv = s.values();
        const auto& lv = l.values();
        for (std::size_t q = 0; q < n; ++q) sv[q] = base[q] + dt * lv[q];
    }
    detail::check_finite_stage(s.values(), 1);

    refill(s);
    l = rhs(s);
    {
        auto& sv = s.values();
        const auto& lv = l.values();
        for (std::size_t q = 0; q < n; ++q) sv[q] = 0.75 * base[q] + 0.25 * (sv[q] + dt * lv[q]);
    }
    detail::check_finite_stage(s.values(), 2);

    refill(s);
    l = rhs(s);
    {
        const auto& sv = s.values();
        const auto& lv = l.values();
        for (std::size_t q = 0; q < n; ++q) u0[q] = base[q] / 3.0 + 2.0 / 3.0 * (sv[q] + dt * lv[q]);
    }
    detail::check_finite_stage(u0, 3);
    refill(u);
}

}  // namespace pcw
