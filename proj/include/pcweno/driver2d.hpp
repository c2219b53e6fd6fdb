#pragma once

#include "pcweno/pathcons.hpp"

namespace pcw {

// Row (axis x, index j) or column (axis y, index i) of a 2D field, with ghosts.
LineView slice_view(const Field2D& f, Axis axis, int index);

struct DirectionalAlpha {
    double x = 0.0;
    double y = 0.0;
};

DirectionalAlpha lf_global_alpha(const Field2D& f, const SystemModel& model);

// x-sweeps then y-sweeps into a fresh accumulator. Components of alpha that
// are <= 0 are computed from f when the LF splitting is global.
Field2D rhs_2d(const Field2D& f, const SystemModel& model, const SchemeConfig& cfg, DirectionalAlpha alpha = {});

}  // namespace pcw
