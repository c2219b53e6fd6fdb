#pragma once

#include "pcweno/pathcons.hpp"

namespace pcw::detail {

struct LfParts {
    StateVec f;  // A dU - S dH
    StateVec w;  // dU - A^{-1} S dH
};

bool is_zero_jump(const StateVec& uj, const StateVec& uk, double dh);
LfParts lf_parts(const SystemModel& model, const StateVec& uj, const StateVec& uk, double dh, Axis d);

}  // namespace pcw::detail
