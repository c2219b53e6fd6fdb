#pragma once

#include "pcweno/core.hpp"

#include <array>
#include <span>
#include <vector>

namespace pcw {

enum class WenoVariant { JS, Z };

struct WenoConfig {
    int order = 5;
    WenoVariant variant = WenoVariant::Z;
    double epsilon = 1e-12;
    double power = 2.0;

    int radius() const { return (order - 1) / 2; }
    int width() const { return order; }
    void validate() const;
};

// Left-biased value at x_{i+1/2} from f_{i-k..i+k}.
double reconstruct_left(std::span<const double> f, const WenoConfig& cfg);
// Right-biased value at x_{i-1/2}; the left operator applied to the reversed stencil.
double reconstruct_right(std::span<const double> f, const WenoConfig& cfg);

StateVec reconstruct_left(std::span<const StateVec> s, const WenoConfig& cfg);
StateVec reconstruct_right(std::span<const StateVec> s, const WenoConfig& cfg);

std::vector<double> smoothness_indicators(std::span<const double> f, int order);
std::vector<double> ideal_weights(int order);
// candidate values q_r at x_{i+1/2}, r = 0..k
std::vector<double> substencil_values(std::span<const double> f, int order);
// nonlinear weights; sums to 1
std::vector<double> nonlinear_weights(std::span<const double> f, const WenoConfig& cfg);

// Unchecked kernels for the assembly hot path. f points at 2k+1 values.
double weno_left_unchecked(const double* f, const WenoConfig& cfg);
double weno_right_unchecked(const double* f, const WenoConfig& cfg);
// nv components at once; f laid out [m * nv + c], m over the stencil
void weno_left_multi(const double* f, int nv, const WenoConfig& cfg, double* out);
void weno_right_multi(const double* f, int nv, const WenoConfig& cfg, double* out);

}  // namespace pcw
