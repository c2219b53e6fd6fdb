#include "pcweno/core.hpp"

#include <algorithm>
#include <cmath>

namespace pcw {

namespace {

void check_component(int c, int nvars) {
    if (c < 0 || c >= nvars) throw ValidationError("norm: component index out of range");
}

}  // namespace

double norm(const Field1D& a, const Field1D& b, NormKind which, int component, int margin) {
    if (!(a.grid() == b.grid()) || a.nvars() != b.nvars()) throw ValidationError("norm: fields live on different grids");
    check_component(component, a.nvars());
    const int n = a.n();
    if (margin < 0 || 2 * margin >= n) throw ValidationError("norm: margin leaves no points");
    double acc = 0.0;
    for (int i = margin; i < n - margin; ++i) {
        const double d = std::abs(a.at(i, component) - b.at(i, component));
        acc = which == NormKind::L1 ? acc + d : std::max(acc, d);
    }
    return which == NormKind::L1 ? acc * a.grid().dx() : acc;
}

double norm(const Field2D& a, const Field2D& b, NormKind which, int component, int margin) {
    if (!(a.grid() == b.grid()) || a.nvars() != b.nvars()) throw ValidationError("norm: fields live on different grids");
    check_component(component, a.nvars());
    if (margin < 0 || 2 * margin >= a.nx() || 2 * margin >= a.ny()) throw ValidationError("norm: margin leaves no points");
    double acc = 0.0;
    for (int j = margin; j < a.ny() - margin; ++j) {
        for (int i = margin; i < a.nx() - margin; ++i) {
            const double d = std::abs(a.at(i, j, component) - b.at(i, j, component));
            acc = which == NormKind::L1 ? acc + d : std::max(acc, d);
        }
    }
    return which == NormKind::L1 ? acc * a.grid().dx() * a.grid().dy() : acc;
}

std::vector<double> convergence_order(const std::vector<MeshError>& errors) {
    std::vector<double> orders;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        const auto& c = errors[i];
        const auto& f = errors[i + 1];
        if (!(c.error > 0.0) || !(f.error > 0.0)) throw ValidationError("convergence_order: errors must be positive");
        if (f.n <= c.n || c.n <= 0) throw ValidationError("convergence_order: meshes must increase");
        if (f.n == 2 * c.n)
            orders.push_back(std::log2(c.error / f.error));
        else
            orders.push_back(std::log(c.error / f.error) / std::log(static_cast<double>(f.n) / c.n));
    }
    return orders;
}

}  // namespace pcw
