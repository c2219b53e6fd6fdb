#include "pcweno/core.hpp"

#include <cmath>
#include <sstream>

namespace pcw {

void SolverError::add_context(const std::string& ctx) {
    if (located_) return;
    text_ += " (" + ctx + ")";
    located_ = true;
}

Grid1D::Grid1D(double a, double b, int n) : a_(a), b_(b), n_(n) {
    if (!(a < b)) throw ValidationError("grid: need a < b");
    if (n < 2) throw ValidationError("grid: need at least 2 points");
    dx_ = (b - a) / n;
}

void Grid1D::require_radius(int k) const {
    if (n_ < 2 * k + 3) {
        std::ostringstream os;
        os << "grid: " << n_ << " points is too few for stencil radius " << k << " (need " << 2 * k + 3 << ")";
        throw ValidationError(os.str());
    }
}

void Grid2D::require_radius(int k) const {
    gx_.require_radius(k);
    gy_.require_radius(k);
}

Field1D::Field1D(const Grid1D& grid, int nvars, int ghost) : grid_(grid), nvars_(nvars), ghost_(ghost) {
    if (nvars < 1 || nvars > kMaxVars) throw ValidationError("field: unsupported number of components");
    if (ghost < 0 || ghost > grid.n()) throw ValidationError("field: bad ghost width");
    values_.assign(static_cast<std::size_t>(extent()) * nvars_, 0.0);
    h_.assign(static_cast<std::size_t>(extent()), 0.0);
}

StateVec Field1D::state(int i) const {
    StateVec u(nvars_);
    const double* p = data(i);
    for (int c = 0; c < nvars_; ++c) u[c] = p[c];
    return u;
}

void Field1D::set_state(int i, const StateVec& u) {
    double* p = data(i);
    for (int c = 0; c < nvars_; ++c) p[c] = u[c];
}

Field2D::Field2D(const Grid2D& grid, int nvars, int ghost) : grid_(grid), nvars_(nvars), ghost_(ghost) {
    if (nvars < 1 || nvars > kMaxVars) throw ValidationError("field: unsupported number of components");
    if (ghost < 0 || ghost > grid.nx() || ghost > grid.ny()) throw ValidationError("field: bad ghost width");
    const auto nodes = static_cast<std::size_t>(row_extent()) * col_extent();
    values_.assign(nodes * nvars_, 0.0);
    h_.assign(nodes, 0.0);
}

StateVec Field2D::state(int i, int j) const {
    StateVec u(nvars_);
    const double* p = data(i, j);
    for (int c = 0; c < nvars_; ++c) u[c] = p[c];
    return u;
}

void Field2D::set_state(int i, int j, const StateVec& u) {
    double* p = data(i, j);
    for (int c = 0; c < nvars_; ++c) p[c] = u[c];
}

namespace {

int source_index(int i, int n, Boundary bc) {
    if (i >= 0 && i < n) return i;
    if (bc == Boundary::Periodic) return ((i % n) + n) % n;
    return i < 0 ? 0 : n - 1;
}

}  // namespace

void fill_ghosts(Field1D& f, Boundary bc) {
    const int n = f.n();
    const int g = f.ghost();
    const int nv = f.nvars();
    for (int i = -g; i < n + g; ++i) {
        if (i >= 0 && i < n) continue;
        const int s = source_index(i, n, bc);
        for (int c = 0; c < nv; ++c) f.at(i, c) = f.at(s, c);
        f.h(i) = f.h(s);
    }
}

void fill_ghosts(Field2D& f, Boundary bc) {
    const int nx = f.nx();
    const int ny = f.ny();
    const int g = f.ghost();
    const int nv = f.nvars();
    auto copy = [&](int i, int j, int si, int sj) {
        for (int c = 0; c < nv; ++c) f.at(i, j, c) = f.at(si, sj, c);
        f.h(i, j) = f.h(si, sj);
    };
    for (int j = 0; j < ny; ++j) {
        for (int i = -g; i < nx + g; ++i) {
            if (i >= 0 && i < nx) continue;
            copy(i, j, source_index(i, nx, bc), j);
        }
    }
    for (int j = -g; j < ny + g; ++j) {
        if (j >= 0 && j < ny) continue;
        const int sj = source_index(j, ny, bc);
        for (int i = -g; i < nx + g; ++i) copy(i, j, i, sj);
    }
}

}  // namespace pcw
