#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcw {

inline constexpr int kMaxVars = 6;

using StateVec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxVars, 1>;
using StateMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxVars, kMaxVars>;

enum class Axis { x = 0, y = 1 };

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// ---------------------------------------------------------------- errors

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Numerical failure during a run. Carries a mutable location suffix so that
// the assembler can attach the cell where the failure happened.
class SolverError : public Error {
public:
    explicit SolverError(const std::string& msg) : Error(msg), text_(msg) {}
    const char* what() const noexcept override { return text_.c_str(); }
    void add_context(const std::string& ctx);
    bool has_location() const { return located_; }

private:
    std::string text_;
    bool located_ = false;
};

class HyperbolicityLoss : public SolverError {
public:
    HyperbolicityLoss(const std::string& msg, double richardson)
        : SolverError(msg), richardson_(richardson) {}
    double richardson() const { return richardson_; }

private:
    double richardson_;
};

class AdmissibilityError : public SolverError {
public:
    using SolverError::SolverError;
};

class NonFiniteError : public SolverError {
public:
    NonFiniteError(const std::string& msg, int stage) : SolverError(msg), stage_(stage) {}
    int stage() const { return stage_; }

private:
    int stage_;
};

// ---------------------------------------------------------------- grids

class Grid1D {
public:
    Grid1D() = default;
    Grid1D(double a, double b, int n);

    double a() const { return a_; }
    double b() const { return b_; }
    int n() const { return n_; }
    double dx() const { return dx_; }
    double x(int i) const { return a_ + i * dx_; }
    // throws unless n >= 2k+3
    void require_radius(int k) const;

    bool operator==(const Grid1D& o) const { return a_ == o.a_ && b_ == o.b_ && n_ == o.n_; }

private:
    double a_ = 0.0;
    double b_ = 1.0;
    int n_ = 0;
    double dx_ = 0.0;
};

class Grid2D {
public:
    Grid2D() = default;
    Grid2D(double ax, double bx, int nx, double ay, double by, int ny) : gx_(ax, bx, nx), gy_(ay, by, ny) {}

    const Grid1D& axis(Axis d) const { return d == Axis::x ? gx_ : gy_; }
    int nx() const { return gx_.n(); }
    int ny() const { return gy_.n(); }
    double dx() const { return gx_.dx(); }
    double dy() const { return gy_.dx(); }
    double x(int i) const { return gx_.x(i); }
    double y(int j) const { return gy_.x(j); }
    void require_radius(int k) const;

    bool operator==(const Grid2D& o) const { return gx_ == o.gx_ && gy_ == o.gy_; }

private:
    Grid1D gx_;
    Grid1D gy_;
};

// ---------------------------------------------------------------- fields

// Point-valued states on nodes plus ghost layers. Alongside each state the
// field keeps a sample of the auxiliary function H, filled with the same
// boundary rule as the states.
class Field1D {
public:
    Field1D() = default;
    Field1D(const Grid1D& grid, int nvars, int ghost);

    const Grid1D& grid() const { return grid_; }
    int n() const { return grid_.n(); }
    int nvars() const { return nvars_; }
    int ghost() const { return ghost_; }
    int extent() const { return grid_.n() + 2 * ghost_; }

    StateVec state(int i) const;
    void set_state(int i, const StateVec& u);
    double& at(int i, int c) { return values_[offset(i) + c]; }
    double at(int i, int c) const { return values_[offset(i) + c]; }
    double* data(int i) { return values_.data() + offset(i); }
    const double* data(int i) const { return values_.data() + offset(i); }

    double& h(int i) { return h_[i + ghost_]; }
    double h(int i) const { return h_[i + ghost_]; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& h_samples() { return h_; }
    const std::vector<double>& h_samples() const { return h_; }

private:
    std::size_t offset(int i) const { return static_cast<std::size_t>(i + ghost_) * nvars_; }

    Grid1D grid_;
    int nvars_ = 0;
    int ghost_ = 0;
    std::vector<double> values_;
    std::vector<double> h_;
};

class Field2D {
public:
    Field2D() = default;
    Field2D(const Grid2D& grid, int nvars, int ghost);

    const Grid2D& grid() const { return grid_; }
    int nx() const { return grid_.nx(); }
    int ny() const { return grid_.ny(); }
    int nvars() const { return nvars_; }
    int ghost() const { return ghost_; }
    int row_extent() const { return grid_.nx() + 2 * ghost_; }
    int col_extent() const { return grid_.ny() + 2 * ghost_; }

    StateVec state(int i, int j) const;
    void set_state(int i, int j, const StateVec& u);
    double& at(int i, int j, int c) { return values_[offset(i, j) + c]; }
    double at(int i, int j, int c) const { return values_[offset(i, j) + c]; }
    double* data(int i, int j) { return values_.data() + offset(i, j); }
    const double* data(int i, int j) const { return values_.data() + offset(i, j); }

    double& h(int i, int j) { return h_[node(i, j)]; }
    double h(int i, int j) const { return h_[node(i, j)]; }

    // distance in nodes between consecutive points along an axis
    std::ptrdiff_t node_stride(Axis d) const { return d == Axis::x ? 1 : row_extent(); }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& h_samples() { return h_; }
    const std::vector<double>& h_samples() const { return h_; }

private:
    std::size_t node(int i, int j) const {
        return static_cast<std::size_t>(j + ghost_) * row_extent() + static_cast<std::size_t>(i + ghost_);
    }
    std::size_t offset(int i, int j) const { return node(i, j) * nvars_; }

    Grid2D grid_;
    int nvars_ = 0;
    int ghost_ = 0;
    std::vector<double> values_;
    std::vector<double> h_;
};

enum class Boundary { Periodic, FreeOutflow };

void fill_ghosts(Field1D& f, Boundary bc);
void fill_ghosts(Field2D& f, Boundary bc);

// ---------------------------------------------------------------- norms

enum class NormKind { L1, Linf };

// margin excludes that many points at each end (each axis in 2D)
double norm(const Field1D& a, const Field1D& b, NormKind which, int component, int margin = 0);
double norm(const Field2D& a, const Field2D& b, NormKind which, int component, int margin = 0);

struct MeshError {
    int n = 0;
    double error = 0.0;
};

std::vector<double> convergence_order(const std::vector<MeshError>& errors);

// ---------------------------------------------------------------- quadrature

struct Quadrature {
    std::vector<double> nodes;    // on [0,1]
    std::vector<double> weights;  // sum to 1
};

Quadrature gauss_legendre(int n);

}  // namespace pcw
