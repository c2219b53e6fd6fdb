#pragma once

#include "pcweno/model.hpp"

#include <array>
#include <functional>

namespace pcw {

// ---------------------------------------------------------------- Burgers

// u_t + u(u+v)_x = 0, v_t + v(u+v)_x = 0
class CoupledBurgers final : public SystemModel {
public:
    explicit CoupledBurgers(PathFamily path = PathFamily::StraightSegments) : path_(path) {}

    std::string name() const override { return "coupled-burgers"; }
    int n_vars() const override { return 2; }
    std::vector<std::string> component_names() const override { return {"u", "v"}; }

    StateMat matrix(const StateVec& u, Axis d) const override;
    PathFamily path_family() const override { return path_; }
    StateVec path_point(double s, const StateVec& ul, const StateVec& ur) const override;
    StateVec path_tangent(double s, const StateVec& ul, const StateVec& ur) const override;
    StateMat roe_matrix(const StateVec& ul, const StateVec& ur, Axis d) const override;
    RoeData roe(const StateVec& ul, const StateVec& ur, Axis d) const override;
    double max_wave_speed(const StateVec& u, Axis d) const override;
    void check_admissible(const StateVec& u) const override;

    // (c/2 + sin x, c/2 - sin x) with c = u + v at the anchor
    bool has_stationary_family() const override { return true; }
    StateVec stationary_value(const NodeSample& anchor, const StateVec& u_anchor,
                              const NodeSample& target) const override;

private:
    PathFamily path_;
};

// u_t + (u^2/2)_x = 0 written as u_t + u u_x = 0
class ScalarBurgers final : public SystemModel {
public:
    std::string name() const override { return "scalar-burgers"; }
    int n_vars() const override { return 1; }
    std::vector<std::string> component_names() const override { return {"u"}; }

    StateMat matrix(const StateVec& u, Axis d) const override;
    StateMat roe_matrix(const StateVec& ul, const StateVec& ur, Axis d) const override;
    RoeData roe(const StateVec& ul, const StateVec& ur, Axis d) const override;
    double max_wave_speed(const StateVec& u, Axis d) const override;

    static double flux(double u) { return 0.5 * u * u; }
};

// ---------------------------------------------------------------- two-layer shallow water

struct Bottom1D {
    std::function<double(double)> z;
    std::function<double(double)> zx;
};

struct Bottom2D {
    std::function<double(double, double)> z;
    std::function<double(double, double)> zx;
    std::function<double(double, double)> zy;
};

Bottom1D flat_bottom_1d(double level);
Bottom2D flat_bottom_2d(double level);

// Roots of ((l-u1)^2 - c1^2)((l-u2)^2 - c2^2) = r c1^2 c2^2, ascending.
struct LayerRoots {
    std::array<double, 4> lambda{};
    bool degenerate = false;
};

LayerRoots solve_layer_quartic(double u1, double u2, double c1sq, double c2sq, double r);
// outermost roots only (cheap); used for wave-speed bounds
std::array<double, 2> layer_external_roots(double u1, double u2, double c1sq, double c2sq, double r);
// first-order approximations used as solver seeds, ascending
std::array<double, 4> layer_root_seeds(double u1, double u2, double c1sq, double c2sq, double r);

struct LayerParams {
    double g = 9.81;
    double r = 0.98;
    void validate() const;
};

// U = (h1, q1, h2, q2), H = -Z
class Swe1D final : public SystemModel {
public:
    Swe1D(LayerParams p, Bottom1D bottom);

    std::string name() const override { return "swe-1d"; }
    int n_vars() const override { return 4; }
    std::vector<std::string> component_names() const override { return {"h1", "q1", "h2", "q2"}; }

    StateMat matrix(const StateVec& u, Axis d) const override;
    bool has_source() const override { return true; }
    StateVec source(const StateVec& u, Axis d) const override;
    double h_value(Point p) const override { return -bottom_.z(p.x); }
    double h_gradient(Point p, Axis d) const override;
    StateMat roe_matrix(const StateVec& ul, const StateVec& ur, Axis d) const override;
    StateVec roe_source(const StateVec& ul, const StateVec& ur, Axis d) const override;
    StateVec roe_product(const StateVec& ul, const StateVec& ur, const StateVec& du, Axis d) const override;
    RoeData roe(const StateVec& ul, const StateVec& ur, Axis d) const override;
    double max_wave_speed(const StateVec& u, Axis d) const override;
    void check_admissible(const StateVec& u) const override;

    bool has_stationary_family() const override { return true; }
    StateVec stationary_value(const NodeSample& anchor, const StateVec& u_anchor,
                              const NodeSample& target) const override;

    const LayerParams& params() const { return p_; }
    double z(double x) const { return bottom_.z(x); }

private:
    LayerParams p_;
    Bottom1D bottom_;
};

// U = (h1, q1x, q1y, h2, q2x, q2y), H = -Z
class Swe2D final : public SystemModel {
public:
    Swe2D(LayerParams p, Bottom2D bottom);

    std::string name() const override { return "swe-2d"; }
    int n_vars() const override { return 6; }
    int dimensions() const override { return 2; }
    std::vector<std::string> component_names() const override { return {"h1", "q1x", "q1y", "h2", "q2x", "q2y"}; }

    StateMat matrix(const StateVec& u, Axis d) const override;
    bool has_source() const override { return true; }
    StateVec source(const StateVec& u, Axis d) const override;
    double h_value(Point p) const override { return -bottom_.z(p.x, p.y); }
    double h_gradient(Point p, Axis d) const override;
    StateMat roe_matrix(const StateVec& ul, const StateVec& ur, Axis d) const override;
    StateVec roe_source(const StateVec& ul, const StateVec& ur, Axis d) const override;
    RoeData roe(const StateVec& ul, const StateVec& ur, Axis d) const override;
    double max_wave_speed(const StateVec& u, Axis d) const override;
    void check_admissible(const StateVec& u) const override;

    bool has_stationary_family() const override { return true; }
    StateVec stationary_value(const NodeSample& anchor, const StateVec& u_anchor,
                              const NodeSample& target) const override;

    bool has_specialized_alpha() const override { return true; }
    StateVec specialized_alpha(const RoeData& roe, const StateVec& f) const override;

    const LayerParams& params() const { return p_; }
    double z(double x, double y) const { return bottom_.z(x, y); }

private:
    LayerParams p_;
    Bottom2D bottom_;
};

// Reduced 4x4 solve on (h1, q1 parallel, h2, q2 parallel) followed by the two
// transverse coefficients; alpha in the ascending eigenvalue order of roe.
StateVec swe2d_alpha_solve(const Swe2D& model, const RoeData& roe, const StateVec& du, double dh);

}  // namespace pcw
