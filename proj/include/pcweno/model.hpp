#pragma once

#include "pcweno/core.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace pcw {

enum class PathFamily { StraightSegments, BurgersPsi2 };

struct RoeData {
    StateMat matrix;
    StateVec source;       // zero for homogeneous models
    StateVec eigenvalues;  // ascending
    StateMat right;        // columns are right eigenvectors
    StateMat left;         // rows, inverse of right
    bool degenerate = false;  // two eigenvalues closer than kDegenerateGap
    Axis axis = Axis::x;
    std::array<int, kMaxVars> wave{0, 1, 2, 3, 4, 5};  // model wave index of each sorted column
};

inline constexpr double kDegenerateGap = 1e-10;
inline constexpr double kZeroEigenvalue = 1e-12;

// Position and H sample of one node; what a stationary family needs.
struct NodeSample {
    Point pos;
    double h = 0.0;
};

class SystemModel {
public:
    virtual ~SystemModel() = default;

    virtual std::string name() const = 0;
    virtual int n_vars() const = 0;
    virtual int dimensions() const { return 1; }
    virtual std::vector<std::string> component_names() const = 0;

    virtual StateMat matrix(const StateVec& u, Axis d) const = 0;
    virtual bool has_source() const { return false; }
    virtual StateVec source(const StateVec& u, Axis d) const;

    virtual double h_value(Point) const { return 0.0; }
    virtual double h_gradient(Point, Axis) const { return 0.0; }

    virtual PathFamily path_family() const { return PathFamily::StraightSegments; }
    virtual StateVec path_point(double s, const StateVec& ul, const StateVec& ur) const;
    virtual StateVec path_tangent(double s, const StateVec& ul, const StateVec& ur) const;

    // Roe matrix and source alone; cheaper than roe()
    virtual StateMat roe_matrix(const StateVec& ul, const StateVec& ur, Axis d) const = 0;
    virtual StateVec roe_source(const StateVec& ul, const StateVec& ur, Axis d) const;
    // roe_matrix(ul, ur) * du
    virtual StateVec roe_product(const StateVec& ul, const StateVec& ur, const StateVec& du, Axis d) const;
    virtual RoeData roe(const StateVec& ul, const StateVec& ur, Axis d) const = 0;
    // roe(ul, ur) == roe(ur, ul), so D+-(V, U) = -D+-(U, V)
    virtual bool roe_symmetric() const { return path_family() == PathFamily::StraightSegments; }

    virtual double max_wave_speed(const StateVec& u, Axis d) const = 0;
    virtual void check_admissible(const StateVec& u) const;

    virtual bool has_stationary_family() const { return false; }
    virtual StateVec stationary_value(const NodeSample& anchor, const StateVec& u_anchor,
                                      const NodeSample& target) const;

    // alpha with R alpha = dU - A^{-1} S dH and alpha_l = 0 on zero eigenvalues;
    // f is A dU - S dH
    virtual bool has_specialized_alpha() const { return false; }
    virtual StateVec specialized_alpha(const RoeData& roe, const StateVec& f) const;
};

using ModelPtr = std::shared_ptr<const SystemModel>;

// U*(.) anchored at one node.
class StationarySolution {
public:
    StationarySolution(const SystemModel& model, const NodeSample& anchor, const StateVec& u_anchor)
        : model_(&model), anchor_(anchor), u_anchor_(u_anchor) {}

    StateVec operator()(const NodeSample& target) const { return model_->stationary_value(anchor_, u_anchor_, target); }

private:
    const SystemModel* model_;
    NodeSample anchor_;
    StateVec u_anchor_;
};

StationarySolution stationary(const SystemModel& model, const NodeSample& anchor, const StateVec& u_anchor);

// Quadrature of int_0^1 A(Psi(s)) dPsi/ds ds with n_quad Gauss-Legendre nodes.
StateVec path_integral_fluctuation(const SystemModel& model, const StateVec& ul, const StateVec& ur, Axis d,
                                   int n_quad = 5);

// Eigen-decomposition of a general real matrix with real spectrum; used as a
// fallback by models without closed-form eigenvectors.
RoeData eigen_bundle(const StateMat& a, const StateVec& source);

}  // namespace pcw
