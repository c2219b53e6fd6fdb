#include "pcweno/systems.hpp"

#include <cmath>

namespace pcw {

namespace {

struct LayerAverages {
    double u1, u2, c1sq, c2sq, h1, h2;
};

double sqrt_weighted(double hl, double ul, double hr, double ur) {
    const double sl = std::sqrt(hl);
    const double sr = std::sqrt(hr);
    return (sl * ul + sr * ur) / (sl + sr);
}

LayerAverages averages(const StateVec& ul, const StateVec& ur, double g) {
    LayerAverages a;
    a.h1 = 0.5 * (ul[0] + ur[0]);
    a.h2 = 0.5 * (ul[2] + ur[2]);
    a.u1 = sqrt_weighted(ul[0], ul[1] / ul[0], ur[0], ur[1] / ur[0]);
    a.u2 = sqrt_weighted(ul[2], ul[3] / ul[2], ur[2], ur[3] / ur[2]);
    a.c1sq = g * a.h1;
    a.c2sq = g * a.h2;
    return a;
}

StateMat layer_matrix(double u1, double u2, double c1sq, double c2sq, double r) {
    StateMat a = StateMat::Zero(4, 4);
    a(0, 1) = 1.0;
    a(1, 0) = c1sq - u1 * u1;
    a(1, 1) = 2.0 * u1;
    a(1, 2) = c1sq;
    a(2, 3) = 1.0;
    a(3, 0) = r * c2sq;
    a(3, 2) = c2sq - u2 * u2;
    a(3, 3) = 2.0 * u2;
    return a;
}

}  // namespace

Swe1D::Swe1D(LayerParams p, Bottom1D bottom) : p_(p), bottom_(std::move(bottom)) {
    p_.validate();
    if (!bottom_.z || !bottom_.zx) throw ValidationError("swe-1d: bottom needs Z and Z_x");
}

void Swe1D::check_admissible(const StateVec& u) const {
    SystemModel::check_admissible(u);
    if (!(u[0] > 0.0) || !(u[2] > 0.0)) throw AdmissibilityError("swe-1d: non-positive layer depth");
}

StateMat Swe1D::matrix(const StateVec& u, Axis) const {
    check_admissible(u);
    return layer_matrix(u[1] / u[0], u[3] / u[2], p_.g * u[0], p_.g * u[2], p_.r);
}

StateVec Swe1D::source(const StateVec& u, Axis) const {
    StateVec s = StateVec::Zero(4);
    s[1] = p_.g * u[0];
    s[3] = p_.g * u[2];
    return s;
}

double Swe1D::h_gradient(Point p, Axis d) const { return d == Axis::x ? -bottom_.zx(p.x) : 0.0; }

StateMat Swe1D::roe_matrix(const StateVec& ul, const StateVec& ur, Axis) const {
    check_admissible(ul);
    check_admissible(ur);
    const auto a = averages(ul, ur, p_.g);
    return layer_matrix(a.u1, a.u2, a.c1sq, a.c2sq, p_.r);
}

StateVec Swe1D::roe_source(const StateVec& ul, const StateVec& ur, Axis) const {
    StateVec s = StateVec::Zero(4);
    s[1] = p_.g * 0.5 * (ul[0] + ur[0]);
    s[3] = p_.g * 0.5 * (ul[2] + ur[2]);
    return s;
}

StateVec Swe1D::roe_product(const StateVec& ul, const StateVec& ur, const StateVec& du, Axis) const {
    if (!(ul[0] > 0.0 && ul[2] > 0.0 && ur[0] > 0.0 && ur[2] > 0.0)) {
        check_admissible(ul);
        check_admissible(ur);
    }
    const auto a = averages(ul, ur, p_.g);
    StateVec f(4);
    f[0] = du[1];
    f[1] = (a.c1sq - a.u1 * a.u1) * du[0] + 2.0 * a.u1 * du[1] + a.c1sq * du[2];
    f[2] = du[3];
    f[3] = p_.r * a.c2sq * du[0] + (a.c2sq - a.u2 * a.u2) * du[2] + 2.0 * a.u2 * du[3];
    return f;
}

RoeData Swe1D::roe(const StateVec& ul, const StateVec& ur, Axis d) const {
    if (!(ul[0] > 0.0 && ul[2] > 0.0 && ur[0] > 0.0 && ur[2] > 0.0)) {
        check_admissible(ul);
        check_admissible(ur);
    }
    const auto a = averages(ul, ur, p_.g);
    RoeData rd;
    rd.axis = d;
    rd.matrix = layer_matrix(a.u1, a.u2, a.c1sq, a.c2sq, p_.r);
    rd.source = StateVec::Zero(4);
    rd.source[1] = p_.g * a.h1;
    rd.source[3] = p_.g * a.h2;
    const auto roots = solve_layer_quartic(a.u1, a.u2, a.c1sq, a.c2sq, p_.r);
    rd.degenerate = roots.degenerate;
    rd.eigenvalues.resize(4);
    Eigen::Matrix4d right;
    for (int l = 0; l < 4; ++l) {
        const double lam = roots.lambda[l];
        const double mu = ((lam - a.u1) * (lam - a.u1) - a.c1sq) / a.c1sq;
        rd.eigenvalues[l] = lam;
        right.col(l) << 1.0, lam, mu, mu * lam;
    }
    rd.right = right;
    rd.left = right.inverse();
    return rd;
}

double Swe1D::max_wave_speed(const StateVec& u, Axis) const {
    if (!(u[0] > 0.0 && u[2] > 0.0)) check_admissible(u);
    const auto e = layer_external_roots(u[1] / u[0], u[3] / u[2], p_.g * u[0], p_.g * u[2], p_.r);
    return std::max(std::abs(e[0]), std::abs(e[1]));
}

StateVec Swe1D::stationary_value(const NodeSample& anchor, const StateVec& u_anchor, const NodeSample& target) const {
    StateVec w(4);
    w << u_anchor[0], 0.0, u_anchor[2] + target.h - anchor.h, 0.0;
    return w;
}

}  // namespace pcw
