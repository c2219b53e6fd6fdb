#include "pcweno/systems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pcw {

namespace {

// swaps the x and y momentum slots of both layers
StateVec permute(const StateVec& u) {
    StateVec w(6);
    w << u[0], u[2], u[1], u[3], u[5], u[4];
    return w;
}

constexpr int kPerm[6] = {0, 2, 1, 3, 5, 4};

StateMat permute_rows_cols(const StateMat& a) {
    StateMat b(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) b(i, j) = a(kPerm[i], kPerm[j]);
    return b;
}

StateVec oriented(const StateVec& u, Axis d) { return d == Axis::x ? u : permute(u); }

double sqrt_weighted(double hl, double ul, double hr, double ur) {
    const double sl = std::sqrt(hl);
    const double sr = std::sqrt(hr);
    return (sl * ul + sr * ur) / (sl + sr);
}

// x-oriented quantities: parallel velocity u?1, transverse u?2
struct Averages2D {
    double u11, u12, u21, u22, c1sq, c2sq, h1, h2;
};

Averages2D averages(const StateVec& l, const StateVec& r, double g) {
    Averages2D a;
    a.h1 = 0.5 * (l[0] + r[0]);
    a.h2 = 0.5 * (l[3] + r[3]);
    a.u11 = sqrt_weighted(l[0], l[1] / l[0], r[0], r[1] / r[0]);
    a.u12 = sqrt_weighted(l[0], l[2] / l[0], r[0], r[2] / r[0]);
    a.u21 = sqrt_weighted(l[3], l[4] / l[3], r[3], r[4] / r[3]);
    a.u22 = sqrt_weighted(l[3], l[5] / l[3], r[3], r[5] / r[3]);
    a.c1sq = g * a.h1;
    a.c2sq = g * a.h2;
    return a;
}

Averages2D point_values(const StateVec& u, double g) {
    return {u[1] / u[0], u[2] / u[0], u[4] / u[3], u[5] / u[3], g * u[0], g * u[3], u[0], u[3]};
}

StateMat x_matrix(const Averages2D& a, double r) {
    StateMat m = StateMat::Zero(6, 6);
    m(0, 1) = 1.0;
    m(1, 0) = a.c1sq - a.u11 * a.u11;
    m(1, 1) = 2.0 * a.u11;
    m(1, 3) = a.c1sq;
    m(2, 0) = -a.u11 * a.u12;
    m(2, 1) = a.u12;
    m(2, 2) = a.u11;
    m(3, 4) = 1.0;
    m(4, 0) = r * a.c2sq;
    m(4, 3) = a.c2sq - a.u21 * a.u21;
    m(4, 4) = 2.0 * a.u21;
    m(5, 3) = -a.u21 * a.u22;
    m(5, 4) = a.u22;
    m(5, 5) = a.u21;
    return m;
}

StateMat directed(const StateMat& mx, Axis d) { return d == Axis::x ? mx : permute_rows_cols(mx); }

}  // namespace

Swe2D::Swe2D(LayerParams p, Bottom2D bottom) : p_(p), bottom_(std::move(bottom)) {
    p_.validate();
    if (!bottom_.z || !bottom_.zx || !bottom_.zy) throw ValidationError("swe-2d: bottom needs Z, Z_x and Z_y");
}

void Swe2D::check_admissible(const StateVec& u) const {
    SystemModel::check_admissible(u);
    if (!(u[0] > 0.0) || !(u[3] > 0.0)) throw AdmissibilityError("swe-2d: non-positive layer depth");
}

StateMat Swe2D::matrix(const StateVec& u, Axis d) const {
    check_admissible(u);
    return directed(x_matrix(point_values(oriented(u, d), p_.g), p_.r), d);
}

StateVec Swe2D::source(const StateVec& u, Axis d) const {
    StateVec s = StateVec::Zero(6);
    const int off = d == Axis::x ? 1 : 2;
    s[off] = p_.g * u[0];
    s[3 + off] = p_.g * u[3];
    return s;
}

double Swe2D::h_gradient(Point p, Axis d) const { return d == Axis::x ? -bottom_.zx(p.x, p.y) : -bottom_.zy(p.x, p.y); }

StateMat Swe2D::roe_matrix(const StateVec& ul, const StateVec& ur, Axis d) const {
    check_admissible(ul);
    check_admissible(ur);
    return directed(x_matrix(averages(oriented(ul, d), oriented(ur, d), p_.g), p_.r), d);
}

StateVec Swe2D::roe_source(const StateVec& ul, const StateVec& ur, Axis d) const {
    StateVec s = StateVec::Zero(6);
    const int off = d == Axis::x ? 1 : 2;
    s[off] = p_.g * 0.5 * (ul[0] + ur[0]);
    s[3 + off] = p_.g * 0.5 * (ul[3] + ur[3]);
    return s;
}

RoeData Swe2D::roe(const StateVec& ul, const StateVec& ur, Axis d) const {
    check_admissible(ul);
    check_admissible(ur);
    const auto a = averages(oriented(ul, d), oriented(ur, d), p_.g);
    const auto roots = solve_layer_quartic(a.u11, a.u21, a.c1sq, a.c2sq, p_.r);

    // natural order: four layer waves, then the two transverse shear waves
    double lam[6];
    StateMat rx = StateMat::Zero(6, 6);
    Eigen::Matrix4d r4;
    for (int l = 0; l < 4; ++l) {
        const double v = roots.lambda[l];
        const double mu = ((v - a.u11) * (v - a.u11) - a.c1sq) / a.c1sq;
        lam[l] = v;
        rx.col(l) << 1.0, v, a.u12, mu, mu * v, mu * a.u22;
        r4.col(l) << 1.0, v, mu, mu * v;
    }
    lam[4] = a.u11;
    lam[5] = a.u21;
    rx(2, 4) = 1.0;
    rx(5, 5) = 1.0;

    const Eigen::Matrix4d l4 = r4.inverse();
    constexpr int kBlock[4] = {0, 1, 3, 4};
    StateMat lx = StateMat::Zero(6, 6);
    for (int l = 0; l < 4; ++l)
        for (int c = 0; c < 4; ++c) lx(l, kBlock[c]) = l4(l, c);
    lx(4, 2) = 1.0;
    lx(5, 5) = 1.0;
    for (int l = 0; l < 4; ++l) {
        for (int c = 0; c < 4; ++c) {
            lx(4, kBlock[c]) -= rx(2, l) * l4(l, c);
            lx(5, kBlock[c]) -= rx(5, l) * l4(l, c);
        }
    }

    std::array<int, 6> order{0, 1, 2, 3, 4, 5};
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return lam[p] < lam[q]; });

    RoeData rd;
    rd.axis = d;
    rd.matrix = directed(x_matrix(a, p_.r), d);
    rd.source = roe_source(ul, ur, d);
    rd.degenerate = roots.degenerate;
    rd.eigenvalues.resize(6);
    rd.right.resize(6, 6);
    rd.left.resize(6, 6);
    for (int l = 0; l < 6; ++l) {
        const int w = order[l];
        rd.wave[l] = w;
        rd.eigenvalues[l] = lam[w];
        for (int c = 0; c < 6; ++c) {
            const int cc = d == Axis::x ? c : kPerm[c];
            rd.right(c, l) = rx(cc, w);
            rd.left(l, c) = lx(w, cc);
        }
    }
    return rd;
}

double Swe2D::max_wave_speed(const StateVec& u, Axis d) const {
    check_admissible(u);
    const auto a = point_values(oriented(u, d), p_.g);
    const auto e = layer_external_roots(a.u11, a.u21, a.c1sq, a.c2sq, p_.r);
    return std::max({std::abs(e[0]), std::abs(e[1]), std::abs(a.u11), std::abs(a.u21)});
}

StateVec Swe2D::stationary_value(const NodeSample& anchor, const StateVec& u_anchor, const NodeSample& target) const {
    StateVec w = StateVec::Zero(6);
    w[0] = u_anchor[0];
    w[3] = u_anchor[3] + target.h - anchor.h;
    return w;
}

StateVec Swe2D::specialized_alpha(const RoeData& roe, const StateVec& f) const {
    const Axis d = roe.axis;
    const StateVec fx = oriented(f, d);
    auto rx = [&](int row, int col) { return roe.right(d == Axis::x ? row : kPerm[row], col); };

    int layer[4];
    int shear[2] = {-1, -1};
    int nl = 0;
    for (int l = 0; l < 6; ++l) {
        if (roe.wave[l] < 4)
            layer[nl++] = l;
        else
            shear[roe.wave[l] - 4] = l;
    }
    constexpr int kBlock[4] = {0, 1, 3, 4};
    Eigen::Matrix4d r4;
    Eigen::Vector4d f4;
    for (int c = 0; c < 4; ++c) {
        f4[c] = fx[kBlock[c]];
        for (int j = 0; j < 4; ++j) r4(c, j) = rx(kBlock[c], layer[j]);
    }
    // gamma_l = alpha_l lambda_l
    const Eigen::Vector4d gamma = r4.partialPivLu().solve(f4);
    StateVec alpha = StateVec::Zero(6);
    double g5 = fx[2];
    double g6 = fx[5];
    for (int j = 0; j < 4; ++j) {
        const double lam = roe.eigenvalues[layer[j]];
        alpha[layer[j]] = std::abs(lam) > kZeroEigenvalue ? gamma[j] / lam : 0.0;
        g5 -= gamma[j] * rx(2, layer[j]);
        g6 -= gamma[j] * rx(5, layer[j]);
    }
    const double l5 = roe.eigenvalues[shear[0]];
    const double l6 = roe.eigenvalues[shear[1]];
    alpha[shear[0]] = std::abs(l5) > kZeroEigenvalue ? g5 / l5 : 0.0;
    alpha[shear[1]] = std::abs(l6) > kZeroEigenvalue ? g6 / l6 : 0.0;
    return alpha;
}

StateVec swe2d_alpha_solve(const Swe2D& model, const RoeData& roe, const StateVec& du, double dh) {
    const StateVec f = roe.matrix * du - roe.source * dh;
    return model.specialized_alpha(roe, f);
}

}  // namespace pcw
