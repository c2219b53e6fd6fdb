#include "pcweno/systems.hpp"

#include <cmath>

namespace pcw {

StateMat CoupledBurgers::matrix(const StateVec& u, Axis) const {
    StateMat a(2, 2);
    a << u[0], u[0], u[1], u[1];
    return a;
}

StateVec CoupledBurgers::path_point(double s, const StateVec& ul, const StateVec& ur) const {
    if (path_ == PathFamily::StraightSegments) return ul + s * (ur - ul);
    StateVec p(2);
    p[0] = ul[0] + s * (4.0 - 3.0 * s) * (ur[0] - ul[0]);
    p[1] = ul[1] + s * (ur[1] - ul[1]);
    return p;
}

StateVec CoupledBurgers::path_tangent(double s, const StateVec& ul, const StateVec& ur) const {
    if (path_ == PathFamily::StraightSegments) return ur - ul;
    StateVec t(2);
    t[0] = (4.0 - 6.0 * s) * (ur[0] - ul[0]);
    t[1] = ur[1] - ul[1];
    return t;
}

StateMat CoupledBurgers::roe_matrix(const StateVec& ul, const StateVec& ur, Axis) const {
    const double ub = 0.5 * (ul[0] + ur[0]);
    const double vb = 0.5 * (ul[1] + ur[1]);
    StateMat a(2, 2);
    if (path_ == PathFamily::StraightSegments)
        a << ub, ub, vb, vb;
    else
        a << ub, ur[0], ul[1], vb;
    return a;
}

RoeData CoupledBurgers::roe(const StateVec& ul, const StateVec& ur, Axis d) const {
    check_admissible(ul);
    check_admissible(ur);
    RoeData rd;
    rd.axis = d;
    rd.matrix = roe_matrix(ul, ur, d);
    rd.source = StateVec::Zero(2);
    rd.eigenvalues.resize(2);
    rd.right.resize(2, 2);
    const double a = rd.matrix(0, 0), b = rd.matrix(0, 1), c = rd.matrix(1, 0), e = rd.matrix(1, 1);
    if (path_ == PathFamily::StraightSegments) {
        const double s = a + e;
        rd.eigenvalues << 0.0, s;
        const double nr = std::hypot(a, c);
        rd.right << 1.0 / std::sqrt(2.0), a / nr, -1.0 / std::sqrt(2.0), c / nr;
        if (s < 0.0) {
            rd.eigenvalues << s, 0.0;
            rd.right << a / nr, 1.0 / std::sqrt(2.0), c / nr, -1.0 / std::sqrt(2.0);
        }
    } else {
        const double half = 0.5 * (a - e);
        const double disc = half * half + b * c;
        if (disc < 0.0) throw HyperbolicityLoss("coupled-burgers: complex eigenvalues of the path-2 Roe matrix", 0.0);
        const double root = std::sqrt(disc);
        const double mid = 0.5 * (a + e);
        rd.eigenvalues << mid - root, mid + root;
        for (int l = 0; l < 2; ++l) {
            const double lam = rd.eigenvalues[l];
            Eigen::Vector2d v1(b, lam - a);
            Eigen::Vector2d v2(lam - e, c);
            Eigen::Vector2d v = v1.norm() >= v2.norm() ? v1 : v2;
            if (v.norm() == 0.0) v = l == 0 ? Eigen::Vector2d(1.0, 0.0) : Eigen::Vector2d(0.0, 1.0);
            v.normalize();
            rd.right(0, l) = v[0];
            rd.right(1, l) = v[1];
        }
    }
    if (rd.eigenvalues[1] - rd.eigenvalues[0] < 1e-12)
        throw SolverError("coupled-burgers: coincident eigenvalues, eigenvector basis unavailable");
    rd.degenerate = rd.eigenvalues[1] - rd.eigenvalues[0] < kDegenerateGap;
    const double det = rd.right(0, 0) * rd.right(1, 1) - rd.right(0, 1) * rd.right(1, 0);
    rd.left.resize(2, 2);
    rd.left << rd.right(1, 1) / det, -rd.right(0, 1) / det, -rd.right(1, 0) / det, rd.right(0, 0) / det;
    return rd;
}

double CoupledBurgers::max_wave_speed(const StateVec& u, Axis) const { return std::abs(u[0] + u[1]); }

void CoupledBurgers::check_admissible(const StateVec& u) const {
    SystemModel::check_admissible(u);
    if (!(u[0] + u[1] > 0.0)) throw AdmissibilityError("coupled-burgers: state leaves the admissible set u+v > 0");
}

StateVec CoupledBurgers::stationary_value(const NodeSample& anchor, const StateVec& u_anchor,
                                          const NodeSample& target) const {
    (void)anchor;
    const double c = u_anchor[0] + u_anchor[1];
    const double s = std::sin(target.pos.x);
    StateVec w(2);
    w << 0.5 * c + s, 0.5 * c - s;
    return w;
}

StateMat ScalarBurgers::matrix(const StateVec& u, Axis) const {
    StateMat a(1, 1);
    a(0, 0) = u[0];
    return a;
}

StateMat ScalarBurgers::roe_matrix(const StateVec& ul, const StateVec& ur, Axis) const {
    StateMat a(1, 1);
    a(0, 0) = 0.5 * (ul[0] + ur[0]);
    return a;
}

RoeData ScalarBurgers::roe(const StateVec& ul, const StateVec& ur, Axis d) const {
    RoeData rd;
    rd.axis = d;
    rd.matrix = roe_matrix(ul, ur, d);
    rd.source = StateVec::Zero(1);
    rd.eigenvalues = StateVec::Constant(1, rd.matrix(0, 0));
    rd.right = StateMat::Identity(1, 1);
    rd.left = StateMat::Identity(1, 1);
    return rd;
}

double ScalarBurgers::max_wave_speed(const StateVec& u, Axis) const { return std::abs(u[0]); }

}  // namespace pcw
