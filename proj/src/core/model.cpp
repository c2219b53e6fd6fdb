#include "pcweno/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pcw {

StateVec SystemModel::source(const StateVec&, Axis) const { return StateVec::Zero(n_vars()); }

StateVec SystemModel::path_point(double s, const StateVec& ul, const StateVec& ur) const { return ul + s * (ur - ul); }

StateVec SystemModel::path_tangent(double, const StateVec& ul, const StateVec& ur) const { return ur - ul; }

StateVec SystemModel::roe_source(const StateVec&, const StateVec&, Axis) const { return StateVec::Zero(n_vars()); }

StateVec SystemModel::roe_product(const StateVec& ul, const StateVec& ur, const StateVec& du, Axis d) const {
    return roe_matrix(ul, ur, d) * du;
}

void SystemModel::check_admissible(const StateVec& u) const {
    for (int c = 0; c < u.size(); ++c)
        if (!std::isfinite(u[c])) throw NonFiniteError(name() + ": non-finite state component", -1);
}

StateVec SystemModel::stationary_value(const NodeSample&, const StateVec&, const NodeSample&) const {
    throw ValidationError(name() + ": no stationary family");
}

StateVec SystemModel::specialized_alpha(const RoeData&, const StateVec&) const {
    throw ValidationError(name() + ": no specialized alpha solve");
}

StationarySolution stationary(const SystemModel& model, const NodeSample& anchor, const StateVec& u_anchor) {
    if (!model.has_stationary_family()) throw ValidationError(model.name() + ": no stationary family");
    return StationarySolution(model, anchor, u_anchor);
}

StateVec path_integral_fluctuation(const SystemModel& model, const StateVec& ul, const StateVec& ur, Axis d,
                                   int n_quad) {
    if (n_quad < 1) throw ValidationError("path_integral_fluctuation: need at least one node");
    const Quadrature q = gauss_legendre(n_quad);
    StateVec acc = StateVec::Zero(model.n_vars());
    for (int i = 0; i < n_quad; ++i) {
        const double s = q.nodes[i];
        const StateVec p = model.path_point(s, ul, ur);
        acc += q.weights[i] * (model.matrix(p, d) * model.path_tangent(s, ul, ur));
    }
    return acc;
}

RoeData eigen_bundle(const StateMat& a, const StateVec& source) {
    const int n = static_cast<int>(a.rows());
    Eigen::EigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(a), true);
    if (es.info() != Eigen::Success) throw SolverError("eigen decomposition failed");
    const auto vals = es.eigenvalues();
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    for (int i = 0; i < n; ++i)
        if (std::abs(vals[i].imag()) > 1e-12 * scale) throw HyperbolicityLoss("complex eigenvalues", 0.0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int p, int q) { return vals[p].real() < vals[q].real(); });
    RoeData rd;
    rd.matrix = a;
    rd.source = source;
    rd.eigenvalues.resize(n);
    rd.right.resize(n, n);
    const auto vecs = es.eigenvectors();
    for (int l = 0; l < n; ++l) {
        rd.eigenvalues[l] = vals[order[l]].real();
        for (int r = 0; r < n; ++r) rd.right(r, l) = vecs(r, order[l]).real();
        rd.right.col(l).normalize();
    }
    for (int l = 0; l + 1 < n; ++l)
        if (rd.eigenvalues[l + 1] - rd.eigenvalues[l] < kDegenerateGap) rd.degenerate = true;
    rd.left = rd.right.inverse();
    return rd;
}

}  // namespace pcw
