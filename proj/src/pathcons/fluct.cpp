#include "pcweno/pathcons.hpp"
#include "fluct_internal.hpp"

#include <cmath>

namespace pcw {

void SchemeConfig::validate(const SystemModel& model) const {
    weno.validate();
    if (splitting.entropy_eps < 0.0) throw ValidationError("splitting: entropy_eps must be non-negative");
    if (wb == WellBalance::Strategy1 && !model.has_source())
        throw ValidationError("well-balance strategy 1 needs a model with a source term");
    if (wb == WellBalance::Strategy2 && !model.has_stationary_family())
        throw ValidationError("well-balance strategy 2 needs a stationary family");
}

double harten_abs(double lambda, double eps) {
    const double a = std::abs(lambda);
    if (eps > 0.0 && a < eps) return (lambda * lambda + eps * eps) / (2.0 * eps);
    return a;
}

namespace detail {

bool is_zero_jump(const StateVec& uj, const StateVec& uk, double dh) {
    if (dh != 0.0) return false;
    for (int c = 0; c < uj.size(); ++c)
        if (uj[c] != uk[c]) return false;
    return true;
}

LfParts lf_parts(const SystemModel& model, const StateVec& uj, const StateVec& uk, double dh, Axis d) {
    const StateVec du = uk - uj;
    LfParts p;
    if (dh == 0.0) {
        p.f = model.roe_product(uj, uk, du, d);
        p.w = du;
        return p;
    }
    const RoeData rd = model.roe(uj, uk, d);
    p.f = rd.matrix * du - rd.source * dh;
    StateVec alpha;
    if (model.has_specialized_alpha()) {
        alpha = model.specialized_alpha(rd, p.f);
    } else {
        alpha = rd.left * p.f;
        for (int l = 0; l < alpha.size(); ++l) {
            if (std::abs(rd.eigenvalues[l]) <= kZeroEigenvalue)
                throw SolverError(model.name() + ": singular Roe matrix where A^{-1} S dH is needed");
            alpha[l] /= rd.eigenvalues[l];
        }
    }
    p.w = rd.right * alpha;
    return p;
}

}  // namespace detail

FluctPair fluct_pair(const SystemModel& model, const StateVec& uj, const StateVec& uk, double dh, Axis d,
                     const Splitting& splitting, double lf_alpha) {
    const int n = model.n_vars();
    FluctPair out{StateVec::Zero(n), StateVec::Zero(n)};
    if (detail::is_zero_jump(uj, uk, dh)) return out;

    switch (splitting.kind) {
        case SplittingKind::RightGoing: {
            out.plus = model.roe_matrix(uj, uk, d) * (uk - uj);
            if (dh != 0.0) out.plus -= model.roe_source(uj, uk, d) * dh;
            return out;
        }
        case SplittingKind::LaxFriedrichs: {
            const auto p = detail::lf_parts(model, uj, uk, dh, d);
            out.plus = 0.5 * (p.f + lf_alpha * p.w);
            out.minus = 0.5 * (p.f - lf_alpha * p.w);
            return out;
        }
        case SplittingKind::Upwind: break;
    }

    const StateVec du = uk - uj;
    const RoeData rd = model.roe(uj, uk, d);
    if (rd.degenerate) throw SolverError(model.name() + ": coincident eigenvalues, upwind projection undefined");
    const StateVec f = rd.matrix * du - rd.source * dh;
    const double eps = splitting.entropy_eps;

    if (eps == 0.0 && !model.has_specialized_alpha()) {
        const StateVec gamma = rd.left * f;
        for (int l = 0; l < n; ++l) {
            const double lam = rd.eigenvalues[l];
            if (lam > kZeroEigenvalue)
                out.plus += gamma[l] * rd.right.col(l);
            else if (lam < -kZeroEigenvalue)
                out.minus += gamma[l] * rd.right.col(l);
        }
        return out;
    }

    StateVec alpha;
    if (model.has_specialized_alpha()) {
        alpha = model.specialized_alpha(rd, f);
    } else {
        const StateVec gamma = rd.left * f;
        const StateVec direct = rd.left * du;
        alpha.resize(n);
        for (int l = 0; l < n; ++l) {
            const double lam = rd.eigenvalues[l];
            if (std::abs(lam) > kZeroEigenvalue)
                alpha[l] = gamma[l] / lam;
            else if (dh == 0.0)
                alpha[l] = direct[l];
            else
                throw SolverError(model.name() + ": zero eigenvalue with a source jump and no specialized solve");
        }
    }
    for (int l = 0; l < n; ++l) {
        const double lam = rd.eigenvalues[l];
        const double a = harten_abs(lam, eps);
        out.plus += alpha[l] * 0.5 * (lam + a) * rd.right.col(l);
        out.minus += alpha[l] * 0.5 * (lam - a) * rd.right.col(l);
    }
    return out;
}

}  // namespace pcw
