#include "pcweno/pathcons.hpp"
#include "fluct_internal.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <sstream>

namespace pcw {

namespace {

std::atomic<int> g_fallback_warnings{0};

void warn_componentwise(int i) {
    if (g_fallback_warnings.fetch_add(1) < 5)
        spdlog::warn("near-coincident eigenvalues at interface {}+1/2; reconstructing componentwise", i);
}

}  // namespace

StateVec LineView::state(int i) const {
    StateVec u(nvars);
    const double* p = ptr(i);
    for (int c = 0; c < nvars; ++c) u[c] = p[c];
    return u;
}

LineView line_view(const Field1D& f) {
    LineView v;
    v.states = f.data(0);
    v.h = &f.h_samples()[f.ghost()];
    v.stride = 1;
    v.nvars = f.nvars();
    v.n = f.n();
    v.ghost = f.ghost();
    v.axis = Axis::x;
    v.dx = f.grid().dx();
    v.origin = {f.grid().a(), 0.0};
    v.step = {f.grid().dx(), 0.0};
    return v;
}

LineAssembler::LineAssembler(const SystemModel& model, const SchemeConfig& cfg)
    : model_(model), cfg_(cfg), k_(cfg.weno.radius()), nv_(model.n_vars()) {
    cfg_.validate(model);
    lf_ = cfg_.splitting.kind == SplittingKind::LaxFriedrichs;
    use_char_ = lf_ && cfg_.splitting.characteristic;
    symmetric_ = model.roe_symmetric();
}

void LineAssembler::load(const LineView& line, int lo, int hi) {
    const int count = hi - lo + 1;
    u_.resize(count);
    hs_.resize(count);
    for (int m = 0; m < count; ++m) {
        u_[m] = line.state(lo + m);
        hs_[m] = line.h_at(lo + m);
    }
    if (lf_ && cfg_.splitting.alpha_mode == LfAlphaMode::Local) {
        speed_.resize(count);
        for (int m = 0; m < count; ++m) speed_[m] = model_.max_wave_speed(u_[m], line.axis);
    }
    const std::size_t slots = static_cast<std::size_t>(count) * (2 * k_ + 2);
    pairs_.assign(slots * 2 * nv_, 0.0);
}

void LineAssembler::compute_pair(int a, int b, double* first, double* second) {
    const StateVec& ua = u_[a - lo_];
    const StateVec& ub = u_[b - lo_];
    const double dh = cfg_.wb == WellBalance::Strategy1 ? hs_[b - lo_] - hs_[a - lo_] : 0.0;
    if (detail::is_zero_jump(ua, ub, dh)) return;
    const Axis d = line_->axis;
    if (lf_) {
        const auto p = detail::lf_parts(model_, ua, ub, dh, d);
        for (int c = 0; c < nv_; ++c) {
            first[c] = p.f[c];
            second[c] = p.w[c];
        }
        return;
    }
    const auto fp = fluct_pair(model_, ua, ub, dh, d, cfg_.splitting);
    for (int c = 0; c < nv_; ++c) {
        first[c] = fp.plus[c];
        second[c] = fp.minus[c];
    }
}

// every pair (a, b) with b - a in [-k, k+1] inside [lo, hi]
void LineAssembler::fill_pairs() {
    for (int a = lo_; a <= hi_; ++a) {
        for (int off = 1; off <= k_ + 1 && a + off <= hi_; ++off) {
            const int b = a + off;
            double* fwd = slot(a, b);
            compute_pair(a, b, fwd, fwd + nv_);
            if (off > k_) continue;
            double* bwd = slot(b, a);
            if (symmetric_) {
                for (int c = 0; c < 2 * nv_; ++c) bwd[c] = -fwd[c];
            } else {
                compute_pair(b, a, bwd, bwd + nv_);
            }
        }
    }
}

void LineAssembler::fill_bases(int i0, int i1) {
    const int count = hi_ - lo_ + 1;
    const int nn = nv_ * nv_;
    left_.assign(static_cast<std::size_t>(count) * nn, 0.0);
    right_.assign(static_cast<std::size_t>(count) * nn, 0.0);
    basis_ok_.assign(count, 0);
    for (int a = i0 - 1; a < i1; ++a) {
        const int m = a - lo_;
        const RoeData rd = model_.roe(u_[m], u_[m + 1], line_->axis);
        if (rd.degenerate) {
            warn_componentwise(a);
            continue;
        }
        double* l = left_.data() + static_cast<std::size_t>(m) * nn;
        double* r = right_.data() + static_cast<std::size_t>(m) * nn;
        for (int row = 0; row < nv_; ++row)
            for (int c = 0; c < nv_; ++c) {
                l[row * nv_ + c] = rd.left(row, c);
                r[row * nv_ + c] = rd.right(row, c);
            }
        basis_ok_[m] = 1;
    }
}

// starred fluctuations of point i: out pairs (i, j), j in [i-k, i+k+1], then
// in pairs (j, i), j in [i-k-1, i+k]; each stored as two halves
void LineAssembler::starred(int i) {
    const int width = 2 * k_ + 3;
    star_.resize(width);
    const NodeSample anchor{line_->pos(i), hs_[i - lo_]};
    const StateVec& ui = u_[i - lo_];
    for (int m = 0; m < width; ++m) {
        const int j = i - k_ - 1 + m;
        star_[m] = model_.stationary_value(anchor, ui, NodeSample{line_->pos(j), hs_[j - lo_]});
    }
    const StateVec& si = star_[k_ + 1];
    star_active_ = false;
    for (int m = 0; m < width && !star_active_; ++m)
        if (!detail::is_zero_jump(si, star_[m], 0.0)) star_active_ = true;
    if (!star_active_) return;

    const int npairs = 2 * (2 * k_ + 2);
    star_pairs_.assign(static_cast<std::size_t>(npairs) * 2 * nv_, 0.0);
    const Axis d = line_->axis;
    auto fill = [&](int slot, const StateVec& sa, const StateVec& sb) {
        if (detail::is_zero_jump(sa, sb, 0.0)) return;
        double* base = star_pairs_.data() + static_cast<std::size_t>(slot) * 2 * nv_;
        if (lf_) {
            const StateVec du = sb - sa;
            const StateVec f = model_.roe_product(sa, sb, du, d);
            for (int c = 0; c < nv_; ++c) {
                base[c] = f[c];
                base[nv_ + c] = du[c];
            }
        } else {
            const auto fp = fluct_pair(model_, sa, sb, 0.0, d, cfg_.splitting);
            for (int c = 0; c < nv_; ++c) {
                base[c] = fp.plus[c];
                base[nv_ + c] = fp.minus[c];
            }
        }
    };
    for (int m = 0; m < 2 * k_ + 2; ++m) {
        fill(m, si, star_[m + 1]);            // (i, i-k+m)
        fill(2 * k_ + 2 + m, star_[m], si);  // (i-k-1+m, i)
    }
}

template <int NV>
void LineAssembler::reconstruct(int i, HatD& out) {
    const int nv = NV > 0 ? NV : nv_;
    const int w = 2 * k_ + 1;
    const bool s2 = star_active_ && cfg_.wb == WellBalance::Strategy2;
    const bool right_going = cfg_.splitting.kind == SplittingKind::RightGoing;
    const bool local = lf_ && cfg_.splitting.alpha_mode == LfAlphaMode::Local;
    double vp[7 * kMaxVars];
    double vm[7 * kMaxVars];

    auto star = [&](int slot) { return star_pairs_.data() + static_cast<std::size_t>(slot) * 2 * nv; };

    for (int side = 0; side < 2; ++side) {
        // side 0: D-check^- at i+1/2 (interface a = i); side 1: D-check^+ at i-1/2 (a = i-1)
        const int a = side == 0 ? i : i - 1;
        double alpha = alpha_;
        if (local) {
            alpha = 0.0;
            for (int j = a - k_; j <= a + k_ + 1; ++j) alpha = std::max(alpha, speed_[j - lo_]);
        }
        for (int m = 0; m < w; ++m) {
            int pa, pb, qa, qb;  // plus pair, minus pair
            if (side == 0) {
                pa = i, pb = i - k_ + m;
                qa = i, qb = i + 1 - k_ + m;
            } else {
                pa = i - 1 - k_ + m, pb = i;
                qa = i - k_ + m, qb = i;
            }
            const double* p = slot(pa, pb);
            const double* q = slot(qa, qb);
            double* dp = vp + m * nv;
            double* dm = vm + m * nv;
            if (s2) {
                // slots: out pairs (i, j) at j-(i-k); in pairs (j, i) at 2k+2 + j-(i-k-1)
                const int ps = side == 0 ? pb - (i - k_) : 2 * k_ + 2 + pa - (i - k_ - 1);
                const int qs = side == 0 ? qb - (i - k_) : 2 * k_ + 2 + qa - (i - k_ - 1);
                const double* sp = star(ps);
                const double* sq = star(qs);
                if (lf_) {
                    for (int c = 0; c < nv; ++c) {
                        dp[c] = 0.5 * ((p[c] - sp[c]) + alpha * (p[nv + c] - sp[nv + c]));
                        dm[c] = 0.5 * ((q[c] - sq[c]) - alpha * (q[nv + c] - sq[nv + c]));
                    }
                } else {
                    for (int c = 0; c < nv; ++c) {
                        dp[c] = p[c] - sp[c];
                        dm[c] = q[nv + c] - sq[nv + c];
                    }
                }
            } else if (lf_) {
                for (int c = 0; c < nv; ++c) {
                    dp[c] = 0.5 * (p[c] + alpha * p[nv + c]);
                    dm[c] = 0.5 * (q[c] - alpha * q[nv + c]);
                }
            } else {
                for (int c = 0; c < nv; ++c) {
                    dp[c] = p[c];
                    dm[c] = q[nv + c];
                }
            }
        }

        const double* left = nullptr;
        const double* right = nullptr;
        if (use_char_ && basis_ok_[a - lo_]) {
            left = left_.data() + static_cast<std::size_t>(a - lo_) * nv * nv;
            right = right_.data() + static_cast<std::size_t>(a - lo_) * nv * nv;
        }
        if (left) {
            for (double* v : {vp, vm}) {
                for (int m = 0; m < w; ++m) {
                    double t[kMaxVars];
                    const double* x = v + m * nv;
                    for (int r = 0; r < nv; ++r) {
                        double acc = 0.0;
                        for (int c = 0; c < nv; ++c) acc += left[r * nv + c] * x[c];
                        t[r] = acc;
                    }
                    for (int r = 0; r < nv; ++r) v[m * nv + r] = t[r];
                }
            }
        }
        double res[kMaxVars];
        weno_left_multi(vp, nv, cfg_.weno, res);
        if (!right_going) {
            double rm[kMaxVars];
            weno_right_multi(vm, nv, cfg_.weno, rm);
            for (int c = 0; c < nv; ++c) res[c] += rm[c];
        }
        StateVec& dst = side == 0 ? out.minus : out.plus;
        dst.resize(nv);
        if (right) {
            for (int r = 0; r < nv; ++r) {
                double acc = 0.0;
                for (int c = 0; c < nv; ++c) acc += right[r * nv + c] * res[c];
                dst[r] = acc;
            }
        } else {
            for (int c = 0; c < nv; ++c) dst[c] = res[c];
        }
    }
}

void LineAssembler::run(const LineView& line, int i0, int i1, double alpha, const Sink& sink) {
    if (line.nvars != nv_) throw ValidationError("assembler: line and model disagree on the number of components");
    if (i0 < 0 || i1 > line.n || i0 >= i1) throw ValidationError("assembler: bad point range");
    if (line.ghost < k_ + 1) throw ValidationError("assembler: ghost width must be at least k+1");
    line_ = &line;
    lo_ = i0 - k_ - 1;
    hi_ = i1 + k_;
    alpha_ = lf_ ? alpha : 0.0;
    star_active_ = false;
    auto locate = [&](SolverError& e, int i) {
        const Point p = line.pos(i);
        std::ostringstream os;
        os << "point " << i << " at x=" << p.x;
        if (model_.dimensions() == 2) os << ", y=" << p.y;
        e.add_context(os.str());
    };
    load(line, lo_, hi_);
    try {
        fill_pairs();
        if (use_char_) fill_bases(i0, i1);
    } catch (SolverError& e) {
        // first node of the band whose pairs fail
        int bad = i0;
        for (int a = lo_; a <= hi_; ++a) {
            try {
                for (int off = 1; off <= k_ + 1 && a + off <= hi_; ++off) {
                    double tmp[2 * kMaxVars];
                    compute_pair(a, a + off, tmp, tmp + nv_);
                }
            } catch (SolverError&) {
                bad = std::clamp(a, i0, i1 - 1);
                break;
            }
        }
        locate(e, bad);
        throw;
    }
    HatD out;
    for (int i = i0; i < i1; ++i) {
        try {
            if (cfg_.wb == WellBalance::Strategy2) starred(i);
            switch (nv_) {
                case 1: reconstruct<1>(i, out); break;
                case 2: reconstruct<2>(i, out); break;
                case 4: reconstruct<4>(i, out); break;
                case 6: reconstruct<6>(i, out); break;
                default: reconstruct<0>(i, out); break;
            }
        } catch (SolverError& e) {
            locate(e, i);
            throw;
        }
        sink(i, out);
    }
    line_ = nullptr;
}

HatD hat_d(const Field1D& f, int i, const SystemModel& model, const SchemeConfig& cfg, double lf_alpha) {
    if (cfg.splitting.kind == SplittingKind::LaxFriedrichs && cfg.splitting.alpha_mode == LfAlphaMode::Global &&
        lf_alpha <= 0.0)
        lf_alpha = lf_global_alpha(f, model);
    LineAssembler as(model, cfg);
    const LineView v = line_view(f);
    HatD res;
    as.run(v, i, i + 1, lf_alpha, [&](int, const HatD& h) { res = h; });
    return res;
}

FluctuationSet fluctuation_set(const Field1D& f, int i, const SystemModel& model, const SchemeConfig& cfg,
                               double lf_alpha) {
    cfg.validate(model);
    const int k = cfg.weno.radius();
    if (i < 0 || i >= f.n()) throw ValidationError("fluctuation_set: point out of range");
    if (cfg.splitting.kind == SplittingKind::LaxFriedrichs && lf_alpha <= 0.0) lf_alpha = lf_global_alpha(f, model);
    const LineView v = line_view(f);
    const StateVec ui = f.state(i);
    const NodeSample anchor{v.pos(i), f.h(i)};
    FluctuationSet out;
    for (int j = i - k - 1; j <= i + k + 1; ++j) {
        const StateVec uj = f.state(j);
        const double dh = cfg.wb == WellBalance::Strategy1 ? f.h(j) - f.h(i) : 0.0;
        const auto fp = fluct_pair(model, ui, uj, dh, Axis::x, cfg.splitting, lf_alpha);
        out.nodes.push_back(j);
        out.plus.push_back(fp.plus);
        out.minus.push_back(fp.minus);
        if (cfg.wb == WellBalance::Strategy2) {
            const StateVec si = model.stationary_value(anchor, ui, anchor);
            const StateVec sj = model.stationary_value(anchor, ui, NodeSample{v.pos(j), f.h(j)});
            const auto sp = fluct_pair(model, si, sj, 0.0, Axis::x, cfg.splitting, lf_alpha);
            out.star_plus.push_back(sp.plus);
            out.star_minus.push_back(sp.minus);
        }
    }
    return out;
}

}  // namespace pcw
