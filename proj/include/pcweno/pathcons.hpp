#pragma once

#include "pcweno/model.hpp"
#include "pcweno/weno.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace pcw {

enum class SplittingKind {
    Upwind,         // sign projection on the Roe eigenbasis
    LaxFriedrichs,  // +- alpha (dU - A^{-1} S dH)
    RightGoing,     // A+ = A, A- = 0; only valid when every wave moves right
};

enum class LfAlphaMode { Global, Local };

enum class WellBalance { None, Strategy1, Strategy2 };

struct Splitting {
    SplittingKind kind = SplittingKind::Upwind;
    double entropy_eps = 0.0;
    LfAlphaMode alpha_mode = LfAlphaMode::Global;
    bool characteristic = true;  // LF only
};

struct SchemeConfig {
    WenoConfig weno;
    Splitting splitting;
    WellBalance wb = WellBalance::None;

    void validate(const SystemModel& model) const;
};

struct FluctPair {
    StateVec plus;
    StateVec minus;
};

// Harten regularized |lambda|
double harten_abs(double lambda, double eps);

// Split fluctuation between U_j and U_k. dh = H_k - H_j (zero unless the source
// is carried inside the fluctuation). lf_alpha is used by the LF splitting only.
FluctPair fluct_pair(const SystemModel& model, const StateVec& uj, const StateVec& uk, double dh, Axis d,
                     const Splitting& splitting, double lf_alpha = 0.0);

// ---------------------------------------------------------------- line views

// Strided read view of one grid line including ghosts.
struct LineView {
    const double* states = nullptr;  // node 0
    const double* h = nullptr;       // node 0
    std::ptrdiff_t stride = 1;       // nodes between consecutive points
    int nvars = 0;
    int n = 0;
    int ghost = 0;
    Axis axis = Axis::x;
    double dx = 0.0;
    Point origin;  // position of node 0
    Point step;    // position increment per node

    StateVec state(int i) const;
    double h_at(int i) const { return h[i * stride]; }
    Point pos(int i) const { return {origin.x + i * step.x, origin.y + i * step.y}; }
    const double* ptr(int i) const { return states + i * stride * nvars; }
};

LineView line_view(const Field1D& f);

// ---------------------------------------------------------------- reconstruction

struct HatD {
    StateVec minus;  // D-check^-_{i+1/2}
    StateVec plus;   // D-check^+_{i-1/2}
};

// Computes hat-D along one line for points [i0, i1) and hands each result to
// the sink. Pair fluctuations are memoized within one call.
class LineAssembler {
public:
    using Sink = std::function<void(int, const HatD&)>;

    LineAssembler(const SystemModel& model, const SchemeConfig& cfg);

    // alpha: global LF coefficient for this line's direction (ignored otherwise)
    void run(const LineView& line, int i0, int i1, double alpha, const Sink& sink);

private:
    void load(const LineView& line, int lo, int hi);
    void compute_pair(int a, int b, double* first, double* second);
    void fill_pairs();
    void fill_bases(int i0, int i1);
    void starred(int i);
    template <int NV>
    void reconstruct(int i, HatD& out);
    double* slot(int a, int b) {
        return pairs_.data() + static_cast<std::size_t>((a - lo_) * (2 * k_ + 2) + (b - a + k_)) * 2 * nv_;
    }

    const SystemModel& model_;
    SchemeConfig cfg_;
    int k_;
    int nv_;
    bool lf_;
    bool use_char_;
    bool symmetric_;

    // per-line state
    const LineView* line_ = nullptr;
    int lo_ = 0;
    int hi_ = 0;
    double alpha_ = 0.0;
    std::vector<StateVec> u_;
    std::vector<double> hs_;
    std::vector<double> speed_;
    std::vector<double> pairs_;  // [slot][2][nv], slot = (a - lo) (2k+2) + (b - a + k)
    std::vector<double> left_, right_;  // [interface][nv * nv], row-major
    std::vector<char> basis_ok_;
    // starred fluctuations of the current point
    std::vector<StateVec> star_;
    std::vector<double> star_pairs_;
    bool star_active_ = false;
};

HatD hat_d(const Field1D& f, int i, const SystemModel& model, const SchemeConfig& cfg, double lf_alpha = 0.0);

struct FluctuationSet {
    std::vector<int> nodes;  // j over the stencil of point i
    std::vector<StateVec> plus, minus;            // D+-_{i,j}
    std::vector<StateVec> star_plus, star_minus;  // Strategy 2 only
};

FluctuationSet fluctuation_set(const Field1D& f, int i, const SystemModel& model, const SchemeConfig& cfg,
                               double lf_alpha = 0.0);

// ---------------------------------------------------------------- 1D right-hand side

double lf_global_alpha(const Field1D& f, const SystemModel& model);

// RHS of the semi-discrete scheme; ghosts of f must be filled.
// lf_alpha <= 0 means compute the global value from f.
Field1D rhs_1d(const Field1D& f, const SystemModel& model, const SchemeConfig& cfg, double lf_alpha = 0.0);

// ---------------------------------------------------------------- conservative baseline

// Classical conservative WENO-LF: F(u)+-alpha u split, flux difference at interfaces.
Field1D conservative_weno_rhs(const Field1D& f, const std::function<double(double)>& flux, double alpha,
                              const WenoConfig& weno);

struct ReductionReport {
    double max_discrepancy = 0.0;
    int worst_point = -1;
    double alpha = 0.0;
};

// Compares the fluctuation RHS of scalar Burgers (LF, straight segments) with
// the conservative baseline on the same field.
ReductionReport conservative_reduction_check(const Field1D& f, const WenoConfig& weno);

}  // namespace pcw
