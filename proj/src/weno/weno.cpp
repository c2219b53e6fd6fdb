#include "pcweno/weno.hpp"

#include <algorithm>
#include <cmath>
#include <experimental/simd>

namespace pcw {

void WenoConfig::validate() const {
    if (order != 3 && order != 5 && order != 7) throw ValidationError("weno: order must be 3, 5 or 7");
    if (!(epsilon > 0.0)) throw ValidationError("weno: epsilon must be positive");
    if (!(power > 0.0)) throw ValidationError("weno: power must be positive");
}

namespace {

namespace stdx = std::experimental;
using Lanes = stdx::fixed_size_simd<double, 4>;

inline double absval(double x) { return std::abs(x); }
inline Lanes absval(const Lanes& x) { return stdx::abs(x); }

template <int K>
struct Stencil;

template <>
struct Stencil<1> {
    static constexpr double d[2] = {1.0 / 3.0, 2.0 / 3.0};
    template <class T>
    static void candidates(const T* f, T* q) {
        q[0] = -0.5 * f[0] + 1.5 * f[1];
        q[1] = 0.5 * f[1] + 0.5 * f[2];
    }
    template <class T>
    static void beta(const T* f, T* b) {
        b[0] = (f[1] - f[0]) * (f[1] - f[0]);
        b[1] = (f[2] - f[1]) * (f[2] - f[1]);
    }
    template <class T>
    static T tau(const T* b) { return absval(b[1] - b[0]); }
};

template <>
struct Stencil<2> {
    static constexpr double d[3] = {0.1, 0.6, 0.3};
    template <class T>
    static void candidates(const T* f, T* q) {
        q[0] = (2.0 * f[0] - 7.0 * f[1] + 11.0 * f[2]) / 6.0;
        q[1] = (-f[1] + 5.0 * f[2] + 2.0 * f[3]) / 6.0;
        q[2] = (2.0 * f[2] + 5.0 * f[3] - f[4]) / 6.0;
    }
    template <class T>
    static void beta(const T* f, T* b) {
        const double c = 13.0 / 12.0;
        T a = f[0] - 2.0 * f[1] + f[2];
        T e = f[0] - 4.0 * f[1] + 3.0 * f[2];
        b[0] = c * a * a + 0.25 * e * e;
        a = f[1] - 2.0 * f[2] + f[3];
        e = f[1] - f[3];
        b[1] = c * a * a + 0.25 * e * e;
        a = f[2] - 2.0 * f[3] + f[4];
        e = 3.0 * f[2] - 4.0 * f[3] + f[4];
        b[2] = c * a * a + 0.25 * e * e;
    }
    template <class T>
    static T tau(const T* b) { return absval(b[2] - b[0]); }
};

template <>
struct Stencil<3> {
    static constexpr double d[4] = {1.0 / 35.0, 12.0 / 35.0, 18.0 / 35.0, 4.0 / 35.0};
    template <class T>
    static void candidates(const T* f, T* q) {
        q[0] = (-3.0 * f[0] + 13.0 * f[1] - 23.0 * f[2] + 25.0 * f[3]) / 12.0;
        q[1] = (f[1] - 5.0 * f[2] + 13.0 * f[3] + 3.0 * f[4]) / 12.0;
        q[2] = (-f[2] + 7.0 * f[3] + 7.0 * f[4] - f[5]) / 12.0;
        q[3] = (3.0 * f[3] + 13.0 * f[4] - 5.0 * f[5] + f[6]) / 12.0;
    }
    template <class T>
    static void beta(const T* f, T* b) {
        const double s = 1.0 / 240.0;
        {
            const T a = f[0], p = f[1], c = f[2], e = f[3];
            b[0] = s * (a * (547.0 * a - 3882.0 * p + 4642.0 * c - 1854.0 * e) +
                        p * (7043.0 * p - 17246.0 * c + 7042.0 * e) + c * (11003.0 * c - 9402.0 * e) +
                        2107.0 * e * e);
        }
        {
            const T a = f[1], p = f[2], c = f[3], e = f[4];
            b[1] = s * (a * (267.0 * a - 1642.0 * p + 1602.0 * c - 494.0 * e) +
                        p * (2843.0 * p - 5966.0 * c + 1922.0 * e) + c * (3443.0 * c - 2522.0 * e) +
                        547.0 * e * e);
        }
        {
            const T a = f[2], p = f[3], c = f[4], e = f[5];
            b[2] = s * (a * (547.0 * a - 2522.0 * p + 1922.0 * c - 494.0 * e) +
                        p * (3443.0 * p - 5966.0 * c + 1602.0 * e) + c * (2843.0 * c - 1642.0 * e) +
                        267.0 * e * e);
        }
        {
            const T a = f[3], p = f[4], c = f[5], e = f[6];
            b[3] = s * (a * (2107.0 * a - 9402.0 * p + 7042.0 * c - 1854.0 * e) +
                        p * (11003.0 * p - 17246.0 * c + 4642.0 * e) + c * (7043.0 * c - 3882.0 * e) +
                        547.0 * e * e);
        }
    }
    template <class T>
    static T tau(const T* b) { return absval(b[0] + 3.0 * b[1] - 3.0 * b[2] - b[3]); }
};

inline double ipow(double x, double p) { return p == 2.0 ? x * x : std::pow(x, p); }

template <int K, bool Z, bool Square, class T>
inline T kernel(const T* v, const WenoConfig& cfg) {
    using S = Stencil<K>;
    T q[K + 1];
    T b[K + 1];
    T w[K + 1];
    S::candidates(v, q);
    S::beta(v, b);
    T sum = 0.0;
    if constexpr (Z) {
        const T tau = S::tau(b);
        for (int r = 0; r <= K; ++r) {
            const T t = tau / (b[r] + cfg.epsilon);
            if constexpr (Square)
                w[r] = S::d[r] * (1.0 + t * t);
            else
                w[r] = S::d[r] * (1.0 + std::pow(t, cfg.power));
            sum += w[r];
        }
    } else {
        for (int r = 0; r <= K; ++r) {
            const T t = b[r] + cfg.epsilon;
            if constexpr (Square)
                w[r] = S::d[r] / (t * t);
            else
                w[r] = S::d[r] / std::pow(t, cfg.power);
            sum += w[r];
        }
    }
    T acc = 0.0;
    for (int r = 0; r <= K; ++r) acc += w[r] * q[r];
    return acc / sum;
}

template <int K>
void weights(const double* f, const WenoConfig& cfg, double* w) {
    using S = Stencil<K>;
    double b[K + 1];
    S::beta(f, b);
    double sum = 0.0;
    if (cfg.variant == WenoVariant::Z) {
        const double tau = S::tau(b);
        for (int r = 0; r <= K; ++r) {
            w[r] = S::d[r] * (1.0 + ipow(tau / (b[r] + cfg.epsilon), cfg.power));
            sum += w[r];
        }
    } else {
        for (int r = 0; r <= K; ++r) {
            w[r] = S::d[r] / ipow(b[r] + cfg.epsilon, cfg.power);
            sum += w[r];
        }
    }
    for (int r = 0; r <= K; ++r) w[r] /= sum;
}

// f is laid out [m * nv + c]; Rev reads the stencil mirrored
template <int K, bool Z, bool Square, bool Rev>
void multi(const double* f, int nv, const WenoConfig& cfg, double* out) {
    constexpr int W = 2 * K + 1;
    int c = 0;
    if constexpr (Square) {
        // four components per pass, unused lanes zero
        for (; c < nv && nv > 1; c += 4) {
            const int lanes = std::min(4, nv - c);
            Lanes v[W];
            for (int m = 0; m < W; ++m) {
                alignas(32) double tmp[4] = {0.0, 0.0, 0.0, 0.0};
                const double* src = f + (Rev ? W - 1 - m : m) * nv + c;
                for (int l = 0; l < lanes; ++l) tmp[l] = src[l];
                v[m].copy_from(tmp, stdx::vector_aligned);
            }
            alignas(32) double res[4];
            kernel<K, Z, true>(v, cfg).copy_to(res, stdx::vector_aligned);
            for (int l = 0; l < lanes; ++l) out[c + l] = res[l];
        }
    }
    for (; c < nv; ++c) {
        double v[W];
        for (int m = 0; m < W; ++m) v[m] = f[(Rev ? W - 1 - m : m) * nv + c];
        out[c] = kernel<K, Z, Square>(v, cfg);
    }
}

template <int K, bool Rev>
void dispatch_variant(const double* f, int nv, const WenoConfig& cfg, double* out) {
    const bool sq = cfg.power == 2.0;
    if (cfg.variant == WenoVariant::Z) {
        sq ? multi<K, true, true, Rev>(f, nv, cfg, out) : multi<K, true, false, Rev>(f, nv, cfg, out);
    } else {
        sq ? multi<K, false, true, Rev>(f, nv, cfg, out) : multi<K, false, false, Rev>(f, nv, cfg, out);
    }
}

template <bool Rev>
void dispatch(const double* f, int nv, const WenoConfig& cfg, double* out) {
    switch (cfg.order) {
        case 3: dispatch_variant<1, Rev>(f, nv, cfg, out); break;
        case 5: dispatch_variant<2, Rev>(f, nv, cfg, out); break;
        default: dispatch_variant<3, Rev>(f, nv, cfg, out); break;
    }
}

void check_width(std::size_t got, const WenoConfig& cfg) {
    cfg.validate();
    if (got != static_cast<std::size_t>(cfg.order)) throw ValidationError("weno: stencil length must equal the order");
}

}  // namespace

double weno_left_unchecked(const double* f, const WenoConfig& cfg) {
    double out;
    dispatch<false>(f, 1, cfg, &out);
    return out;
}

double weno_right_unchecked(const double* f, const WenoConfig& cfg) {
    double out;
    dispatch<true>(f, 1, cfg, &out);
    return out;
}

void weno_left_multi(const double* f, int nv, const WenoConfig& cfg, double* out) { dispatch<false>(f, nv, cfg, out); }

void weno_right_multi(const double* f, int nv, const WenoConfig& cfg, double* out) { dispatch<true>(f, nv, cfg, out); }

double reconstruct_left(std::span<const double> f, const WenoConfig& cfg) {
    check_width(f.size(), cfg);
    return weno_left_unchecked(f.data(), cfg);
}

double reconstruct_right(std::span<const double> f, const WenoConfig& cfg) {
    check_width(f.size(), cfg);
    return weno_right_unchecked(f.data(), cfg);
}

namespace {

StateVec reconstruct_states(std::span<const StateVec> s, const WenoConfig& cfg, bool rev) {
    check_width(s.size(), cfg);
    const int nv = static_cast<int>(s[0].size());
    double buf[7 * kMaxVars];
    for (int m = 0; m < cfg.order; ++m)
        for (int c = 0; c < nv; ++c) buf[m * nv + c] = s[m][c];
    StateVec out(nv);
    rev ? weno_right_multi(buf, nv, cfg, out.data()) : weno_left_multi(buf, nv, cfg, out.data());
    return out;
}

}  // namespace

StateVec reconstruct_left(std::span<const StateVec> s, const WenoConfig& cfg) {
    return reconstruct_states(s, cfg, false);
}

StateVec reconstruct_right(std::span<const StateVec> s, const WenoConfig& cfg) {
    return reconstruct_states(s, cfg, true);
}

std::vector<double> smoothness_indicators(std::span<const double> f, int order) {
    WenoConfig cfg;
    cfg.order = order;
    check_width(f.size(), cfg);
    std::vector<double> b(cfg.radius() + 1);
    switch (order) {
        case 3: Stencil<1>::beta(f.data(), b.data()); break;
        case 5: Stencil<2>::beta(f.data(), b.data()); break;
        default: Stencil<3>::beta(f.data(), b.data()); break;
    }
    return b;
}

std::vector<double> ideal_weights(int order) {
    switch (order) {
        case 3: return {std::begin(Stencil<1>::d), std::end(Stencil<1>::d)};
        case 5: return {std::begin(Stencil<2>::d), std::end(Stencil<2>::d)};
        case 7: return {std::begin(Stencil<3>::d), std::end(Stencil<3>::d)};
        default: throw ValidationError("weno: order must be 3, 5 or 7");
    }
}

std::vector<double> substencil_values(std::span<const double> f, int order) {
    WenoConfig cfg;
    cfg.order = order;
    check_width(f.size(), cfg);
    std::vector<double> q(cfg.radius() + 1);
    switch (order) {
        case 3: Stencil<1>::candidates(f.data(), q.data()); break;
        case 5: Stencil<2>::candidates(f.data(), q.data()); break;
        default: Stencil<3>::candidates(f.data(), q.data()); break;
    }
    return q;
}

std::vector<double> nonlinear_weights(std::span<const double> f, const WenoConfig& cfg) {
    check_width(f.size(), cfg);
    std::vector<double> w(cfg.radius() + 1);
    switch (cfg.order) {
        case 3: weights<1>(f.data(), cfg, w.data()); break;
        case 5: weights<2>(f.data(), cfg, w.data()); break;
        default: weights<3>(f.data(), cfg, w.data()); break;
    }
    return w;
}

}  // namespace pcw
