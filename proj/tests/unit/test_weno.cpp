#include "oracles.hpp"
#include "pcweno/weno.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace pcw;

namespace {

WenoConfig cfg(int order, WenoVariant v = WenoVariant::Z) {
    WenoConfig c;
    c.order = order;
    c.variant = v;
    return c;
}

std::vector<double> sample(int order, const std::function<double(double)>& f) {
    const int k = (order - 1) / 2;
    std::vector<double> s;
    for (int m = -k; m <= k; ++m) s.push_back(f(m));
    return s;
}

// beta_r as the integral of squared derivatives of the substencil polynomial
// through the interface cell, evaluated by quadrature
double beta_by_quadrature(const std::vector<double>& f, int order, int r) {
    const int k = (order - 1) / 2;
    // substencil r covers offsets -k+r .. r, relative to node i at x = 0; the
    // interpolant P of the primitive gives the reconstruction polynomial p = P'
    const int m = k + 1;
    std::vector<double> xs(m + 1), prim(m + 1, 0.0);
    for (int j = 0; j <= m; ++j) xs[j] = -k + r - 0.5 + j;
    for (int j = 1; j <= m; ++j) prim[j] = prim[j - 1] + f[r + j - 1];
    auto dpoly = [&](double x, int deriv) {
        // derivative of the Lagrange interpolant of the primitive, order deriv+1
        Eigen::MatrixXd v(m + 1, m + 1);
        Eigen::VectorXd rhs(m + 1);
        for (int a = 0; a <= m; ++a) {
            for (int b = 0; b <= m; ++b) v(a, b) = std::pow(xs[a], b);
            rhs[a] = prim[a];
        }
        const Eigen::VectorXd c = v.colPivHouseholderQr().solve(rhs);
        double out = 0.0;
        for (int b = deriv + 1; b <= m; ++b) {
            double fac = 1.0;
            for (int t = 0; t <= deriv; ++t) fac *= (b - t);
            out += c[b] * fac * std::pow(x, b - deriv - 1);
        }
        return out;
    };
    double beta = 0.0;
    for (int l = 1; l <= k; ++l) {
        double s = 0.0;
        for (int q = 0; q < 5; ++q) {
            const double x = oracle::kGlNodes[q] - 0.5;
            const double d = dpoly(x, l);
            s += oracle::kGlWeights[q] * d * d;
        }
        beta += s;
    }
    return beta;
}

}  // namespace

TEST(Weno, ConstantIsExact) {
    for (int order : {3, 5, 7})
        for (auto v : {WenoVariant::JS, WenoVariant::Z}) {
            const std::vector<double> f(order, 2.75);
            EXPECT_NEAR(reconstruct_left(f, cfg(order, v)), 2.75, 1e-15);
            EXPECT_NEAR(reconstruct_right(f, cfg(order, v)), 2.75, 1e-15);
        }
}

TEST(Weno, LinearDataHitsInterface) {
    const auto f = sample(5, [](double x) { return x; });
    EXPECT_NEAR(reconstruct_left(f, cfg(5)), 0.5, 1e-14);
    EXPECT_NEAR(reconstruct_right(f, cfg(5)), -0.5, 1e-14);
    for (double q : substencil_values(f, 5)) EXPECT_NEAR(q, 0.5, 1e-14);
}

TEST(Weno, IdealWeightsGiveFifthOrderFormula) {
    const auto f = sample(5, [](double x) { return x * x * x * x; });
    const auto q = substencil_values(f, 5);
    const auto d = ideal_weights(5);
    double lin = 0.0;
    for (int r = 0; r < 3; ++r) lin += d[r] * q[r];
    const double ref = (2 * f[0] - 13 * f[1] + 47 * f[2] + 27 * f[3] - 3 * f[4]) / 60.0;
    EXPECT_NEAR(lin, ref, 1e-13);
}

TEST(Weno, IdealWeightsReproduceCentralStencil) {
    // the linear combination must be the unique order-(2k+1) formula
    for (int order : {3, 5, 7}) {
        const auto d = ideal_weights(order);
        EXPECT_NEAR(std::accumulate(d.begin(), d.end(), 0.0), 1.0, 1e-14);
        for (int p = 0; p < order; ++p) {
            const auto f = sample(order, [p](double x) {
                // cell averages of x^p over [x-1/2, x+1/2]
                return (std::pow(x + 0.5, p + 1) - std::pow(x - 0.5, p + 1)) / (p + 1);
            });
            const auto q = substencil_values(f, order);
            double lin = 0.0;
            for (std::size_t r = 0; r < d.size(); ++r) lin += d[r] * q[r];
            EXPECT_NEAR(lin, std::pow(0.5, p), 1e-11) << "order " << order << " degree " << p;
        }
    }
}

TEST(Weno, MirrorIsBitwise) {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int order : {3, 5, 7})
        for (int t = 0; t < 50; ++t) {
            std::vector<double> f(order);
            for (auto& x : f) x = u(gen);
            std::vector<double> r(f.rbegin(), f.rend());
            EXPECT_EQ(reconstruct_right(f, cfg(order)), reconstruct_left(r, cfg(order)));
        }
}

TEST(Weno, SmoothnessOfConstantIsZero) {
    for (int order : {3, 5, 7})
        for (double b : smoothness_indicators(std::vector<double>(order, 1.5), order)) EXPECT_EQ(b, 0.0);
}

TEST(Weno, SmoothnessOfLinearDataIsEqual) {
    for (int order : {3, 5, 7}) {
        const auto b = smoothness_indicators(sample(order, [](double x) { return 0.7 * x; }), order);
        for (double x : b) EXPECT_NEAR(x, b[0], 1e-14);
        EXPECT_NEAR(b[0], 0.49, 1e-13);
    }
}

TEST(Weno, SmoothnessClosedFormsMatchIntegral) {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int order : {3, 5, 7})
        for (int t = 0; t < 10; ++t) {
            std::vector<double> f(order);
            for (auto& x : f) x = u(gen);
            const auto b = smoothness_indicators(f, order);
            for (int r = 0; r <= (order - 1) / 2; ++r)
                EXPECT_NEAR(b[r], beta_by_quadrature(f, order, r), 1e-11 * (1.0 + b[r])) << order << " " << r;
        }
}

TEST(Weno, JumpInFirstSubstencil) {
    const std::vector<double> f = {1.0, 0.0, 0.0, 0.0, 0.0};
    const auto b = smoothness_indicators(f, 5);
    EXPECT_GT(b[0], 0.0);
    EXPECT_EQ(b[1], 0.0);
    EXPECT_EQ(b[2], 0.0);
    const auto w = nonlinear_weights(f, cfg(5));
    EXPECT_LT(w[0], 1e-3 * w[1]);
}

TEST(Weno, WeightsSumToOne) {
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int order : {3, 5, 7})
        for (auto v : {WenoVariant::JS, WenoVariant::Z})
            for (int t = 0; t < 50; ++t) {
                std::vector<double> f(order);
                for (auto& x : f) x = u(gen);
                const auto w = nonlinear_weights(f, cfg(order, v));
                EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-14);
            }
}

TEST(Weno, QuadraticsReproducedEverywhere) {
    for (int order : {5, 7})
        for (auto v : {WenoVariant::JS, WenoVariant::Z}) {
            // point values of P' where P is the cell-average primitive of 1 + x + x^2
            const auto f = sample(order, [](double x) { return 1.0 + x + x * x + 1.0 / 12.0; });
            EXPECT_NEAR(reconstruct_left(f, cfg(order, v)), 1.75, 1e-13) << order;
        }
}

TEST(Weno, MatchesHandWrittenFifthOrder) {
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> f(5);
        for (auto& x : f) x = u(gen);
        EXPECT_NEAR(reconstruct_left(f, cfg(5)), oracle::weno5z_left(f.data()), 1e-14);
    }
}

TEST(Weno, DerivativeConvergesAtDesignOrder) {
    for (int order : {5, 7}) {
        std::vector<double> err;
        const std::vector<int> meshes = order == 5 ? std::vector<int>{40, 80, 160, 320} : std::vector<int>{20, 40, 80, 160};
        for (int n : meshes) {
            const double dx = 2.0 * M_PI / n;
            const int k = (order - 1) / 2;
            double e = 0.0;
            for (int i = 0; i < n; ++i) {
                std::vector<double> fr(order), fl(order);
                for (int m = -k; m <= k; ++m) {
                    fr[m + k] = std::sin((i + m) * dx);
                    fl[m + k] = std::sin((i - 1 + m) * dx);
                }
                const double d = (reconstruct_left(fr, cfg(order)) - reconstruct_left(fl, cfg(order))) / dx;
                e = std::max(e, std::abs(d - std::cos(i * dx)));
            }
            err.push_back(e);
        }
        for (std::size_t i = 1; i < err.size(); ++i) {
            EXPECT_GE(std::log2(err[i - 1] / err[i]), order - 0.3) << order << " pair " << i;
        }
    }
}

TEST(Weno, ThirdOrderReproducesLines) {
    for (auto v : {WenoVariant::JS, WenoVariant::Z}) {
        const auto f = sample(3, [](double x) { return 2.0 - 3.0 * x; });
        EXPECT_NEAR(reconstruct_left(f, cfg(3, v)), 0.5, 1e-14);
    }
}

TEST(Weno, VectorIsComponentwise) {
    std::mt19937 gen(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<StateVec> s(5, StateVec(3));
    for (auto& v : s)
        for (int c = 0; c < 3; ++c) v[c] = u(gen);
    const StateVec out = reconstruct_left(s, cfg(5));
    for (int c = 0; c < 3; ++c) {
        std::vector<double> f;
        for (const auto& v : s) f.push_back(v[c]);
        EXPECT_EQ(out[c], reconstruct_left(f, cfg(5)));
    }
}

TEST(Weno, RejectsBadConfig) {
    EXPECT_THROW(cfg(4).validate(), ValidationError);
    WenoConfig c;
    c.epsilon = 0.0;
    EXPECT_THROW(c.validate(), ValidationError);
    EXPECT_THROW(reconstruct_left(std::vector<double>(3, 0.0), cfg(5)), ValidationError);
}
