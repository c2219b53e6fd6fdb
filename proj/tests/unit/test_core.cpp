#include "oracles.hpp"
#include "pcweno/model.hpp"
#include "pcweno/systems.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace pcw;

namespace {

Field1D scalar_field(std::initializer_list<double> v, int ghost) {
    Field1D f(Grid1D(0.0, 1.0, static_cast<int>(v.size())), 1, ghost);
    int i = 0;
    for (double x : v) f.at(i++, 0) = x;
    return f;
}

std::vector<double> with_ghosts(const Field1D& f) {
    std::vector<double> out;
    for (int i = -f.ghost(); i < f.n() + f.ghost(); ++i) out.push_back(f.at(i, 0));
    return out;
}

}  // namespace

TEST(Ghosts, PeriodicWrap) {
    Field1D f = scalar_field({1, 2, 3}, 1);
    fill_ghosts(f, Boundary::Periodic);
    EXPECT_EQ(with_ghosts(f), (std::vector<double>{3, 1, 2, 3, 1}));
}

TEST(Ghosts, FreeOutflowCopiesEdges) {
    Field1D f = scalar_field({1, 2, 3}, 2);
    fill_ghosts(f, Boundary::FreeOutflow);
    EXPECT_EQ(with_ghosts(f), (std::vector<double>{1, 1, 1, 2, 3, 3, 3}));
}

TEST(Ghosts, Idempotent) {
    Field1D f = scalar_field({4, -1, 2, 7, 5}, 3);
    fill_ghosts(f, Boundary::Periodic);
    const auto once = with_ghosts(f);
    fill_ghosts(f, Boundary::Periodic);
    EXPECT_EQ(with_ghosts(f), once);
}

TEST(Ghosts, TwoDimensionalCorners) {
    Field2D f(Grid2D(0, 1, 3, 0, 1, 3), 1, 1);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) f.at(i, j, 0) = 10 * j + i;
    fill_ghosts(f, Boundary::Periodic);
    EXPECT_EQ(f.at(-1, -1, 0), 22);
    EXPECT_EQ(f.at(3, 1, 0), 10);
    fill_ghosts(f, Boundary::FreeOutflow);
    EXPECT_EQ(f.at(-1, -1, 0), 0);
    EXPECT_EQ(f.at(3, 3, 0), 22);
}

TEST(Norms, IdenticalFieldsGiveZero) {
    Field1D a = scalar_field({1, 2, 3}, 1);
    EXPECT_EQ(norm(a, a, NormKind::L1, 0), 0.0);
    EXPECT_EQ(norm(a, a, NormKind::Linf, 0), 0.0);
}

TEST(Norms, L1ScalesWithSpacing) {
    Field1D a(Grid1D(0.0, 1.0, 2), 1, 1), b = a;
    a.at(0, 0) = 1.0;
    a.at(1, 0) = -1.0;
    EXPECT_DOUBLE_EQ(norm(a, b, NormKind::L1, 0), 1.0);
}

TEST(Norms, LinfIsLargestDifference) {
    Field1D a = scalar_field({1, -3, 2}, 1), b = scalar_field({0, 0, 0}, 1);
    EXPECT_DOUBLE_EQ(norm(a, b, NormKind::Linf, 0), 3.0);
}

TEST(Norms, MarginSkipsEdges) {
    Field1D a = scalar_field({9, 1, 2, 9}, 1), b = scalar_field({0, 0, 0, 0}, 1);
    EXPECT_DOUBLE_EQ(norm(a, b, NormKind::Linf, 0, 1), 2.0);
}

TEST(Norms, MismatchedGridsRejected) {
    Field1D a = scalar_field({1, 2, 3}, 1), b = scalar_field({1, 2, 3, 4}, 1);
    EXPECT_THROW(norm(a, b, NormKind::L1, 0), ValidationError);
}

TEST(Convergence, HalvingByThirtyTwoIsFifthOrder) {
    const auto o = convergence_order({{25, 32.0}, {50, 1.0}, {100, 1.0 / 32.0}});
    ASSERT_EQ(o.size(), 2u);
    EXPECT_NEAR(o[0], 5.0, 1e-12);
    EXPECT_NEAR(o[1], 5.0, 1e-12);
}

TEST(Convergence, PublishedBurgersPair) {
    const auto o = convergence_order({{25, 2.13e-6}, {50, 5.01e-8}});
    EXPECT_NEAR(o[0], 5.41, 5e-3);
}

TEST(Convergence, ConstantErrorIsOrderZero) {
    EXPECT_EQ(convergence_order({{10, 0.3}, {20, 0.3}})[0], 0.0);
}

TEST(Convergence, NonDoublingMeshes) {
    const auto o = convergence_order({{10, 1.0}, {30, 1.0 / 9.0}});
    EXPECT_NEAR(o[0], 2.0, 1e-12);
}

TEST(Quadrature, FiveNodesMatchTable) {
    const Quadrature q = gauss_legendre(5);
    ASSERT_EQ(q.nodes.size(), 5u);
    for (int i = 0; i < 5; ++i) {
        EXPECT_NEAR(q.nodes[i], oracle::kGlNodes[i], 1e-15);
        EXPECT_NEAR(q.weights[i], oracle::kGlWeights[i], 1e-15);
    }
}

TEST(Quadrature, ExactForDegreeNine) {
    const Quadrature q = gauss_legendre(5);
    double s = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) s += q.weights[i] * std::pow(q.nodes[i], 9);
    EXPECT_NEAR(s, 0.1, 1e-15);
}

TEST(PathIntegral, EqualStatesGiveZero) {
    CoupledBurgers m;
    const StateVec u = oracle::vec({1.3, 0.4});
    EXPECT_EQ(oracle::max_abs(path_integral_fluctuation(m, u, u, Axis::x)), 0.0);
}

TEST(PathIntegral, BurgersStraightSegment) {
    CoupledBurgers m;
    const StateVec d = path_integral_fluctuation(m, oracle::vec({2, 2}), oracle::vec({1, 1}), Axis::x);
    EXPECT_NEAR(d[0], -3.0, 1e-14);
    EXPECT_NEAR(d[1], -3.0, 1e-14);
}

TEST(PathIntegral, BurgersSecondPath) {
    CoupledBurgers m(PathFamily::BurgersPsi2);
    const StateVec d = path_integral_fluctuation(m, oracle::vec({2, 2}), oracle::vec({1, 1}), Axis::x);
    EXPECT_NEAR(d[0], -2.5, 1e-14);
    EXPECT_NEAR(d[1], -3.5, 1e-14);
}

TEST(PathIntegral, AgreesWithHandWrittenQuadrature) {
    oracle::Sampler rng;
    const Swe1D swe({10.0, 0.98}, flat_bottom_1d(-1.0));
    for (int t = 0; t < 20; ++t) {
        const StateVec a = rng.swe1d(), b = rng.swe1d();
        const StateVec lib = path_integral_fluctuation(swe, a, b, Axis::x);
        const StateVec ref = oracle::straight_integral([](const StateVec& u) { return oracle::swe1d_a(u, 10.0, 0.98); }, a, b, 1);
        EXPECT_LT(oracle::max_abs(lib - ref), 1e-12);
    }
}

TEST(Grid, TooFewPointsForStencil) {
    EXPECT_THROW(Grid1D(0.0, 1.0, 8).require_radius(3), ValidationError);
    EXPECT_NO_THROW(Grid1D(0.0, 1.0, 9).require_radius(3));
}

TEST(Errors, ContextIsAppendedOnce) {
    SolverError e("boom");
    e.add_context("point 3");
    EXPECT_TRUE(e.has_location());
    EXPECT_NE(std::string(e.what()).find("point 3"), std::string::npos);
}
