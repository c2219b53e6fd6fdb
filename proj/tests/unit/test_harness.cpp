#include "oracles.hpp"
#include "pcweno/harness.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

using namespace pcw;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "pcweno_unit";
    fs::create_directories(dir);
    return dir / name;
}

std::vector<std::string> lines_of(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST(Config, ParsesKeyValueText) {
    const RunConfig c = parse_config("case=burgers-smooth n=200\n# comment line\norder=7 weno=js  # trailing\ncfl=0.3");
    EXPECT_EQ(c.case_id, "burgers-smooth");
    EXPECT_EQ(c.n, 200);
    EXPECT_EQ(c.order, 7);
    EXPECT_EQ(c.variant, WenoVariant::JS);
    EXPECT_DOUBLE_EQ(c.cfl, 0.3);
    EXPECT_NO_THROW(validate_config(c));
}

TEST(Config, LaterKeysOverride) {
    const RunConfig c = parse_config("n=50", parse_config("case=burgers-riemann n=20"));
    EXPECT_EQ(c.n, 50);
    EXPECT_EQ(c.case_id, "burgers-riemann");
}

TEST(Config, RejectsUnknownAndMalformed) {
    EXPECT_THROW(parse_config("speed=3"), ValidationError);
    EXPECT_THROW(parse_config("n"), ValidationError);
    EXPECT_THROW(parse_config("=4"), ValidationError);
    EXPECT_THROW(parse_config("n=abc"), ValidationError);
    EXPECT_THROW(parse_config("cfl=nan"), ValidationError);
    EXPECT_THROW(parse_config("splitting=roe"), ValidationError);
}

TEST(Config, ValidationRules) {
    EXPECT_THROW(validate_config(parse_config("case=burgers-smooth cfl=1.5")), ValidationError);
    EXPECT_THROW(validate_config(parse_config("case=burgers-smooth order=4")), ValidationError);
    EXPECT_THROW(validate_config(parse_config("case=nope")), ValidationError);
    EXPECT_THROW(validate_config(parse_config("n=10")), ValidationError);
    EXPECT_THROW(validate_config(parse_config("case=burgers-smooth n=8 order=7")), ValidationError);
    EXPECT_THROW(validate_config(parse_config("case=swe1d-perturb path=psi2")), ValidationError);
    EXPECT_THROW(validate_config(parse_config("case=swe1d-perturb splitting=right")), ValidationError);
    EXPECT_THROW(validate_config(parse_config("case=swe1d-perturb bottom=rough")), ValidationError);
    EXPECT_THROW(validate_config(parse_config("case=swe1d-perturb r=1.2")), ValidationError);
    EXPECT_THROW(validate_config(parse_config("case=swe1d-perturb nx=20")), ValidationError);
}

TEST(Config, OffPresetPairsNeedCustom) {
    EXPECT_THROW(validate_config(parse_config("case=swe1d-perturb splitting=lf wb=s1")), ValidationError);
    EXPECT_THROW(validate_config(parse_config("case=swe1d-perturb splitting=upwind wb=s2")), ValidationError);
    EXPECT_NO_THROW(validate_config(parse_config("case=swe1d-perturb splitting=lf wb=s1 custom=1")));
    EXPECT_NO_THROW(validate_config(parse_config("case=swe1d-perturb splitting=lf wb=s2")));
}

TEST(Config, EveryKeyIsAccepted) {
    for (const auto& k : config_keys()) {
        RunConfig c;
        EXPECT_NO_THROW({
            try {
                set_option(c, k, "1");
            } catch (const ValidationError& e) {
                // only value errors are acceptable here
                EXPECT_EQ(std::string(e.what()).find("unknown"), std::string::npos) << k;
            }
        });
    }
}

TEST(Cases, AllRegistered) {
    const std::vector<std::string> ids = {
        "burgers-smooth", "burgers-riemann", "burgers-stationary", "swe1d-perturb", "swe1d-riemann-1",
        "swe1d-riemann-2", "swe1d-damflat", "swe1d-damnonflat", "swe1d-accuracy", "swe2d-rest",
        "swe2d-propflat", "swe2d-propnonflat", "swe2d-circdam-flat", "swe2d-circdam-nonflat"};
    for (const auto& id : ids) {
        EXPECT_EQ(find_case(id).id, id);
        RunConfig c;
        c.case_id = id;
        const pcw::Setup s = make_setup(c);
        EXPECT_EQ(s.dims, find_case(id).dims);
        ASSERT_TRUE(s.model);
        if (s.dims == 1) {
            const Field1D f = initial_field_1d(s, s.initial);
            for (double v : f.values()) ASSERT_TRUE(std::isfinite(v)) << id;
        }
    }
    EXPECT_EQ(case_list().size(), ids.size());
    EXPECT_THROW(find_case("burgers"), ValidationError);
}

TEST(Cases, MethodPresets) {
    const pcw::Setup m1 = make_setup(parse_config("case=swe1d-perturb method=1"));
    EXPECT_EQ(m1.scheme.splitting.kind, SplittingKind::Upwind);
    EXPECT_EQ(m1.scheme.wb, WellBalance::Strategy1);
    const pcw::Setup m2 = make_setup(parse_config("case=swe1d-perturb method=2"));
    EXPECT_EQ(m2.scheme.splitting.kind, SplittingKind::LaxFriedrichs);
    EXPECT_EQ(m2.scheme.wb, WellBalance::Strategy2);
    const pcw::Setup b1 = make_setup(parse_config("case=burgers-smooth method=1"));
    EXPECT_EQ(b1.scheme.splitting.kind, SplittingKind::RightGoing);
}

TEST(Cases, WithMeshKeepsEverythingElse) {
    const pcw::Setup s = make_setup(parse_config("case=burgers-smooth n=40"));
    const pcw::Setup t = with_mesh(s, 80);
    EXPECT_EQ(t.grid1.n(), 80);
    EXPECT_EQ(t.grid1.a(), s.grid1.a());
    EXPECT_EQ(t.grid1.b(), s.grid1.b());
    EXPECT_EQ(t.time.t_final, s.time.t_final);
}

TEST(Run, DeterministicAcrossCalls) {
    const RunConfig c = parse_config("case=burgers-riemann n=60");
    const ExperimentReport a = run_case(c), b = run_case(c);
    ASSERT_TRUE(a.final_1d && b.final_1d);
    EXPECT_EQ(a.final_1d->values(), b.final_1d->values());
    EXPECT_EQ(a.steps, b.steps);
}

TEST(Run, SmoothBurgersConverges) {
    const ExperimentReport r = run_convergence(parse_config("case=burgers-smooth meshes=20,40,80"));
    ASSERT_EQ(r.components.size(), 2u);
    ASSERT_EQ(r.components[0].orders.size(), 2u);
    EXPECT_GT(r.components[0].orders.back(), 0.8);
    EXPECT_LT(r.components[0].errors.back().error, r.components[0].errors.front().error);
}

TEST(Run, ExactSolutionAtZeroTime) {
    for (double x : {0.0, 0.13, 0.5, 0.77}) EXPECT_NEAR(burgers_smooth_exact(x, 0.0), 0.25 * std::abs(std::sin(M_PI * x)), 1e-15);
}

TEST(Fronts, LevelCrossings) {
    const std::vector<double> x = {0, 1, 2, 3}, v = {0, 2, 2, 0};
    const auto c = level_crossings(x, v, 1.0);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_DOUBLE_EQ(c[0], 0.5);
    EXPECT_DOUBLE_EQ(c[1], 2.5);
    EXPECT_DOUBLE_EQ(crossing_distance({0.5, 2.5}, {0.6, 2.2}), 0.3);
    EXPECT_EQ(crossing_distance({}, {}), 0.0);
    EXPECT_EQ(crossing_distance({1.0}, {}), std::numeric_limits<double>::infinity());
}

TEST(Csv, BurgersFieldLayout) {
    CoupledBurgers m;
    Field1D f(Grid1D(0.0, 1.0, 3), 2, 1);
    for (int i = 0; i < 3; ++i) f.set_state(i, oracle::vec({1.0 + i, 0.5 * i}));
    const fs::path p = scratch("b3.csv");
    write_csv(f, m, p.string());
    const auto lines = lines_of(p);
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0], "x,u,v");
}

TEST(Csv, SweHeaderAndRoundTrip) {
    Swe1D m({10.0, 0.98}, {[](double x) { return -1.0 + 0.1 * std::sin(x); }, [](double x) { return 0.1 * std::cos(x); }});
    Field1D f(Grid1D(0.0, 1.0, 7), 4, 3);
    for (int i = 0; i < 7; ++i) {
        const double x = f.grid().x(i);
        f.set_state(i, oracle::vec({1.0 / 3.0 + x, std::sqrt(2.0) * x, 0.1 + x * x, -x / 7.0}));
        f.h(i) = m.h_value({x, 0.0});
    }
    const fs::path p = scratch("swe.csv");
    write_csv(f, m, p.string());
    const CsvTable t = read_csv(p.string());
    EXPECT_EQ(t.header, (std::vector<std::string>{"x", "h1", "q1", "h2", "q2", "z"}));
    ASSERT_EQ(t.rows.size(), 7u);
    for (int i = 0; i < 7; ++i) {
        EXPECT_EQ(t.rows[i][0], f.grid().x(i));
        for (int c = 0; c < 4; ++c) EXPECT_EQ(t.rows[i][c + 1], f.at(i, c));
        EXPECT_EQ(t.rows[i][5], m.z(f.grid().x(i)));
    }
}

TEST(Csv, TwoDimensionalOrdering) {
    Swe2D m({10.0, 0.98}, flat_bottom_2d(-2.0));
    Field2D f(Grid2D(0, 1, 3, 0, 1, 2), 6, 1);
    const fs::path p = scratch("two.csv");
    write_csv(f, m, p.string());
    const CsvTable t = read_csv(p.string());
    ASSERT_EQ(t.rows.size(), 6u);
    EXPECT_EQ(t.header.front(), "x");
    EXPECT_EQ(t.header[1], "y");
    EXPECT_EQ(t.rows[1][0], 0.0);
    EXPECT_EQ(t.rows[1][1], 0.5);
    EXPECT_EQ(t.rows[2][0], 1.0 / 3.0);
    EXPECT_EQ(t.rows[2][1], 0.0);
}

TEST(Csv, OrderTable) {
    ExperimentReport r;
    r.components.push_back({"u", {{25, 1e-3}, {50, 1e-4}}, {}});
    r.components[0].orders = convergence_order(r.components[0].errors);
    const fs::path p = scratch("orders.csv");
    write_order_table(r, p.string());
    const auto lines = lines_of(p);
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0], "# u");
    EXPECT_EQ(lines[1], "n,error,order");
    EXPECT_EQ(lines[2].back(), ',');
    EXPECT_NE(lines[3].find("3.32"), std::string::npos);
}

TEST(Csv, IoErrors) {
    CoupledBurgers m;
    Field1D f(Grid1D(0.0, 1.0, 3), 2, 1);
    EXPECT_THROW(write_csv(f, m, "/proc/none/x.csv"), IoError);
    EXPECT_THROW(read_csv("/nonexistent/file.csv"), IoError);
}
