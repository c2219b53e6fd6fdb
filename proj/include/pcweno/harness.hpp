#pragma once

#include "pcweno/driver2d.hpp"
#include "pcweno/systems.hpp"
#include "pcweno/timeint.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pcw {

// ---------------------------------------------------------------- configuration

struct RunConfig {
    std::string case_id;
    int n = 0;  // 0: case default
    int nx = 0;
    int ny = 0;
    int order = 5;
    WenoVariant variant = WenoVariant::Z;
    std::optional<int> method;
    std::optional<SplittingKind> splitting;
    std::optional<WellBalance> wb;
    std::optional<PathFamily> path;
    std::optional<bool> characteristic;
    std::optional<LfAlphaMode> alpha_mode;
    double entropy_eps = 0.0;
    double cfl = 0.45;
    std::optional<double> t_final;
    std::optional<Boundary> bc;
    std::optional<double> g;
    std::optional<double> r;
    std::string bottom;  // swe1d-perturb: smooth | step
    double eta = 0.0;
    std::vector<int> meshes;
    int ref_n = 0;        // fine reference mesh; 0: case default
    double ref_dt = 0.0;  // fixed reference step; 0: case default
    std::string out_dir;
    bool paper_scale = false;
    bool allow_custom = false;  // splitting / wb pairs outside the two presets
};

// key=value tokens separated by blanks or newlines; '#' starts a comment
RunConfig parse_config(const std::string& text, RunConfig base = {});
void set_option(RunConfig& cfg, const std::string& key, const std::string& value);
std::vector<std::string> config_keys();
// throws ValidationError naming the offending key
void validate_config(const RunConfig& cfg);

// ---------------------------------------------------------------- cases

struct CaseInfo {
    std::string id;
    int dims = 1;
    std::string summary;
    bool accuracy = false;  // mesh sweep with an error table
};

const std::vector<CaseInfo>& case_list();
const CaseInfo& find_case(const std::string& id);

// Everything needed to integrate one case on one mesh.
struct Setup {
    std::string case_id;
    int dims = 1;
    ModelPtr model;
    SchemeConfig scheme;
    TimeConfig time;
    Boundary bc = Boundary::FreeOutflow;
    Grid1D grid1;
    Grid2D grid2;
    std::function<StateVec(Point)> initial;
    std::function<StateVec(Point)> rest;  // unperturbed state of well-balance cases
    std::vector<int> tracked;             // components reported in error tables
    NormKind norm = NormKind::Linf;
};

Setup make_setup(const RunConfig& cfg);
// same case on another mesh (nx = ny = n in 2D)
Setup with_mesh(const Setup& s, int n);

Field1D initial_field_1d(const Setup& s, const std::function<StateVec(Point)>& init);
Field2D initial_field_2d(const Setup& s, const std::function<StateVec(Point)>& init);

struct RunStats {
    int steps = 0;
    double wall_seconds = 0.0;
};

// fixed_dt > 0 replaces the CFL rule (still clipped to t_final)
Field1D integrate(const Setup& s, Field1D u, double fixed_dt = 0.0, RunStats* stats = nullptr);
Field2D integrate(const Setup& s, Field2D u, double fixed_dt = 0.0, RunStats* stats = nullptr);

// exact solution of the coupled Burgers smooth case (u = v = w/2, w_t + w w_x = 0)
double burgers_smooth_exact(double x, double t);

// ---------------------------------------------------------------- reports

struct ComponentTable {
    std::string name;
    std::vector<MeshError> errors;
    std::vector<double> orders;
};

struct ExperimentReport {
    std::string case_id;
    NormKind norm = NormKind::Linf;
    std::vector<ComponentTable> components;
    std::map<std::string, double> metrics;
    std::vector<std::string> files;
    double wall_seconds = 0.0;
    int steps = 0;
    std::optional<Field1D> final_1d;
    std::optional<Field2D> final_2d;
};

ExperimentReport run_case(const RunConfig& cfg);
ExperimentReport run_convergence(const RunConfig& cfg);
// drift from the unperturbed rest state after t_final, per component
ExperimentReport run_wellbalance(const RunConfig& cfg);

std::string format_report(const ExperimentReport& rep);

// ---------------------------------------------------------------- fronts

// positions where values cross level, linearly interpolated
std::vector<double> level_crossings(const std::vector<double>& x, const std::vector<double>& v, double level);
// symmetric Hausdorff distance between two crossing sets; infinity if exactly one is empty
double crossing_distance(const std::vector<double>& a, const std::vector<double>& b);

struct Profile {
    std::vector<double> s;  // abscissa (x, or x along the diagonal in 2D)
    std::vector<double> v;
};

// quantity whose fronts are compared: interface h2 + Z for two-layer cases
// (h1 for the interface propagation cases), u for Burgers; the diagonal y = x in 2D
Profile front_profile(const Setup& s, const Field1D& f);
Profile front_profile(const Setup& s, const Field2D& f);

// ---------------------------------------------------------------- csv

void write_csv(const Field1D& f, const SystemModel& model, const std::string& path);
void write_csv(const Field2D& f, const SystemModel& model, const std::string& path);
void write_order_table(const ExperimentReport& rep, const std::string& path);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path);

}  // namespace pcw
