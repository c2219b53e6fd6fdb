#include "pcweno/harness.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace pcw {

namespace {

[[noreturn]] void bad(const std::string& key, const std::string& what) {
    throw ValidationError("config key '" + key + "': " + what);
}

double to_double(const std::string& key, const std::string& v) {
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, out);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(out)) bad(key, "expected a real number, got '" + v + "'");
    return out;
}

int to_int(const std::string& key, const std::string& v) {
    int out = 0;
    const auto* end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, out);
    if (res.ec != std::errc() || res.ptr != end) bad(key, "expected an integer, got '" + v + "'");
    return out;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    bad(key, "expected a boolean, got '" + v + "'");
}

std::vector<int> to_list(const std::string& key, const std::string& v) {
    std::vector<int> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(to_int(key, item));
    }
    if (out.empty()) bad(key, "empty mesh list");
    return out;
}

const std::vector<std::string> kKeys = {
    "case", "n", "nx", "ny", "order", "weno", "method", "splitting", "wb", "path", "char", "alpha",
    "eps", "cfl", "tfinal", "bc", "g", "r", "bottom", "eta", "meshes", "ref_n", "ref_dt", "out",
    "paper_scale", "custom"};

}  // namespace

std::vector<std::string> config_keys() { return kKeys; }

void set_option(RunConfig& cfg, const std::string& key, const std::string& v) {
    if (key == "case") {
        cfg.case_id = v;
    } else if (key == "n") {
        cfg.n = to_int(key, v);
    } else if (key == "nx") {
        cfg.nx = to_int(key, v);
    } else if (key == "ny") {
        cfg.ny = to_int(key, v);
    } else if (key == "order") {
        cfg.order = to_int(key, v);
    } else if (key == "weno") {
        if (v == "z") cfg.variant = WenoVariant::Z;
        else if (v == "js") cfg.variant = WenoVariant::JS;
        else bad(key, "expected z or js");
    } else if (key == "method") {
        cfg.method = to_int(key, v);
    } else if (key == "splitting") {
        if (v == "upwind") cfg.splitting = SplittingKind::Upwind;
        else if (v == "lf") cfg.splitting = SplittingKind::LaxFriedrichs;
        else if (v == "right") cfg.splitting = SplittingKind::RightGoing;
        else bad(key, "expected upwind, lf or right");
    } else if (key == "wb") {
        if (v == "none") cfg.wb = WellBalance::None;
        else if (v == "s1") cfg.wb = WellBalance::Strategy1;
        else if (v == "s2") cfg.wb = WellBalance::Strategy2;
        else bad(key, "expected none, s1 or s2");
    } else if (key == "path") {
        if (v == "psi1") cfg.path = PathFamily::StraightSegments;
        else if (v == "psi2") cfg.path = PathFamily::BurgersPsi2;
        else bad(key, "expected psi1 or psi2");
    } else if (key == "char") {
        cfg.characteristic = to_bool(key, v);
    } else if (key == "alpha") {
        if (v == "global") cfg.alpha_mode = LfAlphaMode::Global;
        else if (v == "local") cfg.alpha_mode = LfAlphaMode::Local;
        else bad(key, "expected global or local");
    } else if (key == "eps") {
        cfg.entropy_eps = to_double(key, v);
    } else if (key == "cfl") {
        cfg.cfl = to_double(key, v);
    } else if (key == "tfinal") {
        cfg.t_final = to_double(key, v);
    } else if (key == "bc") {
        if (v == "periodic") cfg.bc = Boundary::Periodic;
        else if (v == "free") cfg.bc = Boundary::FreeOutflow;
        else bad(key, "expected periodic or free");
    } else if (key == "g") {
        cfg.g = to_double(key, v);
    } else if (key == "r") {
        cfg.r = to_double(key, v);
    } else if (key == "bottom") {
        cfg.bottom = v;
    } else if (key == "eta") {
        cfg.eta = to_double(key, v);
    } else if (key == "meshes") {
        cfg.meshes = to_list(key, v);
    } else if (key == "ref_n") {
        cfg.ref_n = to_int(key, v);
    } else if (key == "ref_dt") {
        cfg.ref_dt = to_double(key, v);
    } else if (key == "out") {
        cfg.out_dir = v;
    } else if (key == "paper_scale") {
        cfg.paper_scale = to_bool(key, v);
    } else if (key == "custom") {
        cfg.allow_custom = to_bool(key, v);
    } else {
        throw ValidationError("unknown config key '" + key + "'");
    }
}

RunConfig parse_config(const std::string& text, RunConfig base) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0) throw ValidationError("config token '" + tok + "' is not key=value");
            set_option(base, tok.substr(0, eq), tok.substr(eq + 1));
        }
    }
    return base;
}

void validate_config(const RunConfig& cfg) {
    if (cfg.case_id.empty()) bad("case", "no case given");
    const CaseInfo& info = find_case(cfg.case_id);
    if (cfg.order != 3 && cfg.order != 5 && cfg.order != 7) bad("order", "must be 3, 5 or 7");
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) bad("cfl", "must lie in (0, 1]");
    if (cfg.method && *cfg.method != 1 && *cfg.method != 2) bad("method", "must be 1 or 2");
    if (cfg.t_final && *cfg.t_final < 0.0) bad("tfinal", "must be non-negative");
    if (cfg.entropy_eps < 0.0) bad("eps", "must be non-negative");
    const int k = (cfg.order - 1) / 2;
    for (const auto& [name, n] : {std::pair<const char*, int>{"n", cfg.n}, {"nx", cfg.nx}, {"ny", cfg.ny}, {"ref_n", cfg.ref_n}})
        if (n != 0 && n < 2 * k + 3) bad(name, "needs at least " + std::to_string(2 * k + 3) + " points for order " + std::to_string(cfg.order));
    for (int n : cfg.meshes)
        if (n < 2 * k + 3) bad("meshes", "mesh " + std::to_string(n) + " is too small for order " + std::to_string(cfg.order));
    if (cfg.ref_dt < 0.0) bad("ref_dt", "must be non-negative");
    if (info.dims == 1 && (cfg.nx != 0 || cfg.ny != 0)) bad("nx", "only for 2D cases");

    const bool burgers = cfg.case_id.rfind("burgers", 0) == 0;
    if (cfg.path && *cfg.path == PathFamily::BurgersPsi2 && !burgers) bad("path", "psi2 is only defined for Burgers");
    if (cfg.g && !(*cfg.g > 0.0)) bad("g", "must be positive");
    if (cfg.r && !(*cfg.r > 0.0 && *cfg.r < 1.0)) bad("r", "must lie in (0, 1)");
    if ((cfg.g || cfg.r) && burgers) bad(cfg.g ? "g" : "r", "not a Burgers parameter");
    if (!cfg.bottom.empty()) {
        if (cfg.case_id != "swe1d-perturb") bad("bottom", "only swe1d-perturb has a bottom choice");
        if (cfg.bottom != "smooth" && cfg.bottom != "step") bad("bottom", "expected smooth or step");
    }
    if (cfg.splitting && *cfg.splitting == SplittingKind::RightGoing && !burgers)
        bad("splitting", "the right-going splitting needs every wave speed positive (Burgers only)");

    if (!cfg.allow_custom && cfg.splitting && cfg.wb) {
        const auto s = *cfg.splitting;
        const auto w = *cfg.wb;
        if (w == WellBalance::Strategy1 && s != SplittingKind::Upwind)
            bad("wb", "s1 pairs with the upwind splitting (method 1); set custom=1 to override");
        if (w == WellBalance::Strategy2 && s != SplittingKind::LaxFriedrichs)
            bad("wb", "s2 pairs with the lf splitting (method 2); set custom=1 to override");
    }
}

}  // namespace pcw
