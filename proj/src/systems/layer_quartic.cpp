#include "pcweno/systems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pcw {

namespace {

struct Quartic {
    double u1, u2, c1sq, c2sq, k;

    double p1(double l) const { return (l - u1) * (l - u1) - c1sq; }
    double p2(double l) const { return (l - u2) * (l - u2) - c2sq; }
    double value(double l) const { return p1(l) * p2(l) - k; }
    double slope(double l) const { return 2.0 * (l - u1) * p2(l) + 2.0 * (l - u2) * p1(l); }
};

// f(lo) and f(hi) of opposite sign; Newton from seed, bisection when Newton leaves the bracket
double safeguarded_newton(const Quartic& q, double lo, double hi, double seed) {
    double flo = q.value(lo);
    double x = std::clamp(seed, std::min(lo, hi), std::max(lo, hi));
    for (int it = 0; it < 200; ++it) {
        const double fx = q.value(x);
        if (fx == 0.0) return x;
        if ((fx < 0.0) == (flo < 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        const double df = q.slope(x);
        const double tol = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
        if (df != 0.0 && std::abs(fx / df) <= tol) return x - fx / df;
        double next = df != 0.0 ? x - fx / df : 0.5 * (lo + hi);
        if (!(next > std::min(lo, hi) && next < std::max(lo, hi))) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= tol || std::abs(hi - lo) <= tol) return next;
        x = next;
    }
    return x;
}

double polish(const Quartic& q, double x, double lo, double hi) {
    for (int it = 0; it < 4; ++it) {
        const double df = q.slope(x);
        if (df == 0.0) break;
        const double next = x - q.value(x) / df;
        if (!(next > lo && next < hi)) break;
        if (std::abs(q.value(next)) > std::abs(q.value(x))) break;
        if (next == x) break;
        x = next;
    }
    return x;
}

}  // namespace

std::array<double, 4> layer_root_seeds(double u1, double u2, double c1sq, double c2sq, double r) {
    const double s = c1sq + c2sq;
    const double um = (c1sq * u1 + c2sq * u2) / s;
    const double ext = std::sqrt(s);
    const double uc = (c1sq * u2 + c2sq * u1) / s;
    const double gp = (1.0 - r);
    const double rich = (u1 - u2) * (u1 - u2) / (gp * s);
    const double inner = std::sqrt(std::max(0.0, gp * c1sq * c2sq / s * (1.0 - rich)));
    return {um - ext, uc - inner, uc + inner, um + ext};
}

std::array<double, 2> layer_external_roots(double u1, double u2, double c1sq, double c2sq, double r) {
    const Quartic q{u1, u2, c1sq, c2sq, r * c1sq * c2sq};
    const double c1 = std::sqrt(c1sq);
    const double c2 = std::sqrt(c2sq);
    const double a1 = std::min(u1 - c1, u2 - c2);
    const double a4 = std::max(u1 + c1, u2 + c2);
    const double reach = std::sqrt(std::sqrt(q.k)) * (1.0 + 1e-12) + 1e-300;
    const auto seeds = layer_root_seeds(u1, u2, c1sq, c2sq, r);
    const double left = safeguarded_newton(q, a1, a1 - reach, seeds[0]);
    const double right = safeguarded_newton(q, a4, a4 + reach, seeds[3]);
    return {left, right};
}

LayerRoots solve_layer_quartic(double u1, double u2, double c1sq, double c2sq, double r) {
    const Quartic q{u1, u2, c1sq, c2sq, r * c1sq * c2sq};
    const auto ext = layer_external_roots(u1, u2, c1sq, c2sq, r);
    const double c1 = std::sqrt(c1sq);
    const double c2 = std::sqrt(c2sq);
    std::array<double, 4> a{u1 - c1, u1 + c1, u2 - c2, u2 + c2};
    std::sort(a.begin(), a.end());

    // deflate the monic quartic by (l - e0)(l - e1)
    const double p1 = -2.0 * u1, q1 = u1 * u1 - c1sq;
    const double p2 = -2.0 * u2, q2 = u2 * u2 - c2sq;
    const double b3 = p1 + p2;
    const double b2 = q1 + q2 + p1 * p2;
    const double s = ext[0] + ext[1];
    const double p = ext[0] * ext[1];
    const double bb = b3 + s;
    const double cc = b2 + s * bb - p;
    const double disc = bb * bb - 4.0 * cc;
    const double scale = std::max({bb * bb, std::abs(cc), 1e-300});
    if (disc < -1e-12 * scale) {
        const double rich = (u1 - u2) * (u1 - u2) / ((1.0 - r) * (c1sq + c2sq));
        std::ostringstream os;
        os << "swe: loss of hyperbolicity, internal eigenvalues are complex (Richardson number " << rich << ")";
        throw HyperbolicityLoss(os.str(), rich);
    }
    const double root = std::sqrt(std::max(0.0, disc));
    double i0 = 0.5 * (-bb - root);
    double i1 = 0.5 * (-bb + root);
    i0 = polish(q, i0, a[1], a[2]);
    i1 = polish(q, i1, a[1], a[2]);
    if (i0 > i1) std::swap(i0, i1);

    LayerRoots out;
    out.lambda = {ext[0], i0, i1, ext[1]};
    for (int l = 0; l < 3; ++l)
        if (out.lambda[l + 1] - out.lambda[l] < kDegenerateGap) out.degenerate = true;
    return out;
}

void LayerParams::validate() const {
    if (!(g > 0.0)) throw ValidationError("swe: gravity must be positive");
    if (!(r > 0.0 && r < 1.0)) throw ValidationError("swe: density ratio must lie in (0,1)");
}

Bottom1D flat_bottom_1d(double level) {
    return {[level](double) { return level; }, [](double) { return 0.0; }};
}

Bottom2D flat_bottom_2d(double level) {
    return {[level](double, double) { return level; }, [](double, double) { return 0.0; },
            [](double, double) { return 0.0; }};
}

}  // namespace pcw
