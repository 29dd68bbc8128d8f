#include "annulus/root_radii.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace annulus {

namespace {

struct HullPoint {
    long index;
    BigFloat lg; // lg |p_index|
};

// Upper convex hull over points with strictly increasing integer abscissae.
// A middle point is dropped when the chain fails to turn strictly downward
// in slope, so collinear runs keep only their endpoints.
std::vector<HullPoint> upper_hull(std::vector<HullPoint> pts) {
    std::vector<HullPoint> h;
    for (auto& p : pts) {
        while (h.size() >= 2) {
            const HullPoint& a = h[h.size() - 2];
            const HullPoint& b = h[h.size() - 1];
            // slope(a,b) <= slope(b,p)  <=>  cross >= 0  => b not a vertex
            BigFloat lhs = (b.lg - a.lg) * BigFloat(p.index - b.index, b.lg.prec());
            BigFloat rhs = (p.lg - b.lg) * BigFloat(b.index - a.index, b.lg.prec());
            if (lhs <= rhs)
                h.pop_back();
            else
                break;
        }
        h.push_back(std::move(p));
    }
    return h;
}

// Radius estimates of p in the lg domain; empty entries are exact zeros.
// Returns lg-estimates in ascending radius order (hull edges left to right
// describe the small roots first).
struct LgRadii {
    size_t zeros = 0;
    std::vector<BigFloat> lg_estimates; // ascending
};

LgRadii hull_lg_radii(const Polynomial& p) {
    const long n = p.degree();
    LgRadii out;

    long first_nonzero = -1;
    for (long i = 0; i <= n; ++i) {
        if (!p.coeff(static_cast<size_t>(i)).is_zero()) {
            first_nonzero = i;
            break;
        }
    }
    out.zeros = static_cast<size_t>(first_nonzero);
    if (first_nonzero == n) return out; // p = c x^n

    std::vector<HullPoint> pts;
    for (long i = first_nonzero; i <= n; ++i) {
        const BigComplex& c = p.coeff(static_cast<size_t>(i));
        if (c.is_zero()) continue;
        pts.push_back(HullPoint{i, log2(abs(c))});
    }
    std::vector<HullPoint> h = upper_hull(std::move(pts));

    out.lg_estimates.reserve(static_cast<size_t>(n - first_nonzero));
    for (size_t e = 0; e + 1 < h.size(); ++e) {
        const HullPoint& lo = h[e];
        const HullPoint& hi = h[e + 1];
        const long span = hi.index - lo.index;
        BigFloat lg_r = (lo.lg - hi.lg) / BigFloat(span, lo.lg.prec());
        for (long c = 0; c < span; ++c) out.lg_estimates.push_back(lg_r);
    }
    return out;
}

} // namespace

RadiiEstimate newton_polygon_radii(const Polynomial& p) {
    const long n = p.degree();
    LgRadii lg = hull_lg_radii(p);
    RadiiEstimate est;
    est.theta = 2.0 * static_cast<double>(n);
    est.radii.reserve(static_cast<size_t>(n));
    // Non-increasing order: large radii come from the rightmost hull edges.
    for (auto it = lg.lg_estimates.rbegin(); it != lg.lg_estimates.rend(); ++it)
        est.radii.push_back(exp2(*it));
    for (size_t i = 0; i < lg.zeros; ++i)
        est.radii.emplace_back(p.leading().prec());
    return est;
}

int graeffe_iterations_needed(long n, double theta) {
    if (!(theta > 1.0))
        throw std::invalid_argument("graeffe_iterations_needed: theta must exceed 1");
    const double target = std::log(2.0 * static_cast<double>(n)) / std::log1p(theta - 1.0);
    if (target <= 1.0) return 0;
    int k = static_cast<int>(std::ceil(std::log2(target)));
    while (std::ldexp(1.0, k) < target) ++k; // guard against log2 rounding
    return std::max(k, 0);
}

RadiiEstimate estimate_radii(const Polynomial& p, double theta, const PrecisionContext& ctx) {
    ctx.validate();
    const double floor = 1.0 + std::ldexp(1.0, -static_cast<int>(
                                   std::min<long>(ctx.mantissa_bits / 4, 1000)));
    if (!(theta > 1.0) || theta <= floor)
        throw std::invalid_argument("estimate_radii: theta too close to 1 for this precision");

    const long n = p.degree();
    const int k = graeffe_iterations_needed(n, theta);

    Polynomial q = normalize(p.at_precision(ctx));
    for (int step = 0; step < k; ++step)
        q = normalize(graeffe_step(q, ctx));

    LgRadii lg = hull_lg_radii(q);
    RadiiEstimate est;
    est.theta = theta;
    est.radii.reserve(static_cast<size_t>(n));
    for (auto it = lg.lg_estimates.rbegin(); it != lg.lg_estimates.rend(); ++it)
        est.radii.push_back(exp2(div_2ui(*it, static_cast<unsigned long>(k))));
    for (size_t i = 0; i < lg.zeros; ++i)
        est.radii.emplace_back(ctx.mantissa_bits);
    return est;
}

RadiiEstimate distances_from_point(const Polynomial& p, const BigComplex& z, double theta,
                                   const PrecisionContext& ctx) {
    return estimate_radii(taylor_shift(p, z, ctx), theta, ctx);
}

} // namespace annulus
