#include "annulus/real_roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace annulus {

std::vector<RealInterval> real_root_intervals(const Polynomial& p, double rho,
                                              const PrecisionContext& ctx) {
    ctx.validate();
    if (!p.is_real())
        throw std::invalid_argument("real_root_intervals: coefficients must be real");
    if (!(rho > 0.0))
        throw std::invalid_argument("real_root_intervals: rho must be positive");

    const mpfr_prec_t prec = ctx.mantissa_bits;
    Polynomial pc = p.at_precision(ctx);
    BigFloat r1 = cauchy_root_bound(pc);

    if (r1.is_zero()) {
        RealInterval origin{BigFloat(prec), BigFloat(prec),
                            static_cast<int>(p.degree())};
        return {origin};
    }

    // Scale so the moduli sit in the unit disc, then estimate them to a
    // quarter of the requested resolution relative to that scale.
    Polynomial ps = normalize(scale_variable(pc, r1, ctx));
    const double rho_rel = (BigFloat(rho, prec) / r1).to_double();
    if (!std::isfinite(rho_rel) || !(rho_rel > 0.0))
        throw precision_exhausted("real_root_intervals: resolution/scale ratio out of range");
    const double theta = 1.0 + rho_rel / 4.0;

    RadiiEstimate est = estimate_radii(ps, theta, ctx);
    BigFloat th(est.theta, prec);

    std::vector<RealInterval> iv;
    int zero_count = 0;
    for (const BigFloat& r_scaled : est.radii) {
        if (r_scaled.is_zero()) {
            ++zero_count;
            continue;
        }
        BigFloat r = r_scaled * r1;
        BigFloat lo = r / th;
        BigFloat hi = r * th;
        iv.push_back(RealInterval{lo, hi, 1});
        iv.push_back(RealInterval{-hi, -lo, 1});
    }
    if (zero_count > 0)
        iv.push_back(RealInterval{BigFloat(prec), BigFloat(prec), zero_count});

    std::sort(iv.begin(), iv.end(),
              [](const RealInterval& a, const RealInterval& b) { return a.lo < b.lo; });

    std::vector<RealInterval> merged;
    for (auto& cur : iv) {
        if (!merged.empty() && cur.lo <= merged.back().hi) {
            merged.back().hi = max(merged.back().hi, cur.hi);
            merged.back().multiplicity_hint += cur.multiplicity_hint;
        } else {
            merged.push_back(std::move(cur));
        }
    }
    return merged;
}

} // namespace annulus
