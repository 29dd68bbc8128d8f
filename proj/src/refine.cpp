#include "annulus/refine.hpp"

namespace annulus {

namespace {

BigComplex horner(const std::vector<BigComplex>& coeffs, const BigComplex& z,
                  mpfr_prec_t prec) {
    BigComplex acc(prec);
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

} // namespace

RefineResult newton_refine(const Polynomial& p, const BigComplex& z0,
                           const BigFloat& tol, int max_iter,
                           const PrecisionContext& ctx) {
    ctx.validate();
    const mpfr_prec_t prec = ctx.mantissa_bits;
    Polynomial pc = p.at_precision(ctx);

    std::vector<BigComplex> deriv;
    deriv.reserve(pc.coeffs().size() - 1);
    for (size_t i = 1; i < pc.coeffs().size(); ++i)
        deriv.push_back(pc.coeff(i) * BigFloat(static_cast<double>(i), prec));

    RefineResult out;
    BigComplex z{round_to(z0.re, prec), round_to(z0.im, prec)};
    out.point = z;
    out.residual = abs(evaluate(pc, z, ctx));

    for (int it = 0; it < max_iter; ++it) {
        BigComplex pv = evaluate(pc, z, ctx);
        BigComplex dv = horner(deriv, z, prec);
        if (dv.is_zero()) break;
        BigComplex step = pv / dv;
        z -= step;
        if (!z.is_finite()) break;
        out.iterations = it + 1;

        BigFloat res = abs(evaluate(pc, z, ctx));
        if (res < out.residual) {
            out.residual = res;
            out.point = z;
        }
        if (abs(step) <= tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

RootReport refine_report(const Polynomial& p, RootReport report,
                         const PrecisionContext& ctx, int max_iter) {
    ctx.validate();
    const mpfr_prec_t prec = ctx.mantissa_bits;
    // Stop once steps are well below the certified radius; the extra 2^-mb/2
    // headroom lets a quadratically convergent tail run to working precision.
    BigFloat eps = exp2(BigFloat(-static_cast<double>(prec) / 2.0, prec));

    for (RootApproximation& ap : report.approximations) {
        if (ap.multiplicity != 1) continue;
        BigFloat tol = ap.error_radius.is_zero() ? eps : ap.error_radius * eps;
        RefineResult r = newton_refine(p, ap.point, tol, max_iter, ctx);
        ap.point = r.point;
        ap.residual = r.residual;
    }
    return report;
}

} // namespace annulus
