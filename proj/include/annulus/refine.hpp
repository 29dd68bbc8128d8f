#pragma once

#include "annulus/grid_finder.hpp"

namespace annulus {

/// Outcome of a Newton polish from a starting point.
struct RefineResult {
    BigComplex point;      ///< Iterate with the smallest residual seen.
    BigFloat residual;     ///< |p(point)|.
    int iterations = 0;    ///< Newton steps actually taken.
    bool converged = false;///< A step shrank below the tolerance.
};

/// Newton's iteration z <- z - p(z)/p'(z) from z0, stopping once a step is
/// at most tol or after max_iter steps. Returns the iterate with the
/// smallest residual encountered, so the result never has a larger residual
/// than z0 itself. A vanishing derivative ends the iteration early.
RefineResult newton_refine(const Polynomial& p, const BigComplex& z0,
                           const BigFloat& tol, int max_iter,
                           const PrecisionContext& ctx);

/// Polish every multiplicity-1 approximation in the report with Newton's
/// iteration and record its residual; multiple roots are left where the
/// annulus search put them (Newton's local convergence argument needs a
/// simple root). Certified error radii are kept as-is: refinement improves
/// the point, it does not retighten the certificate.
RootReport refine_report(const Polynomial& p, RootReport report,
                         const PrecisionContext& ctx, int max_iter = 64);

} // namespace annulus
