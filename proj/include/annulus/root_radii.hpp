#pragma once

#include "annulus/polynomial.hpp"

#include <vector>

namespace annulus {

/// n root-radius estimates sorted in non-increasing order, each certified
/// within the relative factor theta of the matching true radius (sorted
/// index-wise): 1/theta <= estimate_j / radius_j <= theta.
struct RadiiEstimate {
    std::vector<BigFloat> radii;
    double theta = 0.0;
};

/// Hull-based radius estimates with the fixed factor theta = 2n.
/// Builds the upper convex hull of (i, lg|p_i|) over non-zero coefficients;
/// a hull edge joining indices i < k contributes k - i copies of
/// |p_i / p_k|^{1/(k-i)}. Exactly zero trailing coefficients contribute
/// exact zero radii. Collinear hull points are dropped, keeping only the
/// endpoints of maximal collinear runs.
RadiiEstimate newton_polygon_radii(const Polynomial& p);

/// Smallest k >= 0 with (2n)^(1/2^k) <= theta. Requires theta > 1.
int graeffe_iterations_needed(long n, double theta);

/// Root-radius estimates within the requested relative factor theta:
/// monic reduction, k root-squaring steps with per-step normalization,
/// hull estimates, then 2^k-th roots taken in the lg domain.
/// Rejects theta <= 1 + 2^(-mantissa_bits/4).
RadiiEstimate estimate_radii(const Polynomial& p, double theta, const PrecisionContext& ctx);

/// Estimates of the distances |x_j - z| from z to the roots of p,
/// via estimate_radii applied to p(x + z).
RadiiEstimate distances_from_point(const Polynomial& p, const BigComplex& z, double theta,
                                   const PrecisionContext& ctx);

} // namespace annulus
