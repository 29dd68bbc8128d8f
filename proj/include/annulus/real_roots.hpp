#pragma once

#include "annulus/root_radii.hpp"

#include <vector>

namespace annulus {

/// Candidate interval on the real axis that may contain real roots.
/// Candidates are derived from root moduli alone, so an interval can also be
/// triggered by a non-real root of matching modulus; intervals are a superset
/// of the real-root locations, not a certificate of existence.
struct RealInterval {
    BigFloat lo;
    BigFloat hi;
    /// Number of moduli whose candidate intervals merged into this one.
    /// Counts every contributing modulus, so conjugate pairs and sign
    /// ambiguity can inflate it; it never undercounts real roots inside.
    int multiplicity_hint = 0;
};

/// Real-axis candidate intervals for a polynomial with real coefficients.
///
/// Root moduli are estimated from the origin to relative width rho / r1 (r1 =
/// the root modulus bound), each modulus r contributes the mirrored pair
/// [-r*t, -r/t] and [r/t, r*t], and overlapping intervals merge. At most 2n
/// intervals result, sorted ascending and pairwise disjoint. Every real root
/// lies in some interval.
///
/// Throws std::invalid_argument if a coefficient has a nonzero imaginary
/// part or rho <= 0.
std::vector<RealInterval> real_root_intervals(const Polynomial& p, double rho,
                                              const PrecisionContext& ctx);

} // namespace annulus
