#pragma once

#include "annulus/root_radii.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace annulus {

/// Parameters for the annulus-grid search.
struct FinderConfig {
    double rho = 1e-3;     // target grid resolution (absolute, in p's scale)
    double epsilon = 0.05; // failure probability budget
    double eta = 100.0;    // shift distance in units of the root bound
    std::uint64_t seed = 0;
    PrecisionContext ctx{256};
    /// Optional pairwise root separation used only for reporting the
    /// failure bound; when absent the epsilon budget is reported.
    std::optional<double> isolation_for_reporting;

    void validate() const;
};

/// One annulus of certified root distances from a family's shift center:
/// distances lie in [radius - half_width, radius + half_width] and the
/// annulus accounts for `multiplicity` of the n distance estimates.
struct Annulus {
    BigFloat radius;
    BigFloat half_width;
    int multiplicity = 0;
};

/// All annuli sharing one shift center, in increasing radius order after
/// merging every chain of pairwise overlapping distance intervals
/// (a merged chain of m intervals keeps width <= m times the single width
/// and carries multiplicity m). Multiplicities sum to n.
struct AnnulusFamily {
    BigComplex center;
    std::vector<Annulus> annuli;
};

/// Candidate root location: the intersection of one vertical-family and one
/// horizontal-family annulus. The center is the circle-circle intersection
/// point lying inside the search disc (first-order form:
/// re = r_i - eta*r1, im = r_j - eta*r1); half_side = (w_i + w_j)/sqrt(2),
/// so the circumscribed disc radius is w_i + w_j.
struct GridNode {
    BigComplex center;
    BigFloat half_side;
    int multiplicity = 0;
    int index_vertical = 0;
    int index_horizontal = 0;
};

/// One reported approximation: a matched grid node scaled back to the
/// input's coordinates.
struct RootApproximation {
    BigComplex point;
    int multiplicity = 0;
    BigFloat error_radius;
    std::optional<BigFloat> residual;
};

struct RootReport {
    std::vector<RootApproximation> approximations;
    long n = 0;
    double rho = 0.0;
    double epsilon = 0.0;
    double eta = 0.0;
    double angle_used = 0.0;
    double error_radius = 0.0;  // rho * sqrt(2)
    double delta = 0.0;         // minimal pairwise separation assumed by the bound
    double failure_bound = 0.0; // min(1, 2*sqrt(2)*rho*(N-1)*N/(pi*delta)) or epsilon
    long nodes_total = 0;
    long bands_empty = 0;
    long bands_ambiguous = 0;
};

/// Families and the root bound they were built against.
struct FamilySet {
    AnnulusFamily vertical;   // shift center -eta*r1
    AnnulusFamily horizontal; // shift center -i*eta*r1
    AnnulusFamily diagonal;   // shift center -eta*r1*e^{i*phi}
    BigFloat r1_bound;
};

/// Diagonal direction angle, uniform over [pi/8, 3pi/8], deterministic in
/// the seed.
double draw_angle(std::uint64_t seed);

/// Shifts p to the three family centers and converts certified distance
/// estimates into merged annulus families. cfg.rho is interpreted in p's
/// own coordinate scale.
FamilySet build_families(const Polynomial& p, const FinderConfig& cfg, double phi);

/// All vertical x horizontal annulus intersections whose node square meets
/// the disc of radius r1_bound + rho around the origin. At most n^2 nodes.
std::vector<GridNode> build_grid(const AnnulusFamily& vertical,
                                 const AnnulusFamily& horizontal,
                                 const BigFloat& r1_bound, const FinderConfig& cfg);

/// For each diagonal annulus, select the grid nodes whose distance from the
/// diagonal shift center falls in [radius - w - s, radius + w + s] where s
/// is the node's circumscribed radius. Bands selecting exactly one node
/// yield (node index, band index) matches; empty and ambiguous bands are
/// skipped and tallied into the optional counters. Node distances are
/// sorted once and shared across bands.
std::vector<std::pair<size_t, size_t>> match_diagonal(const AnnulusFamily& diagonal,
                                                      const std::vector<GridNode>& nodes,
                                                      long* bands_empty = nullptr,
                                                      long* bands_ambiguous = nullptr);

/// Full pipeline: root bound, pre-scaling to the unit disc, families, grid,
/// diagonal matching, and report assembly in the input's coordinates.
RootReport find_roots(const Polynomial& p, const FinderConfig& cfg);

/// Probability that one random band at angular budget gamma hits the
/// 2*rho_prime neighborhoods of two points `dist` apart:
/// (2/gamma) * sin(2*rho_prime / dist); requires dist > 2*rho_prime.
double collision_probability_bound(double rho_prime, double dist, double gamma);

/// First-order simplification of the collision bound at the default
/// angular budget pi/4 and rho_prime = rho*sqrt(2):
/// 4*sqrt(2)*rho / (pi*dist).
double collision_probability_simplified(double rho, double dist);

/// min(1, 2*sqrt(2)*rho*(N-1)*N / (pi*delta_iso)); requires delta_iso > 2*rho.
double failure_probability_bound(double rho, double delta_iso, long n_nodes);

/// Pairwise separation delta = n^2 (n^2 - 1) * 8 * rho / (pi * epsilon)
/// under which the failure budget epsilon is guaranteed.
double isolation_delta(long n, double rho, double epsilon);

} // namespace annulus
