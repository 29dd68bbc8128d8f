#include "annulus/grid_finder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace annulus {

namespace {

constexpr double kPi = std::numbers::pi;

struct Interval {
    BigFloat lo;
    BigFloat hi;
    int count;
};

// Chains of pairwise overlapping intervals collapse into one annulus whose
// multiplicity is the chain length.
std::vector<Annulus> merge_intervals(std::vector<Interval> iv) {
    std::sort(iv.begin(), iv.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Annulus> out;
    for (auto& cur : iv) {
        if (!out.empty()) {
            Annulus& last = out.back();
            BigFloat last_hi = last.radius + last.half_width;
            if (cur.lo <= last_hi) {
                BigFloat lo = last.radius - last.half_width;
                BigFloat hi = max(last_hi, cur.hi);
                last.radius = div_2ui(lo + hi, 1);
                last.half_width = div_2ui(hi - lo, 1);
                last.multiplicity += cur.count;
                continue;
            }
        }
        Annulus a;
        a.radius = div_2ui(cur.lo + cur.hi, 1);
        a.half_width = div_2ui(cur.hi - cur.lo, 1);
        a.multiplicity = cur.count;
        out.push_back(std::move(a));
    }
    return out;
}

AnnulusFamily family_at(const Polynomial& p, const BigComplex& center, double theta,
                        const PrecisionContext& ctx) {
    RadiiEstimate est = distances_from_point(p, center, theta, ctx);
    BigFloat th(theta, ctx.mantissa_bits);
    std::vector<Interval> iv;
    iv.reserve(est.radii.size());
    for (const BigFloat& r : est.radii)
        iv.push_back(Interval{r / th, r * th, 1});
    AnnulusFamily fam;
    fam.center = center;
    fam.annuli = merge_intervals(std::move(iv));
    return fam;
}

// Intersection point of the circles |z - c1| = r1, |z - c2| = r2 closest to
// the origin. The families' shift centers keep the second intersection far
// outside the search disc, so the choice is unambiguous.
BigComplex circle_intersection_near_origin(const BigComplex& c1, const BigFloat& r1,
                                           const BigComplex& c2, const BigFloat& r2) {
    BigComplex dvec = c2 - c1;
    BigFloat d2 = norm(dvec);
    BigFloat d = sqrt(d2);
    BigFloat a = div_2ui((r1 * r1 - r2 * r2 + d2) / d, 1);
    BigFloat h2 = r1 * r1 - a * a;
    BigFloat zero(h2.prec());
    BigFloat h = (h2 < zero) ? zero : sqrt(h2);
    BigComplex ex{dvec.re / d, dvec.im / d};
    BigComplex base = c1 + ex * a;
    BigComplex off{-(ex.im * h), ex.re * h};
    BigComplex p1 = base + off;
    BigComplex p2 = base - off;
    return (norm(p1) <= norm(p2)) ? p1 : p2;
}

} // namespace

void FinderConfig::validate() const {
    if (!(rho > 0.0)) throw std::invalid_argument("FinderConfig: rho must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("FinderConfig: epsilon must lie in (0, 1)");
    if (!(eta >= 100.0)) throw std::invalid_argument("FinderConfig: eta must be at least 100");
    ctx.validate();
}

double draw_angle(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return kPi / 8.0 + u * (kPi / 4.0);
}

FamilySet build_families(const Polynomial& p, const FinderConfig& cfg, double phi) {
    cfg.validate();
    const PrecisionContext& ctx = cfg.ctx;
    const mpfr_prec_t prec = ctx.mantissa_bits;

    BigFloat r1 = cauchy_root_bound(p.at_precision(ctx));
    if (r1.is_zero())
        throw std::invalid_argument("build_families: all roots at the origin");

    // Relative annulus half-width target: rho/16 for the grid resolution,
    // capped at r1/(128*eta) so matching windows stay below the curvature
    // scale of the shifted circles.
    const double rho_rel = (BigFloat(cfg.rho, prec) / r1).to_double();
    if (!std::isfinite(rho_rel) || !(rho_rel > 0.0))
        throw precision_exhausted("build_families: resolution/scale ratio out of range");
    const double w_rel = std::min(rho_rel / 16.0, 1.0 / (128.0 * cfg.eta));
    const double theta = 1.0 + w_rel / (cfg.eta + 1.0);

    BigFloat shift = BigFloat(cfg.eta, prec) * r1;
    FamilySet fams;
    fams.r1_bound = r1;

    BigComplex center_v{-shift, BigFloat(prec)};
    BigComplex center_h{BigFloat(prec), -shift};
    BigComplex center_d = polar(shift, BigFloat(phi, prec));
    center_d = -center_d;

    fams.vertical = family_at(p, center_v, theta, ctx);
    fams.horizontal = family_at(p, center_h, theta, ctx);
    fams.diagonal = family_at(p, center_d, theta, ctx);
    return fams;
}

std::vector<GridNode> build_grid(const AnnulusFamily& vertical,
                                 const AnnulusFamily& horizontal,
                                 const BigFloat& r1_bound, const FinderConfig& cfg) {
    const mpfr_prec_t prec = cfg.ctx.mantissa_bits;
    const BigFloat sqrt2 = sqrt(BigFloat(2.0, prec));
    const BigFloat keep_radius = r1_bound + BigFloat(cfg.rho, prec);
    const BigFloat zero(prec);

    std::vector<GridNode> nodes;
    for (size_t i = 0; i < vertical.annuli.size(); ++i) {
        const Annulus& av = vertical.annuli[i];
        for (size_t j = 0; j < horizontal.annuli.size(); ++j) {
            const Annulus& ah = horizontal.annuli[j];
            GridNode node;
            node.center = circle_intersection_near_origin(vertical.center, av.radius,
                                                          horizontal.center, ah.radius);
            node.half_side = (av.half_width + ah.half_width) / sqrt2;
            node.multiplicity = std::min(av.multiplicity, ah.multiplicity);
            node.index_vertical = static_cast<int>(i);
            node.index_horizontal = static_cast<int>(j);

            // Keep nodes whose square meets the disc of radius r1 + rho.
            BigFloat dx = max(abs(node.center.re) - node.half_side, zero);
            BigFloat dy = max(abs(node.center.im) - node.half_side, zero);
            if (hypot(dx, dy) <= keep_radius) nodes.push_back(std::move(node));
        }
    }
    return nodes;
}

std::vector<std::pair<size_t, size_t>> match_diagonal(const AnnulusFamily& diagonal,
                                                      const std::vector<GridNode>& nodes,
                                                      long* bands_empty,
                                                      long* bands_ambiguous) {
    std::vector<std::pair<size_t, size_t>> matches;
    if (bands_empty) *bands_empty = 0;
    if (bands_ambiguous) *bands_ambiguous = 0;
    if (nodes.empty()) {
        if (bands_empty) *bands_empty = static_cast<long>(diagonal.annuli.size());
        return matches;
    }

    const mpfr_prec_t prec = nodes.front().center.prec();
    const BigFloat sqrt2 = sqrt(BigFloat(2.0, prec));

    // One shared sorted order of node distances from the diagonal center.
    std::vector<BigFloat> dist;
    std::vector<BigFloat> circum;
    dist.reserve(nodes.size());
    circum.reserve(nodes.size());
    BigFloat cr_max(prec);
    for (const GridNode& nd : nodes) {
        dist.push_back(abs(nd.center - diagonal.center));
        circum.push_back(nd.half_side * sqrt2);
        cr_max = max(cr_max, circum.back());
    }
    std::vector<size_t> order(nodes.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&dist](size_t a, size_t b) { return dist[a] < dist[b]; });
    std::vector<BigFloat> sorted_dist;
    sorted_dist.reserve(order.size());
    for (size_t idx : order) sorted_dist.push_back(dist[idx]);

    for (size_t b = 0; b < diagonal.annuli.size(); ++b) {
        const Annulus& band = diagonal.annuli[b];
        BigFloat lo = band.radius - band.half_width - cr_max;
        BigFloat hi = band.radius + band.half_width + cr_max;
        auto first = std::lower_bound(sorted_dist.begin(), sorted_dist.end(), lo);
        auto last = std::upper_bound(first, sorted_dist.end(), hi);

        size_t hit = nodes.size();
        int hit_count = 0;
        for (auto it = first; it != last && hit_count < 2; ++it) {
            size_t idx = order[static_cast<size_t>(it - sorted_dist.begin())];
            // Per-node window: the band inflated by this node's own
            // circumscribed radius.
            if (dist[idx] >= band.radius - band.half_width - circum[idx] &&
                dist[idx] <= band.radius + band.half_width + circum[idx]) {
                hit = idx;
                ++hit_count;
            }
        }
        if (hit_count == 1)
            matches.emplace_back(hit, b);
        else if (hit_count == 0 && bands_empty)
            ++*bands_empty;
        else if (hit_count >= 2 && bands_ambiguous)
            ++*bands_ambiguous;
    }
    return matches;
}

double collision_probability_bound(double rho_prime, double dist, double gamma) {
    if (!(dist > 2.0 * rho_prime))
        throw std::invalid_argument("collision_probability_bound: requires dist > 2*rho'");
    if (!(gamma > 0.0))
        throw std::invalid_argument("collision_probability_bound: gamma must be positive");
    return (2.0 / gamma) * std::sin(2.0 * rho_prime / dist);
}

double collision_probability_simplified(double rho, double dist) {
    if (!(dist > 0.0))
        throw std::invalid_argument("collision_probability_simplified: dist must be positive");
    return 4.0 * std::sqrt(2.0) * rho / (kPi * dist);
}

double failure_probability_bound(double rho, double delta_iso, long n_nodes) {
    if (!(delta_iso > 2.0 * rho))
        throw std::invalid_argument("failure_probability_bound: requires delta_iso > 2*rho");
    if (n_nodes < 0)
        throw std::invalid_argument("failure_probability_bound: negative node count");
    const double nn = static_cast<double>(n_nodes);
    const double raw = 2.0 * std::sqrt(2.0) * rho * (nn - 1.0) * nn / (kPi * delta_iso);
    return std::min(1.0, std::max(0.0, raw));
}

double isolation_delta(long n, double rho, double epsilon) {
    if (n < 1) throw std::invalid_argument("isolation_delta: degree must be positive");
    if (!(rho > 0.0) || !(epsilon > 0.0))
        throw std::invalid_argument("isolation_delta: rho and epsilon must be positive");
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    return n2 * (n2 - 1.0) * 8.0 * rho / (kPi * epsilon);
}

RootReport find_roots(const Polynomial& p, const FinderConfig& cfg) {
    cfg.validate();
    const PrecisionContext& ctx = cfg.ctx;
    const mpfr_prec_t prec = ctx.mantissa_bits;
    const long n = p.degree();

    RootReport report;
    report.n = n;
    report.rho = cfg.rho;
    report.epsilon = cfg.epsilon;
    report.eta = cfg.eta;
    report.angle_used = draw_angle(cfg.seed);
    report.error_radius = cfg.rho * std::sqrt(2.0);
    report.delta = isolation_delta(n, cfg.rho, cfg.epsilon);

    Polynomial pc = p.at_precision(ctx);
    BigFloat r1 = cauchy_root_bound(pc);

    if (r1.is_zero()) {
        // p = c x^n: one exact root cluster at the origin.
        RootApproximation ap;
        ap.point = BigComplex(prec);
        ap.multiplicity = static_cast<int>(n);
        ap.error_radius = BigFloat(prec);
        report.approximations.push_back(std::move(ap));
        report.nodes_total = 1;
        report.failure_bound = 0.0;
        return report;
    }

    // Work in coordinates where the root bound is 1 and all roots lie in
    // the unit disc; scale the resolution target accordingly.
    Polynomial ps = normalize(scale_variable(pc, r1, ctx));
    FinderConfig scaled = cfg;
    scaled.rho = (BigFloat(cfg.rho, prec) / r1).to_double();
    if (!std::isfinite(scaled.rho) || !(scaled.rho > 0.0))
        throw precision_exhausted("find_roots: resolution/scale ratio out of double range");

    FamilySet fams = build_families(ps, scaled, report.angle_used);
    std::vector<GridNode> nodes = build_grid(fams.vertical, fams.horizontal,
                                             fams.r1_bound, scaled);
    std::vector<std::pair<size_t, size_t>> matches =
        match_diagonal(fams.diagonal, nodes, &report.bands_empty, &report.bands_ambiguous);

    report.nodes_total = static_cast<long>(nodes.size());

    std::vector<bool> used(nodes.size(), false);
    const BigFloat sqrt2 = sqrt(BigFloat(2.0, prec));
    for (const auto& [node_idx, band_idx] : matches) {
        (void)band_idx;
        if (used[node_idx]) continue;
        used[node_idx] = true;
        const GridNode& nd = nodes[node_idx];
        RootApproximation ap;
        ap.point = nd.center * r1;
        ap.multiplicity = nd.multiplicity;
        ap.error_radius = nd.half_side * sqrt2 * r1;
        report.approximations.push_back(std::move(ap));
    }

    std::sort(report.approximations.begin(), report.approximations.end(),
              [](const RootApproximation& a, const RootApproximation& b) {
                  BigFloat ma = abs(a.point), mb = abs(b.point);
                  if (ma != mb) return mb < ma;
                  double aa = std::atan2(a.point.im.to_double(), a.point.re.to_double());
                  double ab = std::atan2(b.point.im.to_double(), b.point.re.to_double());
                  return aa < ab;
              });

    if (cfg.isolation_for_reporting) {
        const double delta_eff = *cfg.isolation_for_reporting;
        report.failure_bound = (delta_eff > 2.0 * cfg.rho)
                                   ? failure_probability_bound(cfg.rho, delta_eff,
                                                               report.nodes_total)
                                   : 1.0;
    } else {
        report.failure_bound = cfg.epsilon;
    }
    return report;
}

} // namespace annulus
