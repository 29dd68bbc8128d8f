// Acceptance gate for the annulus-grid root finder. Each criterion prints
// exactly one line:
//
//   criterion N: PASS — <detail> (<elapsed>)
//   criterion N: FAIL — <detail> (<elapsed>)
//
// and the process exits nonzero on failure. Criteria with a stated runtime
// budget enforce it on their own measured wall time. Usage:
//
//   acceptance [all|<1..10>] [path-to-annulus-roots]
//
// The CLI path is used by criterion 10 only; when omitted, a binary named
// annulus-roots next to this executable is tried.

#include "annulus/grid_finder.hpp"
#include "annulus/real_roots.hpp"
#include "annulus/refine.hpp"
#include "support.hpp"
#include "testkit/testkit.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace annulus;
using namespace annulus::testkit;
using annulus::test_support::multiset_match;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Multiplicative slack on factor-bound checks: the reference radii come
// from the oracle (or the construction roots), which are exact only to
// ~2^-128, far tighter than any factor tested here.
constexpr double kSlack = 1.0 + 1e-9;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::vector<BigFloat> sorted_moduli_desc(const std::vector<BigComplex>& pts) {
    std::vector<BigFloat> out;
    out.reserve(pts.size());
    for (const auto& z : pts) out.push_back(abs(z));
    std::sort(out.begin(), out.end(), [](const BigFloat& a, const BigFloat& b) { return b < a; });
    return out;
}

/// Largest of ratio/factor and (1/factor)/ratio over all index-wise pairs;
/// <= 1 means every ratio sits inside [1/factor, factor].
double worst_factor_excess(const std::vector<BigFloat>& est,
                           const std::vector<BigFloat>& truth, double factor) {
    double worst = 0.0;
    for (size_t j = 0; j < est.size(); ++j) {
        double ratio = (est[j] / truth[j]).to_double();
        worst = std::max(worst, ratio / factor);
        worst = std::max(worst, 1.0 / (factor * ratio));
    }
    return worst;
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f s", s);
    return buf;
}

// ---- criterion 1: certified factor against oracle radii -------------------

Outcome criterion_1() {
    PrecisionContext ctx{256};
    const long ns[] = {4, 8, 16, 32, 64};
    const double thetas[] = {2.0, 1.25, 1.05};
    long checked = 0;
    double worst = 0.0;
    for (long n : ns) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            RandomSpec spec;
            spec.n = n;
            RandomInstance inst = random_poly(spec, seed, ctx);
            auto truth = sorted_moduli_desc(oracle_roots(inst.poly, ctx));
            for (double theta : thetas) {
                RadiiEstimate est = estimate_radii(inst.poly, theta, ctx);
                worst = std::max(worst, worst_factor_excess(est.radii, truth, theta));
                ++checked;
            }
        }
    }
    std::ostringstream os;
    os << checked << " estimates over n in {4..64}, theta in {2, 1.25, 1.05}; worst ratio at "
       << worst << " of the allowed factor";
    return {worst <= kSlack, os.str()};
}

// ---- criterion 2: hull-only estimates within factor 2n --------------------

Outcome criterion_2() {
    PrecisionContext ctx{256};
    const long ns[] = {4, 8, 16, 32, 64};
    long checked = 0;
    double worst = 0.0;
    for (long n : ns) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            RandomSpec spec;
            spec.n = n;
            RandomInstance inst = random_poly(spec, seed, ctx);
            auto truth = sorted_moduli_desc(inst.roots);
            RadiiEstimate est = newton_polygon_radii(inst.poly);
            worst = std::max(worst, worst_factor_excess(est.radii, truth, 2.0 * double(n)));
            ++checked;
        }
    }
    std::ostringstream os;
    os << checked << " hull estimates; worst ratio at " << worst << " of the allowed 2n";
    return {worst <= kSlack, os.str()};
}

// ---- criterion 3: root squaring squares the root multiset -----------------

Outcome criterion_3() {
    PrecisionContext ctx{256};
    long ok = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RandomSpec spec;
        spec.n = 1 + long(seed % 8);
        RandomInstance inst = random_poly(spec, seed, ctx);
        Polynomial g = graeffe_step(inst.poly, ctx);
        std::vector<BigComplex> squares;
        for (const auto& r : oracle_roots(inst.poly, ctx)) squares.push_back(r * r);
        if (multiset_match(squares, oracle_roots(g, ctx), 1e-15, /*relative=*/true)) ++ok;
    }
    std::ostringstream os;
    os << ok << "/100 squared multisets matched within 1e-15 relative";
    return {ok == 100, os.str()};
}

// ---- criterion 4: distances from a point, x^2 - 1 -------------------------

Outcome criterion_4() {
    PrecisionContext ctx{256};
    Polynomial p = Polynomial::from_reals({-1.0, 0.0, 1.0}, ctx);
    const double theta = 1.05;
    struct Case {
        BigComplex z;
        double d0, d1; // expected distances, descending
    };
    const Case cases[] = {
        {BigComplex(0.0, 0.0, 256), 1.0, 1.0},
        {BigComplex(3.0, 0.0, 256), 4.0, 2.0},
        {BigComplex(0.0, 1.0, 256), std::sqrt(2.0), std::sqrt(2.0)},
    };
    double worst = 0.0;
    for (const Case& c : cases) {
        RadiiEstimate est = distances_from_point(p, c.z, theta, ctx);
        std::vector<BigFloat> truth{BigFloat(c.d0, 256), BigFloat(c.d1, 256)};
        worst = std::max(worst, worst_factor_excess(est.radii, truth, theta));
    }
    std::ostringstream os;
    os << "z in {0, 3, i}; worst ratio at " << worst << " of the allowed 1.05";
    return {worst <= kSlack, os.str()};
}

// ---- criterion 5: four unit roots plus a tight 4-cluster at the origin ----

Outcome criterion_5() {
    const mpfr_prec_t prec = 1024;
    PrecisionContext ctx{prec};
    // p = (x^4 - 1)(x^4 - 1e-200) = x^8 - (1 + 1e-200) x^4 + 1e-200
    BigFloat c("1e-200", prec);
    std::vector<BigComplex> coeffs(9, BigComplex(prec));
    coeffs[0] = BigComplex(c, BigFloat(prec));
    coeffs[4] = BigComplex(-(BigFloat(1.0, prec) + c), BigFloat(prec));
    coeffs[8] = BigComplex(1.0, 0.0, prec);
    Polynomial p{std::move(coeffs)};

    const double rho = 1e-3;
    const double within = rho * std::sqrt(2.0);
    const BigComplex units[] = {
        BigComplex(1.0, 0.0, prec),
        BigComplex(-1.0, 0.0, prec),
        BigComplex(0.0, 1.0, prec),
        BigComplex(0.0, -1.0, prec),
    };

    int successes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        FinderConfig cfg;
        cfg.rho = rho;
        cfg.seed = seed;
        cfg.ctx = ctx;
        RootReport report = find_roots(p, cfg);

        bool units_found = true;
        for (const BigComplex& u : units) {
            bool hit = false;
            for (const auto& ap : report.approximations)
                if (ap.multiplicity == 1 && abs(ap.point - u).to_double() <= within) hit = true;
            units_found = units_found && hit;
        }
        bool cluster_found = false;
        for (const auto& ap : report.approximations)
            if (ap.multiplicity == 4 && abs(ap.point) <= ap.error_radius) cluster_found = true;
        if (units_found && cluster_found) ++successes;
    }
    std::ostringstream os;
    os << successes << "/100 seeds produced the 4 simple unit roots and the "
          "multiplicity-4 origin cluster";
    return {successes >= 95, os.str()};
}

// ---- criterion 6: Monte Carlo miss rate vs the failure bound --------------

Outcome criterion_6() {
    PrecisionContext ctx{256};
    RandomSpec spec;
    spec.n = 8;
    spec.isolation = 0.5;
    RandomInstance inst = random_poly(spec, 2026, ctx);

    const double rho = 1e-4;
    const double within = rho * std::sqrt(2.0);
    const int runs = 500;
    int misses = 0;
    long n_nodes_max = 0;
    for (std::uint64_t seed = 0; seed < std::uint64_t(runs); ++seed) {
        FinderConfig cfg;
        cfg.rho = rho;
        cfg.seed = seed;
        cfg.ctx = ctx;
        RootReport report = find_roots(inst.poly, cfg);
        n_nodes_max = std::max(n_nodes_max, report.nodes_total);
        bool missed = false;
        for (const auto& root : inst.roots) {
            bool hit = false;
            for (const auto& ap : report.approximations)
                if (abs(ap.point - root).to_double() <= within) hit = true;
            if (!hit) missed = true;
        }
        if (missed) ++misses;
    }
    const double bound = failure_probability_bound(rho, spec.isolation, n_nodes_max);
    const double sigma = std::sqrt(bound * (1.0 - bound) / double(runs));
    const double frac = double(misses) / double(runs);
    std::ostringstream os;
    os << misses << "/" << runs << " runs missed a root (fraction " << frac
       << "), bound " << bound << " + 3 sigma = " << bound + 3.0 * sigma;
    return {frac <= bound + 3.0 * sigma, os.str()};
}

// ---- criterion 7: printed-formula reproduction ----------------------------

Outcome criterion_7() {
    const double delta = isolation_delta(4, 1e-3, 0.01);
    const double bound = failure_probability_bound(0.001, 1.0, 16);
    std::ostringstream os;
    os << "isolation_delta(4, 1e-3, 0.01) = " << delta
       << ", failure_probability_bound(0.001, 1, 16) = " << bound;
    bool pass = std::abs(delta - 61.115) <= 1e-3 && std::abs(bound - 0.2161) <= 1e-4;
    return {pass, os.str()};
}

// ---- criterion 8: real-axis candidates cover every real root --------------

Outcome criterion_8() {
    PrecisionContext ctx{256};
    const long ns[] = {3, 4, 8, 16, 32, 64};
    const double rho = 1e-4;
    long covered = 0, real_roots_total = 0;
    bool counts_ok = true, cover_ok = true;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RandomSpec spec;
        spec.n = ns[seed % 6];
        spec.real_coefficients = true;
        RandomInstance inst = random_poly(spec, seed, ctx);
        auto intervals = real_root_intervals(inst.poly, rho, ctx);
        if (long(intervals.size()) > 2 * spec.n) counts_ok = false;
        for (const auto& z : oracle_roots(inst.poly, ctx)) {
            if (std::abs(z.im.to_double()) > 1e-30) continue; // conjugate pair member
            ++real_roots_total;
            const double x = z.re.to_double();
            bool inside = false;
            for (const auto& iv : intervals)
                if (iv.lo.to_double() - 1e-25 <= x && x <= iv.hi.to_double() + 1e-25)
                    inside = true;
            if (inside) ++covered;
            else cover_ok = false;
        }
    }
    std::ostringstream os;
    os << covered << "/" << real_roots_total
       << " real oracle roots covered; interval counts <= 2n: " << (counts_ok ? "yes" : "no");
    return {cover_ok && counts_ok, os.str()};
}

// ---- criterion 9: refined simple roots agree with the oracle --------------

Outcome criterion_9() {
    PrecisionContext ctx{256};
    const long ns[] = {4, 6, 8};
    int successes = 0;
    double worst_isolation = 1e9;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const long n = ns[seed % 3];
        // Jittered roots of unity at a random scale and rotation: random
        // instances whose pairwise separation stays >= 0.3 after the
        // root-bound scaling (asserted below, not assumed).
        std::mt19937_64 gen(0x9e3779b97f4a7c15ULL ^ seed);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        const double scale = 0.5 + 0.75 * (uni(gen) + 1.0);
        const double rot = kPi * uni(gen);
        std::vector<BigComplex> roots;
        for (long j = 0; j < n; ++j) {
            const double r = scale * (1.0 + 0.01 * uni(gen));
            const double a = rot + 2.0 * kPi * double(j) / double(n) + 0.02 * uni(gen);
            roots.emplace_back(r * std::cos(a), r * std::sin(a), 256);
        }
        Polynomial p = poly_from_roots(roots, ctx);

        double dmin = 1e300;
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j)
                dmin = std::min(dmin, abs(roots[i] - roots[j]).to_double());
        const double isolation = dmin / cauchy_root_bound(p).to_double();
        worst_isolation = std::min(worst_isolation, isolation);
        if (isolation < 0.3) {
            std::ostringstream os;
            os << "instance for seed " << seed << " violates the corpus constraint: "
               << "scaled isolation " << isolation << " < 0.3";
            return {false, os.str()};
        }

        FinderConfig cfg;
        cfg.rho = 1e-6;
        cfg.seed = seed;
        cfg.ctx = ctx;
        RootReport report = refine_report(p, find_roots(p, cfg), ctx);

        std::vector<BigComplex> refined;
        for (const auto& ap : report.approximations)
            if (ap.multiplicity == 1) refined.push_back(ap.point);
        if (refined.size() == size_t(n) &&
            multiset_match(oracle_roots(p, ctx), refined, 1e-10))
            ++successes;
    }
    std::ostringstream os;
    os << successes << "/200 runs matched the oracle to 1e-10 (worst scaled isolation "
       << worst_isolation << ")";
    return {successes >= 198, os.str()};
}

// ---- criterion 10: byte-identical CLI reruns -------------------------------

std::string read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Outcome criterion_10(const std::string& cli) {
    namespace fs = std::filesystem;
    if (cli.empty())
        return {false, "no CLI path given; run as `acceptance 10 <path-to-annulus-roots>`"};
    fs::path dir = fs::temp_directory_path() / "annulus-acceptance-10";
    fs::create_directories(dir);
    fs::path input = dir / "p.txt";
    {
        std::ofstream out(input);
        out << "# x^4 - 1\n-1\n0\n0\n0\n1\n";
    }
    const std::string invocations[] = {
        " --mode complex --rho 1e-3 --epsilon 0.01 --seed 7 --dump-geometry ",
        " --mode clusters --rho 1e-2 --seed 3 ",
        " --mode radii --theta 1.05 ",
        " --mode real --rho 1e-4 ",
    };
    int pairs_identical = 0;
    for (size_t i = 0; i < 4; ++i) {
        fs::path out1 = dir / ("out" + std::to_string(i) + "a.jsonl");
        fs::path out2 = dir / ("out" + std::to_string(i) + "b.jsonl");
        for (const fs::path& out : {out1, out2}) {
            std::string cmd = "'" + cli + "'" + invocations[i] + "--output '" +
                              out.string() + "' '" + input.string() + "' 2>/dev/null";
            if (std::system(cmd.c_str()) != 0)
                return {false, "CLI exited nonzero for:" + invocations[i]};
        }
        std::string a = read_all(out1), b = read_all(out2);
        if (!a.empty() && a == b) ++pairs_identical;
    }
    std::ostringstream os;
    os << pairs_identical << "/4 invocation pairs byte-identical";
    return {pairs_identical == 4, os.str()};
}

} // namespace

namespace {

bool run_criterion(int which, const std::string& cli) {
    // Stated runtime budgets, seconds; 0 = no budget stated.
    const double budgets[11] = {0, 120, 30, 30, 1, 120, 300, 0, 60, 180, 0};

    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        switch (which) {
        case 1: out = criterion_1(); break;
        case 2: out = criterion_2(); break;
        case 3: out = criterion_3(); break;
        case 4: out = criterion_4(); break;
        case 5: out = criterion_5(); break;
        case 6: out = criterion_6(); break;
        case 7: out = criterion_7(); break;
        case 8: out = criterion_8(); break;
        case 9: out = criterion_9(); break;
        case 10: out = criterion_10(cli); break;
        default: return false;
        }
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double elapsed = std::chrono::duration<double>(t1 - t0).count();
    if (budgets[which] > 0 && elapsed > budgets[which]) {
        out.pass = false;
        out.detail += " [over the " + std::to_string(long(budgets[which])) + " s budget]";
    }

    std::printf("criterion %d: %s — %s (%s)\n", which, out.pass ? "PASS" : "FAIL",
                out.detail.c_str(), format_seconds(elapsed).c_str());
    std::fflush(stdout);
    return out.pass;
}

std::string default_cli_path() {
    std::error_code ec;
    auto self = std::filesystem::read_symlink("/proc/self/exe", ec);
    if (ec) return "";
    auto guess = self.parent_path() / "annulus-roots";
    return std::filesystem::exists(guess, ec) ? guess.string() : "";
}

} // namespace

int main(int argc, char** argv) {
    const std::string selector = argc > 1 ? argv[1] : "all";
    std::string cli = argc > 2 ? argv[2] : default_cli_path();

    if (selector == "all") {
        bool all_pass = true;
        for (int which = 1; which <= 10; ++which)
            all_pass = run_criterion(which, cli) && all_pass;
        return all_pass ? 0 : 1;
    }
    const int which = std::atoi(selector.c_str());
    if (which < 1 || which > 10) {
        std::fprintf(stderr, "usage: acceptance [all|<1..10>] [path-to-annulus-roots]\n");
        return 2;
    }
    return run_criterion(which, cli) ? 0 : 1;
}
