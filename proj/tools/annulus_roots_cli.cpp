// annulus-roots: batch front-end over the annulus-grid root finder.
//
// Reads one polynomial (one coefficient per line, "re im" in decimal,
// ascending degree, '#' starts a comment line) and emits a JSON-lines
// report for the selected mode. All arbitrary-precision values are
// serialized as decimal strings that round-trip at the working precision.

#include "annulus/grid_finder.hpp"
#include "annulus/real_roots.hpp"
#include "annulus/refine.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using annulus::BigComplex;
using annulus::BigFloat;
using annulus::PrecisionContext;
using annulus::Polynomial;
using json = nlohmann::ordered_json;

// Decimal coefficient literals plus their source line, kept as text so the
// final parse happens once, directly at the working precision.
struct CoeffLiteral {
    std::string re;
    std::string im; // empty means an exact zero imaginary part
    int line = 0;
};

struct ParseError {
    int line;
    std::string message;
};

std::vector<CoeffLiteral> read_coefficients(std::istream& in, ParseError& err) {
    std::vector<CoeffLiteral> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream tokens(line);
        std::string re, im, extra;
        if (!(tokens >> re) || re[0] == '#')
            continue; // blank or comment line
        if (tokens >> im && im[0] == '#')
            im.clear();
        if (!im.empty() && tokens >> extra && extra[0] != '#') {
            err = {lineno, "expected 're' or 're im', got extra token '" + extra + "'"};
            return {};
        }
        out.push_back({re, im, lineno});
    }
    return out;
}

Polynomial build_polynomial(const std::vector<CoeffLiteral>& lits,
                            const PrecisionContext& ctx, ParseError& err) {
    std::vector<BigComplex> coeffs;
    coeffs.reserve(lits.size());
    for (const auto& lit : lits) {
        try {
            BigFloat re(lit.re, ctx.mantissa_bits);
            BigFloat im = lit.im.empty() ? BigFloat(ctx.mantissa_bits)
                                         : BigFloat(lit.im, ctx.mantissa_bits);
            coeffs.emplace_back(std::move(re), std::move(im));
        } catch (const std::invalid_argument& e) {
            err = {lit.line, e.what()};
            return Polynomial({BigComplex(0.0, 0.0, 64), BigComplex(1.0, 0.0, 64)});
        }
    }
    return Polynomial(std::move(coeffs));
}

std::string decimal(const BigFloat& x) { return x.to_string(); }

json root_record(const annulus::RootApproximation& ap) {
    json rec;
    rec["record"] = "root";
    rec["re"] = decimal(ap.point.re);
    rec["im"] = decimal(ap.point.im);
    rec["multiplicity"] = ap.multiplicity;
    rec["error_radius"] = decimal(ap.error_radius);
    rec["residual"] = ap.residual ? json(decimal(*ap.residual)) : json(nullptr);
    return rec;
}

json family_record(const char* axis, const annulus::AnnulusFamily& fam,
                   const BigFloat& scale) {
    json rec;
    rec["record"] = "family";
    rec["axis"] = axis;
    rec["center_re"] = decimal(fam.center.re * scale);
    rec["center_im"] = decimal(fam.center.im * scale);
    json annuli = json::array();
    for (const auto& a : fam.annuli) {
        json one;
        one["radius"] = decimal(a.radius * scale);
        one["half_width"] = decimal(a.half_width * scale);
        one["multiplicity"] = a.multiplicity;
        annuli.push_back(std::move(one));
    }
    rec["annuli"] = std::move(annuli);
    return rec;
}

json node_record(const annulus::GridNode& nd, const BigFloat& scale) {
    json rec;
    rec["record"] = "node";
    rec["re"] = decimal(nd.center.re * scale);
    rec["im"] = decimal(nd.center.im * scale);
    rec["half_side"] = decimal(nd.half_side * scale);
    rec["multiplicity"] = nd.multiplicity;
    return rec;
}

void emit(std::ostream& out, const json& rec) { out << rec.dump() << "\n"; }

// Re-runs the geometry stages of find_roots with the same scaling so the
// dumped annuli and nodes land in the input's coordinates.
void dump_geometry(std::ostream& out, const Polynomial& p,
                   const annulus::FinderConfig& cfg, double phi) {
    Polynomial pc = p.at_precision(cfg.ctx);
    BigFloat r1 = annulus::cauchy_root_bound(pc);
    if (r1.is_zero())
        return; // degenerate c*x^n instance has no grid
    Polynomial ps = annulus::normalize(annulus::scale_variable(pc, r1, cfg.ctx));
    annulus::FinderConfig scaled = cfg;
    scaled.rho = (BigFloat(cfg.rho, cfg.ctx.mantissa_bits) / r1).to_double();
    annulus::FamilySet fams = annulus::build_families(ps, scaled, phi);
    emit(out, family_record("vertical", fams.vertical, r1));
    emit(out, family_record("horizontal", fams.horizontal, r1));
    emit(out, family_record("diagonal", fams.diagonal, r1));
    for (const auto& nd :
         annulus::build_grid(fams.vertical, fams.horizontal, fams.r1_bound, scaled))
        emit(out, node_record(nd, r1));
}

int run_complex(std::ostream& out, const Polynomial& p, const annulus::FinderConfig& cfg,
                bool refine, bool geometry, const char* mode) {
    annulus::RootReport report = annulus::find_roots(p, cfg);
    if (refine)
        report = annulus::refine_report(p, std::move(report), cfg.ctx);

    json header;
    header["record"] = "header";
    header["mode"] = mode;
    header["n"] = report.n;
    header["rho"] = report.rho;
    header["epsilon"] = report.epsilon;
    header["eta"] = report.eta;
    header["phi"] = report.angle_used;
    header["delta"] = report.delta;
    header["failure_bound"] = report.failure_bound;
    header["nodes_total"] = report.nodes_total;
    header["precision_bits"] = static_cast<long>(cfg.ctx.mantissa_bits);
    emit(out, header);

    for (const auto& ap : report.approximations)
        emit(out, root_record(ap));
    if (geometry)
        dump_geometry(out, p, cfg, report.angle_used);
    return 0;
}

int run_real(std::ostream& out, const Polynomial& p, double rho,
             const PrecisionContext& ctx) {
    auto intervals = annulus::real_root_intervals(p, rho, ctx);
    json header;
    header["record"] = "header";
    header["mode"] = "real";
    header["n"] = p.degree();
    header["rho"] = rho;
    header["intervals"] = static_cast<long>(intervals.size());
    header["precision_bits"] = static_cast<long>(ctx.mantissa_bits);
    emit(out, header);
    for (const auto& iv : intervals) {
        json rec;
        rec["record"] = "interval";
        rec["lo"] = decimal(iv.lo);
        rec["hi"] = decimal(iv.hi);
        rec["multiplicity_hint"] = iv.multiplicity_hint;
        emit(out, rec);
    }
    return 0;
}

int run_radii(std::ostream& out, const Polynomial& p, double theta,
              const PrecisionContext& ctx) {
    annulus::RadiiEstimate est = annulus::estimate_radii(p, theta, ctx);
    json header;
    header["record"] = "header";
    header["mode"] = "radii";
    header["n"] = p.degree();
    header["theta"] = est.theta;
    header["precision_bits"] = static_cast<long>(ctx.mantissa_bits);
    emit(out, header);
    for (const auto& r : est.radii) {
        json rec;
        rec["record"] = "radius";
        rec["value"] = decimal(r);
        emit(out, rec);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximate complex roots and root clusters of a univariate "
                 "polynomial with an annulus-grid search"};
    app.name("annulus-roots");

    std::string mode = "complex";
    double rho = 1e-3;
    double epsilon = 0.05;
    double theta = 1.05;
    double eta = 100.0;
    std::uint64_t seed = 0;
    long precision_bits = 0;
    bool refine = true;
    bool geometry = false;
    std::string output_path;
    std::string input_path;

    app.add_option("--mode", mode, "Pipeline to run")
        ->check(CLI::IsMember({"complex", "real", "radii", "clusters"}))
        ->capture_default_str();
    app.add_option("--rho", rho, "Grid resolution target (absolute)")
        ->capture_default_str();
    app.add_option("--epsilon", epsilon, "Failure probability budget")
        ->capture_default_str();
    app.add_option("--theta", theta, "Relative factor for radii mode")
        ->capture_default_str();
    app.add_option("--eta", eta, "Shift distance in units of the root bound")
        ->capture_default_str();
    app.add_option("--seed", seed, "Seed for the diagonal-angle draw")
        ->capture_default_str();
    app.add_option("--precision-bits", precision_bits,
                   "Working mantissa bits (default: sized from the input)");
    app.add_flag("--refine,!--no-refine", refine,
                 "Newton-polish simple roots (complex mode)");
    app.add_flag("--dump-geometry", geometry,
                 "Also emit annulus and grid-node records");
    app.add_option("--output", output_path, "Write the report here instead of stdout");
    app.add_option("input", input_path, "Coefficient file, '-' for stdin")->required();

    CLI11_PARSE(app, argc, argv);

    const auto t0 = std::chrono::steady_clock::now();

    // Pass 1: collect the decimal literals.
    ParseError perr{0, ""};
    std::vector<CoeffLiteral> lits;
    if (input_path == "-") {
        lits = read_coefficients(std::cin, perr);
    } else {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "annulus-roots: cannot open '" << input_path << "'\n";
            return 1;
        }
        lits = read_coefficients(in, perr);
    }
    const std::string where = input_path == "-" ? "<stdin>" : input_path;
    if (perr.line) {
        std::cerr << where << ":" << perr.line << ": " << perr.message << "\n";
        return 1;
    }
    if (lits.size() < 2) {
        std::cerr << where << ": need at least two coefficients (degree >= 1), got "
                  << lits.size() << "\n";
        return 1;
    }

    try {
        // Pass 2: a provisional parse sizes the default precision from the
        // degree and coefficient height, then the literals are re-read at
        // the working precision so decimal inputs lose nothing.
        Polynomial provisional = build_polynomial(lits, PrecisionContext{320}, perr);
        if (perr.line) {
            std::cerr << where << ":" << perr.line << ": " << perr.message << "\n";
            return 1;
        }
        long bits = precision_bits;
        if (bits <= 0) {
            if (const char* env = std::getenv("ANNULUS_ROOTS_PRECISION"))
                bits = std::atol(env);
        }
        PrecisionContext ctx{bits > 0 ? bits : annulus::default_context(provisional).mantissa_bits};
        ctx.validate();
        Polynomial p = build_polynomial(lits, ctx, perr);

        std::ofstream file_out;
        if (!output_path.empty()) {
            file_out.open(output_path);
            if (!file_out) {
                std::cerr << "annulus-roots: cannot write '" << output_path << "'\n";
                return 1;
            }
        }
        std::ostream& out = output_path.empty() ? std::cout : file_out;

        int rc = 0;
        if (mode == "complex" || mode == "clusters") {
            annulus::FinderConfig cfg;
            cfg.rho = rho;
            cfg.epsilon = epsilon;
            cfg.eta = eta;
            cfg.seed = seed;
            cfg.ctx = ctx;
            // clusters mode reports the matched node discs untouched
            const bool polish = mode == "complex" && refine;
            rc = run_complex(out, p, cfg, polish, geometry, mode.c_str());
        } else if (mode == "real") {
            rc = run_real(out, p, rho, ctx);
        } else {
            rc = run_radii(out, p, theta, ctx);
        }
        out.flush();

        const auto t1 = std::chrono::steady_clock::now();
        std::cerr << "wall_time_ms="
                  << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  << "\n";
        return rc;
    } catch (const annulus::precision_exhausted& e) {
        std::cerr << "annulus-roots: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "annulus-roots: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "annulus-roots: " << e.what() << "\n";
        return 2;
    }
}
