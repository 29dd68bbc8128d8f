#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "annulus/refine.hpp"
#include "support.hpp"
#include "testkit/testkit.hpp"

#include <cstdint>

using namespace annulus;
using test_support::near;

namespace {
const PrecisionContext ctx{256};
}

TEST_CASE("newton_refine: already at the root") {
    Polynomial p = Polynomial::from_reals({-1.0, 0.0, 1.0}, ctx);
    RefineResult r = newton_refine(p, BigComplex(1.0, 0.0, 256), BigFloat(1e-12, 256), 32, ctx);
    CHECK(r.converged);
    CHECK(r.residual.is_zero());
    CHECK(near(r.point, BigComplex(1.0, 0.0, 256), 0.0));
}

TEST_CASE("newton_refine: quadratic convergence from a close start") {
    Polynomial p = Polynomial::from_reals({-1.0, 0.0, 1.0}, ctx);
    RefineResult r = newton_refine(p, BigComplex(1.1, 0.0, 256), BigFloat(1e-12, 256), 32, ctx);
    CHECK(r.converged);
    CHECK(r.iterations <= 6);
    CHECK(near(r.point, BigComplex(1.0, 0.0, 256), 1e-12));
}

TEST_CASE("newton_refine: multiple root converges linearly") {
    // (x - 1)^2: error roughly halves per step
    Polynomial p = Polynomial::from_reals({1.0, -2.0, 1.0}, ctx);
    RefineResult slow = newton_refine(p, BigComplex(1.1, 0.0, 256), BigFloat(1e-12, 256), 5, ctx);
    CHECK(!slow.converged);
    RefineResult full = newton_refine(p, BigComplex(1.1, 0.0, 256), BigFloat(1e-12, 256), 64, ctx);
    CHECK(full.converged);
    CHECK(near(full.point, BigComplex(1.0, 0.0, 256), 1e-10));
}

TEST_CASE("newton_refine: vanishing derivative stalls without throwing") {
    Polynomial p = Polynomial::from_reals({1.0, 0.0, 1.0}, ctx); // x^2 + 1, p'(0) = 0
    RefineResult r = newton_refine(p, BigComplex(256), BigFloat(1e-12, 256), 32, ctx);
    CHECK(!r.converged);
    CHECK(r.iterations == 0);
    CHECK(r.point.is_zero());
    CHECK(r.residual.to_double() == 1.0);
}

TEST_CASE("newton_refine: residual never increases") {
    testkit::RandomSpec spec;
    spec.n = 8;
    spec.isolation = 0.2;
    auto inst = testkit::random_poly(spec, 63, ctx);
    for (const BigComplex& root : inst.roots) {
        BigComplex z0 = root + BigComplex(0.07, -0.05, 256);
        BigFloat before = abs(evaluate(inst.poly, z0, ctx));
        RefineResult r = newton_refine(inst.poly, z0, BigFloat(1e-30, 256), 40, ctx);
        CHECK(r.residual <= before);
    }
}

TEST_CASE("refine_report: x^4 - 1 residuals collapse") {
    Polynomial p = Polynomial::from_reals({-1.0, 0.0, 0.0, 0.0, 1.0}, ctx);
    FinderConfig cfg;
    cfg.rho = 1e-2;
    cfg.epsilon = 0.05;
    cfg.seed = 7;
    cfg.ctx = ctx;
    RootReport rep = refine_report(p, find_roots(p, cfg), ctx);
    REQUIRE(rep.approximations.size() == 4);
    for (const RootApproximation& a : rep.approximations) {
        REQUIRE(a.residual.has_value());
        CHECK(a.residual->to_double() <= 1e-12);
    }
}

TEST_CASE("refine_report: empty report passes through") {
    Polynomial p = Polynomial::from_reals({-1.0, 0.0, 1.0}, ctx);
    RootReport empty;
    empty.n = 2;
    RootReport out = refine_report(p, empty, ctx);
    CHECK(out.approximations.empty());
}

TEST_CASE("refine_report: cluster entries are left untouched") {
    Polynomial p = Polynomial::from_reals({-1.0, 0.0, 1.0}, ctx);
    RootReport rep;
    rep.n = 2;
    RootApproximation cluster;
    cluster.point = BigComplex(0.3, 0.0, 256);
    cluster.multiplicity = 4;
    cluster.error_radius = BigFloat(1e-3, 256);
    rep.approximations.push_back(cluster);

    RootReport out = refine_report(p, rep, ctx);
    REQUIRE(out.approximations.size() == 1);
    CHECK(near(out.approximations[0].point, BigComplex(0.3, 0.0, 256), 0.0));
    CHECK(!out.approximations[0].residual.has_value());
}
