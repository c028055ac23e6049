#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "vlab/builtin_regions.hpp"
#include "vlab/components.hpp"
#include "vlab/curvature.hpp"
#include "vlab/cylinder.hpp"
#include "vlab/rng.hpp"

using namespace vlab;

TEST_CASE("builtin region membership") {
    const auto ball = ball_region(3, 1.0);
    CHECK(ball.inside({0.0, 0.0, 0.0}));
    CHECK_FALSE(ball.inside({2.0, 0.0, 0.0}));

    const auto uni = union_balls_region(3, {-0.8, 0.0, 0.0}, 1.0, {0.8, 0.0, 0.0}, 1.0);
    CHECK(uni.inside({0.0, 0.0, 0.0}));   // lens
    CHECK(uni.inside({1.6, 0.0, 0.0}));   // far side of one ball
    CHECK_FALSE(uni.inside({3.0, 0.0, 0.0}));

    const auto torus = torus_region(2.0, 0.5);
    CHECK(torus.signed_dist({2.5, 0.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(torus.inside({2.0, 0.0, 0.2}));
    CHECK_FALSE(torus.inside({0.0, 0.0, 0.0}));

    CHECK_THROWS_AS(torus_region(2.0, 2.5), Error);
    CHECK_THROWS_AS(union_balls_region(2, {-3.0, 0.0}, 1.0, {3.0, 0.0}, 1.0), Error);
    CHECK_THROWS_AS(union_balls_region(2, {0.0, 0.0}, 2.0, {0.1, 0.0}, 0.5), Error);

    const auto l = l_shape_region(2);
    CHECK(l.inside({-0.5, 0.5}));
    CHECK(l.inside({0.5, -0.5}));
    CHECK_FALSE(l.inside({0.5, 0.5}));
    CHECK_FALSE(l.inside({0.0, 0.0})); // the closed quadrant corner is removed
}

TEST_CASE("signed distance sign agrees with membership") {
    Rng rng(101ULL);
    const auto regions = {ball_region(3, 1.0), torus_region(2.0, 0.5), l_shape_region(3),
                          union_balls_region(3, {-0.8, 0.0, 0.0}, 1.0, {0.8, 0.0, 0.0}, 1.0)};
    for (const auto& r : regions) {
        for (int trial = 0; trial < 500; ++trial) {
            Vec x(3);
            for (int i = 0; i < 3; ++i)
                x[static_cast<std::size_t>(i)] =
                    rng.uniform(r.bbox.lo[static_cast<std::size_t>(i)], r.bbox.hi[static_cast<std::size_t>(i)]);
            const double sd = r.signed_dist(x);
            if (std::fabs(sd) <= 1e-9) continue;
            CHECK(r.inside(x) == (sd < 0.0));
        }
    }
}

TEST_CASE("cylinder part samples") {
    Cylinder c;
    c.split_k = 1;
    c.a = 1.0;
    c.b = 1.0;
    c.center = zeros(3);
    c.frame = Mat::identity(3);

    for (const Vec& p : cylinder_points(c, CylinderPart::Lateral, 8))
        CHECK(std::fabs(std::fabs(p[0]) - 1.0) <= 1e-12);

    for (const Vec& p : cylinder_points(c, CylinderPart::Closure, 8)) {
        const double first = std::fabs(p[0]);
        const double second = std::sqrt(p[1] * p[1] + p[2] * p[2]);
        CHECK(std::max(first, second) <= 1.0 + 1e-12);
    }

    for (const Vec& p : cylinder_points(c, CylinderPart::Interior, 8)) {
        const double first = std::fabs(p[0]);
        const double second = std::sqrt(p[1] * p[1] + p[2] * p[2]);
        CHECK(first < 1.0);
        CHECK(second < 1.0);
    }

    CHECK_THROWS_AS(cylinder_points(c, CylinderPart::Closure, 1), Error);
}

TEST_CASE("cylinder sampling commutes with rigid maps exactly") {
    Rng rng(55ULL);
    Cylinder c;
    c.split_k = 2;
    c.a = 0.7;
    c.b = 0.4;
    c.center = {0.1, -0.2, 0.3};
    c.frame = random_orthogonal(3, rng);

    const Mat Q = random_orthogonal(3, rng);
    const Vec shift = {1.0, 2.0, -0.5};

    Cylinder moved = c;
    moved.center = add(Q.apply(c.center), shift);
    moved.frame = Q.times(c.frame);

    for (auto part : {CylinderPart::Interior, CylinderPart::Lateral, CylinderPart::Closure}) {
        const auto base = cylinder_points(c, part, 6);
        const auto after = cylinder_points(moved, part, 6);
        REQUIRE(base.size() == after.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            const Vec expect = add(Q.apply(base[i]), shift);
            CHECK(dist(expect, after[i]) <= 1e-12);
        }
    }

    // lateral and interior samples are contained in the closure sample
    const auto closure = cylinder_points(c, CylinderPart::Closure, 6);
    const auto key = [](const Vec& p) {
        return std::make_tuple(std::round(p[0] * 1e12), std::round(p[1] * 1e12), std::round(p[2] * 1e12));
    };
    std::set<std::tuple<double, double, double>> closure_keys;
    for (const Vec& p : closure) closure_keys.insert(key(p));
    for (auto part : {CylinderPart::Lateral, CylinderPart::Interior})
        for (const Vec& p : cylinder_points(c, part, 6)) CHECK(closure_keys.count(key(p)) == 1);
}

TEST_CASE("connected components") {
    GridSpec grid;
    grid.box = cube_box(2, 3.0);
    grid.resolution = 31;
    grid.fd_step = 1e-4;

    // two disjoint balls: hand-built region
    RegionSpec two;
    two.dim = 2;
    two.bbox = grid.box;
    two.inside = [](const Vec& x) {
        return dist(x, {-1.5, 0.0}) < 0.8 || dist(x, {1.5, 0.0}) < 0.8;
    };
    const auto comps = connected_components(two, grid);
    CHECK(comps.size() == 2);

    const auto uni = union_balls_region(2, {-0.8, 0.0}, 1.0, {0.8, 0.0}, 1.0);
    CHECK(connected_components(uni, grid).size() == 1);

    const auto s = slab_region(2, {0.0, 1.0}, -0.5, 0.5);
    CHECK(connected_components(s, grid).size() == 1);

    RegionSpec empty;
    empty.dim = 2;
    empty.bbox = grid.box;
    empty.inside = [](const Vec&) { return false; };
    CHECK_THROWS_AS(connected_components(empty, grid), Error);

    // partition: component sizes add up to the inside count
    std::size_t inside_count = 0;
    grid.for_each([&](const Vec& x) {
        if (two.inside(x)) ++inside_count;
    });
    std::size_t total = 0;
    for (const auto& c : comps) total += c.size();
    CHECK(total == inside_count);
}

TEST_CASE("component convexity verdicts") {
    GridSpec grid;
    grid.box = cube_box(2, 1.6);
    grid.resolution = 25;
    grid.fd_step = 1e-4;
    Rng rng(2025ULL);

    const auto disk = ball_region(2, 1.0);
    auto comps = connected_components(disk, grid);
    REQUIRE(comps.size() == 1);
    CHECK(is_component_convex(comps[0], disk, 4000, rng).convex);

    const auto l = l_shape_region(2);
    comps = connected_components(l, grid);
    REQUIRE(comps.size() == 1);
    const auto lw = is_component_convex(comps[0], l, 4000, rng);
    CHECK_FALSE(lw.convex);
    CHECK(l.inside(lw.x));
    CHECK(l.inside(lw.y));
    CHECK_FALSE(l.inside(lw.midpoint));

    GridSpec wide = grid;
    wide.box = cube_box(2, 2.0);
    const auto uni = union_balls_region(2, {-0.8, 0.0}, 1.0, {0.8, 0.0}, 1.0);
    comps = connected_components(uni, wide);
    REQUIRE(comps.size() == 1);
    const auto uw = is_component_convex(comps[0], uni, 6000, rng);
    CHECK_FALSE(uw.convex);
    // the witness midpoint sits outside, above or below the lens waist
    CHECK(std::fabs(uw.midpoint[1]) > 0.4);
}

TEST_CASE("principal curvatures: ball, halfspace, torus") {
    const auto ball = ball_region(3, 1.0);
    const auto pc = principal_curvatures(ball, {1.0, 0.0, 0.0});
    REQUIRE(pc.kappas.size() == 2);
    CHECK(std::fabs(pc.kappas[0] - 1.0) <= 1e-6);
    CHECK(std::fabs(pc.kappas[1] - 1.0) <= 1e-6);

    const auto ball2 = ball_region(2, 2.0);
    const auto pc2 = principal_curvatures(ball2, {0.0, 2.0});
    REQUIRE(pc2.kappas.size() == 1);
    CHECK(std::fabs(pc2.kappas[0] - 0.5) <= 1e-6);

    const auto hs = halfspace_region(3, {0.0, 0.0, 1.0});
    const auto ph = principal_curvatures(hs, {0.2, -0.1, 0.0});
    CHECK(std::fabs(ph.kappas[0]) <= 1e-8);
    CHECK(std::fabs(ph.kappas[1]) <= 1e-8);

    const auto torus = torus_region(2.0, 0.5);
    // outer equator: kappas (1/2.5, 1/0.5)
    const auto po = principal_curvatures(torus, {2.5, 0.0, 0.0});
    CHECK(std::fabs(po.kappas[0] - 0.4) <= 1e-3);
    CHECK(std::fabs(po.kappas[1] - 2.0) <= 1e-3);
    // inner equator: kappas (-1/1.5, 1/0.5)
    const auto pi_ = principal_curvatures(torus, {1.5, 0.0, 0.0});
    CHECK(std::fabs(pi_.kappas[0] + 1.0 / 1.5) <= 1e-3);
    CHECK(std::fabs(pi_.kappas[1] - 2.0) <= 1e-3);

    CHECK_THROWS_AS(principal_curvatures(ball, {0.5, 0.0, 0.0}), Error); // not on boundary
}

TEST_CASE("curvature sign convention: convex builtins have kappa >= 0") {
    GridSpec grid;
    grid.box = cube_box(3, 1.4);
    grid.resolution = 9;
    grid.fd_step = 1e-4;
    for (const auto& r : {ball_region(3, 1.0), halfspace_region(3, {0.0, 0.0, 1.0}),
                          slab_region(3, {0.0, 0.0, 1.0}, -0.7, 0.7)}) {
        for (const Vec& b : boundary_sample(r, grid)) {
            const auto pc = principal_curvatures(r, b);
            for (double k : pc.kappas) CHECK(k >= -1e-8);
        }
    }
}

TEST_CASE("curvature is rigid invariant") {
    Rng rng(4242ULL);
    const auto torus = torus_region(2.0, 0.5);
    const Mat Q = random_orthogonal(3, rng);
    const Vec shift = {0.3, -1.0, 0.7};
    const auto moved = transformed_region(torus, Q, shift);

    for (const Vec& x : {Vec{2.5, 0.0, 0.0}, Vec{1.5, 0.0, 0.0}, Vec{0.0, 2.0, 0.5}}) {
        const auto base = principal_curvatures(torus, x);
        const auto after = principal_curvatures(moved, add(Q.apply(x), shift));
        for (std::size_t i = 0; i < base.kappas.size(); ++i)
            CHECK(std::fabs(base.kappas[i] - after.kappas[i]) <= 1e-8);
    }
}

TEST_CASE("torus curvature summary across the boundary") {
    const auto torus = torus_region(2.0, 0.5);
    GridSpec grid;
    grid.box = cube_box(3, 2.75);
    grid.resolution = 17;
    grid.fd_step = 1e-4;
    const auto samples = boundary_sample(torus, grid);
    CHECK(samples.size() >= 1000);
    double min_top = 1e300, min_bottom = 1e300;
    for (const Vec& b : samples) {
        const auto pc = principal_curvatures(torus, b);
        min_top = std::min(min_top, pc.kappas[1]);
        min_bottom = std::min(min_bottom, pc.kappas[0]);
    }
    CHECK(std::fabs(min_top - 2.0) <= 1e-3); // tube curvature everywhere
    CHECK(min_bottom < -0.5);                // inner side bends away
}

TEST_CASE("boundary samples land on the boundary") {
    GridSpec grid;
    grid.box = cube_box(3, 1.4);
    grid.resolution = 9;
    grid.fd_step = 1e-4;

    const auto ball = ball_region(3, 1.0);
    for (const Vec& b : boundary_sample(ball, grid)) CHECK(std::fabs(norm(b) - 1.0) <= 1e-8);

    const auto hs = halfspace_region(3, {0.0, 0.0, 1.0});
    for (const Vec& b : boundary_sample(hs, grid)) CHECK(std::fabs(b[2]) <= 1e-8);

    const auto torus = torus_region(2.0, 0.5);
    GridSpec tg = grid;
    tg.box = cube_box(3, 2.75);
    tg.resolution = 13;
    for (const Vec& b : boundary_sample(torus, tg)) CHECK(std::fabs(torus.signed_dist(b)) <= 1e-8);

    RegionSpec all;
    all.dim = 3;
    all.bbox = grid.box;
    all.inside = [](const Vec&) { return true; };
    CHECK_THROWS_AS(boundary_sample(all, grid), Error);
}

TEST_CASE("chart-based curvature through an epigraph") {
    // x3 > (x1^2 + 2 x2^2) / 2 has curvatures (1, 2) at the origin
    const auto g = parse_expression("(x1^2 + 2*x2^2)/2", 2);
    const auto epi = epigraph_region(g, cube_box(3, 2.0));
    const auto pc = principal_curvatures(epi, {0.0, 0.0, 0.0});
    CHECK(std::fabs(pc.kappas[0] - 1.0) <= 1e-5);
    CHECK(std::fabs(pc.kappas[1] - 2.0) <= 1e-5);

    // nonsmooth region: the l-shape edge has no consistent second derivative
    const auto l = l_shape_region(2);
    CHECK_THROWS_AS(principal_curvatures(l, {0.0, 0.0}), Error);
}
