#include "doctest.h"

#include <random>

#include "jordan/curve.hpp"
#include "jordan/shapes.hpp"
#include "oracles.hpp"

using namespace jordan;

namespace {

std::vector<Point2> circle_samples(double r, Point2 c, size_t n) {
    std::vector<Point2> pts(n);
    for (size_t i = 0; i < n; ++i) {
        double th = 2. * pi * double(i) / double(n);
        pts[i] = c + r * Point2(std::cos(th), std::sin(th));
    }
    return pts;
}

Similarity random_similarity(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> scale(0.2, 5.), angle(0., 2. * pi), shift(-10., 10.);
    std::bernoulli_distribution coin(0.5);
    return Similarity(scale(rng), angle(rng), coin(rng), Point2(shift(rng), shift(rng)));
}

} // namespace

TEST_CASE("similarity algebra") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 50; ++it) {
        Similarity g = random_similarity(rng), h = random_similarity(rng);
        Point2 p(0.3, -1.7);
        CHECK(((g * h)(p) - g(h(p))).norm() < 1e-12 * (1. + g(h(p)).norm()));
        CHECK((g.inverse()(g(p)) - p).norm() < 1e-10);
        CHECK((g * g.inverse())(p).isApprox(p, 1e-9));
    }
}

TEST_CASE("curve build on a circle") {
    JordanCurve c = build_curve(circle_samples(1., Point2(0., 0.), 64));
    auto [area, centroid] = area_and_centroid(JordanDomain{c});
    CHECK(std::abs(area - pi) < 1e-4);
    CHECK(centroid.norm() < 1e-9);
    CHECK(std::abs(c.total_curvature() - 2. * pi) < 1e-6);
    CHECK(std::abs(c.length() - 2. * pi) < 1e-4);
}

TEST_CASE("clockwise input is flipped to the same curve") {
    auto pts = circle_samples(1., Point2(0.5, -0.2), 64);
    auto rev = pts;
    std::reverse(rev.begin(), rev.end()); // clockwise, starts at a different sample
    JordanCurve a = build_curve(pts);
    JordanCurve b = build_curve(rev);
    CHECK(hausdorff(JordanDomain{a}, JordanDomain{b}) < 1e-9);
    auto [aa, ca] = area_and_centroid(JordanDomain{a});
    auto [ab, cb] = area_and_centroid(JordanDomain{b});
    CHECK(aa == doctest::Approx(ab).epsilon(1e-12));
    CHECK((ca - cb).norm() < 1e-12);
}

TEST_CASE("figure eight is rejected") {
    std::vector<Point2> pts;
    for (size_t i = 0; i < 64; ++i) {
        double t = 2. * pi * double(i) / 64.;
        pts.emplace_back(std::sin(2. * t), std::sin(t)); // lemniscate-like
    }
    CHECK_THROWS_AS(build_curve(pts), Error);
}

TEST_CASE("too few or non-finite samples") {
    CHECK_THROWS_AS(build_curve(circle_samples(1., Point2(0., 0.), 8)), Error);
    auto pts = circle_samples(1., Point2(0., 0.), 32);
    pts[3].x() = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(build_curve(pts), Error);
}

TEST_CASE("ellipse area and centroid") {
    JordanDomain e = make_ellipse(2., 1., Point2(3., 4.));
    auto [area, centroid] = area_and_centroid(e);
    CHECK(std::abs(area - 2. * pi) < 1e-6);
    CHECK((centroid - Point2(3., 4.)).norm() < 1e-9);
}

TEST_CASE("lune centroid matches a dense shoelace oracle and sits outside") {
    JordanDomain lune = make_lune();
    auto [area, centroid] = area_and_centroid(lune);
    auto mom = oracle::shoelace(oracle::dense_points(lune.boundary, 100000));
    CHECK(std::abs(area - mom.area) < 1e-6 * std::abs(mom.area));
    CHECK((centroid - mom.centroid).norm() < 1e-6);

    // The centroid lies in the concavity.
    auto poly = oracle::dense_points(lune.boundary, 100000);
    CHECK(!oracle::inside_polygon(poly, centroid));
    CHECK(locate(lune, centroid).cls == Classification::Exterior);
}

TEST_CASE("curvature") {
    JordanDomain circ = make_circle(2.5);
    for (double t : {0., 0.21, 0.73})
        CHECK(curvature(circ, t) == doctest::Approx(1. / 2.5).epsilon(1e-4));

    JordanDomain e = make_ellipse(2., 1.);
    auto [d, t0] = distance_to_boundary(e.boundary, Point2(2., 0.));
    CHECK(d < 1e-9);
    double k = curvature(e, t0);
    CHECK(std::abs(k - 2.) < 1e-3);                       // a / b^2
    CHECK(std::abs(k - oracle::fd_curvature(e.boundary, t0)) < 1e-3);

    JordanDomain blob = make_blob();
    CHECK(std::abs(blob.boundary.total_curvature() - 2. * pi) < 1e-3);
}

TEST_CASE("minimum enclosing circle") {
    Circle c1 = circumscribing_circle(make_circle(1.));
    CHECK(c1.center.norm() < 1e-12);
    CHECK(c1.radius == doctest::Approx(1.).epsilon(1e-9));

    Circle c2 = circumscribing_circle(make_ellipse(2., 1.));
    CHECK(c2.center.norm() < 1e-9);
    CHECK(c2.radius == doctest::Approx(2.).epsilon(1e-6));

    // Rounded-triangle blob against the O(n^3) brute force, via the file-free fixture.
    std::vector<Point2> pts;
    for (size_t i = 0; i < 64; ++i) {
        double th = 2. * pi * double(i) / 64.;
        double r = 1. + 0.2 * std::cos(3. * th);
        pts.emplace_back(r * std::cos(th), r * std::sin(th));
    }
    Circle fast = min_enclosing_circle(pts);
    Circle brute = oracle::brute_force_mec(pts);
    CHECK((fast.center - brute.center).norm() < 1e-9);
    CHECK(fast.radius == doctest::Approx(brute.radius).epsilon(1e-9));
}

TEST_CASE("normalizer") {
    JordanDomain d = make_circle(3., Point2(6., 0.));
    Similarity rho = normalizer(d);
    CHECK(rho.scale() == doctest::Approx(1. / 3.));
    CHECK((rho(Point2(6., 0.))).norm() < 1e-9);
    Circle nc = circumscribing_circle(transform(rho, d));
    CHECK(nc.center.norm() < 1e-9);
    CHECK(std::abs(nc.radius - 1.) < 1e-9);

    // rho_{g(D)} o g == rho_D for translations and dilations.
    JordanDomain egg = make_egg();
    for (const Similarity &g : {Similarity::translation(Point2(2., -5.)), Similarity::dilation(3.)}) {
        Similarity lhs = normalizer(transform(g, egg)) * g;
        Similarity rhs = normalizer(egg);
        for (const Point2 &p : {Point2(0., 0.), Point2(1., 2.), Point2(-0.4, 0.3)})
            CHECK((lhs(p) - rhs(p)).norm() < 1e-9);
    }
}

TEST_CASE("transform") {
    JordanDomain e = make_ellipse(2., 1.);
    JordanDomain same = transform(Similarity::identity(), e);
    CHECK(hausdorff(e, same) < 1e-9);

    JordanDomain rot = transform(Similarity::rotation(pi), make_circle(1.));
    CHECK(hausdorff(rot, make_circle(1.)) < 1e-9);

    JordanDomain big = transform(Similarity::dilation(2.), e);
    auto big_mom = oracle::shoelace(oracle::dense_points(big.boundary, 100000));
    auto mom = oracle::shoelace(oracle::dense_points(e.boundary, 100000));
    CHECK(big_mom.area == doctest::Approx(4. * mom.area).epsilon(1e-9));
}

TEST_CASE("locate") {
    JordanDomain disk = make_circle(1.);
    Location in = locate(disk, Point2(0., 0.));
    CHECK(in.cls == Classification::Interior);
    CHECK(in.signed_distance == doctest::Approx(1.).epsilon(1e-6));

    Location out = locate(disk, Point2(2., 0.));
    CHECK(out.cls == Classification::Exterior);
    CHECK(out.signed_distance == doctest::Approx(-1.).epsilon(1e-6));

    Location on = locate(disk, Point2(1., 0.), 1e-6);
    CHECK(on.cls == Classification::Boundary);
}

TEST_CASE("locate is similarity-equivariant") {
    std::mt19937_64 rng(7);
    JordanDomain blob = make_blob();
    for (int it = 0; it < 10; ++it) {
        Similarity g = random_similarity(rng);
        JordanDomain gblob = transform(g, blob);
        for (const Point2 &p : {Point2(0., 0.), Point2(0.9, 0.4), Point2(1.4, -1.2), Point2(0.2, 1.1)}) {
            Location l1 = locate(blob, p, 1e-12);
            Location l2 = locate(gblob, g(p), 1e-12);
            if (std::abs(l1.signed_distance) > 1e-6) // skip razor-edge classifications
                CHECK(l1.cls == l2.cls);
        }
    }
}

TEST_CASE("hausdorff distance") {
    JordanDomain d1 = make_circle(1.);
    CHECK(hausdorff(d1, d1) == doctest::Approx(0.));
    CHECK(hausdorff(d1, make_circle(2.)) == doctest::Approx(1.).epsilon(1e-4));

    JordanDomain e = make_ellipse(2., 1.);
    JordanDomain shifted = transform(Similarity::translation(Point2(0.3, 0.)), e);
    CHECK(std::abs(hausdorff(e, shifted) - 0.3) < 1e-3);
}

TEST_CASE("invariant: area scales with similarity, circumcircle maps") {
    std::mt19937_64 rng(99);
    JordanDomain egg = make_egg();
    auto [area0, c0] = area_and_centroid(egg);
    Circle circ0 = circumscribing_circle(egg);
    for (int it = 0; it < 10; ++it) {
        Similarity g = random_similarity(rng);
        JordanDomain gd = transform(g, egg);
        auto [area1, c1] = area_and_centroid(gd);
        CHECK(std::abs(area1 - g.scale() * g.scale() * area0) < 1e-6 * area1);
        Circle circ1 = circumscribing_circle(gd);
        CHECK((circ1.center - g(circ0.center)).norm() < 1e-9 * std::max(1., circ1.radius));
        CHECK(std::abs(circ1.radius - g.scale() * circ0.radius) < 1e-9 * std::max(1., circ1.radius));
    }
}

TEST_CASE("convexity check") {
    CHECK(is_convex(make_circle(1.)));
    CHECK(is_convex(make_ellipse(2., 1.)));
    CHECK(is_convex(make_egg()));
    CHECK(!is_convex(make_blob()));
    CHECK(!is_convex(make_lune()));
}
