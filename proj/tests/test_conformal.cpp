#include "doctest.h"

#include <random>

#include "jordan/conformal.hpp"
#include "jordan/shapes.hpp"
#include "oracles.hpp"

using namespace jordan;

TEST_CASE("disk map is the identity") {
    ConformalMap f = build_interior_map(make_circle(1.), Point2(0., 0.), Point2(1., 0.));
    double sup = 0.;
    for (int j = 0; j < 256; ++j) {
        Complex z = std::polar(1., 2. * pi * j / 256.);
        sup = std::max(sup, std::abs(f.forward_c(z) - z));
    }
    CHECK(sup < 1e-3);
    CHECK(f.center_value().norm() < 1e-9);
    CHECK(std::abs(f.center_derivative() - Complex(1., 0.)) < 1e-3);
}

TEST_CASE("round disk map is the similarity q + r z") {
    Point2 q(3., -2.);
    double r = 1.7;
    ConformalMap f = build_interior_map(make_circle(r, q), q, Point2(1., 0.));
    for (int j = 0; j < 64; ++j) {
        Complex z = std::polar(1., 2. * pi * j / 64.);
        CHECK(std::abs(f.forward_c(z) - (to_complex(q) + r * z)) < 1e-3 * r);
    }
    CHECK(std::abs(f.forward_c(Complex(0.25, 0.4)) - (to_complex(q) + r * Complex(0.25, 0.4))) < 1e-3 * r);
}

TEST_CASE("ellipse map: anchor, direction, conformality") {
    ConformalMap f = build_interior_map(make_ellipse(2., 1.), Point2(0.5, 0.), Point2(0., 1.));
    CHECK((f.center_value() - Point2(0.5, 0.)).norm() < 1e-9);
    // derivative aligned with u
    CHECK(std::abs(std::arg(f.center_derivative()) - pi / 2.) < 1e-3);

    // Cauchy-Riemann residual by centered differences on an interior grid.
    double h = 1e-3, worst = 0.;
    for (int ix = -8; ix <= 8; ++ix)
        for (int iy = -8; iy <= 8; ++iy) {
            Complex z(0.1 * ix, 0.1 * iy);
            if (std::abs(z) > 0.9)
                continue;
            Complex fx = (f.forward_c(z + h) - f.forward_c(z - h)) / (2. * h);
            Complex fy = (f.forward_c(z + Complex(0., h)) - f.forward_c(z - Complex(0., h))) / (2. * h);
            Complex dzbar = 0.5 * (fx + Complex(0., 1.) * fy);
            Complex dz = 0.5 * (fx - Complex(0., 1.) * fy);
            worst = std::max(worst, std::abs(dzbar) / std::abs(dz));
        }
    CHECK(worst < 1e-4);
}

TEST_CASE("forward/inverse round trip") {
    JordanDomain e = make_ellipse(2., 1.);
    ConformalMap f = build_interior_map(e, Point2(0.5, 0.), Point2(0., 1.));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> radius(0., 0.95), angle(0., 2. * pi);
    for (int i = 0; i < 100; ++i) {
        Complex z = std::polar(radius(rng), angle(rng));
        CHECK(std::abs(f.inverse_c(f.forward_c(z)) - z) < 1e-6 * f.domain_diam());
    }
    // evaluate() wrapper and the trivial identity example
    ConformalMap id = build_interior_map(make_circle(1.), Point2(0., 0.), Point2(1., 0.));
    Point2 w = evaluate(id, Point2(0.3, 0.4), MapDirection::Forward);
    CHECK((w - Point2(0.3, 0.4)).norm() < 1e-4);

    // disk-to-disk inverse example: q = (1,0), r = 2, inverse of (1,2) is (0,1)
    ConformalMap d2 = build_interior_map(make_circle(2., Point2(1., 0.)), Point2(1., 0.), Point2(1., 0.));
    CHECK((evaluate(d2, Point2(1., 2.), MapDirection::Inverse) - Point2(0., 1.)).norm() < 1e-3);
}

TEST_CASE("boundary evaluation is the limit of interior evaluation") {
    ConformalMap f = build_interior_map(make_egg(), Point2(0.1, 0.), Point2(1., 0.));
    for (int j = 0; j < 64; ++j) {
        double th = 2. * pi * (j + 0.37) / 64.;
        Complex zb = std::polar(1., th);
        Complex zi = std::polar(1. - 1e-9, th);
        CHECK(std::abs(f.forward_c(zb) - f.forward_c(zi)) < 1e-5);
    }
}

TEST_CASE("map errors") {
    JordanDomain e = make_ellipse(2., 1.);
    CHECK_THROWS_AS(build_interior_map(e, Point2(3., 0.), Point2(1., 0.)), Error); // exterior anchor
    CHECK_THROWS_AS(build_interior_map(e, Point2(0., 0.), Point2(0., 0.)), Error); // zero direction
    MapConfig strict;
    strict.tol = 1e-13;
    strict.max_samples = 512;
    CHECK_THROWS_AS(build_interior_map(make_blob(), Point2(0., 0.), Point2(1., 0.), strict), Error);

    ConformalMap f = build_interior_map(e, Point2(0., 0.), Point2(1., 0.));
    CHECK_THROWS_AS(f.forward(Point2(1.5, 0.)), Error);   // outside the disk
    CHECK_THROWS_AS(f.inverse(Point2(5., 5.)), Error);    // outside the domain
}

TEST_CASE("injectivity on a disk grid") {
    ConformalMap f = build_interior_map(make_blob(), Point2(0., 0.), Point2(1., 0.));
    std::vector<Complex> images;
    for (int ir = 1; ir <= 6; ++ir)
        for (int ia = 0; ia < 24; ++ia)
            images.push_back(f.forward_c(std::polar(ir / 6.4, 2. * pi * ia / 24.)));
    double closest = std::numeric_limits<double>::max();
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j)
            closest = std::min(closest, std::abs(images[i] - images[j]));
    CHECK(closest > 1e-4);
}

TEST_CASE("disk images do not depend on the derivative direction") {
    JordanDomain egg = make_egg();
    Point2 p(0.1, 0.05);
    ConformalMap f1 = build_interior_map(egg, p, Point2(1., 0.));
    ConformalMap f2 = build_interior_map(egg, p, Point2(-0.3, 0.9));
    for (double t : {0.25, 0.5, 0.75}) {
        // compare image circles as sets
        std::vector<Point2> a, b;
        for (int j = 0; j < 256; ++j) {
            a.push_back(to_point(f1.forward_c(std::polar(t, 2. * pi * j / 256.))));
            b.push_back(to_point(f2.forward_c(std::polar(t, 2. * pi * j / 256.))));
        }
        double worst = 0.;
        for (const Point2 &pa : a)
            worst = std::max(worst, oracle::polygon_distance(b, pa));
        for (const Point2 &pb : b)
            worst = std::max(worst, oracle::polygon_distance(a, pb));
        CHECK(worst < 1e-3 * domain_diameter(egg));
    }
}

TEST_CASE("map construction is similarity-equivariant") {
    JordanDomain egg = make_egg();
    Point2 p(0.1, 0.);
    ConformalMap f = build_interior_map(egg, p, Point2(1., 0.));
    Similarity g(1.7, 0.9, false, Point2(4., -2.));
    JordanDomain gegg = transform(g, egg);
    // the direction must rotate with g for stage-exact correspondence
    Point2 gu = to_point(g.linear_coeff() * Complex(1., 0.));
    ConformalMap fg = build_interior_map(gegg, g(p), gu);
    double worst = 0.;
    for (int ir = 0; ir <= 4; ++ir)
        for (int ia = 0; ia < 32; ++ia) {
            Complex z = std::polar(0.249 * ir, 2. * pi * ia / 32.);
            worst = std::max(worst, std::abs(fg.forward_c(z) - g(f.forward_c(z))));
        }
    CHECK(worst < 1e-6 * domain_diameter(gegg));
}

TEST_CASE("exterior map of the unit disk is the reciprocal") {
    ExteriorMap g = build_exterior_map(make_circle(1.));
    CHECK((g.forward(Point2(0.5, 0.)) - Point2(2., 0.)).norm() < 1e-3);
    CHECK((g.inverse(Point2(2., 0.)) - Point2(0.5, 0.)).norm() < 1e-3);
    // complex reciprocal: g^{-1}(-3i) = i/3
    CHECK(std::abs(g.inverse_c(Complex(0., -3.)) - Complex(0., 1. / 3.)) < 1e-3);
    // 50 probes against 1/z
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> radius(0.05, 0.99), angle(0., 2. * pi);
    for (int i = 0; i < 50; ++i) {
        Complex z = std::polar(radius(rng), angle(rng));
        CHECK(std::abs(g.forward_c(z) - 1. / z) < 1e-3);
    }
}

TEST_CASE("exterior map requires a normalized domain") {
    CHECK_THROWS_AS(build_exterior_map(make_circle(2.)), Error);
    CHECK_THROWS_AS(build_exterior_map(make_circle(1., Point2(1., 1.))), Error);
}

TEST_CASE("exterior map: small circles about the puncture enclose the domain") {
    JordanDomain norm_ell = transform(normalizer(make_ellipse(2., 1.)), make_ellipse(2., 1.));
    ExteriorMap g = build_exterior_map(norm_ell);
    // winding of the image of |z| = 0.01 around the origin is 1 (image near infinity)
    double min_mod = std::numeric_limits<double>::max();
    double winding = 0.;
    Complex prev = g.forward_c(std::polar(0.01, 0.));
    for (int j = 1; j <= 128; ++j) {
        Complex w = g.forward_c(std::polar(0.01, 2. * pi * j / 128.));
        winding += std::arg(w / prev);
        min_mod = std::min(min_mod, std::abs(w));
        prev = w;
    }
    CHECK(min_mod > 1.); // encloses the normalized domain (circumradius 1)
    CHECK(std::abs(std::abs(winding) - 2. * pi) < 1e-6);

    // boundary correspondence of the exterior map
    CHECK(g.boundary_defect() < 1e-3 * 2.);
}

TEST_CASE("convergence probe") {
    JordanDomain e = make_ellipse(2., 1.);
    Point2 p(0., 0.), u(1., 0.);

    SUBCASE("identical domain gives a near-zero difference") {
        std::vector<double> sup = convergence_probe(e, {e}, p, u);
        CHECK(sup[0] < 2e-3 * domain_diameter(e));
    }

    SUBCASE("shrinking radial noise gives strictly decreasing differences") {
        std::vector<JordanDomain> perts;
        for (double eps : {0.1, 0.05, 0.025})
            perts.push_back(radial_noise(e, eps));
        std::vector<double> sup = convergence_probe(e, perts, p, u);
        CHECK(sup[0] > sup[1]);
        CHECK(sup[1] > sup[2]);
    }

    SUBCASE("dilated disk difference is bounded by 3 eps") {
        JordanDomain disk = make_circle(1.);
        std::vector<JordanDomain> perts;
        std::vector<double> eps = {0.1, 0.05, 0.025};
        for (double ee : eps)
            perts.push_back(make_circle(1. + ee));
        std::vector<double> sup = convergence_probe(disk, perts, p, u);
        for (size_t i = 0; i < eps.size(); ++i)
            CHECK(sup[i] <= 3. * eps[i]);
    }
}

TEST_CASE("normalized sup distance bounds the boundary Hausdorff distance") {
    JordanDomain e = make_ellipse(2., 1.);
    JordanDomain shifted = transform(Similarity::translation(Point2(0.3, 0.)), e);
    double h = hausdorff(e, shifted);
    double sup = normalized_sup_distance(e, shifted, Point2(0.1, 0.05), Point2(1., 0.));
    CHECK(sup + 2e-3 >= h);
    CHECK(normalized_sup_distance(e, e, Point2(0.1, 0.05), Point2(1., 0.)) < 2e-3 * domain_diameter(e));
}

TEST_CASE("stage dump") {
    ConformalMap f = build_interior_map(make_circle(1.), Point2(0., 0.), Point2(1., 0.));
    auto stages = f.stages();
    CHECK(stages.size() == f.sample_count() + 2);
    CHECK(stages.front().kind == "initial_slit");
    CHECK(stages.back().kind == "rotation");
}
