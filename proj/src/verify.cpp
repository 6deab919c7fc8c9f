#include "jordan/verify.hpp"

#include <chrono>
#include <random>

#include "jordan/flow.hpp"
#include "jordan/io.hpp"
#include "jordan/shapes.hpp"
#include "polygon_utils.hpp"

namespace jordan::verify {

namespace {

struct Fixture {
    std::string name;
    JordanDomain domain;
};

std::vector<Fixture> standard_fixtures() {
    std::vector<Fixture> out;
    out.push_back({"circle", make_circle(1.)});
    out.push_back({"ellipse", make_ellipse(2., 1.)});
    out.push_back({"egg", make_egg()});
    out.push_back({"lune", make_lune()});
    out.push_back({"blob", make_blob()});
    return out;
}

const CenterKind all_kinds[3] = {CenterKind::Centroid, CenterKind::Circumcenter, CenterKind::Steiner};

Similarity random_similarity(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> scale(0.2, 5.), angle(0., 2. * pi), shift(-10., 10.);
    std::bernoulli_distribution coin(0.5);
    double s = scale(rng), a = angle(rng);
    double tx = shift(rng), ty = shift(rng);
    bool flip = coin(rng);
    return Similarity(s, a, flip, Point2(tx, ty));
}

CenterConfig center_config(const VerifyConfig &cfg) {
    CenterConfig out;
    out.map.tol = cfg.map_tol;
    return out;
}

// Winding by accumulated signed angle over a dense polygon; independent of the
// crossing-parity test used by locate.
bool winding_oracle_inside(const JordanDomain &domain, const Point2 &p) {
    std::vector<Point2> poly = domain.boundary.dense_polyline(8);
    double total = 0.;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        Point2 a = poly[i] - p, b = poly[(i + 1) % n] - p;
        total += std::atan2(a.x() * b.y() - a.y() * b.x(), a.dot(b));
    }
    return std::abs(total) > pi;
}

// Cell-center grid integration of the annulus between a domain and its inner offset.
Point2 grid_annulus_centroid(const JordanDomain &outer, const JordanDomain &inner, int res) {
    std::vector<Point2> po = outer.boundary.dense_polyline(2);
    std::vector<Point2> pin = inner.boundary.dense_polyline(2);
    Point2 lo = po[0], hi = po[0];
    for (const Point2 &p : po) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    double cell = (hi - lo).maxCoeff() / double(res);

    // Scanline crossings per row for both polygons.
    auto row_crossings = [&](const std::vector<Point2> &poly, double y, std::vector<double> &xs) {
        xs.clear();
        const size_t n = poly.size();
        for (size_t i = 0; i < n; ++i) {
            const Point2 &a = poly[i], &b = poly[(i + 1) % n];
            if ((a.y() > y) != (b.y() > y))
                xs.push_back(a.x() + (y - a.y()) / (b.y() - a.y()) * (b.x() - a.x()));
        }
        std::sort(xs.begin(), xs.end());
    };

    long count = 0;
    Point2 acc(0., 0.);
    std::vector<double> xo, xi;
    int ny = int((hi - lo).y() / cell) + 1, nx = int((hi - lo).x() / cell) + 1;
    for (int j = 0; j < ny; ++j) {
        double y = lo.y() + (j + 0.5) * cell;
        row_crossings(po, y, xo);
        row_crossings(pin, y, xi);
        auto parity = [](const std::vector<double> &xs, double x) {
            size_t c = size_t(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
            return (c % 2) == 1;
        };
        for (int i = 0; i < nx; ++i) {
            double x = lo.x() + (i + 0.5) * cell;
            if (parity(xo, x) && !parity(xi, x)) {
                ++count;
                acc += Point2(x, y);
            }
        }
    }
    if (count == 0)
        throw Error(ErrorCode::DegenerateVoronoi, "annulus grid integration found no cells");
    return acc / double(count);
}

void add(std::vector<CheckResult> &out, const std::string &name, double residual, double tol) {
    out.push_back(CheckResult{name, residual, tol, residual <= tol});
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criterion implementations -------------------------------------------------------

std::vector<CheckResult> criterion_disk_identity(const VerifyConfig &cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> out;
    MapConfig mc;
    mc.tol = cfg.map_tol;
    ConformalMap f = build_interior_map(make_circle(1.), Point2(0., 0.), Point2(1., 0.), mc);
    double sup = 0.;
    for (int j = 0; j < 256; ++j) {
        Complex z = std::polar(1., 2. * pi * j / 256.);
        sup = std::max(sup, std::abs(f.forward_c(z) - z));
    }
    add(out, "disk-identity sup deviation on 256 boundary probes", sup, 1e-3);
    add(out, "disk-identity runtime [s]", seconds_since(t0), 10.);
    return out;
}

std::vector<CheckResult> criterion_convex_agreement(const VerifyConfig &cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> out;
    for (const auto &[name, domain] : {Fixture{"ellipse", make_ellipse(2., 1.)}, Fixture{"egg", make_egg()}}) {
        double diam = domain_diameter(domain);
        for (CenterKind kind : all_kinds) {
            Point2 cf = canonical_center(domain, kind, center_config(cfg));
            Point2 f = classical_center(domain, kind);
            add(out, "convex agreement " + name + "/" + center_kind_name(kind), (cf - f).norm(),
                1e-3 * diam);
        }
    }
    add(out, "convex-agreement runtime [s]", seconds_since(t0), 60.);
    return out;
}

std::vector<CheckResult> criterion_equivariance(const VerifyConfig &cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> out;
    std::mt19937_64 rng(cfg.seed);
    for (const Fixture &fx : standard_fixtures()) {
        Point2 base[3];
        for (int k = 0; k < 3; ++k)
            base[k] = canonical_center(fx.domain, all_kinds[k], center_config(cfg));
        double worst[3] = {0., 0., 0.};
        for (size_t trial = 0; trial < cfg.trials; ++trial) {
            Similarity g = random_similarity(rng);
            JordanDomain gd = transform(g, fx.domain);
            double diam = domain_diameter(gd);
            for (int k = 0; k < 3; ++k) {
                Point2 cg = canonical_center(gd, all_kinds[k], center_config(cfg));
                worst[k] = std::max(worst[k], (cg - g(base[k])).norm() / (1e-3 * diam));
            }
        }
        for (int k = 0; k < 3; ++k)
            add(out, "equivariance " + fx.name + "/" + center_kind_name(all_kinds[k]) +
                         " (residual / tol, " + std::to_string(cfg.trials) + " trials)",
                worst[k], 1.);
    }
    add(out, "equivariance runtime [s]", seconds_since(t0), 600.);
    return out;
}

std::vector<CheckResult> criterion_interiority(const VerifyConfig &cfg) {
    std::vector<CheckResult> out;
    JordanDomain lune = make_lune();
    Point2 centroid = classical_center(lune, CenterKind::Centroid);
    add(out, "lune centroid is exterior (winding oracle)", winding_oracle_inside(lune, centroid) ? 1. : 0.,
        0.);
    CenterResult r = canonical_center_detailed(lune, CenterKind::Centroid, center_config(cfg));
    add(out, "lune canonical centroid is interior (winding oracle)",
        winding_oracle_inside(lune, r.point) ? 0. : 1., 0.);
    // clearance >= 0.9 reach / 2, reported as a shortfall
    add(out, "lune canonical centroid clearance shortfall", std::max(0., 0.9 * r.reach / 2. - r.clearance),
        0.);
    return out;
}

std::vector<CheckResult> criterion_reach(const VerifyConfig &) {
    std::vector<CheckResult> out;
    for (double r : {1., 2.5})
        add(out, "reach of disk radius " + std::to_string(r), std::abs(reach(make_circle(r)) - r),
            0.01 * r);
    add(out, "reach of ellipse (2,1) at n = 2048", std::abs(reach(make_ellipse(2., 1.), 2048) - 0.5), 0.01);

    for (const Fixture &fx : standard_fixtures()) {
        double R = reach(fx.domain, 1024);
        double s = R / 2.;
        JordanDomain inner = inner_offset(fx.domain, s);
        const JordanCurve &c = inner.boundary;
        std::vector<Point2> outward(c.size());
        for (size_t i = 0; i < c.size(); ++i) {
            double t = double(i) / double(c.size());
            outward[i] = c.point(t) - s * c.inward_normal(t);
        }
        double err = hausdorff(fx.domain, build_domain(std::move(outward)));
        add(out, "Minkowski reconstruction on " + fx.name, err, 1e-3 * domain_diameter(fx.domain));
    }
    return out;
}

std::vector<CheckResult> criterion_annulus(const VerifyConfig &) {
    std::vector<CheckResult> out;
    AnnulusDensity delta = make_annulus_density(make_ellipse(2., 1.));
    add(out, "annulus density integrates to 1", std::abs(delta.integral() - 1.), 1e-4);
    Point2 grid = grid_annulus_centroid(make_ellipse(2., 1.), delta.inner, 1024);
    add(out, "weighted offset centroid vs 1024^2 grid annulus centroid",
        (delta.weighted_centroid() - grid).norm(), 1e-3);
    return out;
}

std::vector<CheckResult> criterion_disk_retraction(const VerifyConfig &cfg) {
    std::vector<CheckResult> out;
    MapConfig mc;
    mc.tol = cfg.map_tol;
    RetractionContext ctx = RetractionContext::build(make_circle(1.), mc);
    std::mt19937_64 rng(cfg.seed + 1);
    std::uniform_real_distribution<double> radius(1.05, 20.), angle(0., 2. * pi);
    double worst = 0.;
    for (int i = 0; i < 50; ++i) {
        Complex x = std::polar(radius(rng), angle(rng));
        for (int k = 0; k <= 10; ++k) {
            double t = double(k) / 10.;
            Complex z = 1. / x;
            Complex zt = (1. - t) * z + t * z / std::abs(z);
            Point2 exact = to_point(1. / zt);
            worst = std::max(worst, (retract_point(ctx, to_point(x), t) - exact).norm());
        }
    }
    add(out, "disk retraction vs reciprocal pipeline (50 points x 11 times)", worst, 1e-3);
    return out;
}

std::vector<CheckResult> criterion_flow(const VerifyConfig &cfg) {
    std::vector<CheckResult> out;
    FlowConfig fc;
    fc.map.tol = cfg.map_tol;
    fc.center.map.tol = cfg.map_tol;

    JordanDomain egg = make_egg();
    double diam = domain_diameter(egg);
    auto frames = flow_frames(egg, CenterKind::Centroid, 8, fc);
    add(out, "flow first frame vs boundary", hausdorff(JordanDomain{frames.front().curve}, egg),
        1e-3 * diam);
    Circle target = round_target(egg, canonical_center(egg, CenterKind::Centroid, fc.center));
    add(out, "flow final frame vs equal-area circle",
        hausdorff(JordanDomain{frames.back().curve}, make_circle(target.radius, target.center)),
        1e-3 * diam);

    JordanDomain disk = make_circle(1.3, Point2(0.4, -0.2));
    double worst_round = 0.;
    for (const FlowFrame &fr : flow_frames(disk, CenterKind::Centroid, 8, fc))
        worst_round = std::max(worst_round, hausdorff(JordanDomain{fr.curve}, disk));
    add(out, "flow fixes round inputs framewise", worst_round, 1e-3 * 2.6);

    Similarity rho = Similarity::rotation(0.7);
    auto frames_r = flow_frames(transform(rho, egg), CenterKind::Centroid, 8, fc);
    double worst_rot = 0.;
    for (size_t i = 0; i < frames.size(); ++i)
        worst_rot = std::max(worst_rot, hausdorff(transform(rho, JordanDomain{frames[i].curve}),
                                                  JordanDomain{frames_r[i].curve}));
    add(out, "flow rotation-equivariance framewise", worst_rot, 1e-3 * diam);
    return out;
}

std::vector<CheckResult> criterion_convergence(const VerifyConfig &cfg) {
    std::vector<CheckResult> out;
    MapConfig mc;
    mc.tol = cfg.map_tol;
    JordanDomain e = make_ellipse(2., 1.);
    std::vector<JordanDomain> perts;
    for (double eps : {0.1, 0.05, 0.025})
        perts.push_back(radial_noise(e, eps));
    std::vector<double> sup = convergence_probe(e, perts, Point2(0., 0.), Point2(1., 0.), mc);
    add(out, "map differences decrease: eps 0.1 -> 0.05", sup[1] - sup[0], 0.);
    add(out, "map differences decrease: eps 0.05 -> 0.025", sup[2] - sup[1], 0.);

    std::vector<JordanDomain> dilated;
    std::vector<double> eps = {0.1, 0.05, 0.025};
    for (double ee : eps)
        dilated.push_back(make_circle(1. + ee));
    std::vector<double> sup_d = convergence_probe(make_circle(1.), dilated, Point2(0., 0.), Point2(1., 0.), mc);
    for (size_t i = 0; i < eps.size(); ++i)
        add(out, "dilated disk sup difference at eps " + std::to_string(eps[i]), sup_d[i], 3. * eps[i]);
    return out;
}

std::vector<CheckResult> criterion_center_continuity(const VerifyConfig &cfg) {
    std::vector<CheckResult> out;
    for (const auto &[name, domain] : {Fixture{"ellipse", make_ellipse(2., 1.)}, Fixture{"lune", make_lune()}}) {
        Point2 base = canonical_center(domain, CenterKind::Centroid, center_config(cfg));
        std::vector<double> deltas;
        for (double eps : {0.05, 0.025, 0.0125})
            deltas.push_back(
                (canonical_center(radial_noise(domain, eps), CenterKind::Centroid, center_config(cfg)) - base)
                    .norm());
        add(out, "center continuity on " + name + ": eps 0.05 -> 0.025", deltas[1] - deltas[0], 0.);
        add(out, "center continuity on " + name + ": eps 0.025 -> 0.0125", deltas[2] - deltas[1], 0.);
    }
    return out;
}

} // namespace

const char *criterion_name(int index) {
    switch (index) {
    case 1: return "disk identity map";
    case 2: return "convex agreement of canonical and classical centers";
    case 3: return "conformal-group equivariance of the canonical center";
    case 4: return "interiority on the nonconvex lune";
    case 5: return "reach and Minkowski reconstruction";
    case 6: return "annulus centroid identity";
    case 7: return "retraction exactness on the disk";
    case 8: return "flow endpoints, round fixing, rotation equivariance";
    case 9: return "Caratheodory convergence of maps";
    case 10: return "continuity of the center under boundary noise";
    }
    return "unknown";
}

std::vector<CheckResult> run_criterion(int index, const VerifyConfig &config) {
    switch (index) {
    case 1: return criterion_disk_identity(config);
    case 2: return criterion_convex_agreement(config);
    case 3: return criterion_equivariance(config);
    case 4: return criterion_interiority(config);
    case 5: return criterion_reach(config);
    case 6: return criterion_annulus(config);
    case 7: return criterion_disk_retraction(config);
    case 8: return criterion_flow(config);
    case 9: return criterion_convergence(config);
    case 10: return criterion_center_continuity(config);
    }
    throw Error(ErrorCode::NonFinite, "criterion index must be 1..10");
}

std::vector<std::string> suite_names() {
    return {"equivariance", "convex-agreement", "interiority", "reach", "flow", "convergence", "all"};
}

std::vector<int> suite_criteria(const std::string &suite) {
    if (suite == "equivariance")
        return {3};
    if (suite == "convex-agreement")
        return {2, 6};
    if (suite == "interiority")
        return {4, 7};
    if (suite == "reach")
        return {5};
    if (suite == "flow")
        return {8};
    if (suite == "convergence")
        return {1, 9, 10};
    if (suite == "all")
        return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    throw Error(ErrorCode::NonFinite, "unknown verify suite: " + suite);
}

SuiteReport run_suite(const std::string &suite, const VerifyConfig &config) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = suite;
    for (int k : suite_criteria(suite)) {
        std::vector<CheckResult> checks = run_criterion(k, config);
        for (CheckResult &c : checks) {
            report.pass = report.pass && c.pass;
            report.checks.push_back(std::move(c));
        }
    }
    report.seconds = seconds_since(t0);
    return report;
}

} // namespace jordan::verify
