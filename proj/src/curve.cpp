#include "jordan/curve.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gauss_legendre.hpp"
#include "polygon_utils.hpp"

namespace jordan {

using polyutil::cross;
using polyutil::point_in_polygon;
using polyutil::point_segment_distance;
using polyutil::polyline_is_simple;

namespace {

double polygon_signed_area(const std::vector<Point2> &pts) {
    double a = 0.;
    for (size_t i = 0, n = pts.size(); i < n; ++i) {
        const Point2 &p = pts[i], &q = pts[(i + 1) % n];
        a += p.x() * q.y() - q.x() * p.y();
    }
    return 0.5 * a;
}

} // namespace

JordanCurve JordanCurve::build(std::vector<Point2> samples, const CurveConfig &config) {
    for (const Point2 &p : samples)
        if (!finite(p))
            throw Error(ErrorCode::NonFinite, "curve sample is not finite");

    // Drop consecutive duplicates (including the wrap pair).
    double scale = 0.;
    for (const Point2 &p : samples)
        scale = std::max(scale, p.cwiseAbs().maxCoeff());
    const double dedup_tol = 1e-12 * std::max(scale, 1.);
    std::vector<Point2> pts;
    pts.reserve(samples.size());
    for (const Point2 &p : samples)
        if (pts.empty() || (p - pts.back()).norm() > dedup_tol)
            pts.push_back(p);
    while (pts.size() > 1 && (pts.front() - pts.back()).norm() <= dedup_tol)
        pts.pop_back();

    if (pts.size() < config.min_samples)
        throw Error(ErrorCode::TooFewSamples, "need at least " + std::to_string(config.min_samples) +
                                                  " distinct samples, got " + std::to_string(pts.size()));

    double area = polygon_signed_area(pts);
    if (area == 0.)
        throw Error(ErrorCode::SelfIntersecting, "sample polygon has zero signed area");
    if (area < 0.)
        std::reverse(pts.begin() + 1, pts.end()); // counterclockwise, keeping the first sample first

    if (!polyline_is_simple(pts))
        throw Error(ErrorCode::SelfIntersecting, "sample polygon is not simple");

    // Chord-length spline through the input samples, then one resampling pass to a
    // near-arc-length parameter with uniform knots.
    PeriodicSpline chord = PeriodicSpline::chordal(pts);
    size_t m = config.resample_count ? config.resample_count : pts.size();
    JordanCurve curve(PeriodicSpline::uniform(chord.resample(m)));

    if (!polyline_is_simple(curve.dense_polyline(config.simplicity_refinement)))
        throw Error(ErrorCode::SelfIntersecting, "spline self-intersects between samples");

    double total = curve.total_curvature();
    if (std::abs(total - 2. * pi) > config.rotation_index_tol)
        throw Error(ErrorCode::SelfIntersecting,
                    "rotation index is not 1 (total curvature " + std::to_string(total) + ")");
    return curve;
}

double JordanCurve::curvature(double t) const {
    Point2 d1 = m_spline.derivative(t);
    Point2 d2 = m_spline.second_derivative(t);
    double speed = d1.norm();
    return cross(d1, d2) / (speed * speed * speed);
}

double JordanCurve::total_curvature() const {
    // integral of kappa * |gamma'| dt; the integrand is cross(gamma', gamma'') / |gamma'|^2.
    double acc = 0.;
    const size_t n = size();
    for (size_t i = 0; i < n; ++i) {
        double t0 = double(i) / double(n), h = 1. / double(n);
        for (int q = 0; q < gl8::n; ++q) {
            double t = t0 + gl8::x[q] * h;
            Point2 d1 = m_spline.derivative(t), d2 = m_spline.second_derivative(t);
            acc += gl8::w[q] * h * cross(d1, d2) / d1.squaredNorm();
        }
    }
    return acc;
}

std::vector<Point2> JordanCurve::dense_polyline(int factor) const {
    const size_t n = size() * size_t(std::max(factor, 1));
    std::vector<Point2> out(n);
    for (size_t i = 0; i < n; ++i)
        out[i] = m_spline.value(double(i) / double(n));
    return out;
}

JordanCurve build_curve(std::vector<Point2> samples, const CurveConfig &config) {
    return JordanCurve::build(std::move(samples), config);
}

JordanDomain build_domain(std::vector<Point2> samples, const CurveConfig &config) {
    return JordanDomain{JordanCurve::build(std::move(samples), config)};
}

std::pair<double, Point2> area_and_centroid(const JordanDomain &domain) {
    // Green's theorem: A = 1/2 oint (x y' - y x') dt, Mx = oint x^2 y' / 2, My = -oint y^2 x' / 2.
    const JordanCurve &c = domain.boundary;
    const size_t n = c.size();
    double a = 0., mx = 0., my = 0.;
    for (size_t i = 0; i < n; ++i) {
        double t0 = double(i) / double(n), h = 1. / double(n);
        for (int q = 0; q < gl8::n; ++q) {
            double t = t0 + gl8::x[q] * h;
            Point2 p = c.point(t), d = c.derivative(t);
            double w = gl8::w[q] * h;
            a += w * 0.5 * cross(p, d);
            mx += w * 0.5 * p.x() * p.x() * d.y();
            my += w * -0.5 * p.y() * p.y() * d.x();
        }
    }
    return {a, Point2(mx / a, my / a)};
}

double curvature(const JordanDomain &domain, double t) { return domain.boundary.curvature(t); }

JordanDomain transform(const Similarity &g, const JordanDomain &domain) {
    std::vector<Point2> pts;
    pts.reserve(domain.boundary.size());
    for (const Point2 &p : domain.boundary.samples())
        pts.push_back(g(p));
    if (g.reflect())
        std::reverse(pts.begin() + 1, pts.end()); // restore counterclockwise order
    return build_domain(std::move(pts));
}

std::pair<double, double> distance_to_boundary(const JordanCurve &curve, const Point2 &p) {
    const size_t n = curve.size() * 4;
    double best = std::numeric_limits<double>::max();
    double tbest = 0.;
    for (size_t i = 0; i < n; ++i) {
        double t = double(i) / double(n);
        double d = (curve.point(t) - p).squaredNorm();
        if (d < best) {
            best = d;
            tbest = t;
        }
    }
    // Newton refinement of the squared distance, confined to the winning bracket.
    double lo = tbest - 1.5 / double(n), hi = tbest + 1.5 / double(n);
    double t = tbest;
    for (int iter = 0; iter < 30; ++iter) {
        Point2 r = curve.point(t) - p;
        Point2 d1 = curve.derivative(t);
        double g = r.dot(d1);
        double gp = d1.squaredNorm() + r.dot(curve.spline().second_derivative(t));
        if (std::abs(gp) < 1e-300)
            break;
        double step = g / gp;
        t = std::clamp(t - step, lo, hi);
        if (std::abs(step) < 1e-15)
            break;
    }
    double refined = (curve.point(t) - p).norm();
    double coarse = std::sqrt(best);
    return refined <= coarse ? std::make_pair(refined, t - std::floor(t))
                             : std::make_pair(coarse, tbest);
}

Location locate(const JordanDomain &domain, const Point2 &p, double tol) {
    auto [dist, tnear] = distance_to_boundary(domain.boundary, p);
    bool inside = point_in_polygon(domain.boundary.dense_polyline(4), p);
    double sd = inside ? dist : -dist;
    Classification cls = (dist <= tol) ? Classification::Boundary
                                       : (inside ? Classification::Interior : Classification::Exterior);
    return Location{cls, sd, tnear};
}

double hausdorff(const JordanDomain &a, const JordanDomain &b) {
    auto directed = [](const JordanCurve &from, const JordanCurve &to) {
        std::vector<Point2> probes = from.dense_polyline(4);
        std::vector<Point2> target = to.dense_polyline(4);
        const size_t m = target.size();
        double worst = 0.;
        for (const Point2 &p : probes) {
            double best = std::numeric_limits<double>::max();
            for (size_t j = 0; j < m; ++j) {
                best = std::min(best, point_segment_distance(p, target[j], target[(j + 1) % m]));
                if (best == 0.)
                    break;
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a.boundary, b.boundary), directed(b.boundary, a.boundary));
}

bool is_convex(const JordanDomain &domain) {
    const JordanCurve &c = domain.boundary;
    const double floor_kappa = -1e-6 / domain_diameter(domain);
    const size_t n = c.size();
    for (size_t i = 0; i < n; ++i)
        for (int q = 0; q < gl8::n; ++q)
            if (c.curvature((double(i) + gl8::x[q]) / double(n)) < floor_kappa)
                return false;
    return true;
}

namespace {

Circle circle_from(const Point2 &a, const Point2 &b) {
    return Circle{0.5 * (a + b), 0.5 * (a - b).norm()};
}

Circle circle_from(const Point2 &a, const Point2 &b, const Point2 &c) {
    Point2 ab = b - a, ac = c - a;
    double d = 2. * cross(ab, ac);
    if (d == 0.)
        return Circle{Point2(0., 0.), std::numeric_limits<double>::max()};
    double ab2 = ab.squaredNorm(), ac2 = ac.squaredNorm();
    Point2 center = a + Point2(ac.y() * ab2 - ab.y() * ac2, ab.x() * ac2 - ac.x() * ab2) / d;
    return Circle{center, (center - a).norm()};
}

bool in_circle(const Circle &c, const Point2 &p, double slack) {
    return (p - c.center).norm() <= c.radius + slack;
}

} // namespace

Circle min_enclosing_circle(const std::vector<Point2> &points) {
    if (points.empty())
        return Circle{};
    if (points.size() == 1)
        return Circle{points[0], 0.};

    double scale = 0.;
    for (const Point2 &p : points)
        scale = std::max(scale, p.cwiseAbs().maxCoeff());
    const double slack = 1e-12 * std::max(scale, 1.);

    std::vector<Point2> pts = points;
    std::shuffle(pts.begin(), pts.end(), std::mt19937(0x9e3779b9u)); // deterministic

    // Welzl, incremental with move-to-front flavor.
    Circle c = circle_from(pts[0], pts[1]);
    for (size_t i = 2; i < pts.size(); ++i) {
        if (in_circle(c, pts[i], slack))
            continue;
        c = circle_from(pts[0], pts[i]);
        for (size_t j = 1; j < i; ++j) {
            if (in_circle(c, pts[j], slack))
                continue;
            c = circle_from(pts[i], pts[j]);
            for (size_t k = 0; k < j; ++k) {
                if (!in_circle(c, pts[k], slack))
                    c = circle_from(pts[i], pts[j], pts[k]);
            }
        }
    }
    return c;
}

Circle circumscribing_circle(const JordanDomain &domain) {
    return min_enclosing_circle(domain.boundary.samples());
}

Similarity normalizer(const JordanDomain &domain) {
    Circle c = circumscribing_circle(domain);
    return Similarity(1. / c.radius, 0., false, -c.center / c.radius);
}

double domain_diameter(const JordanDomain &domain) { return 2. * circumscribing_circle(domain).radius; }

} // namespace jordan
