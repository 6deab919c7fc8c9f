#include "jordan/medial.hpp"

#include <algorithm>
#include <boost/polygon/point_data.hpp>
#include <boost/polygon/voronoi.hpp>

#include "gauss_legendre.hpp"

namespace jordan {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double max_positive_curvature(const JordanCurve &c) {
    const size_t n = c.size() * 4;
    double kmax = 0.;
    for (size_t i = 0; i < n; ++i)
        kmax = std::max(kmax, c.curvature(double(i) / double(n)));
    return kmax;
}

} // namespace

MedialAxisApprox medial_axis(const JordanDomain &domain, size_t n, const MedialConfig &config) {
    if (n < 256)
        throw Error(ErrorCode::TooFewSamples, "medial axis needs at least 256 boundary samples");

    const double diam = domain_diameter(domain);
    std::vector<Point2> samples = domain.boundary.resample(n);

    // Symmetry-breaking jitter, seeded from the sample index.
    for (size_t i = 0; i < n; ++i) {
        double phi = 2. * pi * double(splitmix64(i) >> 11) * 0x1.0p-53;
        samples[i] += config.jitter * diam * Point2(std::cos(phi), std::sin(phi));
    }

    // Scale to an integer grid for the Voronoi builder.
    Point2 lo = samples[0], hi = samples[0];
    for (const Point2 &p : samples) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    const Point2 mid = 0.5 * (lo + hi);
    const double half = std::max((hi - lo).maxCoeff() * 0.5, 1e-300);
    const double scale = double(1 << 28) / half;

    std::vector<boost::polygon::point_data<int>> ipts;
    ipts.reserve(n);
    for (const Point2 &p : samples)
        ipts.emplace_back(int(std::llround((p.x() - mid.x()) * scale)),
                          int(std::llround((p.y() - mid.y()) * scale)));

    boost::polygon::voronoi_diagram<double> vd;
    boost::polygon::construct_voronoi(ipts.begin(), ipts.end(), &vd);

    MedialAxisApprox out;
    out.resolution = n;
    const double touch_tol = std::max(4. / scale, 4. * config.jitter * diam);
    for (const auto &vertex : vd.vertices()) {
        Point2 v(vertex.x() / scale + mid.x(), vertex.y() / scale + mid.y());
        if (!finite(v))
            continue;
        if (locate(domain, v, 1e-9 * diam).cls != Classification::Interior)
            continue;
        double radius = std::numeric_limits<double>::max();
        for (const Point2 &p : samples)
            radius = std::min(radius, (p - v).norm());

        // Directions in which the inscribed disk touches the boundary.
        std::vector<double> angles;
        const double limit = radius + std::max(1e-3 * radius, touch_tol);
        for (const Point2 &p : samples)
            if ((p - v).norm() <= limit)
                angles.push_back(std::atan2(p.y() - v.y(), p.x() - v.x()));
        if (angles.size() < 2)
            continue;
        std::sort(angles.begin(), angles.end());
        double max_gap = 2. * pi - (angles.back() - angles.front());
        for (size_t i = 1; i < angles.size(); ++i)
            max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
        double spread = 2. * pi - max_gap;
        if (spread < config.separation_angle)
            continue;

        out.vertices.push_back(MedialVertex{v, radius});
    }
    if (out.vertices.empty())
        throw Error(ErrorCode::DegenerateVoronoi, "no interior medial vertices survived filtering");
    return out;
}

double reach(const JordanDomain &domain, size_t n) {
    MedialAxisApprox axis = medial_axis(domain, n);
    std::vector<Point2> samples = domain.boundary.resample(n);
    double boundary_to_axis = std::numeric_limits<double>::max();
    for (const Point2 &p : samples) {
        double best = std::numeric_limits<double>::max();
        for (const MedialVertex &v : axis.vertices)
            best = std::min(best, (v.position - p).norm());
        boundary_to_axis = std::min(boundary_to_axis, best);
    }
    double kmax = max_positive_curvature(domain.boundary);
    double cap = kmax > 0. ? 1. / kmax : std::numeric_limits<double>::max();
    return std::min(boundary_to_axis, cap);
}

JordanDomain inner_offset(const JordanDomain &domain, double s) {
    if (!(s > 0.) || !std::isfinite(s))
        throw Error(ErrorCode::OffsetTooLarge, "offset distance must be positive and finite");
    double kmax = max_positive_curvature(domain.boundary);
    if (kmax > 0. && s >= 1. / kmax)
        throw Error(ErrorCode::OffsetTooLarge, "offset distance exceeds the curvature radius bound");

    const JordanCurve &c = domain.boundary;
    const size_t m = std::max<size_t>(2 * c.size(), 1024);
    std::vector<Point2> offset(m);
    for (size_t i = 0; i < m; ++i) {
        double t = double(i) / double(m);
        offset[i] = c.point(t) + s * c.inward_normal(t);
    }

    // A pinched offset comes closer than s to some far part of the boundary.
    std::vector<Point2> dense = c.dense_polyline(2);
    const size_t nd = dense.size();
    for (const Point2 &p : offset) {
        double best = std::numeric_limits<double>::max();
        for (size_t j = 0; j < nd; ++j) {
            const Point2 &a = dense[j], &b = dense[(j + 1) % nd];
            Point2 ab = b - a;
            double len2 = ab.squaredNorm();
            double u = len2 > 0. ? std::clamp((p - a).dot(ab) / len2, 0., 1.) : 0.;
            best = std::min(best, (p - (a + u * ab)).squaredNorm());
        }
        if (std::sqrt(best) < s * (1. - 1e-2))
            throw Error(ErrorCode::OffsetTooLarge, "offset curve penetrates the opposite boundary");
    }

    try {
        return build_domain(std::move(offset));
    } catch (const Error &e) {
        if (e.code() == ErrorCode::SelfIntersecting)
            throw Error(ErrorCode::OffsetTooLarge, std::string("offset curve self-intersects: ") + e.what());
        throw;
    }
}

} // namespace jordan
