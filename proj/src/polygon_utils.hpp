#ifndef jordan_polygon_utils_hpp_
#define jordan_polygon_utils_hpp_

#include <algorithm>
#include <limits>
#include <vector>

#include "jordan/types.hpp"

namespace jordan::polyutil {

inline double cross(const Point2 &a, const Point2 &b) { return a.x() * b.y() - a.y() * b.x(); }

inline bool segments_intersect(const Point2 &a, const Point2 &b, const Point2 &c, const Point2 &d) {
    auto orient = [](const Point2 &p, const Point2 &q, const Point2 &r) { return cross(q - p, r - p); };
    double d1 = orient(c, d, a), d2 = orient(c, d, b), d3 = orient(a, b, c), d4 = orient(a, b, d);
    if (((d1 > 0. && d2 < 0.) || (d1 < 0. && d2 > 0.)) && ((d3 > 0. && d4 < 0.) || (d3 < 0. && d4 > 0.)))
        return true;
    auto on_segment = [](const Point2 &p, const Point2 &q, const Point2 &r) {
        return std::min(p.x(), q.x()) <= r.x() && r.x() <= std::max(p.x(), q.x()) &&
               std::min(p.y(), q.y()) <= r.y() && r.y() <= std::max(p.y(), q.y());
    };
    if (d1 == 0. && on_segment(c, d, a)) return true;
    if (d2 == 0. && on_segment(c, d, b)) return true;
    if (d3 == 0. && on_segment(a, b, c)) return true;
    if (d4 == 0. && on_segment(a, b, d)) return true;
    return false;
}

// No two non-adjacent closed-polyline segments intersect.
inline bool polyline_is_simple(const std::vector<Point2> &pts) {
    const size_t n = pts.size();
    std::vector<double> xlo(n), xhi(n), ylo(n), yhi(n);
    for (size_t i = 0; i < n; ++i) {
        const Point2 &p = pts[i], &q = pts[(i + 1) % n];
        xlo[i] = std::min(p.x(), q.x());
        xhi[i] = std::max(p.x(), q.x());
        ylo[i] = std::min(p.y(), q.y());
        yhi[i] = std::max(p.y(), q.y());
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1)
                continue;
            if (xhi[i] < xlo[j] || xhi[j] < xlo[i] || yhi[i] < ylo[j] || yhi[j] < ylo[i])
                continue;
            if (segments_intersect(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]))
                return false;
        }
    }
    return true;
}

inline bool point_in_polygon(const std::vector<Point2> &pts, const Point2 &p) {
    bool inside = false;
    for (size_t i = 0, n = pts.size(); i < n; ++i) {
        const Point2 &a = pts[i], &b = pts[(i + 1) % n];
        if ((a.y() > p.y()) != (b.y() > p.y())) {
            double xint = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
            if (p.x() < xint)
                inside = !inside;
        }
    }
    return inside;
}

inline double point_segment_distance(const Point2 &p, const Point2 &a, const Point2 &b) {
    Point2 ab = b - a;
    double len2 = ab.squaredNorm();
    if (len2 <= 0.)
        return (p - a).norm();
    double s = std::clamp((p - a).dot(ab) / len2, 0., 1.);
    return (p - (a + s * ab)).norm();
}

inline double polyline_distance(const std::vector<Point2> &pts, const Point2 &p) {
    double best = std::numeric_limits<double>::max();
    for (size_t i = 0, n = pts.size(); i < n; ++i)
        best = std::min(best, point_segment_distance(p, pts[i], pts[(i + 1) % n]));
    return best;
}

} // namespace jordan::polyutil

#endif
