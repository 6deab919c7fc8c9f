#ifndef jordan_curve_hpp_
#define jordan_curve_hpp_

#include "jordan/spline.hpp"
#include "jordan/types.hpp"

namespace jordan {

struct CurveConfig {
    size_t min_samples = 16;
    int    simplicity_refinement = 4;  // spline subdivision factor for the refined simplicity pass
    double rotation_index_tol = 1e-3;  // |total curvature - 2*pi| bound
    size_t resample_count = 0;         // 0: keep the input sample count
};

// Oriented simple closed planar curve: a periodic C2 spline through its samples,
// counterclockwise, with a near-arc-length parameter t in [0,1).
class JordanCurve {
public:
    JordanCurve() = default;

    static JordanCurve build(std::vector<Point2> samples, const CurveConfig &config = {});

    const std::vector<Point2> &samples() const { return m_spline.points(); }
    size_t size() const { return m_spline.size(); }
    const PeriodicSpline &spline() const { return m_spline; }

    Point2 point(double t) const { return m_spline.value(t); }
    Point2 derivative(double t) const { return m_spline.derivative(t); }
    Point2 unit_tangent(double t) const { return m_spline.derivative(t).normalized(); }
    Point2 inward_normal(double t) const { return rotate90(unit_tangent(t)); }
    double curvature(double t) const;

    double length() const { return m_spline.total_length(); }
    double total_curvature() const; // integral of curvature ds over one period

    // Polyline refinement of the spline (factor points per sample interval).
    std::vector<Point2> dense_polyline(int factor = 4) const;
    std::vector<Point2> resample(size_t n) const { return m_spline.resample(n); }

private:
    explicit JordanCurve(PeriodicSpline spline) : m_spline(std::move(spline)) {}
    PeriodicSpline m_spline;
};

struct JordanDomain {
    JordanCurve boundary;
};

enum class Classification { Interior, Boundary, Exterior };

struct Location {
    Classification cls;
    double signed_distance;  // > 0 inside, < 0 outside
    double nearest_param;    // boundary parameter of the nearest point
};

JordanCurve  build_curve(std::vector<Point2> samples, const CurveConfig &config = {});
JordanDomain build_domain(std::vector<Point2> samples, const CurveConfig &config = {});

std::pair<double, Point2> area_and_centroid(const JordanDomain &domain);
double curvature(const JordanDomain &domain, double t);

JordanDomain transform(const Similarity &g, const JordanDomain &domain);

Location locate(const JordanDomain &domain, const Point2 &p, double tol = 1e-9);

// Distance from p to the boundary spline (always >= 0), with the nearest parameter.
std::pair<double, double> distance_to_boundary(const JordanCurve &curve, const Point2 &p);

// Symmetric Hausdorff distance between the two boundary curves.
double hausdorff(const JordanDomain &a, const JordanDomain &b);

bool is_convex(const JordanDomain &domain);

// Exact minimum enclosing circle of a point set (Welzl).
Circle min_enclosing_circle(const std::vector<Point2> &points);

Circle circumscribing_circle(const JordanDomain &domain);

// Similarity x -> (x - circumcenter) / circumradius; the image has circumcenter o and circumradius 1.
Similarity normalizer(const JordanDomain &domain);

double domain_diameter(const JordanDomain &domain); // circumscribing-circle diameter

} // namespace jordan

#endif
