#ifndef jordan_spline_hpp_
#define jordan_spline_hpp_

#include "jordan/types.hpp"

namespace jordan {

// Closed (periodic) C2 cubic spline through a cyclic list of planar points.
// Knots may be nonuniform; the parameter is normalized so the period is exactly 1.
class PeriodicSpline {
public:
    PeriodicSpline() = default;

    // knots.size() == points.size(); knots strictly increasing in [0,1), knots[0] == 0.
    PeriodicSpline(std::vector<Point2> points, std::vector<double> knots);

    // Uniform knots i/N.
    static PeriodicSpline uniform(std::vector<Point2> points);
    // Knots proportional to cumulative chordal length.
    static PeriodicSpline chordal(std::vector<Point2> points);

    size_t size() const { return m_points.size(); }
    const std::vector<Point2> &points() const { return m_points; }
    const std::vector<double> &knots() const { return m_knots; }

    Point2 value(double t) const;
    Point2 derivative(double t) const;
    Point2 second_derivative(double t) const;

    // Arc length of the image of [0, t] (t in [0,1]); total_length() == length at t = 1.
    double arc_length(double t) const;
    double total_length() const { return m_total_length; }
    // Parameter t with arc_length(t) == s (s in [0, total_length)).
    double param_at_arc_length(double s) const;

    std::vector<Point2> resample(size_t n) const;

private:
    void solve_second_derivatives();
    void build_arc_length_table();
    size_t segment_index(double &t) const; // wraps t into [0,1), returns containing segment

    std::vector<Point2> m_points;
    std::vector<double> m_knots;   // size N, first is 0
    std::vector<Point2> m_second;  // second derivatives at knots
    std::vector<double> m_cum_len; // cumulative arc length at knots, size N+1
    double m_total_length = 0.;
};

} // namespace jordan

#endif
