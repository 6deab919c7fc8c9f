#include "jordan/spline.hpp"

#include <Eigen/Sparse>
#include <algorithm>

namespace jordan {

namespace {

// 8-node Gauss-Legendre rule on [0,1].
constexpr int    gl_n = 8;
constexpr double gl_x[gl_n] = {0.01985507175123188, 0.10166676129318664, 0.2372337950418355,  0.40828267875217505,
                               0.5917173212478249,  0.7627662049581645,  0.8983332387068134,  0.9801449282487682};
constexpr double gl_w[gl_n] = {0.05061426814518813, 0.11119051722668723, 0.15685332293894363, 0.18134189168918097,
                               0.18134189168918097, 0.15685332293894363, 0.11119051722668723, 0.05061426814518813};

} // namespace

PeriodicSpline::PeriodicSpline(std::vector<Point2> points, std::vector<double> knots)
    : m_points(std::move(points)), m_knots(std::move(knots)) {
    if (m_points.size() < 3)
        throw Error(ErrorCode::TooFewSamples, "periodic spline needs at least 3 points");
    if (m_knots.size() != m_points.size())
        throw Error(ErrorCode::NonFinite, "knot/point count mismatch");
    solve_second_derivatives();
    build_arc_length_table();
}

PeriodicSpline PeriodicSpline::uniform(std::vector<Point2> points) {
    const size_t n = points.size();
    std::vector<double> knots(n);
    for (size_t i = 0; i < n; ++i)
        knots[i] = double(i) / double(n);
    return PeriodicSpline(std::move(points), std::move(knots));
}

PeriodicSpline PeriodicSpline::chordal(std::vector<Point2> points) {
    const size_t n = points.size();
    std::vector<double> knots(n, 0.);
    double acc = 0.;
    for (size_t i = 0; i < n; ++i) {
        knots[i] = acc;
        acc += (points[(i + 1) % n] - points[i]).norm();
    }
    if (!(acc > 0.))
        throw Error(ErrorCode::NonFinite, "degenerate point set: zero perimeter");
    for (auto &k : knots)
        k /= acc;
    return PeriodicSpline(std::move(points), std::move(knots));
}

void PeriodicSpline::solve_second_derivatives() {
    const int n = int(m_points.size());
    std::vector<double> h(n);
    for (int i = 0; i < n; ++i) {
        double next = (i + 1 < n) ? m_knots[i + 1] : m_knots[0] + 1.;
        h[i] = next - m_knots[i];
        if (!(h[i] > 0.))
            throw Error(ErrorCode::NonFinite, "knots must be strictly increasing");
    }

    // Cyclic tridiagonal system for the knot second derivatives.
    Eigen::SparseMatrix<double> A(n, n);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(size_t(3 * n));
    Eigen::MatrixX2d rhs(n, 2);
    for (int i = 0; i < n; ++i) {
        int    prev = (i + n - 1) % n, next = (i + 1) % n;
        double hp = h[prev], hi = h[i];
        trip.emplace_back(i, prev, hp / 6.);
        trip.emplace_back(i, i, (hp + hi) / 3.);
        trip.emplace_back(i, next, hi / 6.);
        Point2 r = (m_points[next] - m_points[i]) / hi - (m_points[i] - m_points[prev]) / hp;
        rhs(i, 0) = r.x();
        rhs(i, 1) = r.y();
    }
    A.setFromTriplets(trip.begin(), trip.end());

    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(A);
    if (lu.info() != Eigen::Success)
        throw Error(ErrorCode::NonFinite, "periodic spline system is singular");
    Eigen::MatrixX2d m = lu.solve(rhs);

    m_second.resize(size_t(n));
    for (int i = 0; i < n; ++i)
        m_second[size_t(i)] = Point2(m(i, 0), m(i, 1));
}

size_t PeriodicSpline::segment_index(double &t) const {
    t -= std::floor(t);
    auto it = std::upper_bound(m_knots.begin(), m_knots.end(), t);
    return size_t(std::distance(m_knots.begin(), it)) - 1;
}

Point2 PeriodicSpline::value(double t) const {
    size_t i = segment_index(t);
    size_t j = (i + 1) % m_points.size();
    double t1 = (i + 1 < m_knots.size()) ? m_knots[i + 1] : m_knots[0] + 1.;
    double hi = t1 - m_knots[i];
    double a = (t1 - t) / hi, b = (t - m_knots[i]) / hi;
    return a * m_points[i] + b * m_points[j] +
           ((a * a * a - a) * m_second[i] + (b * b * b - b) * m_second[j]) * (hi * hi / 6.);
}

Point2 PeriodicSpline::derivative(double t) const {
    size_t i = segment_index(t);
    size_t j = (i + 1) % m_points.size();
    double t1 = (i + 1 < m_knots.size()) ? m_knots[i + 1] : m_knots[0] + 1.;
    double hi = t1 - m_knots[i];
    double a = (t1 - t) / hi, b = (t - m_knots[i]) / hi;
    return (m_points[j] - m_points[i]) / hi +
           (-(3. * a * a - 1.) * m_second[i] + (3. * b * b - 1.) * m_second[j]) * (hi / 6.);
}

Point2 PeriodicSpline::second_derivative(double t) const {
    size_t i = segment_index(t);
    size_t j = (i + 1) % m_points.size();
    double t1 = (i + 1 < m_knots.size()) ? m_knots[i + 1] : m_knots[0] + 1.;
    double hi = t1 - m_knots[i];
    double a = (t1 - t) / hi, b = (t - m_knots[i]) / hi;
    return a * m_second[i] + b * m_second[j];
}

void PeriodicSpline::build_arc_length_table() {
    const size_t n = m_points.size();
    m_cum_len.assign(n + 1, 0.);
    for (size_t i = 0; i < n; ++i) {
        double t0 = m_knots[i];
        double t1 = (i + 1 < n) ? m_knots[i + 1] : m_knots[0] + 1.;
        double len = 0.;
        for (int q = 0; q < gl_n; ++q)
            len += gl_w[q] * derivative(t0 + gl_x[q] * (t1 - t0)).norm();
        m_cum_len[i + 1] = m_cum_len[i] + len * (t1 - t0);
    }
    m_total_length = m_cum_len[n];
}

double PeriodicSpline::arc_length(double t) const {
    double tw = t - std::floor(t);
    size_t i = segment_index(tw);
    double t0 = m_knots[i];
    double len = 0.;
    for (int q = 0; q < gl_n; ++q)
        len += gl_w[q] * derivative(t0 + gl_x[q] * (tw - t0)).norm();
    return m_cum_len[i] + len * (tw - t0) + std::floor(t) * m_total_length;
}

double PeriodicSpline::param_at_arc_length(double s) const {
    const size_t n = m_points.size();
    s -= m_total_length * std::floor(s / m_total_length);
    auto it = std::upper_bound(m_cum_len.begin(), m_cum_len.end(), s);
    size_t i = std::min(size_t(std::distance(m_cum_len.begin(), it)) - 1, n - 1);
    double t0 = m_knots[i];
    double t1 = (i + 1 < n) ? m_knots[i + 1] : m_knots[0] + 1.;
    // Newton on arc_length(t) - s with bisection safeguard.
    double lo = t0, hi = t1;
    double t = t0 + (t1 - t0) * (s - m_cum_len[i]) / std::max(m_cum_len[i + 1] - m_cum_len[i], 1e-300);
    for (int iter = 0; iter < 60; ++iter) {
        double f = arc_length(t) - s;
        if (std::abs(f) <= 1e-14 * std::max(m_total_length, 1e-300))
            break;
        (f > 0. ? hi : lo) = t;
        double d = derivative(t).norm();
        double tn = (d > 1e-300) ? t - f / d : 0.5 * (lo + hi);
        if (!(tn > lo && tn < hi))
            tn = 0.5 * (lo + hi);
        if (std::abs(tn - t) < 1e-16)
            break;
        t = tn;
    }
    return t;
}

std::vector<Point2> PeriodicSpline::resample(size_t n) const {
    std::vector<Point2> out(n);
    for (size_t k = 0; k < n; ++k)
        out[k] = value(param_at_arc_length(m_total_length * double(k) / double(n)));
    return out;
}

} // namespace jordan
