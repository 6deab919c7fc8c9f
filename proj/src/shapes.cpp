#include "jordan/shapes.hpp"

#include <cmath>

namespace jordan {

JordanDomain make_circle(double r, const Point2 &center, size_t n) {
    if (!(r > 0.))
        throw Error(ErrorCode::NonFinite, "circle radius must be positive");
    std::vector<Point2> pts(n);
    for (size_t i = 0; i < n; ++i) {
        double th = 2. * pi * double(i) / double(n);
        pts[i] = center + r * Point2(std::cos(th), std::sin(th));
    }
    return build_domain(std::move(pts));
}

JordanDomain make_ellipse(double a, double b, const Point2 &center, size_t n) {
    if (!(a > 0.) || !(b > 0.))
        throw Error(ErrorCode::NonFinite, "ellipse semi-axes must be positive");
    std::vector<Point2> pts(n);
    for (size_t i = 0; i < n; ++i) {
        double th = 2. * pi * double(i) / double(n);
        pts[i] = center + Point2(a * std::cos(th), b * std::sin(th));
    }
    return build_domain(std::move(pts));
}

JordanDomain make_egg(size_t n) {
    std::vector<Point2> pts(n);
    for (size_t i = 0; i < n; ++i) {
        double th = 2. * pi * double(i) / double(n);
        double r = 1. + 0.18 * std::cos(th) + 0.05 * std::cos(2. * th);
        pts[i] = r * Point2(std::cos(th), std::sin(th));
    }
    return build_domain(std::move(pts));
}

JordanDomain make_blob(size_t n) {
    std::vector<Point2> pts(n);
    for (size_t i = 0; i < n; ++i) {
        double th = 2. * pi * double(i) / double(n);
        double r = 1. + 0.22 * std::cos(3. * th + 0.8) + 0.08 * std::sin(5. * th);
        pts[i] = r * Point2(std::cos(th), std::sin(th));
    }
    return build_domain(std::move(pts));
}

JordanDomain make_lune(size_t n) {
    const double r_outer = 1., r_inner = 0.85, rho = 0.06; // rho: horn fillet radius
    const Point2 c_inner(0.3, 0.);

    // Fillet circle tangent to the outer circle from inside and to the inner circle from
    // outside: |q| = r_outer - rho and |q - c_inner| = r_inner + rho.
    const double qx =
        (c_inner.x() * c_inner.x() + (r_outer - rho) * (r_outer - rho) - (r_inner + rho) * (r_inner + rho)) /
        (2. * c_inner.x());
    const double qy = std::sqrt((r_outer - rho) * (r_outer - rho) - qx * qx);
    const Point2 q(qx, qy); // upper fillet center
    const Point2 w = q / q.norm();
    const Point2 u = (q - c_inner) / (q - c_inner).norm();

    const double beta = std::atan2(w.y(), w.x());   // outer tangency angle (upper)
    const double psi_t = std::atan2(u.y(), u.x());  // inner tangency angle about c_inner (upper)
    const double a_out = beta;                      // angle of T_out about q
    const double a_in = std::atan2(-u.y(), -u.x()); // angle of T_in about q

    // Fillet sweep from the inner tangency counterclockwise to the outer tangency.
    double sweep = a_out - a_in;
    while (sweep < 0.)
        sweep += 2. * pi;

    const double len_outer = r_outer * (2. * pi - 2. * beta);
    const double len_inner = r_inner * (2. * pi - 2. * psi_t);
    const double len_fillet = rho * sweep;
    const double total = len_outer + len_inner + 2. * len_fillet;

    size_t n_outer = std::max<size_t>(size_t(std::lround(double(n) * len_outer / total)), 8);
    size_t n_fillet = std::max<size_t>(size_t(std::lround(double(n) * len_fillet / total)), 8);
    size_t n_inner = n - n_outer - 2 * n_fillet;

    std::vector<Point2> pts;
    pts.reserve(n);
    // Outer arc, counterclockwise from the upper to the lower tangency.
    for (size_t i = 0; i < n_outer; ++i) {
        double th = beta + (2. * pi - 2. * beta) * (double(i) + 0.5) / double(n_outer);
        pts.emplace_back(r_outer * std::cos(th), r_outer * std::sin(th));
    }
    // Lower fillet (mirror of the upper one), counterclockwise about (qx, -qy).
    for (size_t i = 0; i < n_fillet; ++i) {
        double a = -a_out + sweep * (double(i) + 0.5) / double(n_fillet);
        pts.push_back(Point2(q.x(), -q.y()) + rho * Point2(std::cos(a), std::sin(a)));
    }
    // Inner arc, clockwise about its own center (the crescent stays on the left).
    for (size_t i = 0; i < n_inner; ++i) {
        double phi = -psi_t - (2. * pi - 2. * psi_t) * (double(i) + 0.5) / double(n_inner);
        pts.push_back(c_inner + r_inner * Point2(std::cos(phi), std::sin(phi)));
    }
    // Upper fillet, counterclockwise from the inner to the outer tangency.
    for (size_t i = 0; i < n_fillet; ++i) {
        double a = a_in + sweep * (double(i) + 0.5) / double(n_fillet);
        pts.push_back(q + rho * Point2(std::cos(a), std::sin(a)));
    }
    return build_domain(std::move(pts));
}

JordanDomain make_shape(const ShapeSpec &spec) {
    Point2 center(spec.cx, spec.cy);
    if (spec.name == "circle")
        return make_circle(spec.r, center, spec.n);
    if (spec.name == "ellipse")
        return make_ellipse(spec.a, spec.b, center, spec.n);
    if (spec.name == "egg")
        return make_egg(spec.n);
    if (spec.name == "lune-smoothed" || spec.name == "lune")
        return make_lune(spec.n);
    if (spec.name == "blob")
        return make_blob(spec.n);
    throw Error(ErrorCode::NonFinite, "unknown shape generator: " + spec.name);
}

JordanDomain radial_noise(const JordanDomain &domain, double eps) {
    Circle c = circumscribing_circle(domain);
    std::vector<Point2> pts;
    pts.reserve(domain.boundary.size());
    for (const Point2 &p : domain.boundary.samples()) {
        Point2 v = p - c.center;
        double th = std::atan2(v.y(), v.x());
        double g = std::cos(th + 0.5) + 0.4 * std::cos(3. * th - 1.1);
        pts.push_back(c.center + v * (1. + eps * g));
    }
    return build_domain(std::move(pts));
}

} // namespace jordan
