#include "jordan/conformal.hpp"

#include <algorithm>

#include "polygon_utils.hpp"

namespace jordan {

namespace {

constexpr Complex I{0., 1.};

// sqrt with branch cut along [0, +inf) and values in the closed upper half-plane.
inline Complex sqrt_up(Complex w) { return I * std::sqrt(-w); }

// A real boundary value in the half-plane chart, possibly the point at infinity.
struct RealValue {
    double v = 0.;
    bool inf = true;
};

inline int sgn(double x) { return x >= 0. ? 1 : -1; }

} // namespace

// ---- elementary stage algebra ------------------------------------------------------

// zip: H minus the geodesic slit -> H, tip of the slit to the origin.
static Complex stage_zip(const ConformalMap::GeodesicStage &st, Complex z) {
    Complex mu = z / (1. - z * st.x0_inv);
    return sqrt_up(mu * mu + st.h * st.h);
}

static RealValue stage_zip_real(const ConformalMap::GeodesicStage &st, RealValue x) {
    double mu;
    if (x.inf) {
        if (st.x0_inv == 0.)
            return x; // stays at infinity
        mu = -1. / st.x0_inv;
    } else {
        double denom = 1. - x.v * st.x0_inv;
        if (denom == 0.)
            return RealValue{0., true};
        mu = x.v / denom;
    }
    if (mu == 0.)
        throw Error(ErrorCode::DidNotConverge, "prime end collided with the slit tip");
    return RealValue{double(sgn(mu)) * std::hypot(mu, st.h), false};
}

// ---- evaluation ---------------------------------------------------------------------

Complex ConformalMap::zip(Complex z) const {
    // domain -> half-plane -> disk
    Complex w = I * std::sqrt((z - m_z1) / (z - m_z0));
    for (const GeodesicStage &st : m_geodesic)
        w = stage_zip(st, w);
    Complex v = w / (1. - w * m_xinf_inv);
    Complex w2 = double(m_orientation_sign) * v * v;
    Complex zeta = (w2 - m_wp) / (w2 - std::conj(m_wp));
    return std::polar(1., -m_alpha) * zeta;
}

Complex ConformalMap::inverse_c(Complex w) const { return zip(w); }

Complex ConformalMap::forward_c(Complex z) const {
    const double r = std::abs(z);
    const bool boundary = r >= 1. - 1e-12;
    Complex zeta = std::polar(1., m_alpha) * (boundary && r > 0. ? z / r : z);

    // Cayley inverse: disk -> H.
    Complex w;
    RealValue rv; // used while the value is pinned to the boundary
    bool on_axis = false, at_inf = false;
    if (boundary && std::abs(1. - zeta) < 1e-13) {
        at_inf = true;
    } else {
        w = (m_wp - std::conj(m_wp) * zeta) / (1. - zeta);
        if (boundary) {
            rv = RealValue{w.real(), false};
            on_axis = true;
        }
    }

    // Closing-square inverse.
    if (at_inf) {
        if (m_xinf_inv == 0.) {
            rv = RealValue{0., true};
            on_axis = true;
        } else {
            rv = RealValue{1. / m_xinf_inv, false};
            on_axis = true;
        }
    } else {
        auto nu_inv = [&](Complex nu) { return nu / (1. + nu * m_xinf_inv); };
        if (on_axis) {
            double x = rv.v;
            if (m_orientation_sign > 0 ? x >= 0. : x <= 0.) {
                double nu = m_orientation_sign > 0 ? std::sqrt(x) : -std::sqrt(-x);
                rv.v = nu / (1. + nu * m_xinf_inv);
            } else {
                // The probe sits on the closing geodesic; it leaves the real axis.
                Complex nu = I * std::sqrt(std::abs(x));
                w = nu_inv(nu);
                on_axis = false;
            }
        } else {
            if (w.imag() < 0.)
                w = Complex(w.real(), 0.);
            Complex nu = m_orientation_sign > 0 ? std::sqrt(w) : -std::sqrt(-w);
            w = nu_inv(nu);
        }
    }

    // Geodesic stages, inverted in reverse order.
    for (auto it = m_geodesic.rbegin(); it != m_geodesic.rend(); ++it) {
        const GeodesicStage &st = *it;
        if (on_axis) {
            if (rv.inf) {
                if (st.x0_inv != 0.)
                    rv = RealValue{1. / st.x0_inv, false};
                continue;
            }
            double t = rv.v * rv.v - st.h * st.h;
            if (t >= 0.) {
                double s = double(sgn(rv.v)) * std::sqrt(t);
                rv.v = s / (1. + s * st.x0_inv);
            } else {
                Complex s = I * std::sqrt(-t); // lands on the slit
                w = s / (1. + s * st.x0_inv);
                on_axis = false;
            }
        } else {
            if (w.imag() < 0.)
                w = Complex(w.real(), 0.);
            Complex s = sqrt_up(w * w - st.h * st.h);
            w = s / (1. + s * st.x0_inv);
        }
    }

    // Initial slit inverse.
    if (on_axis) {
        if (rv.inf)
            return m_z0;
        double m = -rv.v * rv.v; // <= 0
        return (m_z1 - m_z0 * m) / (1. - m);
    }
    Complex m = -w * w;
    return (m_z1 - m_z0 * m) / (1. - m);
}

Point2 ConformalMap::forward(const Point2 &disk_point) const {
    Complex z = to_complex(disk_point);
    if (std::abs(z) > 1. + 1e-9)
        throw Error(ErrorCode::OutOfDomain, "forward evaluation requires |z| <= 1");
    return to_point(forward_c(z));
}

Point2 ConformalMap::inverse(const Point2 &domain_point) const {
    if (!polyutil::point_in_polygon(m_samples, domain_point) &&
        polyutil::polyline_distance(m_samples, domain_point) > std::max(m_boundary_defect, 1e-6 * m_diam))
        throw Error(ErrorCode::OutOfDomain, "inverse evaluation requires a point of the closed domain");
    Complex z = inverse_c(to_complex(domain_point));
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error(ErrorCode::InverseFailed, "stage inversion produced a non-finite value");
    double r = std::abs(z);
    if (r > 1.)
        z /= r;
    return to_point(z);
}

Point2 evaluate(const ConformalMap &map, const Point2 &z, MapDirection direction) {
    return direction == MapDirection::Forward ? map.forward(z) : map.inverse(z);
}

std::vector<StageInfo> ConformalMap::stages() const {
    std::vector<StageInfo> out;
    out.push_back({"initial_slit", {m_z0.real(), m_z0.imag(), m_z1.real(), m_z1.imag()}});
    for (const GeodesicStage &st : m_geodesic)
        out.push_back({"geodesic", {st.x0_inv, st.h}});
    out.push_back({"closing", {m_xinf_inv, double(m_orientation_sign)}});
    out.push_back({"cayley", {m_wp.real(), m_wp.imag()}});
    out.push_back({"rotation", {m_alpha}});
    return out;
}

// ---- construction -------------------------------------------------------------------

// Geodesic algorithm on ordered boundary samples; the anchor must be interior.
ConformalMap ConformalMap::build_stages(const std::vector<Complex> &samples, Complex anchor) {
    const size_t n = samples.size();
    if (n < 8)
        throw Error(ErrorCode::TooFewSamples, "conformal map needs at least 8 boundary samples");

    ConformalMap map;
    map.m_z0 = samples[0];
    map.m_z1 = samples[1];

    auto init_zip = [&](Complex z) { return I * std::sqrt((z - map.m_z1) / (z - map.m_z0)); };

    std::vector<Complex> w(n);
    for (size_t j = 2; j < n; ++j)
        w[j] = init_zip(samples[j]);
    Complex p = init_zip(anchor);
    RealValue xinf; // image of samples[0], starts at infinity

    map.m_geodesic.reserve(n - 2);
    for (size_t k = 2; k < n; ++k) {
        Complex a = w[k];
        double mag = std::abs(a);
        if (!(mag > 0.) || !std::isfinite(mag))
            continue; // coincides with the current tip at working precision
        double A = a.real(), B = std::max(a.imag(), 1e-14 * mag);
        double n2 = A * A + B * B;
        ConformalMap::GeodesicStage st{A / n2, n2 / B};
        map.m_geodesic.push_back(st);
        for (size_t j = k + 1; j < n; ++j)
            w[j] = stage_zip(st, w[j]);
        p = stage_zip(st, p);
        xinf = stage_zip_real(st, xinf);
    }

    if (xinf.inf) {
        map.m_xinf_inv = 0.;
    } else {
        if (std::abs(xinf.v) < 1e-300)
            throw Error(ErrorCode::DidNotConverge, "closing geodesic collapsed");
        map.m_xinf_inv = 1. / xinf.v;
    }

    Complex q = p / (1. - p * map.m_xinf_inv);
    map.m_orientation_sign = q.real() >= 0. ? 1 : -1;
    map.m_wp = double(map.m_orientation_sign) * q * q;
    if (!(map.m_wp.imag() > 0.))
        throw Error(ErrorCode::DidNotConverge, "anchor did not stay interior through the construction");
    return map;
}

void ConformalMap::normalize_derivative(ConformalMap &map, Complex u) {
    const double delta = 1e-5;
    Complex d1 = (map.forward_c(Complex(delta, 0.)) - map.forward_c(Complex(-delta, 0.))) / (2. * delta);
    Complex d2 = (map.forward_c(Complex(0., delta)) - map.forward_c(Complex(0., -delta))) / (2. * delta * I);
    Complex d = 0.5 * (d1 + d2);
    map.m_alpha = std::arg(u) - std::arg(d);
    map.m_center_derivative = std::abs(d) * std::polar(1., std::arg(u));
    map.m_center_value = map.forward_c(Complex(0., 0.));
}

ConformalMap build_interior_map(const JordanDomain &domain, const Point2 &p, const Point2 &u,
                                const MapConfig &config) {
    if (!(u.norm() > 0.) || !finite(u))
        throw Error(ErrorCode::ZeroDirection, "derivative direction must be a nonzero vector");
    const double diam = domain_diameter(domain);
    if (locate(domain, p, 1e-12 * diam).cls != Classification::Interior)
        throw Error(ErrorCode::PointNotInterior, "map anchor must lie in the interior");

    const Complex pc = to_complex(p), uc = to_complex(u);
    for (size_t n = config.samples;; n *= 2) {
        std::vector<Point2> pts = domain.boundary.resample(n);
        std::vector<Complex> samples(n);
        for (size_t i = 0; i < n; ++i)
            samples[i] = to_complex(pts[i]);

        ConformalMap map = ConformalMap::build_stages(samples, pc);
        ConformalMap::normalize_derivative(map, uc);
        map.m_samples = std::move(pts);
        map.m_diam = diam;

        double defect = 0.;
        for (size_t j = 0; j < config.probes; ++j) {
            Complex z = std::polar(1., 2. * pi * double(j) / double(config.probes));
            defect = std::max(defect, distance_to_boundary(domain.boundary, to_point(map.forward_c(z))).first);
        }
        map.m_boundary_defect = defect;

        if (defect <= config.tol * diam) {
            if ((map.center_value() - p).norm() > config.tol * diam)
                throw Error(ErrorCode::DidNotConverge, "normalization drifted from the anchor");
            return map;
        }
        if (n >= config.max_samples)
            throw Error(ErrorCode::DidNotConverge,
                        "boundary defect " + std::to_string(defect) + " above tolerance at max refinement");
    }
}

// ---- exterior map -------------------------------------------------------------------

Complex ExteriorMap::forward_c(Complex z) const {
    if (std::abs(z) < 1e-300)
        throw Error(ErrorCode::OutOfDomain, "the puncture maps to infinity");
    return m_chart_center + 1. / m_inner.forward_c(z);
}

Complex ExteriorMap::inverse_c(Complex w) const {
    return m_inner.inverse_c(1. / (w - m_chart_center));
}

Point2 ExteriorMap::forward(const Point2 &disk_point) const {
    Complex z = to_complex(disk_point);
    if (std::abs(z) > 1. + 1e-9)
        throw Error(ErrorCode::OutOfDomain, "forward evaluation requires 0 < |z| <= 1");
    return to_point(forward_c(z));
}

Point2 ExteriorMap::inverse(const Point2 &exterior_point) const {
    Complex z = inverse_c(to_complex(exterior_point));
    double r = std::abs(z);
    if (r > 1.)
        z /= r;
    return to_point(z);
}

ExteriorMap build_exterior_map(const JordanDomain &normalized_domain, const MapConfig &config) {
    Circle circ = circumscribing_circle(normalized_domain);
    if (circ.center.norm() > 1e-6 || std::abs(circ.radius - 1.) > 1e-6)
        throw Error(ErrorCode::OutOfDomain,
                    "exterior map requires a normalized domain (circumcenter o, circumradius 1)");

    // Chart center: deepest interior point on a coarse grid.
    const std::vector<Point2> dense = normalized_domain.boundary.dense_polyline(4);
    Point2 lo = dense[0], hi = dense[0];
    for (const Point2 &p : dense) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    Point2 best(0., 0.);
    double best_clearance = -1.;
    const int grid = 33;
    for (int j = 0; j < grid; ++j)
        for (int i = 0; i < grid; ++i) {
            Point2 p = lo + Point2((hi - lo).x() * (i + 0.5) / grid, (hi - lo).y() * (j + 0.5) / grid);
            if (!polyutil::point_in_polygon(dense, p))
                continue;
            double d = polyutil::polyline_distance(dense, p);
            if (d > best_clearance) {
                best_clearance = d;
                best = p;
            }
        }
    if (best_clearance <= 0.)
        throw Error(ErrorCode::DidNotConverge, "no interior chart center found");
    const Complex c = to_complex(best);

    for (size_t n = config.samples;; n *= 2) {
        std::vector<Point2> pts = normalized_domain.boundary.resample(n);
        std::vector<Complex> chart(n);
        for (size_t i = 0; i < n; ++i)
            chart[i] = 1. / (to_complex(pts[n - 1 - i]) - c); // reversed: the chart flips orientation

        ExteriorMap ext;
        ext.m_chart_center = c;
        ext.m_inner = ConformalMap::build_stages(chart, Complex(0., 0.));
        ConformalMap::normalize_derivative(ext.m_inner, Complex(1., 0.));
        ext.m_inner.m_diam = 2.;
        ext.m_inner.m_samples.resize(n);
        for (size_t i = 0; i < n; ++i)
            ext.m_inner.m_samples[i] = to_point(chart[i]);

        double defect = 0.;
        for (size_t j = 0; j < config.probes; ++j) {
            Complex z = std::polar(1., 2. * pi * double(j) / double(config.probes));
            defect = std::max(defect,
                              distance_to_boundary(normalized_domain.boundary, to_point(ext.forward_c(z))).first);
        }
        ext.m_boundary_defect = defect;
        if (defect <= config.tol * 2.)
            return ext;
        if (n >= config.max_samples)
            throw Error(ErrorCode::DidNotConverge,
                        "exterior boundary defect " + std::to_string(defect) + " above tolerance");
    }
}

std::vector<double> convergence_probe(const JordanDomain &domain,
                                      const std::vector<JordanDomain> &perturbations, const Point2 &p,
                                      const Point2 &u, const MapConfig &config) {
    ConformalMap base = build_interior_map(domain, p, u, config);
    std::vector<Complex> grid;
    for (int ir = 1; ir <= 10; ++ir)
        for (int ia = 0; ia < 64; ++ia)
            grid.push_back(std::polar(0.1 * ir, 2. * pi * ia / 64.));
    for (int ia = 0; ia < 512; ++ia) // the sup is usually attained on the boundary circle
        grid.push_back(std::polar(1., 2. * pi * ia / 512.));

    std::vector<double> out;
    out.reserve(perturbations.size());
    for (const JordanDomain &pert : perturbations) {
        ConformalMap f = build_interior_map(pert, p, u, config);
        double sup = 0.;
        for (Complex z : grid)
            sup = std::max(sup, std::abs(f.forward_c(z) - base.forward_c(z)));
        out.push_back(sup);
    }
    return out;
}

double normalized_sup_distance(const JordanDomain &a, const JordanDomain &b, const Point2 &p,
                               const Point2 &u, const MapConfig &config) {
    return convergence_probe(a, {b}, p, u, config).front();
}

} // namespace jordan
