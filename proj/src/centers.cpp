#include "jordan/centers.hpp"

#include "gauss_legendre.hpp"

namespace jordan {

const char *center_kind_name(CenterKind kind) {
    switch (kind) {
    case CenterKind::Centroid: return "centroid";
    case CenterKind::Circumcenter: return "circumcenter";
    case CenterKind::Steiner: return "steiner";
    }
    return "unknown";
}

CenterKind parse_center_kind(const std::string &name) {
    if (name == "centroid")
        return CenterKind::Centroid;
    if (name == "circumcenter")
        return CenterKind::Circumcenter;
    if (name == "steiner")
        return CenterKind::Steiner;
    throw Error(ErrorCode::NonFinite, "unknown center kind: " + name);
}

namespace {

Point2 steiner_point(const JordanCurve &c) {
    // Curvature-density center of mass of the boundary, normalized by the computed
    // total curvature so quadrature bias cancels.
    const size_t n = c.size();
    Point2 moment(0., 0.);
    double total = 0.;
    for (size_t i = 0; i < n; ++i) {
        double t0 = double(i) / double(n), h = 1. / double(n);
        for (int q = 0; q < gl8::n; ++q) {
            double t = t0 + gl8::x[q] * h;
            Point2 d1 = c.derivative(t);
            Point2 d2 = c.spline().second_derivative(t);
            double kds = (d1.x() * d2.y() - d1.y() * d2.x()) / d1.squaredNorm(); // kappa |gamma'|
            moment += gl8::w[q] * h * kds * c.point(t);
            total += gl8::w[q] * h * kds;
        }
    }
    return moment / total;
}

} // namespace

Point2 classical_center(const JordanDomain &domain, CenterKind kind) {
    switch (kind) {
    case CenterKind::Centroid: return area_and_centroid(domain).second;
    case CenterKind::Circumcenter: return circumscribing_circle(domain).center;
    case CenterKind::Steiner: return steiner_point(domain.boundary);
    }
    throw Error(ErrorCode::NonFinite, "unknown center kind");
}

double AnnulusDensity::operator()(double t) const {
    double kappa = inner.boundary.curvature(t);
    return (reach / 2. + reach * reach * kappa / 8.) / annulus_area;
}

double AnnulusDensity::integral() const {
    const JordanCurve &c = inner.boundary;
    const size_t n = c.size();
    double acc = 0.;
    for (size_t i = 0; i < n; ++i) {
        double t0 = double(i) / double(n), h = 1. / double(n);
        for (int q = 0; q < gl8::n; ++q) {
            double t = t0 + gl8::x[q] * h;
            acc += gl8::w[q] * h * (*this)(t)*c.derivative(t).norm();
        }
    }
    return acc;
}

Point2 AnnulusDensity::weighted_centroid() const {
    const JordanCurve &c = inner.boundary;
    const size_t n = c.size();
    Point2 acc(0., 0.);
    for (size_t i = 0; i < n; ++i) {
        double t0 = double(i) / double(n), h = 1. / double(n);
        for (int q = 0; q < gl8::n; ++q) {
            double t = t0 + gl8::x[q] * h;
            acc += gl8::w[q] * h * (*this)(t)*c.derivative(t).norm() * c.point(t);
        }
    }
    return acc;
}

AnnulusDensity make_annulus_density(const JordanDomain &domain) {
    if (!is_convex(domain))
        throw Error(ErrorCode::NotConvex, "annulus density is defined for convex domains");
    double R = reach(domain);
    JordanDomain inner = inner_offset(domain, R / 2.);
    double area_outer = area_and_centroid(domain).first;
    double area_inner = area_and_centroid(inner).first;
    return AnnulusDensity{std::move(inner), R, area_outer - area_inner};
}

double annulus_density(const JordanDomain &domain, double t) {
    return make_annulus_density(domain)(t);
}

} // namespace jordan
