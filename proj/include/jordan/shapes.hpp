#ifndef jordan_shapes_hpp_
#define jordan_shapes_hpp_

#include "jordan/curve.hpp"

namespace jordan {

// Deterministic fixture generators. All return counterclockwise curves built
// through build_curve, so every generated shape passes the curve invariants.

JordanDomain make_circle(double r = 1., const Point2 &center = Point2(0., 0.), size_t n = 512);
JordanDomain make_ellipse(double a = 2., double b = 1., const Point2 &center = Point2(0., 0.), size_t n = 512);

// Convex, mirror-symmetric about the x axis only; its three classical centers are distinct.
JordanDomain make_egg(size_t n = 512);

// Crescent: unit circle at the origin minus the disk of radius 0.85 centered (0.3, 0),
// corner-smoothed; its area centroid lies outside the domain.
JordanDomain make_lune(size_t n = 512);

// Mildly nonconvex wavy shape.
JordanDomain make_blob(size_t n = 512);

struct ShapeSpec {
    std::string name;      // circle | ellipse | egg | lune-smoothed | blob
    double a = 2., b = 1.; // ellipse semi-axes
    double r = 1.;         // circle radius
    double cx = 0., cy = 0.;
    size_t n = 512;
};

JordanDomain make_shape(const ShapeSpec &spec);

// Smooth deterministic boundary perturbation of relative magnitude eps, radial about the
// circumcenter. Contains a first-harmonic component so centers shift at first order in eps.
JordanDomain radial_noise(const JordanDomain &domain, double eps);

} // namespace jordan

#endif
