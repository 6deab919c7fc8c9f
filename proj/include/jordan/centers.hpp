#ifndef jordan_centers_hpp_
#define jordan_centers_hpp_

#include "jordan/medial.hpp"

namespace jordan {

enum class CenterKind { Centroid, Circumcenter, Steiner };

const char *center_kind_name(CenterKind kind);
CenterKind parse_center_kind(const std::string &name);

// Area centroid, circumscribing-circle center, or curvature-weighted boundary
// center of mass (normalized by the computed total curvature).
Point2 classical_center(const JordanDomain &domain, CenterKind kind);

// Closed-form annulus density on the boundary of D^(1/2), for convex D:
// delta(t) = (R/2 + R^2 kappa(t) / 8) / |A| with R = reach(D) and
// |A| = area(D) - area(D^(1/2)).  Integrating delta ds over the offset boundary
// gives 1, and weighting the offset curve by delta gives the annulus centroid.
struct AnnulusDensity {
    JordanDomain inner; // D^(1/2)
    double reach = 0.;
    double annulus_area = 0.;

    double operator()(double t) const;

    double integral() const;          // integral of delta ds, == 1 up to quadrature
    Point2 weighted_centroid() const; // integral of gamma_off(t) delta(t) ds
};

AnnulusDensity make_annulus_density(const JordanDomain &domain);
double annulus_density(const JordanDomain &domain, double t);

} // namespace jordan

#endif
