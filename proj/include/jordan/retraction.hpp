#ifndef jordan_retraction_hpp_
#define jordan_retraction_hpp_

#include "jordan/centers.hpp"
#include "jordan/conformal.hpp"

namespace jordan {

// Cached machinery for the strong deformation retraction of the plane onto a domain:
// points outside flow along h_t(z) = (1-t) z + t z/|z| conjugated through the exterior
// map of the normalized domain; the domain itself stays fixed.
struct RetractionContext {
    JordanDomain domain;
    Similarity to_normalized; // rho_D
    ExteriorMap exterior;     // exterior map of rho_D(D)
    double diameter = 0.;

    static RetractionContext build(JordanDomain domain, const MapConfig &config = {});
};

Point2 retract_point(const RetractionContext &ctx, const Point2 &x, double t);

struct CenterResult {
    CenterKind kind;
    Point2 point;
    double clearance; // signed distance of the center inside the domain
    double reach;
    bool retracted; // false when the classical point already lay in D^(1/2)
};

struct CenterConfig {
    MapConfig map;
    size_t reach_samples = 1024;
};

// Canonical center: the classical center pushed into the domain by retracting onto
// D^(1/2); agrees with the classical center whenever that point lies in D^(1/2).
CenterResult canonical_center_detailed(const JordanDomain &domain, CenterKind kind,
                                       const CenterConfig &config = {});
Point2 canonical_center(const JordanDomain &domain, CenterKind kind, const CenterConfig &config = {});

} // namespace jordan

#endif
