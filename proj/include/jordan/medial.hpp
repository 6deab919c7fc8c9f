#ifndef jordan_medial_hpp_
#define jordan_medial_hpp_

#include "jordan/curve.hpp"

namespace jordan {

struct MedialVertex {
    Point2 position;
    double radius; // maximal inscribed disk radius at this vertex
};

struct MedialAxisApprox {
    std::vector<MedialVertex> vertices;
    size_t resolution = 0; // boundary sample count used
};

struct MedialConfig {
    double separation_angle = pi / 6.; // minimum angle between touch directions
    double jitter = 1e-9;              // relative symmetry-breaking jitter
};

// Inner medial axis approximation: Voronoi vertices of n boundary samples, filtered to
// interior vertices whose inscribed disk touches the boundary in well-separated directions.
MedialAxisApprox medial_axis(const JordanDomain &domain, size_t n = 1024, const MedialConfig &config = {});

// Inner reach: distance from the boundary samples to the medial axis, capped by the
// reciprocal of the largest positive curvature.
double reach(const JordanDomain &domain, size_t n = 2048);

// Domain bounded by gamma(t) + s * N_in(t); requires 0 < s < reach(D).
JordanDomain inner_offset(const JordanDomain &domain, double s);

} // namespace jordan

#endif
