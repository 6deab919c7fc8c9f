#ifndef jordan_flow_hpp_
#define jordan_flow_hpp_

#include "jordan/retraction.hpp"

namespace jordan {

// One curve of the domain-to-disk deformation.  The conformal stage shrinks the disk
// preimage; the Minkowski stage interpolates the limit circle to the equal-area circle.
struct FlowFrame {
    enum class Stage { Conformal, Minkowski };
    double time = 0.; // global clock in [0, 1] across both stages
    JordanCurve curve;
    Stage stage = Stage::Conformal;
};

struct FlowConfig {
    MapConfig map;
    CenterConfig center;
    double t_min = 0.05;        // conformal-stage cutoff; below it the limit circle is analytic
    size_t frame_samples = 512; // samples per emitted frame curve
};

// Image of the boundary circle under h_{t,D}(x) = f(o) + (f(t x) - f(o)) / t, where f is
// the map anchored at c.  For t < t_min returns the limit circle of radius |f'(0)|.
JordanCurve conformal_flow_frame(const JordanDomain &domain, const Point2 &c, double t,
                                 const FlowConfig &config = {}, const ConformalMap *prebuilt = nullptr);

// Round domain centered at c with the same area as the input.
Circle round_target(const JordanDomain &domain, const Point2 &c);

// Frame sequence: conformal stage on clock [0, 1/2], Minkowski stage on [1/2, 1], both
// centered at the canonical center of the requested kind.
std::vector<FlowFrame> flow_frames(const JordanDomain &domain, CenterKind kind, size_t frame_count,
                                   const FlowConfig &config = {});

} // namespace jordan

#endif
