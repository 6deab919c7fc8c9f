#include "jordan/flow.hpp"

namespace jordan {

namespace {

JordanCurve circle_frame(const Point2 &center, double radius, size_t n) {
    std::vector<Point2> pts(n);
    for (size_t i = 0; i < n; ++i) {
        double th = 2. * pi * double(i) / double(n);
        pts[i] = center + radius * Point2(std::cos(th), std::sin(th));
    }
    return build_curve(std::move(pts));
}

JordanCurve frame_from_map(const ConformalMap &map, double t, size_t n) {
    const Complex c = to_complex(map.center_value());
    std::vector<Point2> pts(n);
    for (size_t i = 0; i < n; ++i) {
        Complex z = std::polar(t, 2. * pi * double(i) / double(n));
        pts[i] = to_point(c + (map.forward_c(z) - c) / t);
    }
    return build_curve(std::move(pts));
}

} // namespace

JordanCurve conformal_flow_frame(const JordanDomain &domain, const Point2 &c, double t,
                                 const FlowConfig &config, const ConformalMap *prebuilt) {
    if (!(t > 0.) || !(t <= 1.))
        throw Error(ErrorCode::OutOfDomain, "flow parameter must lie in (0, 1]");
    ConformalMap local;
    if (prebuilt == nullptr) {
        local = build_interior_map(domain, c, Point2(1., 0.), config.map);
        prebuilt = &local;
    }
    if (t < config.t_min)
        return circle_frame(prebuilt->center_value(), std::abs(prebuilt->center_derivative()),
                            config.frame_samples);
    return frame_from_map(*prebuilt, t, config.frame_samples);
}

Circle round_target(const JordanDomain &domain, const Point2 &c) {
    return Circle{c, std::sqrt(area_and_centroid(domain).first / pi)};
}

std::vector<FlowFrame> flow_frames(const JordanDomain &domain, CenterKind kind, size_t frame_count,
                                   const FlowConfig &config) {
    if (frame_count < 4)
        throw Error(ErrorCode::TooFewSamples, "need at least 4 frames");

    const Point2 c = canonical_center(domain, kind, config.center);
    const ConformalMap map = build_interior_map(domain, c, Point2(1., 0.), config.map);
    const double r_limit = std::abs(map.center_derivative());
    const double r_target = round_target(domain, c).radius;

    std::vector<FlowFrame> frames;
    frames.reserve(frame_count);
    for (size_t j = 0; j < frame_count; ++j) {
        double tau = double(j) / double(frame_count - 1);
        FlowFrame frame;
        frame.time = tau;
        if (tau < 0.5) {
            frame.stage = FlowFrame::Stage::Conformal;
            double t = 1. - (1. - config.t_min) * (2. * tau);
            frame.curve = frame_from_map(map, t, config.frame_samples);
        } else {
            frame.stage = FlowFrame::Stage::Minkowski;
            double lambda = 2. * tau - 1.;
            double r = (1. - lambda) * r_limit + lambda * r_target;
            frame.curve = circle_frame(map.center_value(), r, config.frame_samples);
        }
        frames.push_back(std::move(frame));
    }
    return frames;
}

} // namespace jordan
