#include "jordan/types.hpp"

namespace jordan {

const char *error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::PointNotInterior: return "PointNotInterior";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::DidNotConverge: return "DidNotConverge";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::OffsetTooLarge: return "OffsetTooLarge";
    case ErrorCode::DegenerateVoronoi: return "DegenerateVoronoi";
    case ErrorCode::InverseFailed: return "InverseFailed";
    }
    return "Unknown";
}

Similarity::Similarity(double scale, double angle, bool reflect, const Point2 &translation)
    : m_scale(scale), m_angle(angle), m_reflect(reflect), m_translation(translation) {
    if (!(scale > 0.) || !std::isfinite(scale) || !std::isfinite(angle) || !finite(translation))
        throw Error(ErrorCode::NonFinite, "similarity requires finite parameters and scale > 0");
}

Similarity Similarity::reflection(double axis_angle) {
    // Reflection across the line through the origin at axis_angle: z -> exp(2 i axis_angle) conj(z).
    return Similarity(1., 2. * axis_angle, true, Point2(0., 0.));
}

Similarity Similarity::operator*(const Similarity &rhs) const {
    Complex a1 = linear_coeff(), a2 = rhs.linear_coeff();
    Complex b1 = to_complex(m_translation), b2 = to_complex(rhs.m_translation);
    Complex a = m_reflect ? a1 * std::conj(a2) : a1 * a2;
    Complex b = m_reflect ? a1 * std::conj(b2) + b1 : a1 * b2 + b1;
    return Similarity(std::abs(a), std::arg(a), m_reflect != rhs.m_reflect, to_point(b));
}

Similarity Similarity::inverse() const {
    Complex a = linear_coeff(), b = to_complex(m_translation);
    if (!m_reflect) {
        Complex ai = 1. / a;
        return Similarity(std::abs(ai), std::arg(ai), false, to_point(-b * ai));
    }
    // z = a conj(w) + b  =>  w = conj((z - b) / a)
    Complex ai = std::conj(1. / a);
    return Similarity(std::abs(ai), std::arg(ai), true, to_point(-std::conj(b / a)));
}

} // namespace jordan
