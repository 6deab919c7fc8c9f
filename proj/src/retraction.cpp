#include "jordan/retraction.hpp"

namespace jordan {

RetractionContext RetractionContext::build(JordanDomain domain, const MapConfig &config) {
    RetractionContext ctx;
    ctx.diameter = domain_diameter(domain);
    ctx.to_normalized = normalizer(domain);
    ctx.exterior = build_exterior_map(transform(ctx.to_normalized, domain), config);
    ctx.domain = std::move(domain);
    return ctx;
}

Point2 retract_point(const RetractionContext &ctx, const Point2 &x, double t) {
    if (!(t >= 0.) || !(t <= 1.))
        throw Error(ErrorCode::OutOfDomain, "retraction time must lie in [0, 1]");
    if (!finite(x))
        throw Error(ErrorCode::NonFinite, "retraction point must be finite");

    if (locate(ctx.domain, x, 1e-12 * ctx.diameter).cls != Classification::Exterior)
        return x; // the retraction is strong: the domain stays fixed at every time

    Complex y = to_complex(ctx.to_normalized(x));
    Complex z = ctx.exterior.inverse_c(y);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error(ErrorCode::InverseFailed, "exterior map inversion produced a non-finite value");
    double r = std::abs(z);
    if (r < 1e-8)
        z *= 1e-8 / r; // far-field clamp; the t = 1 value is unaffected
    if (r > 1.)
        z /= r;
    r = std::abs(z);

    Complex zt = (1. - t) * z + t * z / r;
    Complex w = ctx.exterior.forward_c(zt);
    return ctx.to_normalized.inverse()(to_point(w));
}

CenterResult canonical_center_detailed(const JordanDomain &domain, CenterKind kind,
                                       const CenterConfig &config) {
    double R = reach(domain, config.reach_samples);
    JordanDomain half = inner_offset(domain, R / 2.);
    Point2 f = classical_center(domain, kind);

    CenterResult result;
    result.kind = kind;
    result.reach = R;
    if (locate(half, f, 1e-12 * domain_diameter(domain)).cls != Classification::Exterior) {
        result.point = f;
        result.retracted = false;
    } else {
        RetractionContext ctx = RetractionContext::build(std::move(half), config.map);
        result.point = retract_point(ctx, f, 1.);
        result.retracted = true;
    }
    result.clearance = locate(domain, result.point).signed_distance;
    return result;
}

Point2 canonical_center(const JordanDomain &domain, CenterKind kind, const CenterConfig &config) {
    return canonical_center_detailed(domain, kind, config).point;
}

} // namespace jordan
