#include "ringres/core.hpp"

#include <numbers>

namespace ringres {

namespace {

double power_of(QuantityKind kind, double mass_ref, double length_ref,
                double time_ref) {
    switch (kind) {
    case QuantityKind::Mass:
        return mass_ref;
    case QuantityKind::Length:
        return length_ref;
    case QuantityKind::Time:
        return time_ref;
    case QuantityKind::Density:
        return mass_ref / (length_ref * length_ref * length_ref);
    case QuantityKind::SurfaceDensity:
        return mass_ref / (length_ref * length_ref);
    case QuantityKind::AngularFrequency:
        return 1.0 / time_ref;
    }
    throw ValidationError("unknown quantity kind");
}

} // namespace

void validate(const PrimaryBody& body) {
    if (!(body.mass > 0.0) || !std::isfinite(body.mass))
        throw ValidationError("primary body mass must be positive");
}

void validate(const SatelliteRecord& sat) {
    if (sat.mass < 0.0 || !std::isfinite(sat.mass))
        throw ValidationError("satellite mass must be non-negative");
    if (!(sat.orbit_radius > 0.0) || !std::isfinite(sat.orbit_radius))
        throw ValidationError("satellite orbit radius must be positive");
}

void validate(const CentralConfiguration& cc) {
    if (cc.count < 2)
        throw ValidationError("central configuration needs at least 2 particles");
    if (!(cc.ring_radius > 0.0))
        throw ValidationError("ring radius must be positive");
    if (cc.particle_mass < 0.0)
        throw ValidationError("particle mass must be non-negative");
    if (cc.particle_radius < 0.0 || cc.particle_density < 0.0)
        throw ValidationError("particle radius/density must be non-negative");
    if (cc.fill < 0.0 || cc.fill > 1.0)
        throw ValidationError("fill factor must lie in [0, 1]");

    const double implied =
        cc.particle_radius * cc.count / (std::numbers::pi * cc.ring_radius);
    const double scale = std::max(cc.fill, implied);
    if (scale > 0.0 && std::abs(cc.fill - implied) > 1e-9 * scale)
        throw ValidationError(
            "inconsistent configuration: fill != particle_radius*count/(pi*ring_radius)");
}

CentralConfiguration make_central_configuration(int count,
                                                double particle_mass,
                                                double ring_radius,
                                                double particle_radius,
                                                double particle_density) {
    CentralConfiguration cc;
    cc.count = count;
    cc.particle_mass = particle_mass;
    cc.ring_radius = ring_radius;
    cc.particle_radius = particle_radius;
    cc.particle_density = particle_density;
    cc.fill = particle_radius * count / (std::numbers::pi * ring_radius);
    validate(cc);
    return cc;
}

CentralConfiguration make_central_configuration_from_fill(int count,
                                                          double particle_mass,
                                                          double ring_radius,
                                                          double fill,
                                                          double particle_density) {
    CentralConfiguration cc;
    cc.count = count;
    cc.particle_mass = particle_mass;
    cc.ring_radius = ring_radius;
    cc.fill = fill;
    cc.particle_radius = fill * std::numbers::pi * ring_radius / count;
    cc.particle_density = particle_density;
    validate(cc);
    return cc;
}

NormalizationContext make_normalization(const PrimaryBody& primary,
                                        double reference_radius_cm) {
    validate(primary);
    if (!(reference_radius_cm > 0.0))
        throw ValidationError("reference radius must be positive");
    return NormalizationContext{primary.mass, reference_radius_cm};
}

double to_normalized(double value_cgs, QuantityKind kind,
                     const NormalizationContext& ctx) {
    if (!(ctx.mass_ref > 0.0) || !(ctx.length_ref > 0.0))
        throw ValidationError("normalization references must be positive");
    return value_cgs / power_of(kind, ctx.mass_ref, ctx.length_ref, ctx.time_ref());
}

double from_normalized(double value, QuantityKind kind,
                       const NormalizationContext& ctx) {
    if (!(ctx.mass_ref > 0.0) || !(ctx.length_ref > 0.0))
        throw ValidationError("normalization references must be positive");
    return value * power_of(kind, ctx.mass_ref, ctx.length_ref, ctx.time_ref());
}

} // namespace ringres
