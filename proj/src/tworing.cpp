#include "ringres/tworing.hpp"

#include "ringres/polygon.hpp"

#include <cmath>
#include <numbers>

namespace ringres {

void validate(const TwoRingSystem& sys) {
    if (sys.count < 2)
        throw ValidationError("two-ring system needs at least 2 particles per ring");
    if (!(sys.inner_particle_mass > 0.0) || !(sys.outer_particle_mass > 0.0))
        throw ValidationError("ring particle masses must be positive");
    if (!(sys.inner_radius > 0.0))
        throw ValidationError("inner ring radius must be positive");
    if (!(sys.separation > 0.0))
        throw ValidationError("ring separation must be positive");
    if (!(sys.central_mass > 0.0))
        throw ValidationError("central mass must be positive");
    if (sys.reference_particle_mass < 0.0)
        throw ValidationError("reference particle mass must be non-negative");
}

namespace {

double ring_rotation(int count, double particle_mass, double radius,
                     double central_mass) {
    const CentralConfiguration cc =
        make_central_configuration(count, particle_mass, radius, 0.0, 0.0);
    return corrected_rotation(cc, PrimaryBody{"", central_mass});
}

double inv_sin_sum(int count) {
    return 2.0 * polygon_sum(count, 1).value; // sum of 1/sin(pi j / N)
}

// d/dphi of the ring's own tangential pull on one particle, at the
// stationary slot. Each term reduces to -(1 + cos^2(pi j/N)) / sin^3(pi j/N).
double tangential_force_gradient(int count, double particle_mass,
                                 double radius) {
    double sum = 0.0;
    for (int j = 1; j < count; ++j) {
        const double half = std::numbers::pi * j / count;
        const double s = std::sin(half), c = std::cos(half);
        sum += (1.0 + c * c) / (s * s * s);
    }
    return particle_mass / (8.0 * radius * radius) * sum;
}

} // namespace

CommonRotation common_rotation(const TwoRingSystem& sys) {
    validate(sys);
    CommonRotation out;
    out.inner_omega = ring_rotation(sys.count, sys.inner_particle_mass,
                                    sys.inner_radius, sys.central_mass);
    out.outer_omega = ring_rotation(sys.count, sys.outer_particle_mass,
                                    sys.inner_radius + sys.separation,
                                    sys.central_mass);
    out.omega = 0.5 * (out.inner_omega + out.outer_omega);

    const double lhs = 3.0 * sys.central_mass / sys.outer_particle_mass *
                       sys.separation / sys.inner_radius;
    const double ratio = sys.inner_radius / sys.separation;
    const double rhs = 0.25 * inv_sin_sum(sys.count) + ratio * ratio * ratio;
    out.residual = std::abs(lhs - rhs) / std::abs(rhs);
    return out;
}

double required_particle_mass(double central_mass, double radius, int count,
                              double separation) {
    if (!(central_mass > 0.0) || !(radius > 0.0) || !(separation > 0.0))
        throw ValidationError("required_particle_mass needs positive inputs");
    const double ratio = radius / separation;
    const double rhs = 0.25 * inv_sin_sum(count) + ratio * ratio * ratio;
    return 3.0 * central_mass * (separation / radius) / rhs;
}

double omega1_squared(const TwoRingSystem& sys, RingSide side) {
    validate(sys);
    const CommonRotation rot = common_rotation(sys);
    const double mk = side == RingSide::Inner ? sys.inner_particle_mass
                                              : sys.outer_particle_mass;
    const double r = sys.inner_radius;
    return rot.omega * rot.omega +
           3.0 * (sys.reference_particle_mass - mk) / (8.0 * r * r) *
               inv_sin_sum(sys.count);
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::Stable: return "stable";
    case Verdict::Unstable: return "unstable";
    case Verdict::Undecided: return "undecided";
    }
    return "unknown";
}

StabilityReport stability_report(const TwoRingSystem& sys) {
    validate(sys);

    const double mi = sys.inner_particle_mass;
    const double mo = sys.outer_particle_mass;
    const double r = sys.inner_radius;
    const double d = sys.separation;
    const double d3 = d * d * d;

    StabilityReport rep;

    // s = A_k / (G m_k), independent of which ring supplies m_k:
    // sum_j [ 3/(8 sin) - 1/(2 sin)^3 ] / R^3 = (0.75 S1 - S3) / R^3
    const double s3 = polygon_sum(sys.count, 3).value;
    const double s1 = polygon_sum(sys.count, 1).value;
    rep.shear_parameter = (0.75 * s1 - s3) / (r * r * r);

    rep.band_width = 3.0 * d / r;
    rep.band_lo = 1.0 - rep.band_width;
    rep.band_hi = 1.0;
    const double ratio = mi / mo;
    rep.ratio_in_band = ratio > rep.band_lo && ratio < rep.band_hi;

    if (!(rep.shear_parameter > 0.0)) {
        rep.verdict = Verdict::Undecided;
        rep.reasons.push_back("shear_precondition");
        return rep;
    }
    const double s = rep.shear_parameter;

    const CommonRotation rot = common_rotation(sys);
    const double omega1_o = omega1_squared(sys, RingSide::Outer);
    const double omega1_i = omega1_squared(sys, RingSide::Inner);

    rep.radial_ok_outer =
        omega1_o - 2.0 * mi / d3 + s * (mo - mi + 3.0 * d / r * mo) > 0.0;
    rep.radial_ok_inner =
        omega1_i - 2.0 * mo / d3 + s * (mi - mo + 3.0 * d / r * mo) > 0.0;

    const double shear_i = tangential_force_gradient(sys.count, mi, r);
    const double shear_o = tangential_force_gradient(sys.count, mo, r + d);
    rep.tangential_ok_outer = shear_i + shear_o - 2.0 * mi * r / d3 < 0.0;
    rep.tangential_ok_inner = shear_i + shear_o - 2.0 * mo * r / d3 < 0.0;

    rep.separation_min = r / 3.0 *
                         ((mo - mi) * rot.omega * rot.omega +
                          s * (mo * mo - mi * mi)) /
                         (mo * s * (mo + mi));
    rep.separation_ok = d >= rep.separation_min;

    if (!rep.radial_ok_outer)
        rep.reasons.push_back("radial_instability_outer");
    if (!rep.radial_ok_inner)
        rep.reasons.push_back("radial_instability_inner");
    if (!rep.tangential_ok_outer)
        rep.reasons.push_back("tangential_instability_outer");
    if (!rep.tangential_ok_inner)
        rep.reasons.push_back("tangential_instability_inner");
    if (!rep.ratio_in_band)
        rep.reasons.push_back(ratio >= rep.band_hi ? "mass_ratio_above_band"
                                                   : "mass_ratio_below_band");
    if (!rep.separation_ok)
        rep.reasons.push_back("separation_below_minimum");

    rep.verdict = rep.reasons.empty() ? Verdict::Stable : Verdict::Unstable;
    return rep;
}

} // namespace ringres
