#include "ringres/polygon.hpp"

#include "ringres/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace ringres {

namespace {

constexpr double kEulerGamma = 0.5772156649015329;
constexpr int kExactSumLimit = 1000000;

double exact_vertex_sum(int count, int power) {
    const double n = static_cast<double>(count);
    double sum = 0.0;
    for (int j = 1; j < count; ++j) {
        const double chord = 2.0 * std::sin(std::numbers::pi * j / n);
        sum += (power == 1) ? 1.0 / chord : 1.0 / (chord * chord * chord);
    }
    return sum;
}

double asymptotic_vertex_sum(double n, int power) {
    if (power == 1)
        return (n / std::numbers::pi) *
               (std::log(2.0 * n / std::numbers::pi) + kEulerGamma);
    const double pi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;
    return kCubeSumAsymptote * n * n * n / pi3 +
           n * (std::log(0.5 * n) + kEulerGamma) / (8.0 * std::numbers::pi);
}

} // namespace

PolygonSum polygon_sum(int count, int power) {
    if (count < 2)
        throw ValidationError("polygon_sum requires at least 2 particles");
    if (power != 1 && power != 3)
        throw ValidationError("polygon_sum power must be 1 or 3");

    const double value = (count <= kExactSumLimit)
                             ? exact_vertex_sum(count, power)
                             : asymptotic_vertex_sum(count, power);
    return PolygonSum{count, power, value};
}

ForceSeries radial_force_series(const CentralConfiguration& cc,
                                double phase_offset) {
    validate(cc);
    const double n = static_cast<double>(cc.count);
    if (std::abs(phase_offset) >= 2.0 * std::numbers::pi / n)
        throw ValidationError("phase offset must satisfy |phi| < 2 pi / N");

    // half-angles pi j / N + phase/2 all lie in (0, pi)
    double s2 = 0.0, s_inv = 0.0, s3 = 0.0;
    for (int j = 1; j < cc.count; ++j) {
        const double half = std::numbers::pi * j / n + 0.5 * phase_offset;
        const double chord = 2.0 * std::sin(half);
        s2 += 1.0 / (chord * chord);
        s3 += 1.0 / (chord * chord * chord);
        s_inv += 2.0 / chord; // 1 / sin(half)
    }

    const double m = cc.particle_mass;
    const double r = cc.ring_radius;
    ForceSeries out;
    out.constant = -m * s2 / (r * r);
    out.linear = m * (0.75 * s_inv - s3) / (r * r * r);
    out.quadratic = m * (3.75 * s3 - (15.0 / 32.0) * s_inv) / (r * r * r * r);
    return out;
}

double ring_radial_force(double line_density, double ring_radius,
                         double field_radius) {
    if (!(ring_radius > 0.0) || field_radius < 0.0)
        throw ValidationError("ring/field radii must be positive");
    if (std::abs(field_radius - ring_radius) < 1e-6 * ring_radius)
        throw SingularityError("field point lies on the ring");
    if (line_density == 0.0)
        return 0.0;

    const double r = field_radius, r0 = ring_radius;
    auto kernel = [&](double lam) {
        const double c = std::cos(lam);
        const double d2 = r * r + r0 * r0 - 2.0 * r * r0 * c;
        return (r - r0 * c) / (d2 * std::sqrt(d2));
    };
    // integrand is even about lambda = pi
    const double inward =
        2.0 * integrate(kernel, 0.0, std::numbers::pi, 1e-8);
    return -line_density * inward;
}

double ring_inverse_square_integral(double line_density, double ring_radius,
                                    double field_radius) {
    if (!(ring_radius > 0.0) || field_radius < 0.0)
        throw ValidationError("ring/field radii must be positive");
    if (std::abs(field_radius - ring_radius) < 1e-6 * ring_radius)
        throw SingularityError("field point lies on the ring");
    if (line_density == 0.0)
        return 0.0;

    const double r = field_radius, r0 = ring_radius;
    auto kernel = [&](double lam) {
        return 1.0 / (r * r + r0 * r0 - 2.0 * r * r0 * std::cos(lam));
    };
    return 2.0 * line_density *
           integrate(kernel, 0.0, std::numbers::pi, 1e-8);
}

double interaction_density(const CentralConfiguration& cc) {
    validate(cc);
    return kInteractionDensityFactor * cc.particle_density * cc.fill *
           cc.fill * cc.fill;
}

double interaction_density_exact(const CentralConfiguration& cc) {
    validate(cc);
    const double r = cc.ring_radius;
    return cc.particle_mass * polygon_sum(cc.count, 3).value / (r * r * r);
}

RingBulkProperties ring_bulk_properties(double ring_radius,
                                        double surf_density,
                                        double particle_density,
                                        double particle_radius) {
    if (!(ring_radius > 0.0) || !(particle_density > 0.0) ||
        !(particle_radius > 0.0) || surf_density < 0.0)
        throw ValidationError("bulk properties need positive inputs");

    RingBulkProperties out;
    out.particle_count = 3.0 * ring_radius * surf_density /
                         (2.0 * particle_density * particle_radius * particle_radius);
    out.fill = surf_density / (4.0 * particle_density * particle_radius);
    out.over_filled = out.fill > 1.0;
    out.interaction_density = kInteractionDensityFactorRounded *
                              particle_density * out.fill * out.fill * out.fill;
    return out;
}

double corrected_rotation(const CentralConfiguration& cc,
                          const PrimaryBody& primary) {
    validate(cc);
    validate(primary);
    const double omega0_sq = primary.mass /
                             (cc.ring_radius * cc.ring_radius * cc.ring_radius);
    const double inv_sin_sum = 2.0 * polygon_sum(cc.count, 1).value;
    return std::sqrt(omega0_sq *
                     (1.0 + cc.particle_mass / (4.0 * primary.mass) * inv_sin_sum));
}

PolygonAcceleration polygon_accelerations(const CentralConfiguration& cc,
                                          const PrimaryBody& primary,
                                          const PolygonState& state) {
    validate(cc);
    validate(primary);

    const double r0 = cc.ring_radius;
    const double x = state.radial_offset;
    const double r = r0 + x;
    if (!(r > 0.0))
        throw ValidationError("test particle radius must stay positive");

    const double n = static_cast<double>(cc.count);
    double radial_sum = 0.0, tangential_sum = 0.0;
    for (int j = 1; j < cc.count; ++j) {
        const double half = std::numbers::pi * j / n + 0.5 * state.angle;
        const double s = std::sin(half);
        const double c = std::cos(half);
        const double chord = 2.0 * r0 * s;
        const double d2 = x * x + chord * chord * (1.0 + x / r0);
        if (d2 < 1e-12)
            throw SingularityError("test particle coincides with a vertex");
        const double d3 = d2 * std::sqrt(d2);
        radial_sum += cc.particle_mass * (2.0 * r0 * s * s + x) / d3;
        tangential_sum += cc.particle_mass * 2.0 * r0 * s * c / d3;
    }

    const double omega = corrected_rotation(cc, primary);
    const double spin = state.angular_velocity + omega;

    PolygonAcceleration out;
    out.radial = r * spin * spin - primary.mass / (r * r) - radial_sum;
    out.angular = (-tangential_sum - 2.0 * spin * state.radial_velocity) / r;
    return out;
}

} // namespace ringres
