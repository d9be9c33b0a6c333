#include "ringres/satellite.hpp"

#include "ringres/polygon.hpp"
#include "ringres/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace ringres {

double laplace_coefficient(double s, int n, double ratio) {
    if (n < 0)
        throw ValidationError("laplace_coefficient order must be >= 0");
    if (!(s > 0.0))
        throw ValidationError("laplace_coefficient exponent must be positive");
    if (ratio < 0.0 || ratio >= 1.0)
        throw ValidationError("laplace_coefficient ratio must lie in [0, 1)");

    auto kernel = [&](double theta) {
        const double base = 1.0 - 2.0 * ratio * std::cos(theta) + ratio * ratio;
        return std::cos(n * theta) * std::pow(base, -s);
    };
    return 2.0 / std::numbers::pi *
           integrate(kernel, 0.0, std::numbers::pi, 1e-10, 1e-14);
}

namespace {

// Denominator exactly as displayed; goes negative inside the orbit at
// small relative longitude, which the expansion cannot represent.
double displayed_denominator(double R, double r, double dlambda) {
    return R * R - r * r - 2.0 * R * r * std::cos(dlambda);
}

void check_denominator(double q, double R, double r) {
    const double scale = R * R + r * r;
    if (!(q > 1e-12 * scale))
        throw SingularityError(
            "expansion denominator vanishes or is not positive here");
}

} // namespace

ExpansionTerms radial_expansion(double ring_radius, double orbit_radius,
                                double satellite_mass, double dlambda) {
    if (!(ring_radius > 0.0) || !(orbit_radius > 0.0) || satellite_mass < 0.0)
        throw ValidationError("expansion needs positive radii, mass >= 0");
    if (satellite_mass == 0.0)
        return {};

    const double R = ring_radius, r = orbit_radius, m = satellite_mass;
    const double q = displayed_denominator(R, r, dlambda);
    check_denominator(q, R, r);
    const double q32 = q * std::sqrt(q);
    const double q52 = q32 * q;
    const double p = R - r * std::cos(dlambda);

    ExpansionTerms out;
    out.constant = -m * p / q32;
    out.linear = -m / q32 + 3.0 * m * p * p / q52;
    return out;
}

ExpansionTerms tangential_expansion(double ring_radius, double orbit_radius,
                                    double satellite_mass, double dlambda) {
    if (!(ring_radius > 0.0) || !(orbit_radius > 0.0) || satellite_mass < 0.0)
        throw ValidationError("expansion needs positive radii, mass >= 0");
    if (satellite_mass == 0.0)
        return {};

    const double R = ring_radius, r = orbit_radius, m = satellite_mass;
    const double q = displayed_denominator(R, r, dlambda);
    check_denominator(q, R, r);
    const double q32 = q * std::sqrt(q);
    const double q52 = q32 * q;
    const double sl = std::sin(dlambda);
    const double p = R - r * std::cos(dlambda);

    ExpansionTerms out;
    out.constant = -m * R * r * sl / q32;
    out.linear = (-m / q32 + 3.0 * m * p * R / q52) * r * sl;
    return out;
}

LegendreTermResult legendre_omega_term(double ring_radius,
                                       double orbit_radius,
                                       double satellite_mass, double dlambda,
                                       int p_max) {
    if (!(ring_radius > 0.0) || !(orbit_radius > 0.0) || satellite_mass < 0.0)
        throw ValidationError("legendre term needs positive radii, mass >= 0");
    if (ring_radius >= orbit_radius)
        throw ValidationError("interior expansion requires ring inside orbit");
    if (p_max < 2)
        throw ValidationError("legendre term needs p_max >= 2");

    const double y = ring_radius / orbit_radius;
    const double x = std::cos(dlambda);
    const double r3 = orbit_radius * orbit_radius * orbit_radius;

    double sum = 0.0;
    double p_prev = 1.0; // P_0
    double p_curr = x;   // P_1
    double ypow = 1.0;   // y^{p-2}
    for (int p = 2; p <= p_max; ++p) {
        const double p_next =
            ((2.0 * p - 1.0) * x * p_curr - (p - 1.0) * p_prev) / p;
        sum += p * (p - 1.0) * ypow * p_next;
        p_prev = p_curr;
        p_curr = p_next;
        ypow *= y;
    }

    // |P_p| <= 1, so the tail is bounded by sum_{p > p_max} p(p-1) y^{p-2}
    //         = d^2/dy^2 [ y^P / (1-y) ],  P = p_max + 1.
    const double P = p_max + 1.0;
    const double one_my = 1.0 - y;
    const double ypm1 = ypow / y; // y^{p_max - 1}
    const double tail =
        (P * (P - 1.0) * ypm1 * one_my * one_my +
         2.0 * P * ypm1 * y * one_my + 2.0 * ypm1 * y * y) /
        (one_my * one_my * one_my);

    LegendreTermResult out;
    out.value = satellite_mass / r3 * sum;
    out.tail_bound = satellite_mass / r3 * tail;
    return out;
}

double satellite_radial_stiffness(double ring_radius, double orbit_radius,
                                  double satellite_mass, double dlambda) {
    const double R = ring_radius, r = orbit_radius;
    const double d2 = R * R + r * r - 2.0 * R * r * std::cos(dlambda);
    if (!(d2 > 0.0))
        throw SingularityError("coincident ring and satellite positions");
    const double d3 = d2 * std::sqrt(d2);
    const double d5 = d3 * d2;
    const double p = R - r * std::cos(dlambda);
    return satellite_mass * (3.0 * p * p / d5 - 1.0 / d3);
}

HillCoefficient build_hill_coefficient(const CentralConfiguration& cc,
                                       const PrimaryBody& primary,
                                       const SatelliteRecord& satellite,
                                       int harmonic_count) {
    validate(cc);
    return build_hill_coefficient(cc.ring_radius, interaction_density_exact(cc),
                                  primary, satellite, harmonic_count);
}

HillCoefficient build_hill_coefficient(double ring_radius, double alpha,
                                       const PrimaryBody& primary,
                                       const SatelliteRecord& satellite,
                                       int harmonic_count) {
    validate(primary);
    validate(satellite);
    if (harmonic_count < 1)
        throw ValidationError("need at least one harmonic");
    if (satellite.orbit_radius <= ring_radius)
        throw ValidationError("satellite must orbit outside the ring");

    const double R = ring_radius;
    const double r = satellite.orbit_radius;
    const double M = primary.mass;
    const double m = satellite.mass;

    HillCoefficient out;
    out.omega0_sq = M / (R * R * R) + alpha;
    if (!(out.omega0_sq > 0.0))
        throw NumericalError("degenerate configuration: non-positive stiffness");

    const double ring_rate = std::sqrt(M / (R * R * R));
    const double satellite_rate = std::sqrt(M / (r * r * r));
    out.forcing_freq = ring_rate - satellite_rate;

    out.harmonics.assign(harmonic_count, 0.0);
    if (m > 0.0) {
        const int grid = 4 * harmonic_count;
        std::vector<double> w(grid);
        double mean = 0.0, forcing_mean = 0.0;
        for (int i = 0; i < grid; ++i) {
            const double dl = 2.0 * std::numbers::pi * i / grid;
            w[i] = satellite_radial_stiffness(R, r, m, dl);
            mean += w[i];
            const double d2 = R * R + r * r - 2.0 * R * r * std::cos(dl);
            forcing_mean -= m * (R - r * std::cos(dl)) / (d2 * std::sqrt(d2));
        }
        mean /= grid;
        out.mean_forcing = forcing_mean / grid;

        for (int n = 1; n <= harmonic_count; ++n) {
            double c = 0.0;
            for (int i = 0; i < grid; ++i)
                c += w[i] * std::cos(2.0 * std::numbers::pi * n * i / grid);
            out.harmonics[n - 1] = 2.0 * c / grid / out.omega0_sq;
        }
    }
    return out;
}

} // namespace ringres
