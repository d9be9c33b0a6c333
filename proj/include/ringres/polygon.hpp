#pragma once

#include "ringres/core.hpp"

namespace ringres {

// Sums, forces and rotation rates of the regular particle polygon.
// Accelerations and frequencies assume gravitational constant scaled to
// one; the density-level helpers are unit-agnostic.

/// Prefactor of the cube-of-fill closed form for the interaction density.
inline constexpr double kInteractionDensityFactor = 1.258784;

/// Rounded prefactor used by the bulk-property pipelines.
inline constexpr double kInteractionDensityFactorRounded = 1.25;

/// zeta(3)/4, the large-count limit of polygon_sum(N,3) * pi^3 / N^3.
inline constexpr double kCubeSumAsymptote = 0.30051422578989857;

struct PolygonSum {
    int count = 0;
    int power = 0;
    double value = 0.0;
};

/// Sum over the other polygon vertices of (2 sin(pi j / N))^-p, p in {1, 3}.
///
/// Exact summation up to N = 10^6; beyond that the asymptotic form with a
/// logarithmic correction (relative error below 1e-9 there).
PolygonSum polygon_sum(int count, int power);

/// Radial interaction force on one particle, expanded in the radial
/// offset x: constant + linear * x + quadratic * x^2.
struct ForceSeries {
    double constant = 0.0;  // acceleration
    double linear = 0.0;    // 1 / time^2
    double quadratic = 0.0; // 1 / (time^2 * length)
};

/// Expansion coefficients of the mutual radial pull evaluated by exact
/// summation with vertex angles 2 pi j / N + phase_offset.
/// Requires |phase_offset| < 2 pi / N.
ForceSeries radial_force_series(const CentralConfiguration& cc,
                                double phase_offset);

/// Net radial force per unit test mass from a continuous ring of radius
/// ring_radius carrying line_density mass per radian, evaluated at
/// field_radius. Positive outward. Throws SingularityError when the field
/// point is within 1e-6 relative of the ring itself.
double ring_radial_force(double line_density, double ring_radius,
                         double field_radius);

/// The inverse-square ring kernel: integral of line_density / D^2 over the
/// ring, D the chord distance. Companion diagnostic to ring_radial_force.
double ring_inverse_square_integral(double line_density, double ring_radius,
                                    double field_radius);

/// Effective interaction density of the configuration,
/// kInteractionDensityFactor * particle_density * fill^3.
double interaction_density(const CentralConfiguration& cc);

/// Same quantity from the exact vertex sum, particle_mass *
/// polygon_sum(N,3) / ring_radius^3. Agrees with the closed form to well
/// under a percent for N >= 10^3.
double interaction_density_exact(const CentralConfiguration& cc);

struct RingBulkProperties {
    double particle_count = 0.0;
    double fill = 0.0;
    double interaction_density = 0.0;
    bool over_filled = false; // fill > 1: geometrically impossible packing
};

/// Bulk estimates for a ring annulus of surface density surf_density at
/// radius ring_radius, made of particles of radius particle_radius and
/// density particle_density. Uses the rounded density prefactor.
RingBulkProperties ring_bulk_properties(double ring_radius,
                                        double surf_density,
                                        double particle_density,
                                        double particle_radius);

/// Rigid rotation rate of the configuration, slightly above Keplerian:
/// Omega0 * sqrt(1 + (m/4M) * sum 1/sin(pi j/N)).
double corrected_rotation(const CentralConfiguration& cc,
                          const PrimaryBody& primary);

struct PolygonState {
    double radial_offset = 0.0;   // x, radius = ring_radius + x
    double radial_velocity = 0.0;
    double angle = 0.0;           // angular deviation from the vertex slot
    double angular_velocity = 0.0;
};

struct PolygonAcceleration {
    double radial = 0.0;  // d^2 x / dt^2
    double angular = 0.0; // d^2 phi / dt^2
};

/// Full nonlinear accelerations of a test particle near one vertex, in the
/// frame corotating at corrected_rotation. Throws SingularityError when the
/// test particle coincides with another vertex.
PolygonAcceleration polygon_accelerations(const CentralConfiguration& cc,
                                          const PrimaryBody& primary,
                                          const PolygonState& state);

} // namespace ringres
