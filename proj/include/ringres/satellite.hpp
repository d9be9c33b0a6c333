#pragma once

#include "ringres/core.hpp"

#include <vector>

namespace ringres {

// Perturbation of a ring particle by a distant coplanar satellite on a
// circular orbit. All frequencies assume gravitational constant one.

/// Laplace coefficient b_s^(n)(ratio) =
/// (2/pi) * integral_0^pi cos(n t) (1 - 2 ratio cos t + ratio^2)^-s dt.
/// Requires 0 <= ratio < 1.
double laplace_coefficient(double s, int n, double ratio);

struct ExpansionTerms {
    double constant = 0.0;
    double linear = 0.0; // coefficient of the radial offset x
};

/// Radial perturbation terms at relative longitude dlambda, evaluated from
/// the denominator R^2 - r^2 - 2 R r cos(dlambda) as displayed in the
/// source expansion (only valid where that expression is positive).
ExpansionTerms radial_expansion(double ring_radius, double orbit_radius,
                                double satellite_mass, double dlambda);

/// Tangential companion of radial_expansion.
ExpansionTerms tangential_expansion(double ring_radius, double orbit_radius,
                                    double satellite_mass, double dlambda);

struct LegendreTermResult {
    double value = 0.0;      // 1 / time^2
    double tail_bound = 0.0; // truncation bound on the dropped terms
};

/// Interior multipole form of the satellite's stiffness contribution:
/// (m/r^3) * sum_{p=2}^{p_max} p (p-1) (R/r)^{p-2} P_p(cos dlambda).
/// Requires ring_radius < orbit_radius and p_max >= 2.
LegendreTermResult legendre_omega_term(double ring_radius,
                                       double orbit_radius,
                                       double satellite_mass, double dlambda,
                                       int p_max);

/// Closed form of the same quantity (the p_max -> infinity limit):
/// m * (3 (R - r cos dl)^2 / D^5 - 1 / D^3), D the true chord distance.
double satellite_radial_stiffness(double ring_radius, double orbit_radius,
                                  double satellite_mass, double dlambda);

/// Periodic stiffness coefficient of the radial oscillation equation
/// x'' + w^2(t) x = f(t):
///   w^2(t) = omega0_sq * (1 + sum_n harmonics[n-1] cos(n * forcing_freq * t)).
struct HillCoefficient {
    double omega0_sq = 0.0;        // epicyclic stiffness, self-gravity included
    std::vector<double> harmonics; // h_1 .. h_nmax, dimensionless
    double forcing_freq = 0.0;     // ring rotation minus satellite mean motion
    double mean_forcing = 0.0;     // phase-averaged radial forcing, unused by
                                   // the homogeneous stability analysis
};

/// Assembles the coefficient for one ring radius.
///
/// omega0_sq carries the Keplerian term plus the exact vertex-sum
/// self-gravity term; harmonics come from trapezoidal Fourier analysis of
/// the satellite stiffness on a 4*harmonic_count uniform grid (spectrally
/// accurate for this smooth periodic integrand).
HillCoefficient build_hill_coefficient(const CentralConfiguration& cc,
                                       const PrimaryBody& primary,
                                       const SatelliteRecord& satellite,
                                       int harmonic_count);

/// Same, with the self-gravity stiffness passed directly as an interaction
/// density instead of being derived from a configuration.
HillCoefficient build_hill_coefficient(double ring_radius, double alpha,
                                       const PrimaryBody& primary,
                                       const SatelliteRecord& satellite,
                                       int harmonic_count);

} // namespace ringres
