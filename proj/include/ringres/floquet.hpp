#pragma once

#include "ringres/core.hpp"
#include "ringres/resonance.hpp"
#include "ringres/satellite.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace ringres {

// Direct numerical stability analysis of x'' + w^2(t) x = 0 over one
// forcing period: fundamental matrix, multipliers, instability tongues.

struct MonodromyResult {
    double trace = 0.0;
    double determinant = 0.0;
    std::complex<double> multiplier_a;
    std::complex<double> multiplier_b;
    /// |trace| - 2 sqrt(det): positive exactly when the multipliers leave
    /// the unit circle. Phase errors of the integrator cancel out of this
    /// quantity, which keeps weak instabilities detectable.
    double margin = 0.0;
    bool stable = true;
    double growth_exponent = 0.0; // ln(max |multiplier|) / period, 0 if stable
};

/// Fundamental solution matrix over one period 2 pi / forcing_freq from
/// identity initial conditions, fixed-step classical Runge-Kutta.
/// phase shifts the coefficient's time origin; the trace is invariant
/// under it up to integration error.
MonodromyResult monodromy(const HillCoefficient& coeff,
                          int steps_per_period = 1024, double phase = 0.0);

struct TongueInterval {
    double nu_lo = 0.0;
    double nu_hi = 0.0;
    double max_growth_exponent = 0.0;
};

/// Unstable forcing-frequency intervals of the single-harmonic coefficient
/// w^2 = omega0^2 (1 + h cos(nu t)) inside [nu_lo, nu_hi], boundaries
/// refined by bisection to relative 1e-6.
std::vector<TongueInterval> tongue_scan(double omega0, double h, double nu_lo,
                                        double nu_hi, int resolution,
                                        int steps_per_period = 1024);

/// General form: harmonics given as (index, amplitude) pairs.
std::vector<TongueInterval>
tongue_scan(double omega0, const std::vector<std::pair<int, double>>& harmonics,
            double nu_lo, double nu_hi, int resolution,
            int steps_per_period = 1024);

struct ZoneVerification {
    double analytic_lo = 0.0, analytic_hi = 0.0;
    double measured_lo = 0.0, measured_hi = 0.0;
    bool analytic_empty = true;
    bool measured_empty = true;
    double measured_center = 0.0;
    /// Overlap of the two intervals normalized by the shorter one
    /// (Szymkiewicz-Simpson); 1 when both are empty, 0 when only one is.
    double overlap_ratio = 0.0;
};

struct VerifyContext {
    PrimaryBody primary;
    SatelliteRecord satellite;
    double alpha = 0.0; // ring interaction density at the zone
    int harmonic_count = 64;
    int steps_per_period = 1024;
    int grid_points = 61;
};

/// Independent check of an analytic zone: rebuilds the stiffness
/// coefficient across [center - 3w, center + 3w], classifies each radius
/// through the monodromy matrix, and compares the measured unstable
/// interval against [center - w, center + w].
ZoneVerification verify_zone(const InstabilityZone& zone,
                             const VerifyContext& ctx);

} // namespace ringres
