#pragma once

#include "ringres/core.hpp"

#include <string>
#include <vector>

namespace ringres {

// Two coaxial N-particle polygons rotating with a common angular velocity.
// Quantities assume gravitational constant one.

enum class RingAlignment { NonCollinear, Collinear };

struct TwoRingSystem {
    int count = 0;                      // particles per ring
    double inner_particle_mass = 0.0;   // m_i
    double outer_particle_mass = 0.0;   // m_o
    double inner_radius = 0.0;          // R; outer ring sits at R + separation
    double separation = 0.0;            // d > 0
    double central_mass = 0.0;          // M
    double reference_particle_mass = 0.0; // m_s in the shear correction
    RingAlignment alignment = RingAlignment::NonCollinear;
};

void validate(const TwoRingSystem& sys);

struct CommonRotation {
    double omega = 0.0;       // mean of the two corrected rotation rates
    double inner_omega = 0.0;
    double outer_omega = 0.0;
    /// Relative mismatch of the common-velocity requirement
    /// 3 (M/m_o) d/R  vs  sum 1/(4 sin) + (R/d)^3, evaluated for the
    /// outer ring.
    double residual = 0.0;
};

CommonRotation common_rotation(const TwoRingSystem& sys);

/// Particle mass that satisfies the common-velocity requirement at ring
/// separation d: 3 M (d/R) / (sum_j 1/(4 sin(pi j/N)) + R^3/d^3).
/// Strictly increasing in d.
double required_particle_mass(double central_mass, double radius, int count,
                              double separation);

enum class RingSide { Inner, Outer };

/// Shear-corrected squared rotation rate of one ring:
/// Omega_k^2 + 3 (m_s - m_k) / (8 R^2) * sum_j 1/|sin(pi j/N)|.
double omega1_squared(const TwoRingSystem& sys, RingSide side);

enum class Verdict { Stable, Unstable, Undecided };

std::string to_string(Verdict verdict);

struct StabilityReport {
    bool radial_ok_inner = false;
    bool radial_ok_outer = false;
    bool tangential_ok_inner = false;
    bool tangential_ok_outer = false;

    double band_lo = 0.0;   // 1 - 3 d / R
    double band_hi = 1.0;
    double band_width = 0.0; // 3 d / R by construction
    bool ratio_in_band = false;

    double separation_min = 0.0;
    bool separation_ok = false;

    double shear_parameter = 0.0; // s; predicates undecidable when s <= 0

    Verdict verdict = Verdict::Undecided;
    std::vector<std::string> reasons;
};

/// Evaluates the four radial/tangential inequalities, the mass-ratio band
/// and the minimum-separation bound. The verdict is Undecided when the
/// shear parameter s is not positive, Stable only when every check passes.
/// Alignment does not enter any of the scalar sums, so collinear and
/// non-collinear systems with equal scalars report identically.
StabilityReport stability_report(const TwoRingSystem& sys);

} // namespace ringres
