#pragma once

#include "ringres/core.hpp"

#include <string>
#include <vector>

namespace ringres {

/// Mean-motion commensurability p:q (ring particle faster, p > q) together
/// with the order of the parametric resonance it maps to, 2p/(p-q).
struct ResonanceSpec {
    int p = 0;
    int q = 0;
    int order = 0;
};

/// Order of the parametric resonance excited at the p:q commensurability.
/// Throws ValidationError unless p > q >= 1, gcd(p, q) = 1 and 2p/(p-q)
/// is an integer.
int parametric_order(int p, int q);

ResonanceSpec make_resonance_spec(int p, int q);

enum class ZoneBranch {
    SingleNarrowGap,       // inward-shifted gap of an isolated configuration
    InnerGap,              // inner member of the paired-gap structure
    OuterGap,              // outer member, shifted away from the planet
    OuterCommensurability, // ring outside the satellite orbit
};

std::string to_string(ZoneBranch branch);

struct InstabilityZone {
    std::string satellite;
    ResonanceSpec spec;
    double center = 0.0;
    double half_width = 0.0;
    ZoneBranch branch = ZoneBranch::SingleNarrowGap;
};

/// Both real roots of the resonance condition, as ring radii.
/// inner reduces to r (1 - 2/n)^(2/3) and outer to r (1 + 2/n)^(2/3) when
/// alpha = m = 0. Works in any unit system consistent between alpha,
/// central_mass, satellite_mass and radius (the gravitational constant
/// cancels).
struct ZoneCenters {
    double inner = 0.0;
    double outer = 0.0;
    bool inner_degenerate = false; // order-2 limit, inner root collapses to 0
};

/// Solves the quadratic in R^(3/2) with the satellite-mass term retained.
ZoneCenters zone_center(int order, double orbit_radius, double alpha,
                        double central_mass, double satellite_mass);

/// Closed form of the inner root for zero satellite mass; cross-check and
/// fast path of zone_center.
double zone_center_closed_form(int order, double orbit_radius, double alpha,
                               double central_mass);

/// Frequency half-widths of the unstable zone at order k, in the three
/// displayed forms.
struct ZoneWidths {
    double first_order = 0.0;           // omega0 k h / (2 (k - 2))
    double second_order = 0.0;          // omega0 k h^2 / (8 (k - 2))
    double first_order_satellite = 0.0; // k omega_s (m/M) b / (2 (k - 2))
};

ZoneWidths zone_width(int order, double omega0, double omega_s,
                      double mass_ratio, double laplace_b, double harmonic_h);

struct GapPair {
    InstabilityZone inner;
    InstabilityZone outer;
};

/// Paired gaps of a system of configurations: the center comes from the
/// resonance quadratic with the sign-flipped half-magnitude density
/// (-alpha/2), and the two gaps sit at center -+ dx with
/// dx = 2 pi context_radius / particle_count (the linear-motion cell).
GapPair negative_alpha_zones(int order, double orbit_radius,
                             double alpha_magnitude, double central_mass,
                             double particle_count, double context_radius);

/// Distance beyond which mutual particle gravity dominates the planetary
/// tide: (M / (1.25 rho fill^3))^(1/3). Returns infinity when fill or
/// density vanish.
double critical_radius(double central_mass, double particle_density,
                       double fill);

enum class ScanMode { Single, System };

/// Ring material properties used by a scan to derive the interaction
/// density and the gap offsets. All in one consistent unit system.
struct RingProperties {
    double alpha = 0.0;            // interaction density, mass / length^3
    double surf_density = 0.0;     // mass / length^2
    double particle_density = 0.0; // mass / length^3
    double particle_radius = 0.0;  // length
};

struct ScanAssignment {
    SatelliteRecord satellite;
    ResonanceSpec spec;
};

struct ScanResult {
    std::vector<InstabilityZone> zones; // sorted by center
    std::vector<std::string> warnings;  // per-assignment failures
};

/// Locates every instability zone inside [band_in, band_out].
///
/// Single mode emits one inward-shifted gap per assignment. System mode
/// emits two: the inward gap plus the outward gap of the sign-flipped
/// density branch, which bracket the exact commensurability from both
/// sides. Half-widths are mapped from the frequency widths through the
/// forcing-harmonic gradient d(n nu)/dR. A failed assignment becomes a
/// warning, not an abort.
ScanResult scan(const PrimaryBody& primary, double band_in, double band_out,
                const std::vector<ScanAssignment>& assignments, ScanMode mode,
                const RingProperties& ring, int harmonic_count = 32);

} // namespace ringres
