#include "ringres/resonance.hpp"

#include "ringres/parallel.hpp"
#include "ringres/polygon.hpp"
#include "ringres/satellite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <tuple>

namespace ringres {

int parametric_order(int p, int q) {
    if (q < 1 || p <= q)
        throw ValidationError("commensurability requires p > q >= 1");
    if (std::gcd(p, q) != 1)
        throw ValidationError("commensurability p:q must be reduced");
    const int num = 2 * p;
    const int den = p - q;
    if (num % den != 0)
        throw ValidationError("not an integer-order parametric resonance");
    return num / den;
}

ResonanceSpec make_resonance_spec(int p, int q) {
    return ResonanceSpec{p, q, parametric_order(p, q)};
}

std::string to_string(ZoneBranch branch) {
    switch (branch) {
    case ZoneBranch::SingleNarrowGap: return "single_narrow_gap";
    case ZoneBranch::InnerGap: return "inner_gap";
    case ZoneBranch::OuterGap: return "outer_gap";
    case ZoneBranch::OuterCommensurability: return "outer_commensurability";
    }
    return "unknown";
}

ZoneCenters zone_center(int order, double orbit_radius, double alpha,
                        double central_mass, double satellite_mass) {
    if (order < 2)
        throw ValidationError("parametric order must be >= 2");
    if (!(orbit_radius > 0.0) || !(central_mass > 0.0) || satellite_mass < 0.0)
        throw ValidationError("zone_center needs positive radius and mass");

    const double n2 = static_cast<double>(order) * order;
    const double r = orbit_radius;
    const double r3 = r * r * r;
    const double tide = n2 * central_mass / r3;

    const double a = 4.0 * alpha + 2.0 * satellite_mass / r3 - tide;
    const double b = 2.0 * n2 * central_mass / (r * std::sqrt(r));
    const double c = (4.0 - n2) * central_mass;

    if (std::abs(a) < 1e-14 * tide)
        throw ValidationError("degenerate resonance condition: the density "
                              "term cancels the tidal term");

    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0)
        throw NumericalError("no real resonance radius for these parameters");

    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (b + std::copysign(sq, b));
    double beta1 = qq / a;
    double beta2 = (qq != 0.0) ? c / qq : 0.0;
    if (beta1 > beta2)
        std::swap(beta1, beta2);

    ZoneCenters out;
    out.inner_degenerate = order == 2;
    if (beta1 <= 0.0 && !out.inner_degenerate)
        throw NumericalError("resonance roots are not both positive");
    out.inner = beta1 > 0.0 ? std::pow(beta1, 2.0 / 3.0) : 0.0;
    out.outer = std::pow(beta2, 2.0 / 3.0);
    return out;
}

double zone_center_closed_form(int order, double orbit_radius, double alpha,
                               double central_mass) {
    if (order < 2)
        throw ValidationError("parametric order must be >= 2");
    if (!(orbit_radius > 0.0) || !(central_mass > 0.0))
        throw ValidationError("closed form needs positive radius and mass");

    const double n2 = static_cast<double>(order) * order;
    const double r = orbit_radius;
    const double g = alpha * r * r * r / central_mass;

    const double under = n2 + (n2 - 4.0) * g;
    if (under < 0.0)
        throw NumericalError("no real resonance radius for these parameters");
    const double den = n2 - 4.0 * g;
    if (std::abs(den) < 1e-14 * n2)
        throw ValidationError("degenerate resonance condition: the density "
                              "term cancels the tidal term");

    const double beta = (n2 - 2.0 * std::sqrt(under)) / den;
    if (beta < 0.0)
        throw NumericalError("closed form yields a negative radius branch");
    return r * std::pow(beta, 2.0 / 3.0);
}

ZoneWidths zone_width(int order, double omega0, double omega_s,
                      double mass_ratio, double laplace_b, double harmonic_h) {
    if (order < 1)
        throw ValidationError("width order must be >= 1");
    if (order == 2)
        throw ValidationError("width formula is singular at order 2");
    if (harmonic_h < 0.0 || laplace_b < 0.0 || mass_ratio < 0.0)
        throw ValidationError("width inputs must be non-negative");

    const double k = static_cast<double>(order);
    const double gain = std::abs(k / (2.0 * (k - 2.0)));

    ZoneWidths out;
    out.first_order = omega0 * gain * harmonic_h;
    out.second_order = 0.25 * omega0 * gain * harmonic_h * harmonic_h;
    out.first_order_satellite = omega_s * gain * mass_ratio * laplace_b;
    return out;
}

GapPair negative_alpha_zones(int order, double orbit_radius,
                             double alpha_magnitude, double central_mass,
                             double particle_count, double context_radius) {
    if (alpha_magnitude < 0.0)
        throw ValidationError("alpha magnitude must be non-negative");
    if (particle_count < 0.0 || context_radius < 0.0)
        throw ValidationError("particle count and context radius must be >= 0");

    const ZoneCenters centers = zone_center(order, orbit_radius,
                                            -0.5 * alpha_magnitude,
                                            central_mass, 0.0);
    const double dx = particle_count > 0.0
                          ? 2.0 * std::numbers::pi * context_radius / particle_count
                          : 0.0;

    GapPair out;
    out.inner.center = centers.inner - dx;
    out.inner.branch = ZoneBranch::InnerGap;
    out.outer.center = centers.inner + dx;
    out.outer.branch = ZoneBranch::OuterGap;
    return out;
}

double critical_radius(double central_mass, double particle_density,
                       double fill) {
    if (!(central_mass > 0.0))
        throw ValidationError("central mass must be positive");
    if (fill < 0.0 || particle_density < 0.0)
        throw ValidationError("density and fill must be non-negative");
    const double interaction = kInteractionDensityFactorRounded *
                               particle_density * fill * fill * fill;
    if (interaction <= 0.0)
        return std::numeric_limits<double>::infinity();
    return std::cbrt(central_mass / interaction);
}

namespace {

// Radial half-width from the first-order frequency width, through the
// gradient of the resonant forcing harmonic n*nu along radius.
double radial_half_width(double freq_width, int order, double center,
                         double central_mass) {
    const double ring_rate =
        std::sqrt(central_mass / (center * center * center));
    return freq_width * 2.0 * center / (3.0 * order * ring_rate);
}

InstabilityZone finish_zone(InstabilityZone zone, const ScanAssignment& item,
                            const PrimaryBody& primary,
                            const RingProperties& ring, int harmonic_count) {
    zone.satellite = item.satellite.name;
    zone.spec = item.spec;

    if (item.satellite.mass > 0.0) {
        const HillCoefficient hill = build_hill_coefficient(
            zone.center, ring.alpha, primary, item.satellite,
            std::max(harmonic_count, item.spec.order));
        const double omega0 = std::sqrt(hill.omega0_sq);
        const double omega_s =
            std::sqrt(primary.mass / std::pow(item.satellite.orbit_radius, 3));
        const double b = laplace_coefficient(
            1.5, item.spec.order, zone.center / item.satellite.orbit_radius);
        const ZoneWidths widths = zone_width(
            item.spec.order, omega0, omega_s,
            item.satellite.mass / primary.mass, b,
            std::abs(hill.harmonics[item.spec.order - 1]));
        zone.half_width = radial_half_width(widths.first_order, item.spec.order,
                                            zone.center, primary.mass);
    }
    return zone;
}

} // namespace

ScanResult scan(const PrimaryBody& primary, double band_in, double band_out,
                const std::vector<ScanAssignment>& assignments, ScanMode mode,
                const RingProperties& ring, int harmonic_count) {
    validate(primary);
    if (!(band_in < band_out) || !(band_in > 0.0))
        throw ValidationError("scan band must satisfy 0 < inner < outer");
    for (const auto& item : assignments) {
        validate(item.satellite);
        if (item.satellite.orbit_radius <= band_out)
            throw ValidationError("satellite '" + item.satellite.name +
                                  "' orbits inside the scan band");
    }

    struct Slot {
        std::vector<InstabilityZone> zones;
        std::string warning;
    };
    std::vector<Slot> slots(assignments.size());

    parallel_for(static_cast<int>(assignments.size()), [&](int i) {
        const ScanAssignment& item = assignments[i];
        Slot& slot = slots[i];
        try {
            const int n = item.spec.order;
            const double r = item.satellite.orbit_radius;

            InstabilityZone narrow;
            narrow.center = zone_center(n, r, ring.alpha, primary.mass,
                                        item.satellite.mass).inner;
            narrow.branch = mode == ScanMode::Single
                                ? ZoneBranch::SingleNarrowGap
                                : ZoneBranch::InnerGap;
            slot.zones.push_back(
                finish_zone(narrow, item, primary, ring, harmonic_count));

            if (mode == ScanMode::System) {
                // outward branch of the paired-gap structure
                const double broad_center =
                    zone_center(n, r, -0.5 * ring.alpha, primary.mass, 0.0)
                        .inner;
                double count = 0.0;
                if (ring.surf_density > 0.0 && ring.particle_density > 0.0 &&
                    ring.particle_radius > 0.0)
                    count = ring_bulk_properties(broad_center,
                                                 ring.surf_density,
                                                 ring.particle_density,
                                                 ring.particle_radius)
                                .particle_count;
                InstabilityZone broad =
                    negative_alpha_zones(n, r, ring.alpha, primary.mass, count,
                                         broad_center)
                        .outer;
                slot.zones.push_back(
                    finish_zone(broad, item, primary, ring, harmonic_count));
            }
        } catch (const std::exception& e) {
            slot.zones.clear();
            slot.warning = item.satellite.name + " " +
                           std::to_string(item.spec.p) + ":" +
                           std::to_string(item.spec.q) + ": " + e.what();
        }
    });

    ScanResult out;
    for (auto& slot : slots) {
        if (!slot.warning.empty()) {
            out.warnings.push_back(std::move(slot.warning));
            continue;
        }
        for (auto& zone : slot.zones)
            if (zone.center >= band_in && zone.center <= band_out)
                out.zones.push_back(std::move(zone));
    }

    std::sort(out.zones.begin(), out.zones.end(),
              [](const InstabilityZone& a, const InstabilityZone& b) {
                  return std::tie(a.center, a.satellite, a.spec.p, a.spec.q) <
                         std::tie(b.center, b.satellite, b.spec.p, b.spec.q);
              });
    return out;
}

} // namespace ringres
