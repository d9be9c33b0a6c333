#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace ringres {

/// Gravitational constant at the CGS boundary [cm^3 g^-1 s^-2].
inline constexpr double kGravityCgs = 6.674e-8;

inline constexpr double kKmToCm = 1.0e5;

/// Input values violate a documented precondition.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation point sits on (or numerically too close to) a singular
/// configuration: coincident particles, vanishing expansion denominator,
/// field point on the ring itself.
class SingularityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure failed to produce a usable result (no real root,
/// quadrature non-convergence, degenerate coefficient).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrimaryBody {
    std::string name;
    double mass = 0.0;
};

struct SatelliteRecord {
    std::string name;
    double mass = 0.0;         // may be zero: geometry-only perturber
    double orbit_radius = 0.0; // circular, coplanar
};

/// N equal particles at the vertices of a regular polygon of radius
/// ring_radius, rotating rigidly about the central body.
///
/// fill is the fraction of the circumference occupied by particles,
/// fill = particle_radius * count / (pi * ring_radius); fill = 1 means
/// touching particles.
struct CentralConfiguration {
    int count = 0;
    double particle_mass = 0.0;   // zero allowed: massless tracer ring
    double ring_radius = 0.0;
    double particle_radius = 0.0;
    double particle_density = 0.0;
    double fill = 0.0;
};

/// Throws ValidationError unless all fields are in range and
/// fill == particle_radius*count/(pi*ring_radius) to relative 1e-9.
void validate(const CentralConfiguration& cc);
void validate(const PrimaryBody& body);
void validate(const SatelliteRecord& sat);

/// Builds a configuration from particle geometry; fill is derived.
CentralConfiguration make_central_configuration(int count,
                                                double particle_mass,
                                                double ring_radius,
                                                double particle_radius,
                                                double particle_density);

/// Builds a configuration from a target fill factor; particle_radius is derived.
CentralConfiguration make_central_configuration_from_fill(int count,
                                                          double particle_mass,
                                                          double ring_radius,
                                                          double fill,
                                                          double particle_density);

enum class UnitMode { Cgs, Normalized };

enum class QuantityKind {
    Mass,
    Length,
    Time,
    Density,         // mass / length^3
    SurfaceDensity,  // mass / length^2
    AngularFrequency // 1 / time
};

/// Reference scales tying the normalized system (G = 1, central mass = 1,
/// reference radius = 1) to CGS values.
struct NormalizationContext {
    double mass_ref = 0.0;   // grams
    double length_ref = 0.0; // centimeters

    double time_ref() const {
        return std::sqrt(length_ref * length_ref * length_ref /
                         (kGravityCgs * mass_ref));
    }
};

NormalizationContext make_normalization(const PrimaryBody& primary,
                                        double reference_radius_cm);

/// CGS value -> dimensionless value in the G=1 system of ctx.
double to_normalized(double value_cgs, QuantityKind kind,
                     const NormalizationContext& ctx);

/// Inverse of to_normalized.
double from_normalized(double value, QuantityKind kind,
                       const NormalizationContext& ctx);

inline double km_to_cm(double km) { return km * kKmToCm; }
inline double cm_to_km(double cm) { return cm / kKmToCm; }

} // namespace ringres
