#pragma once

#include "ringres/core.hpp"
#include "ringres/resonance.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ringres::catalog {

/// Input file missing or unreadable (distinct from a schema violation).
class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// CSV schema violation with a 1-based row/column location (the header
/// counts as row 1).
class ParseError : public std::runtime_error {
public:
    ParseError(int row, int column, const std::string& what);
    int row() const { return row_; }
    int column() const { return column_; }

private:
    int row_ = 0;
    int column_ = 0;
};

/// One ring annulus of a planetary system, CGS-flavored boundary record.
/// Schema: planet,M_g,band_in_km,band_out_km,surf_density_g_cm2,
///         particle_density_g_cm3,particle_radius_m
struct RingSystemRecord {
    std::string planet;
    double central_mass_g = 0.0;
    double band_in_km = 0.0;
    double band_out_km = 0.0;
    double surf_density_g_cm2 = 0.0;
    double particle_density_g_cm3 = 0.0;
    double particle_radius_m = 0.0;
};

/// Satellites plus their commensurability assignments, in file order.
/// Schema: name,orbit_radius_km,resonance   (resonance as p:q)
///
/// A name may repeat across rows provided the radius matches; the repeats
/// accumulate assignments on one entry.
struct SatelliteCatalog {
    std::vector<SatelliteRecord> satellites;   // unique names, radii in km
    std::vector<std::pair<int, ResonanceSpec>> assignments; // (index, spec)
};

SatelliteCatalog load_satellite_catalog(std::istream& in);
std::vector<RingSystemRecord> load_ring_records(std::istream& in);

SatelliteCatalog load_satellite_catalog_file(const std::string& path);
std::vector<RingSystemRecord> load_ring_records_file(const std::string& path);

struct Table2Row {
    int index = 0;
    int p = 0, q = 0;
    std::string satellite;
    double unperturbed_1e5_km = 0.0;
    double inner_1e5_km = 0.0; // populated by the perturbed variant
    double outer_1e5_km = 0.0;
    bool perturbed = false;
};

/// Zone-center table for a ring record and a satellite catalog, one row
/// per assignment in catalog order. The unperturbed variant uses zero
/// interaction density and zero satellite mass; the perturbed variant
/// derives the density from the record's bulk properties and brackets each
/// commensurability with the inward (positive-density) and outward
/// (sign-flipped density) gap centers.
std::vector<Table2Row> table2_pipeline(const RingSystemRecord& ring,
                                       const SatelliteCatalog& cat,
                                       bool perturbed);

struct Table2Reference {
    int p = 0, q = 0;
    double distance_1e5_km = 0.0;
    std::string satellite;
};

struct DerivedDistance {
    std::string satellite;
    double orbit_radius_km = 0.0;
};

/// Inverts unperturbed zone centers back to satellite orbit radii,
/// r = R / (1 - 2/n)^(2/3). Rows sharing a satellite must agree within
/// 0.5% relative or a NumericalError lists the offenders; the returned
/// radius is the per-satellite mean.
std::vector<DerivedDistance>
derive_satellite_distances(const std::vector<Table2Reference>& rows);

struct Table1Row {
    std::string planet;
    double band_in_km = 0.0;
    double band_out_km = 0.0;
    double fill_lo = 0.0;
    double fill_hi = 0.0;
    double critical_radius_km = 0.0; // smallest over the fill range
    bool instability_possible = false;
};

/// Aggregates ring records by planet (one output row per planet, first
/// appearance order): fill range from the bundled particle sizes, critical
/// radius evaluated at the largest fill, flag set when the critical radius
/// intersects or undercuts the band.
std::vector<Table1Row>
table1_pipeline(const std::vector<RingSystemRecord>& records);

/// Fixed 9-significant-digit decimal formatting used by every artifact.
std::string format_number(double value);

std::string zones_to_csv(const std::vector<InstabilityZone>& zones);
std::string table2_to_csv(const std::vector<Table2Row>& rows);
std::string table1_to_csv(const std::vector<Table1Row>& rows);

} // namespace ringres::catalog
