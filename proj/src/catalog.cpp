#include "ringres/catalog.hpp"

#include "ringres/polygon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>

namespace ringres::catalog {

ParseError::ParseError(int row, int column, const std::string& what)
    : std::runtime_error("row " + std::to_string(row) + ", column " +
                         std::to_string(column) + ": " + what),
      row_(row), column_(column) {}

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            out.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    out.push_back(field);
    return out;
}

double parse_number(const std::string& field, int row, int column) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(row, column, "expected a number, got '" + field + "'");
    if (!std::isfinite(value))
        throw ParseError(row, column, "non-finite value '" + field + "'");
    return value;
}

ResonanceSpec parse_resonance(const std::string& field, int row, int column) {
    const auto colon = field.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == field.size())
        throw ParseError(row, column,
                         "expected resonance as p:q, got '" + field + "'");
    int p = 0, q = 0;
    const char* s = field.data();
    auto r1 = std::from_chars(s, s + colon, p);
    auto r2 = std::from_chars(s + colon + 1, s + field.size(), q);
    if (r1.ec != std::errc() || r1.ptr != s + colon || r2.ec != std::errc() ||
        r2.ptr != s + field.size())
        throw ParseError(row, column,
                         "expected resonance as p:q, got '" + field + "'");
    try {
        return make_resonance_spec(p, q);
    } catch (const ValidationError& e) {
        throw ParseError(row, column, e.what());
    }
}

std::vector<std::string> expect_header(std::istream& in,
                                       const std::string& expected) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(1, 1, "empty input, expected header '" + expected + "'");
    const auto fields = split_row(line);
    const auto want = split_row(expected);
    if (fields != want)
        throw ParseError(1, 1, "header must be '" + expected + "'");
    return fields;
}

} // namespace

SatelliteCatalog load_satellite_catalog(std::istream& in) {
    static const std::string kHeader = "name,orbit_radius_km,resonance";
    expect_header(in, kHeader);

    SatelliteCatalog cat;
    std::string line;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r")
            continue;
        const auto fields = split_row(line);
        if (fields.size() != 3)
            throw ParseError(row, static_cast<int>(fields.size()) + 1,
                             "expected 3 columns");
        const std::string& name = fields[0];
        if (name.empty())
            throw ParseError(row, 1, "satellite name must not be empty");
        const double radius = parse_number(fields[1], row, 2);
        if (!(radius > 0.0))
            throw ParseError(row, 2, "orbit radius must be positive");
        const ResonanceSpec spec = parse_resonance(fields[2], row, 3);

        int index = -1;
        for (std::size_t k = 0; k < cat.satellites.size(); ++k)
            if (cat.satellites[k].name == name)
                index = static_cast<int>(k);
        if (index < 0) {
            cat.satellites.push_back(SatelliteRecord{name, 0.0, radius});
            index = static_cast<int>(cat.satellites.size()) - 1;
        } else if (std::abs(cat.satellites[index].orbit_radius - radius) >
                   1e-9 * radius) {
            throw ParseError(row, 2,
                             "duplicate name '" + name +
                                 "' with conflicting orbit radius");
        }
        for (const auto& [idx, existing] : cat.assignments)
            if (idx == index && existing.p == spec.p && existing.q == spec.q)
                throw ParseError(row, 1,
                                 "duplicate assignment " + name + " " +
                                     fields[2]);
        cat.assignments.emplace_back(index, spec);
    }
    return cat;
}

std::vector<RingSystemRecord> load_ring_records(std::istream& in) {
    static const std::string kHeader =
        "planet,M_g,band_in_km,band_out_km,surf_density_g_cm2,"
        "particle_density_g_cm3,particle_radius_m";
    expect_header(in, kHeader);

    std::vector<RingSystemRecord> records;
    std::string line;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r")
            continue;
        const auto fields = split_row(line);
        if (fields.size() != 7)
            throw ParseError(row, static_cast<int>(fields.size()) + 1,
                             "expected 7 columns");
        RingSystemRecord rec;
        rec.planet = fields[0];
        if (rec.planet.empty())
            throw ParseError(row, 1, "planet name must not be empty");
        rec.central_mass_g = parse_number(fields[1], row, 2);
        rec.band_in_km = parse_number(fields[2], row, 3);
        rec.band_out_km = parse_number(fields[3], row, 4);
        rec.surf_density_g_cm2 = parse_number(fields[4], row, 5);
        rec.particle_density_g_cm3 = parse_number(fields[5], row, 6);
        rec.particle_radius_m = parse_number(fields[6], row, 7);
        if (!(rec.central_mass_g > 0.0))
            throw ParseError(row, 2, "central mass must be positive");
        if (!(rec.band_in_km < rec.band_out_km))
            throw ParseError(row, 3, "band_in_km must be below band_out_km");
        if (rec.surf_density_g_cm2 < 0.0)
            throw ParseError(row, 5, "surface density must be non-negative");
        if (!(rec.particle_density_g_cm3 > 0.0))
            throw ParseError(row, 6, "particle density must be positive");
        if (!(rec.particle_radius_m > 0.0))
            throw ParseError(row, 7, "particle radius must be positive");
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FileError("cannot read file: " + path);
    return in;
}

} // namespace

SatelliteCatalog load_satellite_catalog_file(const std::string& path) {
    auto in = open_or_throw(path);
    return load_satellite_catalog(in);
}

std::vector<RingSystemRecord> load_ring_records_file(const std::string& path) {
    auto in = open_or_throw(path);
    return load_ring_records(in);
}

namespace {

constexpr double kLengthRef1e5Km = 1.0e10; // cm per 10^5 km

double commensurability_factor(int order) {
    return std::pow(1.0 - 2.0 / order, 2.0 / 3.0);
}

} // namespace

std::vector<Table2Row> table2_pipeline(const RingSystemRecord& ring,
                                       const SatelliteCatalog& cat,
                                       bool perturbed) {
    // normalized system: central mass 1, length unit 10^5 km
    const double mass_ref = ring.central_mass_g;
    const double alpha_cgs =
        ring_bulk_properties(0.5 * (ring.band_in_km + ring.band_out_km) * kKmToCm,
                             ring.surf_density_g_cm2,
                             ring.particle_density_g_cm3,
                             ring.particle_radius_m * 100.0)
            .interaction_density;
    const double alpha_norm = alpha_cgs * kLengthRef1e5Km * kLengthRef1e5Km *
                              kLengthRef1e5Km / mass_ref;

    std::vector<Table2Row> rows;
    rows.reserve(cat.assignments.size());
    int index = 0;
    for (const auto& [sat_index, spec] : cat.assignments) {
        const SatelliteRecord& sat = cat.satellites[sat_index];
        const double orbit = sat.orbit_radius / 1e5; // 10^5 km units

        Table2Row row;
        row.index = ++index;
        row.p = spec.p;
        row.q = spec.q;
        row.satellite = sat.name;
        row.unperturbed_1e5_km =
            zone_center(spec.order, orbit, 0.0, 1.0, 0.0).inner;

        if (perturbed) {
            row.perturbed = true;
            row.inner_1e5_km =
                zone_center(spec.order, orbit, alpha_norm, 1.0, 0.0).inner;
            const double broad_center =
                zone_center(spec.order, orbit, -0.5 * alpha_norm, 1.0, 0.0)
                    .inner;
            const double count =
                ring_bulk_properties(broad_center * kLengthRef1e5Km,
                                     ring.surf_density_g_cm2,
                                     ring.particle_density_g_cm3,
                                     ring.particle_radius_m * 100.0)
                    .particle_count;
            row.outer_1e5_km = negative_alpha_zones(spec.order, orbit,
                                                    alpha_norm, 1.0, count,
                                                    broad_center)
                                   .outer.center;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<DerivedDistance>
derive_satellite_distances(const std::vector<Table2Reference>& rows) {
    struct Group {
        std::string name;
        std::vector<double> radii_km;
        std::vector<int> source_rows;
    };
    std::vector<Group> groups;

    int row_number = 0;
    for (const auto& row : rows) {
        ++row_number;
        const int order = parametric_order(row.p, row.q);
        const double radius_km =
            row.distance_1e5_km * 1e5 / commensurability_factor(order);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const Group& g) { return g.name == row.satellite; });
        if (it == groups.end()) {
            groups.push_back({row.satellite, {radius_km}, {row_number}});
        } else {
            it->radii_km.push_back(radius_km);
            it->source_rows.push_back(row_number);
        }
    }

    std::vector<DerivedDistance> out;
    for (const auto& g : groups) {
        const double mean =
            std::accumulate(g.radii_km.begin(), g.radii_km.end(), 0.0) /
            g.radii_km.size();
        for (std::size_t i = 0; i < g.radii_km.size(); ++i) {
            if (std::abs(g.radii_km[i] - mean) > 5e-3 * mean) {
                std::string rows_list;
                for (int r : g.source_rows)
                    rows_list += " " + std::to_string(r);
                throw NumericalError("inconsistent orbit radii for '" + g.name +
                                     "' across rows" + rows_list);
            }
        }
        out.push_back({g.name, mean});
    }
    return out;
}

std::vector<Table1Row>
table1_pipeline(const std::vector<RingSystemRecord>& records) {
    std::vector<Table1Row> out;
    for (const auto& rec : records) {
        const double fill = ring_bulk_properties(rec.band_in_km * kKmToCm,
                                                 rec.surf_density_g_cm2,
                                                 rec.particle_density_g_cm3,
                                                 rec.particle_radius_m * 100.0)
                                .fill;
        auto it = std::find_if(out.begin(), out.end(), [&](const Table1Row& r) {
            return r.planet == rec.planet;
        });
        if (it == out.end()) {
            Table1Row row;
            row.planet = rec.planet;
            row.band_in_km = rec.band_in_km;
            row.band_out_km = rec.band_out_km;
            row.fill_lo = row.fill_hi = fill;
            out.push_back(std::move(row));
            it = out.end() - 1;
        } else {
            it->band_in_km = std::min(it->band_in_km, rec.band_in_km);
            it->band_out_km = std::max(it->band_out_km, rec.band_out_km);
            it->fill_lo = std::min(it->fill_lo, fill);
            it->fill_hi = std::max(it->fill_hi, fill);
        }
    }
    for (auto& row : out) {
        // central mass of the first record for this planet
        double mass = 0.0, density = 0.0;
        for (const auto& rec : records)
            if (rec.planet == row.planet) {
                mass = rec.central_mass_g;
                density = rec.particle_density_g_cm3;
                break;
            }
        const double rc_cm = critical_radius(mass, density, row.fill_hi);
        row.critical_radius_km = cm_to_km(rc_cm);
        row.instability_possible = std::isfinite(row.critical_radius_km) &&
                                   row.critical_radius_km < row.band_out_km;
    }
    return out;
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

std::string zones_to_csv(const std::vector<InstabilityZone>& zones) {
    std::string out = "satellite,p,q,n,branch,center_km,half_width_km\n";
    for (const auto& z : zones) {
        out += z.satellite + ',' + std::to_string(z.spec.p) + ',' +
               std::to_string(z.spec.q) + ',' + std::to_string(z.spec.order) +
               ',' + to_string(z.branch) + ',' + format_number(z.center) +
               ',' + format_number(z.half_width) + '\n';
    }
    return out;
}

std::string table2_to_csv(const std::vector<Table2Row>& rows) {
    const bool perturbed = !rows.empty() && rows.front().perturbed;
    std::string out =
        perturbed
            ? "index,resonance,distance_unperturbed_1e5_km,"
              "distance_inner_1e5_km,distance_outer_1e5_km,satellite\n"
            : "index,resonance,distance_1e5_km,satellite\n";
    for (const auto& r : rows) {
        out += std::to_string(r.index) + ',' + std::to_string(r.p) + ':' +
               std::to_string(r.q) + ',' + format_number(r.unperturbed_1e5_km);
        if (perturbed)
            out += ',' + format_number(r.inner_1e5_km) + ',' +
                   format_number(r.outer_1e5_km);
        out += ',' + r.satellite + '\n';
    }
    return out;
}

std::string table1_to_csv(const std::vector<Table1Row>& rows) {
    std::string out = "planet,band_in_km,band_out_km,fill_lo,fill_hi,"
                      "critical_radius_km,instability_possible\n";
    for (const auto& r : rows) {
        out += r.planet + ',' + format_number(r.band_in_km) + ',' +
               format_number(r.band_out_km) + ',' + format_number(r.fill_lo) +
               ',' + format_number(r.fill_hi) + ',' +
               format_number(r.critical_radius_km) + ',' +
               (r.instability_possible ? "1" : "0") + '\n';
    }
    return out;
}

} // namespace ringres::catalog
